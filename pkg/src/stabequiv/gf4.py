"""GF(4) on bit pairs and the GF(4)-linearity test for stabilizer spaces.

An element ``a + b*xi`` is the pair ``(a, b)``; with ``xi**2 = xi + 1``,

    (a, b) * (a', b') = (aa' + bb', ab' + ba' + bb').

Paulis map to GF(4) as I -> 0, Z -> 1, X -> xi, Y -> xi**2, so the pair of
a qubit is exactly its ``(z, x)`` bits. Scaling by ``xi`` acts on each pair
as the matrix ``[[0, 1], [1, 1]]``, sending Z -> X -> Y -> Z.
"""

from __future__ import annotations

from dataclasses import dataclass

from stabequiv.exceptions import DimensionError
from stabequiv.gf2 import BitMatrix, BitVector
from stabequiv.lclifford import FACTORS, LocalCliffordOp
from stabequiv.pauli import Pauli
from stabequiv.stabilizer import StabilizerGroup

XI_MATRIX = FACTORS[4]


@dataclass(frozen=True, slots=True)
class GF4:
    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError("GF(4) coordinates must be bits")

    def __add__(self, other: GF4) -> GF4:
        return GF4(self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: GF4) -> GF4:
        return gf4_mul(self, other)

    def __str__(self) -> str:
        return _NAMES[(self.a, self.b)]


_NAMES = {(0, 0): "0", (1, 0): "1", (0, 1): "xi", (1, 1): "xi^2"}

ZERO = GF4(0, 0)
ONE = GF4(1, 0)
XI = GF4(0, 1)
XI2 = GF4(1, 1)
ELEMENTS = (ZERO, ONE, XI, XI2)


def gf4_mul(p: GF4, q: GF4) -> GF4:
    a, b, c, d = p.a, p.b, q.a, q.b
    return GF4((a & c) ^ (b & d), (a & d) ^ (b & c) ^ (b & d))


def scale(s: GF4, v: BitVector) -> BitVector:
    """Multiply every qubit pair ``(v_i, v_{n+i})`` of a length-2n vector by ``s``."""
    if v.length % 2:
        raise DimensionError(f"expected an even length, got {v.length}")
    n = v.length // 2
    mask = (1 << n) - 1
    z, x = v.bits & mask, v.bits >> n
    # (a, b) * (z, x) = (a z + b x, a x + b z + b x) bitwise
    nz = (z if s.a else 0) ^ (x if s.b else 0)
    nx = (x if s.a else 0) ^ ((z ^ x) if s.b else 0)
    return BitVector(v.length, nz | (nx << n))


def xi_scale(v: BitVector) -> BitVector:
    return scale(XI, v)


def xi_scale_pauli(p: Pauli) -> Pauli:
    """The unsigned Pauli whose bits are ``xi`` times those of ``p``."""
    return Pauli.from_vector(xi_scale(p.vector))


def theorem2_matrix(g: StabilizerGroup) -> BitMatrix:
    """``S_z^T S_z + S_x^T S_x + S_z^T S_x`` over GF(2)."""
    n = g.n
    rows = g.gen_matrix.rows
    s_z = BitMatrix(n, n, rows[:n])
    s_x = BitMatrix(n, n, rows[n:])
    return s_z.T @ s_z + s_x.T @ s_x + s_z.T @ s_x


def is_gf4_linear(g: StabilizerGroup) -> bool:
    """Block identity on the generator matrix; zero iff the code is xi-closed."""
    return theorem2_matrix(g).is_zero()


def xi_closure_holds(g: StabilizerGroup) -> bool:
    """Definitional check: ``xi`` times each generator is again in the code space."""
    return all(g.contains_bits(xi_scale_pauli(p)) for p in g.generators)


def clifford_V(n: int) -> LocalCliffordOp:
    """Local Clifford whose every factor is the xi-scaling matrix."""
    if n < 1:
        raise ValueError("n must be positive")
    return LocalCliffordOp((XI_MATRIX,) * n)
