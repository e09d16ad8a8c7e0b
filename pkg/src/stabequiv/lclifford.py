"""Local Clifford operations: binary GL(2, F2) factors plus a Pauli layer.

Each qubit carries one of the six invertible 2x2 binary matrices, acting on
the column ``(z, x)`` of that qubit. A fixed single-qubit Clifford unitary
represents each matrix (table below); the signs those representatives induce
are whatever they are, and a trailing Pauli layer adjusts them. The full
unitary is ``layer @ (R_1 (x) ... (x) R_n)``: the layer acts last.

    index  name  matrix            X ->   Z ->   representative
    0      I     [[1,0],[0,1]]     +X     +Z     identity
    1      H     [[0,1],[1,0]]     +Z     +X     Hadamard
    2      S     [[1,1],[0,1]]     +Y     +Z     diag(1, i)
    3      HSH   [[1,0],[1,1]]     +X     -Y     H S H
    4      V     [[0,1],[1,1]]     +Y     +X     H S^dagger
    5      V2    [[1,1],[1,0]]     +Z     +Y     S H

The table order is the search order for LC equivalence, so certificates are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from stabequiv import config
from stabequiv.exceptions import ContractViolation, DimensionError, InternalError
from stabequiv.gf2 import BitMatrix, BitVector, solve
from stabequiv.pauli import Pauli, SupportMask, multiply, to_dense
from stabequiv.stabilizer import StabilizerGroup, build, support_subgroup

Factor = tuple[tuple[int, int], tuple[int, int]]

FACTORS: tuple[Factor, ...] = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (0, 1)),
    ((1, 0), (1, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (1, 0)),
)
FACTOR_NAMES = ("I", "H", "S", "HSH", "V", "V2")
_FACTOR_INDEX = {f: i for i, f in enumerate(FACTORS)}

# (phase exponent, letter code) of R X R^dagger and R Z R^dagger; codes index LETTERS
_X, _Z, _Y = 1, 2, 3
_REP_IMAGES = (
    ((0, _X), (0, _Z)),
    ((0, _Z), (0, _X)),
    ((0, _Y), (0, _Z)),
    ((0, _X), (2, _Y)),
    ((0, _Y), (0, _X)),
    ((0, _Z), (0, _Y)),
)

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.diag([1, 1j])
REPRESENTATIVES: tuple[np.ndarray, ...] = (
    np.eye(2, dtype=complex),
    _H,
    _S,
    _H @ _S @ _H,
    _H @ _S.conj().T,
    _S @ _H,
)


def _one_qubit(code: int, phase: int = 0) -> Pauli:
    return Pauli(1, code >> 1, code & 1, phase)


def _build_actions() -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    """Signed single-qubit action of every (factor, layer letter) pair."""
    actions = {}
    for f, ((px, cx), (pz, cz)) in enumerate(_REP_IMAGES):
        img_x = _one_qubit(cx, px)
        img_z = _one_qubit(cz, pz)
        # Y = i X Z
        img_y = multiply(multiply(_one_qubit(0, 1), img_x), img_z)
        base = {0: _one_qubit(0), _X: img_x, _Z: img_z, _Y: img_y}
        for layer in range(4):
            lp = _one_qubit(layer)
            table = []
            for code in range(4):
                im = base[code]
                flip = 2 if (lp.z & im.x) ^ (lp.x & im.z) else 0
                table.append(((im.phase_exp + flip) & 3, im.z << 1 | im.x))
            actions[(f, layer)] = tuple(table)
    return actions


_ACTIONS = _build_actions()
_ACTION_LOOKUP = {v: k for k, v in _ACTIONS.items()}


def _bit_image(f: int, code: int) -> int:
    (a, b), (c, d) = FACTORS[f]
    z, x = code >> 1, code & 1
    return ((a & z) ^ (b & x)) << 1 | ((c & z) ^ (d & x))


@dataclass(frozen=True)
class LocalCliffordOp:
    """``n`` GL(2, F2) factors and a sign-fixing Pauli layer."""

    factors: tuple[Factor, ...]
    pauli_layer: Pauli | None = None

    def __post_init__(self):
        factors = tuple(tuple(tuple(int(v) & 1 for v in row) for row in f) for f in self.factors)
        for k, f in enumerate(factors, 1):
            if f not in _FACTOR_INDEX:
                raise ValueError(f"factor on qubit {k} is not invertible over GF(2): {f}")
        object.__setattr__(self, "factors", factors)
        n = len(factors)
        layer = self.pauli_layer
        if layer is None:
            layer = Pauli(n)
        elif layer.n != n:
            raise DimensionError(f"Pauli layer acts on {layer.n} qubits, expected {n}")
        object.__setattr__(self, "pauli_layer", layer.unsigned())

    @classmethod
    def from_indices(cls, indices: Sequence[int], layer: Pauli | None = None) -> LocalCliffordOp:
        return cls(tuple(FACTORS[i] for i in indices), layer)

    @classmethod
    def identity(cls, n: int) -> LocalCliffordOp:
        return cls.from_indices([0] * n)

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_FACTOR_INDEX[f] for f in self.factors)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(FACTOR_NAMES[i] for i in self.indices)

    def without_layer(self) -> LocalCliffordOp:
        return LocalCliffordOp(self.factors)

    def with_layer(self, layer: Pauli) -> LocalCliffordOp:
        return LocalCliffordOp(self.factors, layer)

    def matrix(self) -> BitMatrix:
        """The ``2n x 2n`` binary matrix ``[[A, B], [C, D]]`` with diagonal blocks."""
        n = self.n
        rows = [0] * (2 * n)
        for k, ((a, b), (c, d)) in enumerate(self.factors):
            rows[k] = (a << k) | (b << (n + k))
            rows[n + k] = (c << k) | (d << (n + k))
        return BitMatrix(2 * n, 2 * n, tuple(rows))

    def _qubit_action(self, k: int) -> tuple[tuple[int, int], ...]:
        layer = self.pauli_layer
        code = ((layer.z >> k) & 1) << 1 | ((layer.x >> k) & 1)
        return _ACTIONS[(_FACTOR_INDEX[self.factors[k]], code)]

    def conjugate(self, p: Pauli) -> Pauli:
        """``U p U^dagger`` for the unitary this operation stands for."""
        if p.n != self.n:
            raise DimensionError(f"operator on {p.n} qubits, Clifford on {self.n}")
        phase = p.phase_exp
        z = x = 0
        for k in range(self.n):
            code = ((p.z >> k) & 1) << 1 | ((p.x >> k) & 1)
            ph, out = self._qubit_action(k)[code]
            phase += ph
            z |= (out >> 1) << k
            x |= (out & 1) << k
        return Pauli(self.n, z, x, phase & 3)

    def compose(self, other: LocalCliffordOp) -> LocalCliffordOp:
        """The operation applying ``other`` first, then ``self``."""
        if other.n != self.n:
            raise DimensionError(f"cannot compose {self.n}- and {other.n}-qubit operations")
        indices, z, x = [], 0, 0
        for k in range(self.n):
            first, second = other._qubit_action(k), self._qubit_action(k)
            combined = []
            for code in range(4):
                p1, c1 = first[code]
                p2, c2 = second[c1]
                combined.append(((p1 + p2) & 3, c2))
            f, layer = _ACTION_LOOKUP[tuple(combined)]
            indices.append(f)
            z |= (layer >> 1) << k
            x |= (layer & 1) << k
        return LocalCliffordOp.from_indices(indices, Pauli(self.n, z, x))

    def __matmul__(self, other: LocalCliffordOp) -> LocalCliffordOp:
        return self.compose(other)

    def inverse(self) -> LocalCliffordOp:
        identity = _ACTIONS[(0, 0)]
        indices, z, x = [], 0, 0
        for k in range(self.n):
            act = self._qubit_action(k)
            for (f, layer), cand in _ACTIONS.items():
                if all(((act[cand[c][1]][0] + cand[c][0]) & 3, act[cand[c][1]][1]) == identity[c] for c in range(4)):
                    break
            else:  # pragma: no cover
                raise InternalError("single-qubit action has no inverse")
            indices.append(f)
            z |= (layer >> 1) << k
            x |= (layer & 1) << k
        return LocalCliffordOp.from_indices(indices, Pauli(self.n, z, x))

    def __str__(self) -> str:
        return " ".join(self.names) + f" | layer {self.pauli_layer.letters}"


def identity_op(n: int) -> LocalCliffordOp:
    return LocalCliffordOp.identity(n)


def apply(q: LocalCliffordOp, g: StabilizerGroup) -> StabilizerGroup:
    """Image of ``g`` under ``q``; generator ``j`` maps to ``U g_j U^dagger``."""
    if q.n != g.n:
        raise DimensionError(f"{q.n}-qubit operation applied to a {g.n}-qubit group")
    return build(q.conjugate(p) for p in g.generators)


def fix_signs(q_bits: LocalCliffordOp, g1: StabilizerGroup, g2: StabilizerGroup) -> Pauli:
    """Pauli layer that makes ``q_bits`` send the signed group ``g1`` onto ``g2``.

    Any layer already on ``q_bits`` is ignored. The layer solves one GF(2)
    equation per generator: it must anticommute with exactly those image
    generators whose sign disagrees with ``g2``.
    """
    n = g1.n
    if not (q_bits.n == n == g2.n):
        raise DimensionError("operation and groups must share a qubit count")
    bare = q_bits.without_layer()
    rows, rhs = [], 0
    for j, gen in enumerate(g1.generators):
        img = bare.conjugate(gen)
        target = g2.element(img.z, img.x)
        if target is None:
            raise ContractViolation(f"image of generator {j + 1} ({img}) is not in the target group")
        rows.append(img.x | (img.z << n))
        if (img.phase_exp - target.phase_exp) & 3:
            rhs |= 1 << j
    sol = solve(BitMatrix(n, 2 * n, tuple(rows)), BitVector(n, rhs))
    if sol is None:  # pragma: no cover - images are independent, so always solvable
        raise ContractViolation("sign system is infeasible")
    mask = (1 << n) - 1
    return Pauli(n, sol.bits & mask, sol.bits >> n)


def _map_bits(indices: Sequence[int], z: int, x: int, upto: int) -> tuple[int, int]:
    oz = ox = 0
    for k in range(upto):
        code = _bit_image(indices[k], ((z >> k) & 1) << 1 | ((x >> k) & 1))
        oz |= (code >> 1) << k
        ox |= (code & 1) << k
    return oz, ox


_INVERSE_INDEX = tuple(
    next(j for j in range(6) if all(_bit_image(j, _bit_image(i, c)) == c for c in range(4))) for i in range(6)
)


def _in_space(z: int, x: int, gens: Sequence[tuple[int, int]]) -> bool:
    return all(((z & gx).bit_count() + (x & gz).bit_count()) & 1 == 0 for gz, gx in gens)


def lc_equivalent(
    g1: StabilizerGroup, g2: StabilizerGroup, max_qubits: int | None = None
) -> LocalCliffordOp | None:
    """Exhaustive search for a local Clifford mapping ``g1`` onto ``g2``.

    Qubits are assigned in order, factors in table order, so the first hit
    is the lexicographically smallest certificate. A partial assignment on
    qubits ``1..k`` is abandoned as soon as an element of either group
    supported on those qubits fails to land in the other code space.
    Returns ``None`` only after the whole ``6**n`` space is ruled out.
    """
    n = g1.n
    if g2.n != n:
        raise DimensionError(f"groups on {n} and {g2.n} qubits")
    config.check_cap(n, config.max_lc_qubits(max_qubits), "qubits for LC search", config.LC_ENV)
    gens1 = [(p.z, p.x) for p in g1.generators]
    gens2 = [(p.z, p.x) for p in g2.generators]
    forward, backward = [], []
    for k in range(n + 1):
        prefix = SupportMask(n, (1 << k) - 1)
        forward.append([(p.z, p.x) for p in support_subgroup(g1, prefix)])
        backward.append([(p.z, p.x) for p in support_subgroup(g2, prefix)])

    assignment = [0] * n
    inverse = [0] * n

    def consistent(k: int) -> bool:
        for z, x in forward[k]:
            if not _in_space(*_map_bits(assignment, z, x, k), gens2):
                return False
        for z, x in backward[k]:
            if not _in_space(*_map_bits(inverse, z, x, k), gens1):
                return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        for f in range(6):
            assignment[k] = f
            inverse[k] = _INVERSE_INDEX[f]
            if consistent(k + 1) and search(k + 1):
                return True
        return False

    if not search(0):
        return None
    bare = LocalCliffordOp.from_indices(assignment)
    op = bare.with_layer(fix_signs(bare, g1, g2))
    if not apply(op, g1).same_group(g2):
        raise InternalError("sign fixing did not reproduce the target group")
    return op


def random_lc(n: int, seed: int | np.random.Generator | None = None) -> LocalCliffordOp:
    """Uniform factor per qubit and a uniform Pauli layer; deterministic per seed."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    indices = rng.integers(0, 6, size=n).tolist()
    zbits = rng.integers(0, 2, size=n).tolist()
    xbits = rng.integers(0, 2, size=n).tolist()
    z = sum(b << k for k, b in enumerate(zbits))
    x = sum(b << k for k, b in enumerate(xbits))
    return LocalCliffordOp.from_indices(indices, Pauli(n, z, x))


def to_dense_unitary(q: LocalCliffordOp) -> np.ndarray:
    """``layer @ (R_1 (x) ... (x) R_n)`` as a dense matrix."""
    config.check_cap(q.n, config.MAX_UNITARY_QUBITS, "qubits for a dense unitary")
    u = np.array([[1]], dtype=complex)
    for i in q.indices:
        u = np.kron(u, REPRESENTATIVES[i])
    return to_dense(q.pauli_layer) @ u

