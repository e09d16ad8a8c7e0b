"""Pauli operators in the binary symplectic encoding, with phase tracking.

A Pauli operator on ``n`` qubits is ``i**phase_exp * M_1 (x) ... (x) M_n``.
Each factor is stored as a bit pair ``(z_k, x_k)`` with

    I -> (0, 0),  X -> (0, 1),  Z -> (1, 0),  Y -> (1, 1)

where ``Y`` is the literal Pauli-Y matrix. Bit ``k`` of the integers ``z``
and ``x`` belongs to qubit ``k + 1``; in strings, qubit 1 is leftmost.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

from stabequiv import config
from stabequiv.exceptions import DimensionError, PauliParseError
from stabequiv.gf2 import BitVector

LETTERS = "IXZY"  # index = z << 1 | x
_LETTER_CODE = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}

# i-exponent of sigma_a * sigma_b, indexed by the codes of LETTERS.
PHASE_TABLE = (
    (0, 0, 0, 0),  # I * {I, X, Z, Y}
    (0, 0, 3, 1),  # X * ...: XZ = -iY, XY = iZ
    (0, 1, 0, 3),  # Z * ...: ZX = iY, ZY = -iX
    (0, 3, 1, 0),  # Y * ...: YX = -iZ, YZ = iX
)

_SIGNS = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PAULI_RE = re.compile(r"^(\+i|-i|\+|-)?(.*)$", re.DOTALL)

_DENSE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def product_phase(z1: int, x1: int, z2: int, x2: int) -> int:
    """i-exponent (mod 4) picked up by the tensor product of per-qubit products.

    Bitwise evaluation of :data:`PHASE_TABLE` summed over all qubits.
    """
    only_x1 = x1 & ~z1
    only_z1 = z1 & ~x1
    y1 = x1 & z1
    only_x2 = x2 & ~z2
    only_z2 = z2 & ~x2
    y2 = x2 & z2
    plus = (only_x1 & y2) | (y1 & only_z2) | (only_z1 & only_x2)
    minus = (only_x1 & only_z2) | (y1 & only_x2) | (only_z1 & y2)
    return (plus.bit_count() - minus.bit_count()) & 3


@dataclass(frozen=True, slots=True)
class SupportMask:
    """A subset of the qubits ``{1..n}``; bit ``k`` set means qubit ``k + 1`` is in."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise DimensionError(f"mask has bits beyond {self.n} qubits")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> SupportMask:
        """Build from 1-based qubit indices."""
        bits = 0
        for i in indices:
            if not 1 <= i <= n:
                raise DimensionError(f"qubit index {i} outside 1..{n}")
            bits |= 1 << (i - 1)
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> SupportMask:
        return cls(n, (1 << n) - 1)

    def indices(self) -> list[int]:
        """Sorted 1-based qubit indices."""
        return [k + 1 for k in range(self.n) if (self.bits >> k) & 1]

    def complement(self) -> SupportMask:
        return SupportMask(self.n, ((1 << self.n) - 1) ^ self.bits)

    def issubset(self, other: SupportMask) -> bool:
        return self.bits & ~other.bits == 0

    def __le__(self, other: SupportMask) -> bool:
        return self.issubset(other)

    def __lt__(self, other: SupportMask) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __or__(self, other: SupportMask) -> SupportMask:
        return SupportMask(self.n, self.bits | other.bits)

    def __and__(self, other: SupportMask) -> SupportMask:
        return SupportMask(self.n, self.bits & other.bits)

    def __contains__(self, qubit: int) -> bool:
        return 1 <= qubit <= self.n and bool((self.bits >> (qubit - 1)) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.indices())

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.indices())) + "}"


@dataclass(frozen=True, slots=True)
class Pauli:
    """Signed Pauli operator. ``z`` and ``x`` are packed bit integers."""

    n: int
    z: int = 0
    x: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        limit = 1 << self.n
        if not (0 <= self.z < limit and 0 <= self.x < limit):
            raise DimensionError(f"bits set beyond {self.n} qubits")
        if not 0 <= self.phase_exp < 4:
            object.__setattr__(self, "phase_exp", self.phase_exp & 3)

    @classmethod
    def identity(cls, n: int) -> Pauli:
        return cls(n)

    @classmethod
    def from_string(cls, s: str) -> Pauli:
        return pauli_from_string(s)

    @classmethod
    def from_vector(cls, v: BitVector, phase_exp: int = 0) -> Pauli:
        """From a length-2n vector with the z-block first."""
        if v.length % 2:
            raise DimensionError("symplectic vector must have even length")
        n = v.length // 2
        return cls(n, v.bits & ((1 << n) - 1), v.bits >> n, phase_exp)

    @property
    def vector(self) -> BitVector:
        return BitVector(2 * self.n, self.z | (self.x << self.n))

    @property
    def zvec(self) -> BitVector:
        return BitVector(self.n, self.z)

    @property
    def xvec(self) -> BitVector:
        return BitVector(self.n, self.x)

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    @property
    def is_identity(self) -> bool:
        return self.z == 0 and self.x == 0

    @property
    def letters(self) -> str:
        return "".join(self.letter(k) for k in range(self.n))

    def letter(self, k: int) -> str:
        """Letter on 0-based qubit ``k``."""
        return LETTERS[((self.z >> k) & 1) << 1 | ((self.x >> k) & 1)]

    def __mul__(self, other: Pauli) -> Pauli:
        return multiply(self, other)

    def __neg__(self) -> Pauli:
        return Pauli(self.n, self.z, self.x, self.phase_exp + 2)

    def commutes(self, other: Pauli) -> bool:
        return commutes(self, other)

    def support(self) -> SupportMask:
        return support(self)

    def unsigned(self) -> Pauli:
        return Pauli(self.n, self.z, self.x)

    def sort_key(self) -> tuple[str, int]:
        return self.letters, self.phase_exp

    def __str__(self) -> str:
        return pauli_to_string(self)

    def __repr__(self) -> str:
        return f"Pauli({pauli_to_string(self, explicit_sign=True)!r})"


def pauli_from_string(s: str) -> Pauli:
    """Parse ``sign? [IXYZ]+`` with sign one of ``+``, ``-``, ``+i``, ``-i``.

    Positions in error messages are 1-based character offsets into ``s``.
    """
    m = _PAULI_RE.match(s)
    sign, body = m.group(1) or "+", m.group(2)
    offset = len(m.group(1) or "")
    if not body:
        raise PauliParseError("empty Pauli string", offset + 1)
    z = x = 0
    for k, ch in enumerate(body):
        code = _LETTER_CODE.get(ch)
        if code is None:
            raise PauliParseError(f"invalid character {ch!r}", offset + k + 1)
        z |= code[0] << k
        x |= code[1] << k
    phase = {"+": 0, "+i": 1, "-": 2, "-i": 3}[sign]
    return Pauli(len(body), z, x, phase)


def pauli_to_string(p: Pauli, explicit_sign: bool = False) -> str:
    sign = _SIGNS[p.phase_exp]
    if sign == "+" and not explicit_sign:
        sign = ""
    return sign + p.letters


def _check_same_n(p: Pauli, q: Pauli) -> None:
    if p.n != q.n:
        raise DimensionError(f"qubit counts differ: {p.n} vs {q.n}")


def multiply(p: Pauli, q: Pauli) -> Pauli:
    """Operator product ``p q``."""
    _check_same_n(p, q)
    phase = p.phase_exp + q.phase_exp + product_phase(p.z, p.x, q.z, q.x)
    return Pauli(p.n, p.z ^ q.z, p.x ^ q.x, phase & 3)


def product(paulis: Iterable[Pauli], n: int) -> Pauli:
    return reduce(multiply, paulis, Pauli(n))


def symplectic_product(p: Pauli, q: Pauli) -> int:
    return ((p.z & q.x).bit_count() + (p.x & q.z).bit_count()) & 1


def commutes(p: Pauli, q: Pauli) -> bool:
    _check_same_n(p, q)
    return symplectic_product(p, q) == 0


def support(p: Pauli) -> SupportMask:
    return SupportMask(p.n, p.z | p.x)


def to_dense(p: Pauli, max_qubits: int = config.MAX_DENSE_PAULI_QUBITS) -> np.ndarray:
    """``i**phase_exp * M_1 (x) ... (x) M_n`` as a literal Kronecker product."""
    config.check_cap(p.n, max_qubits, "qubits for a dense Pauli matrix")
    out = np.array([[1j**p.phase_exp]], dtype=complex)
    for k in range(p.n):
        out = np.kron(out, _DENSE[p.letter(k)])
    return out


def restrict(p: Pauli, omega: SupportMask) -> Pauli:
    """The tensor factors of ``p`` on the qubits of ``omega``, keeping the phase."""
    z = x = 0
    for j, k in enumerate(i - 1 for i in omega.indices()):
        z |= ((p.z >> k) & 1) << j
        x |= ((p.x >> k) & 1) << j
    return Pauli(len(omega), z, x, p.phase_exp)
