"""Dense bit-packed linear algebra over GF(2).

Vectors and matrix rows are packed into Python integers: bit ``i`` of the
integer is entry ``i`` of the vector. XOR of two rows is a single ``^``, so
row operations cost one pass over the packed words regardless of length.

Row reduction is deterministic: columns are scanned left to right and the
pivot for each column is the lowest-indexed eligible row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from stabequiv.exceptions import DimensionError


@dataclass(frozen=True, slots=True)
class BitVector:
    """A length-``length`` vector over GF(2) packed into ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("negative vector length")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(f"bits set beyond length {self.length}")

    @classmethod
    def from_list(cls, entries: Iterable[int]) -> BitVector:
        entries = list(entries)
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise DimensionError(f"lengths {self.length} and {other.length} differ")
        return BitVector(self.length, self.bits ^ other.bits)

    def dot(self, other: BitVector) -> int:
        if self.length != other.length:
            raise DimensionError(f"lengths {self.length} and {other.length} differ")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """An ``nrows x ncols`` matrix over GF(2), stored as packed rows."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise DimensionError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionError(f"row has bits beyond {self.ncols} columns")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        a = np.asarray(array, dtype=np.int64) & 1
        if a.ndim != 2:
            raise DimensionError("expected a 2-D array")
        nrows, ncols = a.shape
        rows = tuple(BitVector.from_list(row).bits for row in a.tolist())
        return cls(nrows, ncols, rows)

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], ncols: int | None = None) -> BitMatrix:
        if ncols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty row list")
            ncols = rows[0].length
        for r in rows:
            if r.length != ncols:
                raise DimensionError(f"row length {r.length} != {ncols}")
        return cls(len(rows), ncols, tuple(r.bits for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector], nrows: int | None = None) -> BitMatrix:
        return cls.from_rows(columns, nrows).transpose()

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.ncols):
                out[i, j] = (r >> j) & 1
        return out

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        bits = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                bits |= 1 << i
        return BitVector(self.nrows, bits)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return (self.rows[i] >> j) & 1

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def matvec(self, v: BitVector) -> BitVector:
        if v.length != self.ncols:
            raise DimensionError(f"vector length {v.length} != {self.ncols} columns")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.nrows, bits)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, tuple(out))

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shapes {self.shape} and {other.shape} differ")
        return BitMatrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        rows = tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows))
        return BitMatrix(self.nrows, self.ncols + other.ncols, rows)

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows))


def _reduce(rows: list[int], ncols: int) -> list[int]:
    """In-place RREF of ``rows`` restricted to pivots in the first ``ncols`` bits.

    Returns the pivot column of each of the leading ``len(pivots)`` rows.
    """
    pivots: list[int] = []
    top = 0
    nrows = len(rows)
    for col in range(ncols):
        if top == nrows:
            break
        bit = 1 << col
        found = next((i for i in range(top, nrows) if rows[i] & bit), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        pivot_row = rows[top]
        for i in range(nrows):
            if i != top and rows[i] & bit:
                rows[i] ^= pivot_row
        pivots.append(col)
        top += 1
    return pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    rows = list(m.rows)
    pivots = _reduce(rows, m.ncols)
    return BitMatrix(m.nrows, m.ncols, tuple(rows)), pivots


def rank(m: BitMatrix) -> int:
    rows = [r for r in m.rows if r]
    rk = 0
    # plain forward elimination, cheaper than a full RREF
    while rows:
        pivot = rows.pop()
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
        rk += 1
    return rk


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of ``{v : m v = 0}``, one vector per free column in ascending order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r, p in enumerate(pivots):
            if (reduced.rows[r] >> free) & 1:
                bits |= 1 << p
        basis.append(BitVector(m.ncols, bits))
    return basis


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """One solution ``x`` of ``m x = b`` (free variables zero), or ``None``."""
    if b.length != m.nrows:
        raise DimensionError(f"right-hand side length {b.length} != {m.nrows} rows")
    flag = 1 << m.ncols
    rows = [r | (flag if (b.bits >> i) & 1 else 0) for i, r in enumerate(m.rows)]
    pivots = _reduce(rows, m.ncols)
    for r in rows[len(pivots):]:
        if r & flag:
            return None
    bits = 0
    for r, p in enumerate(pivots):
        if rows[r] & flag:
            bits |= 1 << p
    return BitVector(m.ncols, bits)


def independent_subset(vectors: Iterable[int]) -> list[int]:
    """Indices of a greedy maximal independent subset, scanning in order."""
    basis: dict[int, int] = {}  # leading bit -> reduced vector
    chosen = []
    for idx, v in enumerate(vectors):
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                chosen.append(idx)
                break
            v ^= basis[lead]
    return chosen


def in_span(v: int, vectors: Iterable[int]) -> bool:
    basis: dict[int, int] = {}
    for w in vectors:
        while w:
            lead = w.bit_length() - 1
            if lead not in basis:
                basis[lead] = w
                break
            w ^= basis[lead]
    while v:
        lead = v.bit_length() - 1
        if lead not in basis:
            return False
        v ^= basis[lead]
    return True


def inverse(m: BitMatrix) -> BitMatrix | None:
    """Inverse of a square matrix, or ``None`` if singular."""
    if m.nrows != m.ncols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.nrows
    rows = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    pivots = _reduce(rows, n)
    if len(pivots) < n:
        return None
    return BitMatrix(n, n, tuple(r >> n for r in rows))
