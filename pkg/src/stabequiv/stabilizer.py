"""Stabilizer groups of pure n-qubit stabilizer states.

A :class:`StabilizerGroup` holds ``n`` independent, commuting, Hermitian
generators. Its generator matrix is the ``2n x n`` binary matrix whose
column ``j`` stacks the z-bits over the x-bits of generator ``j``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from stabequiv import config
from stabequiv.exceptions import DimensionError, InternalError, InvalidStabilizerError
from stabequiv.gf2 import BitMatrix, BitVector, kernel_basis, rank, solve
from stabequiv.pauli import (
    Pauli,
    SupportMask,
    multiply,
    pauli_from_string,
    restrict,
    symplectic_product,
    to_dense,
)

WITNESS_CAP = 3


@dataclass(frozen=True)
class StabilizerGroup:
    """Validated generating set of a stabilizer state. Use :func:`build`."""

    generators: tuple[Pauli, ...]

    def __post_init__(self):
        _validate(self.generators)

    @property
    def n(self) -> int:
        return self.generators[0].n

    @cached_property
    def gen_matrix(self) -> BitMatrix:
        n = self.n
        rows = []
        for r in range(2 * n):
            bits = 0
            for j, g in enumerate(self.generators):
                word = g.z if r < n else g.x
                if (word >> (r % n)) & 1:
                    bits |= 1 << j
            rows.append(bits)
        return BitMatrix(2 * n, n, tuple(rows))

    def combine(self, coeffs: int) -> Pauli:
        """Product of the generators selected by the bits of ``coeffs``."""
        out = Pauli(self.n)
        j = 0
        while coeffs:
            if coeffs & 1:
                out = multiply(out, self.generators[j])
            coeffs >>= 1
            j += 1
        return out

    def element(self, z: int, x: int) -> Pauli | None:
        """The signed group element with bit parts ``(z, x)``, if there is one."""
        n = self.n
        coeffs = solve(self.gen_matrix, BitVector(2 * n, z | (x << n)))
        if coeffs is None:
            return None
        return self.combine(coeffs.bits)

    def contains(self, p: Pauli) -> bool:
        if p.n != self.n:
            return False
        el = self.element(p.z, p.x)
        return el is not None and el.phase_exp == p.phase_exp

    def contains_bits(self, p: Pauli) -> bool:
        """Membership of the unsigned operator, via ``S^T P v = 0``."""
        return all(symplectic_product(p, g) == 0 for g in self.generators)

    @cached_property
    def canonical_generators(self) -> tuple[Pauli, ...]:
        """Generators in reduced row echelon form over the ``(z, x)`` bits.

        Two groups are equal as signed groups iff these tuples are equal.
        """
        n = self.n
        rows = list(self.generators)
        top = 0
        for col in range(2 * n):
            bit_of = (lambda p, c=col: (p.z >> c) & 1) if col < n else (lambda p, c=col - n: (p.x >> c) & 1)
            found = next((i for i in range(top, n) if bit_of(rows[i])), None)
            if found is None:
                continue
            rows[top], rows[found] = rows[found], rows[top]
            for i in range(n):
                if i != top and bit_of(rows[i]):
                    rows[i] = multiply(rows[i], rows[top])
            top += 1
        return tuple(rows)

    def same_group(self, other: StabilizerGroup) -> bool:
        return self.n == other.n and self.canonical_generators == other.canonical_generators

    def __str__(self) -> str:
        return "\n".join(str(g) for g in self.generators)


def _validate(gens: Sequence[Pauli]) -> None:
    if not gens:
        raise InvalidStabilizerError("no generators given")
    n = gens[0].n
    for k, g in enumerate(gens, 1):
        if g.n != n:
            raise DimensionError(f"generator {k} acts on {g.n} qubits, expected {n}")
    if len(gens) != n:
        raise InvalidStabilizerError(f"expected {n} generators, got {len(gens)}")
    for k, g in enumerate(gens, 1):
        if not g.is_hermitian:
            raise InvalidStabilizerError(f"generator {k} has an imaginary phase")
    for (a, p), (b, q) in itertools.combinations(enumerate(gens, 1), 2):
        if symplectic_product(p, q):
            raise InvalidStabilizerError(f"generators {a} and {b} anticommute")
    vecs = BitMatrix(n, 2 * n, tuple(g.z | (g.x << n) for g in gens))
    if rank(vecs) < n:
        combo = kernel_basis(vecs.transpose())[0]
        members = [j + 1 for j in range(n) if combo[j]]
        prod = Pauli(n)
        for j in members:
            prod = multiply(prod, gens[j - 1])
        names = ", ".join(map(str, members))
        if prod.phase_exp == 2:
            raise InvalidStabilizerError(f"group contains -I: product of generators {names}")
        raise InvalidStabilizerError(f"dependent generators: product of generators {names} is +I")


def build(gens: Iterable[Pauli | str]) -> StabilizerGroup:
    """Validate ``gens`` and return the group they generate.

    Strings are parsed as Pauli strings. Raises :class:`InvalidStabilizerError`
    on a wrong generator count, an anticommuting pair, an imaginary phase,
    or a dependent set (naming ``-I`` when the dependency produces it).
    """
    paulis = tuple(pauli_from_string(g) if isinstance(g, str) else g for g in gens)
    return StabilizerGroup(paulis)


# ---------- enumeration


def _gray_flip_positions(d: int) -> Iterator[int]:
    for t in range(1, 1 << d):
        yield (t & -t).bit_length() - 1


def enumerate_elements(g: StabilizerGroup, max_qubits: int | None = None) -> Iterator[Pauli]:
    """All ``2**n`` signed elements, identity first, in Gray-code order.

    Successive elements differ by one generator.
    """
    config.check_cap(g.n, config.max_enum_qubits(max_qubits), "qubits to enumerate", config.ENUM_ENV)
    return _span_gray(g.generators, g.n)


def _span_gray(basis: Sequence[Pauli], n: int) -> Iterator[Pauli]:
    cur = Pauli(n)
    yield cur
    for j in _gray_flip_positions(len(basis)):
        cur = multiply(cur, basis[j])
        yield cur


@dataclass(frozen=True)
class ElementTable:
    """Vectorized group listing in Gray-code order (row ``t`` is subset ``t ^ t >> 1``)."""

    n: int
    z: np.ndarray
    x: np.ndarray
    phase: np.ndarray = field(repr=False)

    @property
    def supports(self) -> np.ndarray:
        return self.z | self.x


def _np_product_phase(z1, x1, z2: int, x2: int) -> np.ndarray:
    z2 = np.uint64(z2)
    x2 = np.uint64(x2)
    only_x1 = x1 & ~z1
    only_z1 = z1 & ~x1
    y1 = x1 & z1
    only_x2 = x2 & ~z2
    only_z2 = z2 & ~x2
    y2 = x2 & z2
    plus = (only_x1 & y2) | (y1 & only_z2) | (only_z1 & only_x2)
    minus = (only_x1 & only_z2) | (y1 & only_x2) | (only_z1 & y2)
    return np.bitwise_count(plus).astype(np.int8) - np.bitwise_count(minus).astype(np.int8)


def element_table(g: StabilizerGroup, max_qubits: int | None = None) -> ElementTable:
    """Every element's bits and phase as numpy arrays, Gray-code order."""
    config.check_cap(g.n, config.max_enum_qubits(max_qubits), "qubits to enumerate", config.ENUM_ENV)
    z = np.zeros(1, dtype=np.uint64)
    x = np.zeros(1, dtype=np.uint64)
    ph = np.zeros(1, dtype=np.int8)
    for gen in g.generators:
        dph = _np_product_phase(z, x, gen.z, gen.x)
        z = np.concatenate([z, z ^ np.uint64(gen.z)])
        x = np.concatenate([x, x ^ np.uint64(gen.x)])
        ph = np.concatenate([ph, (ph + gen.phase_exp + dph) & 3])
    t = np.arange(1 << g.n, dtype=np.int64)
    order = t ^ (t >> 1)
    return ElementTable(g.n, z[order], x[order], ph[order])


def support_tally(g: StabilizerGroup, max_qubits: int | None = None) -> np.ndarray:
    """``counts[mask]`` = number of elements with support exactly ``mask``."""
    table = element_table(g, max_qubits)
    return np.bincount(table.supports.astype(np.int64), minlength=1 << g.n)


def check_sign_consistency(g: StabilizerGroup, max_qubits: int | None = None) -> bool:
    """Full check that every element is Hermitian and ``-I`` is absent."""
    table = element_table(g, max_qubits)
    if np.any(table.phase & 1):
        return False
    identity = (table.z == 0) & (table.x == 0)
    return bool(np.all(table.phase[identity] == 0))


# ---------- support-restricted subgroups


@dataclass(frozen=True)
class SupportCount:
    omega: SupportMask
    a_omega: int
    witnesses: tuple[Pauli, ...]


def support_subgroup(g: StabilizerGroup, omega: SupportMask) -> list[Pauli]:
    """Basis of ``{M in S : supp(M) within omega}`` by linear algebra only."""
    n = g.n
    if omega.n != n:
        raise DimensionError(f"mask on {omega.n} qubits for a {n}-qubit group")
    rows = g.gen_matrix.rows
    outside = [k for k in range(n) if not (omega.bits >> k) & 1]
    constraint = BitMatrix(2 * len(outside), n, tuple(rows[k] for k in outside) + tuple(rows[n + k] for k in outside))
    return [g.combine(v.bits) for v in kernel_basis(constraint)]


def a_omega(g: StabilizerGroup, omega: SupportMask) -> SupportCount:
    """Number of elements with support exactly ``omega``, plus up to 3 witnesses.

    Witnesses are the lexicographically smallest qualifying elements.
    """
    basis = support_subgroup(g, omega)
    config.check_cap(len(basis), config.MAX_SUBGROUP_DIM, "support subgroup dimension")
    hits = [p for p in _span_gray(basis, g.n) if (p.z | p.x) == omega.bits]
    hits.sort(key=Pauli.sort_key)
    return SupportCount(omega, len(hits), tuple(hits[:WITNESS_CAP]))


# ---------- dense oracles


def partial_trace(rho: np.ndarray, keep: Sequence[int], n: int) -> np.ndarray:
    """Trace out every qubit not in ``keep`` (0-based, qubit 0 most significant)."""
    keep = sorted(keep)
    traced = [k for k in range(n) if k not in keep]
    t = rho.reshape([2] * (2 * n))
    for count, k in enumerate(traced):
        axis = k - count
        t = np.trace(t, axis1=axis, axis2=axis + t.ndim // 2)
    d = 1 << len(keep)
    return t.reshape(d, d)


def reduced_density_dense(g: StabilizerGroup, omega: SupportMask) -> np.ndarray:
    """``2**-|omega|`` times the sum of restricted elements supported in ``omega``."""
    k = len(omega)
    config.check_cap(k, config.MAX_REDUCED_QUBITS, "qubits in a reduced density matrix")
    basis = support_subgroup(g, omega)
    rho = np.zeros((1 << k, 1 << k), dtype=complex)
    for p in _span_gray(basis, g.n):
        rho += to_dense(restrict(p, omega))
    return rho / (1 << k)


def dense_projector(g: StabilizerGroup) -> np.ndarray:
    """``|psi><psi|`` as the normalized sum of all group elements."""
    config.check_cap(g.n, config.MAX_PROJECTOR_QUBITS, "qubits for a dense projector")
    d = 1 << g.n
    rho = np.zeros((d, d), dtype=complex)
    for p in _span_gray(g.generators, g.n):
        rho += to_dense(p)
    return rho / d


# ---------- full entanglement


@dataclass(frozen=True)
class EntanglementResult:
    fully_entangled: bool
    witness: SupportMask | None = None

    def __bool__(self) -> bool:
        return self.fully_entangled


def is_fully_entangled(g: StabilizerGroup, method: str = "graph") -> EntanglementResult:
    """Whether the state admits no split across a bipartition.

    ``method="graph"`` converts to an LC-equivalent graph state and checks
    connectivity; the witness is the component holding qubit 1.
    ``method="scan"`` tries every bipartition and reports the first
    (by mask value) whose two support subgroups together span the group.
    """
    if method == "graph":
        return _entanglement_by_graph(g)
    if method == "scan":
        return _entanglement_by_scan(g)
    raise ValueError(f"unknown method {method!r}")


def _entanglement_by_scan(g: StabilizerGroup) -> EntanglementResult:
    n = g.n
    full = (1 << n) - 1
    # masks containing qubit 1 cover each bipartition once
    for bits in range(1, full, 2):
        omega = SupportMask(n, bits)
        if len(support_subgroup(g, omega)) + len(support_subgroup(g, omega.complement())) == n:
            return EntanglementResult(False, omega)
    return EntanglementResult(True)


@functools.lru_cache(maxsize=256)
def _entanglement_by_graph(g: StabilizerGroup) -> EntanglementResult:
    from stabequiv.graphstate import connected_component, to_graph_form

    graph, _ = to_graph_form(g)
    comp = connected_component(graph, 0)
    if comp == (1 << g.n) - 1:
        return EntanglementResult(True)
    witness = SupportMask(g.n, comp)
    if len(support_subgroup(g, witness)) + len(support_subgroup(g, witness.complement())) != g.n:
        raise InternalError(f"graph component {witness} does not split the state")
    return EntanglementResult(False, witness)

