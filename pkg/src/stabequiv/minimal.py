"""Minimal supports, the subgroup generated by minimal elements, and the criteria built on them.

A support is minimal when some element has exactly that support and no
nonidentity element has a support strictly inside it. Discovery is
exhaustive over the ``2**n`` elements; inclusion-minimality is then decided
for all masks at once with subset-OR (zeta) transforms over the ``2**n``
mask lattice.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from stabequiv import config
from stabequiv.exceptions import InternalError
from stabequiv.gf2 import independent_subset
from stabequiv.gf4 import is_gf4_linear
from stabequiv.pauli import LETTERS, Pauli, SupportMask
from stabequiv.stabilizer import (
    StabilizerGroup,
    SupportCount,
    a_omega,
    element_table,
    is_fully_entangled,
)

ALL_LETTERS = frozenset("XYZ")


@dataclass(frozen=True)
class MinimalSupportTable:
    n: int
    entries: tuple[SupportCount, ...]
    m_basis: tuple[Pauli, ...]
    per_qubit_coverage: tuple[frozenset[str], ...]

    @property
    def supports(self) -> list[SupportMask]:
        return [e.omega for e in self.entries]


@dataclass(frozen=True)
class _Landscape:
    counts: np.ndarray  # elements per exact support mask
    minimal: np.ndarray  # bool per mask

    @property
    def present(self) -> np.ndarray:
        p = self.counts > 0
        p[0] = False
        return p


def _subset_or(flags: np.ndarray, n: int) -> np.ndarray:
    """``out[s]`` = OR of ``flags[t]`` over all ``t`` contained in ``s``."""
    out = flags.copy()
    for i in range(n):
        v = out.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    return out


def _proper_subset_or(flags: np.ndarray, n: int) -> np.ndarray:
    """``out[s]`` = OR of ``flags[t]`` over ``t`` strictly inside ``s``."""
    below = _subset_or(flags, n)
    out = np.zeros_like(flags)
    for i in range(n):
        o = out.reshape(-1, 2, 1 << i)
        b = below.reshape(-1, 2, 1 << i)
        o[:, 1, :] |= b[:, 0, :]
    return out


def _check_enum(g: StabilizerGroup, max_qubits: int | None) -> None:
    # checked outside the caches so a tightened cap still applies to cached groups
    config.check_cap(g.n, config.max_enum_qubits(max_qubits), "qubits to enumerate", config.ENUM_ENV)


@functools.lru_cache(maxsize=64)
def _landscape(g: StabilizerGroup) -> _Landscape:
    table = element_table(g, max_qubits=g.n)
    counts = np.bincount(table.supports.astype(np.int64), minlength=1 << g.n)
    present = counts > 0
    present[0] = False
    minimal = present & ~_proper_subset_or(present, g.n)
    return _Landscape(counts, minimal)


def coverage(basis: tuple[Pauli, ...] | list[Pauli], n: int) -> tuple[frozenset[str], ...]:
    """Letters occurring on each qubit across the group spanned by ``basis``.

    The projection of a span onto one qubit is the span of the projected
    basis pairs, so no enumeration is needed.
    """
    out = []
    for k in range(n):
        codes = {((p.z >> k) & 1) << 1 | ((p.x >> k) & 1) for p in basis} - {0}
        if len(codes) >= 2:
            out.append(ALL_LETTERS)
        else:
            out.append(frozenset(LETTERS[c] for c in codes))
    return tuple(out)


def minimal_supports(g: StabilizerGroup, max_qubits: int | None = None) -> MinimalSupportTable:
    """All minimal supports with counts and witnesses, a basis of the subgroup
    generated by minimal elements, and its per-qubit letter coverage.

    Supports come in lexicographic order of their sorted qubit indices.
    """
    _check_enum(g, max_qubits)
    return _minimal_table(g)


@functools.lru_cache(maxsize=64)
def _minimal_table(g: StabilizerGroup) -> MinimalSupportTable:
    n = g.n
    land = _landscape(g)
    masks = np.flatnonzero(land.minimal).tolist()
    omegas = sorted((SupportMask(n, m) for m in masks), key=SupportMask.sort_key)
    entries = []
    for omega in omegas:
        sc = a_omega(g, omega)
        if sc.a_omega != land.counts[omega.bits]:
            raise InternalError(f"count mismatch on {omega}: {sc.a_omega} vs {land.counts[omega.bits]}")
        entries.append(sc)
    # minimal elements number at most 3 per support, so the witnesses are all of them
    witnesses = [w for e in entries for w in e.witnesses]
    chosen = independent_subset(w.z | (w.x << n) for w in witnesses)
    m_basis = tuple(witnesses[i] for i in chosen)
    return MinimalSupportTable(n, tuple(entries), m_basis, coverage(m_basis, n))


def _in_scope(g: StabilizerGroup) -> bool:
    # the criteria presuppose a fully entangled state on at least two qubits
    return g.n >= 2 and is_fully_entangled(g).fully_entangled


@dataclass(frozen=True)
class Theorem1Result:
    holds: bool
    coverage: tuple[frozenset[str], ...]
    fully_entangled: bool

    def __bool__(self) -> bool:
        return self.holds


def theorem1_criterion(g: StabilizerGroup, max_qubits: int | None = None) -> Theorem1Result:
    """X, Y and Z all occur on every qubit of the minimal-element subgroup,
    for a fully entangled state on n >= 2 qubits."""
    table = minimal_supports(g, max_qubits)
    full = all(c == ALL_LETTERS for c in table.per_qubit_coverage)
    fe = is_fully_entangled(g).fully_entangled
    return Theorem1Result(full and fe and g.n >= 2, table.per_qubit_coverage, fe)


@dataclass(frozen=True)
class Corollary1Flags:
    i: bool
    ii: bool
    iii: bool
    iv: bool
    raw: tuple[bool, bool, bool, bool] = field(default=(False, False, False, False), compare=False)

    def any(self) -> bool:
        return self.i or self.ii or self.iii or self.iv

    def as_dict(self) -> dict[str, bool]:
        return {"i": self.i, "ii": self.ii, "iii": self.iii, "iv": self.iv}


def corollary1_conditions(g: StabilizerGroup, max_qubits: int | None = None) -> Corollary1Flags:
    """The four sufficient conditions, each reported only for in-scope states.

    (i)   minimal elements generate the whole group
    (ii)  the code is GF(4)-linear
    (iii) every element with nonminimal support strictly contains an
          A = 3 minimal support
    (iv)  the A = 3 minimal supports cover every qubit

    ``raw`` keeps the unconditioned values.
    """
    n = g.n
    table = minimal_supports(g, max_qubits)
    land = _landscape(g)

    raw_i = len(table.m_basis) == n
    raw_ii = is_gf4_linear(g)
    threes = np.zeros(1 << n, dtype=bool)
    union = 0
    for e in table.entries:
        if e.a_omega == 3:
            threes[e.omega.bits] = True
            union |= e.omega.bits
    nonminimal = land.present & ~land.minimal
    raw_iii = bool(np.all(_subset_or(threes, n)[nonminimal]))
    raw_iv = union == (1 << n) - 1

    scope = _in_scope(g)
    flags = Corollary1Flags(scope and raw_i, scope and raw_ii, scope and raw_iii, scope and raw_iv,
                            raw=(raw_i, raw_ii, raw_iii, raw_iv))
    if flags.any() and not theorem1_criterion(g, max_qubits).holds:
        raise InternalError(f"corollary flags {flags.as_dict()} hold but the coverage criterion fails")
    return flags


@dataclass(frozen=True)
class Lemma1Report:
    passed: bool
    checked: int
    violations: tuple[str, ...] = ()


def lemma1_verify(g: StabilizerGroup, max_qubits: int | None = None) -> Lemma1Report:
    """Check every minimal support: A is 1 or 3, A = 3 only on even supports,
    and an A = 3 triple shows X, Y, Z at each of its positions."""
    table = minimal_supports(g, max_qubits)
    problems = []
    for e in table.entries:
        if e.a_omega not in (1, 3):
            problems.append(f"A = {e.a_omega} on minimal support {e.omega}")
            continue
        if e.a_omega == 3:
            if len(e.omega) % 2:
                problems.append(f"A = 3 on odd minimal support {e.omega}")
            for i in e.omega.indices():
                seen = {w.letter(i - 1) for w in e.witnesses}
                if seen != ALL_LETTERS:
                    problems.append(f"witnesses on {e.omega} show {sorted(seen)} at qubit {i}")
    return Lemma1Report(not problems, len(table.entries), tuple(problems))
