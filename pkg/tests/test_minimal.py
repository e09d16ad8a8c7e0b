import numpy as np
from hypothesis import given, settings

from helpers import EPR2, cycle, epr, ghz, groups
from stabequiv.gf2 import in_span
from stabequiv.lclifford import apply, random_lc
from stabequiv.minimal import (
    ALL_LETTERS,
    coverage,
    corollary1_conditions,
    lemma1_verify,
    minimal_supports,
    theorem1_criterion,
)
from stabequiv.pauli import SupportMask
from stabequiv.stabilizer import build, enumerate_elements, support_tally


def listing(g):
    return [(e.omega.indices(), e.a_omega) for e in minimal_supports(g).entries]


def brute_minimal(g):
    supports = {p.support().bits for p in enumerate_elements(g)} - {0}
    return sorted(
        (s for s in supports if not any(t != s and t & s == t for t in supports)),
        key=lambda s: SupportMask(g.n, s).sort_key(),
    )


def test_examples():
    assert listing(epr()) == [([1, 2], 3)]
    table = minimal_supports(ghz(3))
    assert listing(ghz(3)) == [([1, 2], 1), ([1, 3], 1), ([2, 3], 1)]
    assert {str(p) for p in table.m_basis} <= {"ZZI", "ZIZ", "IZZ"} and len(table.m_basis) == 2
    assert table.per_qubit_coverage == (frozenset("Z"),) * 3
    assert listing(build(["Z"])) == [([1], 1)]


def test_theorem1_examples():
    assert not theorem1_criterion(ghz(4))
    assert theorem1_criterion(epr()).holds
    assert theorem1_criterion(cycle(5)).holds
    # a product state is out of scope even though its coverage is full
    assert not theorem1_criterion(build(EPR2)).holds


def test_corollary_examples():
    assert corollary1_conditions(epr()).as_dict() == {"i": True, "ii": True, "iii": True, "iv": True}
    assert not corollary1_conditions(ghz(3)).any()
    assert corollary1_conditions(cycle(5)).i
    flags = corollary1_conditions(build(EPR2))
    assert not flags.any() and flags.raw == (True, True, True, True)


def test_lemma1_examples():
    rep = lemma1_verify(epr())
    assert rep.passed and rep.checked == 1
    rep = lemma1_verify(ghz(5))
    assert rep.passed and all(e.a_omega == 1 for e in minimal_supports(ghz(5)).entries)


def test_coverage_from_basis():
    from stabequiv.pauli import pauli_from_string as p

    assert coverage([p("XZ"), p("ZI")], 2) == (ALL_LETTERS, frozenset("Z"))
    assert coverage([], 1) == (frozenset(),)


@settings(max_examples=150, deadline=None)
@given(groups(1, 7))
def test_minimal_supports_match_brute_force(g):
    table = minimal_supports(g)
    assert [e.omega.bits for e in table.entries] == brute_minimal(g)
    tally = support_tally(g)
    for e in table.entries:
        assert e.a_omega == tally[e.omega.bits]
        assert all(w.support() == e.omega for w in e.witnesses)


@settings(max_examples=150, deadline=None)
@given(groups(1, 7))
def test_m_basis_spans_minimal_elements(g):
    table = minimal_supports(g)
    n = g.n
    basis = [p.z | (p.x << n) for p in table.m_basis]
    witnesses = [w.z | (w.x << n) for e in table.entries for w in e.witnesses]
    for w in witnesses:
        assert in_span(w, basis)
    for b in basis:
        assert in_span(b, witnesses)


@settings(max_examples=100, deadline=None)
@given(groups(1, 6))
def test_coverage_matches_enumerated_subgroup(g):
    table = minimal_supports(g)
    seen = [set() for _ in range(g.n)]
    n = g.n
    basis = list(table.m_basis)
    for mask in range(1 << len(basis)):
        z = x = 0
        for i, b in enumerate(basis):
            if mask >> i & 1:
                z ^= b.z
                x ^= b.x
        for k in range(n):
            code = ((z >> k) & 1) << 1 | ((x >> k) & 1)
            if code:
                seen[k].add("IXZY"[code])
    assert [frozenset(s) for s in seen] == list(table.per_qubit_coverage)


@settings(max_examples=200, deadline=None)
@given(groups(1, 8))
def test_corollary_chain(g):
    flags = corollary1_conditions(g)
    t1 = theorem1_criterion(g).holds
    if flags.ii or flags.iii:
        assert flags.i
    if flags.any():
        assert t1


@settings(max_examples=200, deadline=None)
@given(groups(1, 8))
def test_lemma1_random(g):
    rep = lemma1_verify(g)
    assert rep.passed, rep.violations


@settings(max_examples=100, deadline=None)
@given(groups(1, 8))
def test_minimal_listing_is_lc_invariant(g):
    h = apply(random_lc(g.n, 0), g)
    assert listing(g) == listing(h)
    assert np.array_equal(support_tally(g), support_tally(h))
