import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import EPR2, TRIANGLE, cycle, groups
from stabequiv.exceptions import DomainError
from stabequiv.ghz import ghz_certificate, ghz_class_note, ghz_stabilizer, is_lc_ghz
from stabequiv.lclifford import apply, lc_equivalent, random_lc
from stabequiv.stabilizer import build


def test_construction_examples():
    assert [str(p) for p in ghz_stabilizer(2).generators] == ["XX", "ZZ"]
    assert [str(p) for p in ghz_stabilizer(3).generators] == ["XXX", "ZZI", "IZZ"]
    assert ghz_stabilizer(4).n == 4
    with pytest.raises(DomainError):
        ghz_stabilizer(1)


def test_classifier_examples():
    for n in range(3, 9):
        assert is_lc_ghz(ghz_stabilizer(n))
    assert not is_lc_ghz(build(EPR2))
    assert "fully entangled" in ghz_class_note(build(EPR2))
    assert not is_lc_ghz(cycle(4))
    assert not is_lc_ghz(build(["Z"]))
    assert is_lc_ghz(build(["XZ", "ZX"]))


def test_certificate_examples():
    cert = ghz_certificate(ghz_stabilizer(5))
    assert cert.op.indices == (0,) * 5 and cert.target_n == 5
    tri = build(TRIANGLE)
    assert apply(ghz_certificate(tri).op, tri).same_group(ghz_stabilizer(3))
    with pytest.raises(DomainError):
        ghz_certificate(cycle(4))


@pytest.mark.parametrize("n", range(2, 9))
def test_certificate_roundtrip(n):
    target = ghz_stabilizer(n)
    for seed in range(100):
        g = apply(random_lc(n, seed), target)
        assert is_lc_ghz(g)
        assert apply(ghz_certificate(g).op, g).same_group(target)


@settings(max_examples=150, deadline=None)
@given(groups(2, 6, p=0.4))
def test_classifier_matches_exhaustive_search(g):
    assert is_lc_ghz(g) == (lc_equivalent(g, ghz_stabilizer(g.n)) is not None)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 8), st.integers(0, 2**32 - 1))
def test_recombined_generators_still_certify(n, seed):
    rng = np.random.default_rng(seed)
    g = apply(random_lc(n, rng), ghz_stabilizer(n))
    gens = list(g.generators)
    for _ in range(2 * n):
        i, j = rng.choice(n, size=2, replace=False)
        gens[i] = gens[i] * gens[j]
    h = build(gens)
    assert apply(ghz_certificate(h).op, h).same_group(ghz_stabilizer(n))
