import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import pauli_pairs
from stabequiv.exceptions import DimensionError, PauliParseError, ResourceLimitError
from stabequiv.pauli import (
    Pauli,
    SupportMask,
    commutes,
    multiply,
    pauli_from_string,
    pauli_to_string,
    restrict,
    support,
    to_dense,
)

X = np.array([[0, 1], [1, 0]])
Z = np.diag([1, -1])
Y = np.array([[0, -1j], [1j, 0]])


def test_parse_examples():
    p = pauli_from_string("+XZ")
    assert (p.n, p.z, p.x, p.phase_exp) == (2, 0b10, 0b01, 0)
    q = pauli_from_string("-YY")
    assert (q.n, q.z, q.x, q.phase_exp) == (2, 0b11, 0b11, 2)
    assert pauli_from_string("-iX").phase_exp == 3
    assert pauli_from_string("+iX").phase_exp == 1


@pytest.mark.parametrize("text,pos", [("XQ", 2), ("", 1), ("-", 2), ("+iXa", 4)])
def test_parse_errors_name_position(text, pos):
    with pytest.raises(PauliParseError) as exc:
        pauli_from_string(text)
    assert exc.value.position == pos


def test_to_string_roundtrip():
    for s in ["XYZI", "-ZZ", "+iY", "-iXI"]:
        assert pauli_to_string(pauli_from_string(s)) == s
    assert pauli_to_string(pauli_from_string("XX"), explicit_sign=True) == "+XX"


def test_multiply_examples():
    xz = multiply(pauli_from_string("X"), pauli_from_string("Z"))
    assert (xz.z, xz.x, xz.phase_exp) == (1, 1, 3)
    p = pauli_from_string("XYZ")
    assert multiply(p, Pauli.identity(3)) == p
    assert multiply(pauli_from_string("XX"), pauli_from_string("ZZ")) == pauli_from_string("-YY")
    with pytest.raises(DimensionError):
        multiply(pauli_from_string("X"), pauli_from_string("XX"))


def test_commutes_examples():
    assert not commutes(pauli_from_string("X"), pauli_from_string("Z"))
    assert commutes(pauli_from_string("XX"), pauli_from_string("ZZ"))
    assert commutes(pauli_from_string("XYZ"), Pauli.identity(3))


def test_support_examples():
    assert support(pauli_from_string("IXYI")).indices() == [2, 3]
    assert support(Pauli.identity(4)).bits == 0
    assert support(pauli_from_string("ZZII")) == SupportMask.from_indices(4, [1, 2])


def test_support_mask_order_and_str():
    a = SupportMask.from_indices(3, [1, 3])
    b = SupportMask.from_indices(3, [2])
    assert sorted([a, b], key=SupportMask.sort_key) == [a, b]
    assert a.complement() == b
    assert str(a) == "{1,3}"
    assert SupportMask.from_indices(3, [1]) < a


def test_dense_examples():
    assert np.array_equal(to_dense(pauli_from_string("Z")), Z)
    assert np.array_equal(to_dense(pauli_from_string("-Y")), np.array([[0, 1j], [-1j, 0]]))
    assert np.array_equal(to_dense(pauli_from_string("XZ")), np.kron(X, Z))
    with pytest.raises(ResourceLimitError):
        to_dense(Pauli.identity(13))


def test_restrict():
    p = pauli_from_string("-XYZ")
    assert restrict(p, SupportMask.from_indices(3, [1, 3])) == pauli_from_string("-XZ")


@settings(max_examples=200, deadline=None)
@given(pauli_pairs(), st.data())
def test_multiply_associative_and_bit_homomorphism(pair, data):
    p, q = pair
    r = Pauli(p.n, data.draw(st.integers(0, 2**p.n - 1)), data.draw(st.integers(0, 2**p.n - 1)))
    assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))
    pq = multiply(p, q)
    assert (pq.z, pq.x) == (p.z ^ q.z, p.x ^ q.x)


@settings(max_examples=200, deadline=None)
@given(pauli_pairs())
def test_commutes_iff_products_agree(pair):
    p, q = pair
    assert commutes(p, q) == (multiply(p, q) == multiply(q, p))


@settings(max_examples=200, deadline=None)
@given(pauli_pairs(max_n=4))
def test_dense_is_a_homomorphism(pair):
    p, q = pair
    assert np.array_equal(to_dense(multiply(p, q)), to_dense(p) @ to_dense(q))


@settings(max_examples=200, deadline=None)
@given(pauli_pairs())
def test_support_of_product(pair):
    p, q = pair
    assert support(multiply(p, q)) <= (support(p) | support(q))
