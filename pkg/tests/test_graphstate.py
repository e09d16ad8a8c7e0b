import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ghz, groups
from stabequiv.exceptions import InvalidGraphError, InvalidStabilizerError
from stabequiv.gf2 import BitMatrix
from stabequiv.graphstate import (
    Graph,
    complete_graph,
    cycle_graph,
    format_graph,
    graph_generators,
    graph_state,
    is_connected,
    parse_graph,
    random_graph,
    to_graph_form,
)
from stabequiv.lclifford import apply
from stabequiv.stabilizer import build, is_fully_entangled


def test_graph_state_examples():
    assert [str(p) for p in graph_state(Graph.from_edges(3, [])).generators] == ["XII", "IXI", "IIX"]
    assert [str(p) for p in graph_state(Graph.from_edges(2, [(1, 2)])).generators] == ["XZ", "ZX"]
    c5 = [str(p) for p in graph_state(cycle_graph(5)).generators]
    assert c5 == ["XZIIZ", "ZXZII", "IZXZI", "IIZXZ", "ZIIZX"]


def test_invalid_graphs():
    with pytest.raises(InvalidGraphError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(InvalidGraphError, match="symmetric"):
        Graph(2, BitMatrix.from_array([[0, 1], [0, 0]]))
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(2, [(1, 3)])


def test_graph_form_of_graph_state_is_fixed_point():
    gr = cycle_graph(5)
    out, op = to_graph_form(graph_state(gr))
    assert out == gr
    assert set(op.indices) == {0}


def test_graph_form_of_ghz3():
    gr, op = to_graph_form(ghz(3))
    assert gr.edges() in ([(1, 3), (2, 3)], [(1, 2), (1, 3), (2, 3)], [(1, 2), (1, 3)], [(1, 2), (2, 3)])
    assert apply(op, ghz(3)).same_group(graph_state(gr))


def test_connectivity_examples():
    assert is_connected(cycle_graph(5))
    assert not is_connected(Graph.from_edges(2, []))
    assert not is_connected(Graph.from_edges(4, [(1, 2), (3, 4)]))
    assert is_connected(complete_graph(4))


def test_graph_file_roundtrip():
    text = "# square\n4\n1 2\n2 3 # edge\n3 4\n4 1\n"
    gr = parse_graph(io.StringIO(text))
    assert gr == cycle_graph(4)
    assert parse_graph(io.StringIO(format_graph(gr))) == gr


@pytest.mark.parametrize("text", ["", "x\n", "3\n1\n", "0\n", "2\n1 1\n"])
def test_graph_file_errors(text):
    with pytest.raises(InvalidGraphError):
        parse_graph(io.StringIO(text))


@settings(max_examples=300, deadline=None)
@given(groups(1, 8))
def test_graph_form_certificate_verifies(g):
    gr, op = to_graph_form(g)
    assert apply(op, g).same_group(graph_state(gr))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_graph_roundtrip(n, seed):
    gr = random_graph(n, np.random.default_rng(seed))
    g = graph_state(gr)
    out, op = to_graph_form(g)
    assert apply(op, g).same_group(graph_state(out))


@settings(max_examples=200, deadline=None)
@given(groups(1, 8, p=0.3))
def test_connectivity_matches_bipartition_scan(g):
    gr, _ = to_graph_form(g)
    assert is_connected(gr) == is_fully_entangled(g, method="scan").fully_entangled


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6), st.data())
def test_graph_generators_commute_iff_symmetric(n, data):
    rows = [data.draw(st.integers(0, 2**n - 1)) & ~(1 << i) for i in range(n)]
    theta = BitMatrix(n, n, tuple(rows))
    symmetric = theta.T == theta
    try:
        build(graph_generators(theta))
        built = True
    except InvalidStabilizerError:
        built = False
    assert built == symmetric
