"""Graph states, reduction of any stabilizer state to graph form, connectivity."""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import numpy as np

from stabequiv.exceptions import InternalError, InvalidGraphError
from stabequiv.gf2 import BitMatrix, independent_subset
from stabequiv.lclifford import LocalCliffordOp, apply, fix_signs, random_lc
from stabequiv.pauli import Pauli
from stabequiv.stabilizer import StabilizerGroup, build

_HADAMARD = 1
_PHASE = 2


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices (0-based internally)."""

    n: int
    theta: BitMatrix

    def __post_init__(self):
        t = self.theta
        if t.shape != (self.n, self.n):
            raise InvalidGraphError(f"adjacency is {t.shape}, expected {(self.n, self.n)}")
        for i in range(self.n):
            if t[i, i]:
                raise InvalidGraphError(f"self-loop at vertex {i + 1}")
        if t.transpose() != t:
            raise InvalidGraphError("adjacency matrix is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """From 1-based ``(u, v)`` pairs."""
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraphError(f"edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, BitMatrix(n, n, tuple(rows)))

    def edges(self) -> list[tuple[int, int]]:
        """1-based edges with ``u < v``, sorted."""
        return [(u + 1, v + 1) for u in range(self.n) for v in range(u + 1, self.n) if self.theta[u, v]]

    def neighbours(self, v: int) -> int:
        return self.theta.rows[v]


def graph_generators(theta: BitMatrix) -> list[Pauli]:
    """Generators with matrix ``[theta; I]`` for any square ``theta``, unvalidated."""
    n = theta.nrows
    cols = theta.transpose().rows
    return [Pauli(n, cols[j], 1 << j) for j in range(n)]


def graph_state(gr: Graph) -> StabilizerGroup:
    return build(graph_generators(gr.theta))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def connected_component(gr: Graph, start: int) -> int:
    """Bitmask of the component containing 0-based vertex ``start``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= gr.theta.rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(gr: Graph) -> bool:
    if gr.n == 0:
        return True
    return connected_component(gr, 0) == (1 << gr.n) - 1


def to_graph_form(g: StabilizerGroup) -> tuple[Graph, LocalCliffordOp]:
    """A graph state LC-equivalent to ``g`` and the operation that maps onto it.

    Hadamards go on the smallest-index qubits that make the x-block
    invertible; remaining diagonal entries are cleared with phase factors.
    ``apply(op, g)`` equals ``graph_state(graph)`` as signed groups.
    """
    n = g.n
    gens = [(p.z, p.x) for p in g.generators]

    # split into n-k generators with zero x-part and k with independent x-parts
    top = 0
    for q in range(n):
        bit = 1 << q
        found = next((i for i in range(top, n) if gens[i][1] & bit), None)
        if found is None:
            continue
        gens[top], gens[found] = gens[found], gens[top]
        pz, px = gens[top]
        for i in range(n):
            if i != top and gens[i][1] & bit:
                gens[i] = (gens[i][0] ^ pz, gens[i][1] ^ px)
        top += 1
    z_type = [z for z, _ in gens[top:]]
    z_rows = [sum(((z >> q) & 1) << j for j, z in enumerate(z_type)) for q in range(n)]
    hadamard = independent_subset(z_rows)

    indices = [0] * n
    for q in hadamard:
        indices[q] = _HADAMARD
    mask_h = sum(1 << q for q in hadamard)
    gens = [((z & ~mask_h) | (x & mask_h), (x & ~mask_h) | (z & mask_h)) for z, x in gens]

    # reduce the now-invertible x-block to the identity
    for q in range(n):
        bit = 1 << q
        found = next((i for i in range(q, n) if gens[i][1] & bit), None)
        if found is None:
            raise InternalError("x-block is singular after Hadamards")
        gens[q], gens[found] = gens[found], gens[q]
        pz, px = gens[q]
        for i in range(n):
            if i != q and gens[i][1] & bit:
                gens[i] = (gens[i][0] ^ pz, gens[i][1] ^ px)

    cols = []
    for q, (z, x) in enumerate(gens):
        if x != 1 << q:
            raise InternalError("x-block did not reduce to the identity")
        if (z >> q) & 1:
            z ^= 1 << q
            indices[q] = _PHASE if indices[q] == 0 else 5  # S after H is V2
        cols.append(z)
    theta = BitMatrix(n, n, tuple(cols)).transpose()
    try:
        graph = Graph(n, theta)
    except InvalidGraphError as exc:
        raise InternalError(f"reduced form is not a graph: {exc}") from exc

    bare = LocalCliffordOp.from_indices(indices)
    target = graph_state(graph)
    op = bare.with_layer(fix_signs(bare, g, target))
    if not apply(op, g).same_group(target):
        raise InternalError("graph-form certificate does not verify")
    return graph, op


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, BitMatrix(n, n, tuple(rows)))


def random_stabilizer(n: int, seed: int | np.random.Generator | None = None, p: float = 0.5) -> StabilizerGroup:
    """Random graph, random local Clifford, then a random change of generators."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    g = apply(random_lc(n, rng), graph_state(random_graph(n, rng, p)))
    gens = list(g.generators)
    if n > 1:
        for _ in range(2 * n):
            i, j = rng.choice(n, size=2, replace=False)
            gens[i] = gens[i] * gens[j]
    rng.shuffle(gens)
    return build(gens)


# ---------- graph files: first line n, then one 1-based "u v" edge per line


def parse_graph(source: str | Path | TextIO) -> Graph:
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            return parse_graph(fh)
    n = None
    edges = []
    for lineno, raw in enumerate(source, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(v) for v in parts]
        except ValueError:
            raise InvalidGraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise InvalidGraphError(f"line {lineno}: first line must be the vertex count")
            n = values[0]
            continue
        if len(values) != 2:
            raise InvalidGraphError(f"line {lineno}: expected an edge 'u v'")
        edges.append(tuple(values))
    if n is None:
        raise InvalidGraphError("empty graph file")
    return Graph.from_edges(n, edges)


def format_graph(gr: Graph) -> str:
    out = io.StringIO()
    out.write(f"{gr.n}\n")
    for u, v in gr.edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()
