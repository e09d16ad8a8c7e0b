"""Shared fixtures-as-functions and hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from stabequiv.graphstate import cycle_graph, graph_state, random_stabilizer
from stabequiv.stabilizer import StabilizerGroup, build

EPR = ["XX", "ZZ"]
EPR2 = ["XXII", "ZZII", "IIXX", "IIZZ"]
TRIANGLE = ["XZZ", "ZXZ", "ZZX"]


def ghz(n: int) -> StabilizerGroup:
    from stabequiv.ghz import ghz_stabilizer

    return ghz_stabilizer(n)


def cycle(n: int) -> StabilizerGroup:
    return graph_state(cycle_graph(n))


def epr() -> StabilizerGroup:
    return build(EPR)


def groups(min_n: int = 1, max_n: int = 8, p: float = 0.5):
    """Random stabilizer groups; edge probability ``p`` for the underlying graph."""
    return st.builds(
        lambda n, seed: random_stabilizer(n, seed, p),
        st.integers(min_n, max_n),
        st.integers(0, 2**32 - 1),
    )


def pauli_pairs(max_n: int = 10):
    from stabequiv.pauli import Pauli

    def make(n, z1, x1, p1, z2, x2, p2):
        m = (1 << n) - 1
        return Pauli(n, z1 & m, x1 & m, p1), Pauli(n, z2 & m, x2 & m, p2)

    bits = st.integers(0, 2**max_n - 1)
    ph = st.integers(0, 3)
    return st.builds(make, st.integers(1, max_n), bits, bits, ph, bits, bits, ph)


HEXACODE_ROWS = ["ZIIZXX", "IZIXZX", "IIZXXZ"]


def hexacode() -> StabilizerGroup:
    """The [[6,0]] state of the hexacode: each row and xi times it."""
    from stabequiv.gf4 import xi_scale_pauli
    from stabequiv.pauli import pauli_from_string

    rows = [pauli_from_string(r) for r in HEXACODE_ROWS]
    return build(rows + [xi_scale_pauli(p) for p in rows])


def gf4_linear_instances(search_seeds: int = 400) -> list[StabilizerGroup]:
    """Known GF(4)-linear states: EPR, EPR pairs, the hexacode, their images
    under per-qubit xi-scalings, and linear states found by random search."""
    import numpy as np

    from stabequiv.gf4 import is_gf4_linear
    from stabequiv.lclifford import LocalCliffordOp, apply

    base = [epr(), build(EPR2), build(["XXIIII", "ZZIIII", "IIXXII", "IIZZII", "IIIIXX", "IIIIZZ"]), hexacode()]
    out = list(base)
    rng = np.random.default_rng(2024)
    for g in base:
        for _ in range(5):
            # factors 0, 4, 5 are multiplication by 1, xi, xi^2
            idx = rng.choice([0, 4, 5], size=g.n).tolist()
            out.append(apply(LocalCliffordOp.from_indices(idx), g))
    for n in (2, 4, 6):
        for seed in range(search_seeds):
            g = random_stabilizer(n, seed)
            if is_gf4_linear(g):
                out.append(g)
    return out
