"""Standalone brute-force oracle for small stabilizer states.

Works on literal 2x2 Pauli matrices and closes the group by repeated
multiplication. Shares no code with ``stabequiv`` so that the values it
produces can be frozen into tests of the package.

Run directly to print the known-instance table.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_PHASES = (1, 1j, -1, -1j)


def _mul1(a, b):
    prod = _MATS[a] @ _MATS[b]
    for letter, m in _MATS.items():
        for ph in _PHASES:
            if np.allclose(prod, ph * m):
                return ph, letter
    raise AssertionError


def mul(p, q):
    (pa, pl), (qa, ql) = p, q
    phase = pa * qa
    out = []
    for a, b in zip(pl, ql):
        ph, c = _mul1(a, b)
        phase *= ph
        out.append(c)
    return complex(phase), "".join(out)


def parse(s):
    sign = -1 if s.startswith("-") else 1
    return complex(sign), s.lstrip("+-")


def close(gens):
    n = len(gens[0][1])
    group = {("I" * n): complex(1)}
    frontier = [(complex(1), "I" * n)]
    while frontier:
        nxt = []
        for el in frontier:
            for g in gens:
                ph, lab = mul(el, g)
                if lab not in group:
                    group[lab] = ph
                    nxt.append((ph, lab))
                else:
                    assert abs(group[lab] - ph) < 1e-9, "inconsistent signs"
        frontier = nxt
    return group


def support(label):
    return frozenset(i + 1 for i, c in enumerate(label) if c != "I")


def analyse(gen_strings):
    gens = [parse(s) for s in gen_strings]
    n = len(gens[0][1])
    group = close(gens)
    assert len(group) == 2**n
    a_table = {}
    for lab in group:
        a_table.setdefault(support(lab), []).append(lab)
    supports = [s for s in a_table if s]
    minimal = sorted(
        (s for s in supports if not any(t < s for t in supports)),
        key=lambda s: sorted(s),
    )
    min_elems = [(group[lab], lab) for s in minimal for lab in a_table[s]]
    m_group = close(min_elems) if min_elems else {"I" * n: 1}
    coverage = ["".join(sorted({lab[i] for lab in m_group} - {"I"})) for i in range(n)]
    full_cov = ["".join(sorted({lab[i] for lab in group} - {"I"})) for i in range(n)]

    def dim_sub(omega):
        return sum(1 for lab in group if support(lab) <= omega)

    everything = frozenset(range(1, n + 1))
    fe = True
    for k in range(1, n):
        for omega in itertools.combinations(range(1, n + 1), k):
            om = frozenset(omega)
            if dim_sub(om) * dim_sub(everything - om) == 2**n:
                fe = False
    cyc = {"Z": "X", "X": "Y", "Y": "Z", "I": "I"}
    gf4 = all("".join(cyc[c] for c in lab) in group for lab in group)
    three = [s for s in minimal if len(a_table[s]) == 3]
    cor_i = len(m_group) == len(group)
    cor_iii = all(
        any(t < support(lab) for t in three)
        for lab in group
        if support(lab) and support(lab) not in minimal
    )
    cor_iv = bool(three) and frozenset().union(*three) == everything
    pairs = [len(a_table.get(frozenset({i, i + 1}), [])) for i in range(1, n)]
    return {
        "n": n,
        "fully_entangled": fe,
        "minimal_supports": [[sorted(s), len(a_table[s])] for s in minimal],
        "coverage_M": coverage,
        "coverage_S": full_cov,
        "theorem1": fe and all(c == "XYZ" for c in coverage),
        "cor_i": cor_i,
        "cor_iii": cor_iii,
        "cor_iv": cor_iv,
        "gf4_linear": gf4,
        "consecutive_pair_A": pairs,
        "a_table": {",".join(map(str, sorted(s))): len(v) for s, v in sorted(a_table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))},
    }


def ghz(n):
    return ["X" * n] + ["I" * i + "ZZ" + "I" * (n - i - 2) for i in range(n - 1)]


def cycle_graph(n):
    gens = []
    for i in range(n):
        row = ["I"] * n
        row[i] = "X"
        row[(i - 1) % n] = "Z"
        row[(i + 1) % n] = "Z"
        gens.append("".join(row))
    return gens


INSTANCES = {
    "EPR": ["XX", "ZZ"],
    "GHZ3": ghz(3),
    "GHZ4": ghz(4),
    "GHZ5": ghz(5),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "triangle": ["XZZ", "ZXZ", "ZZX"],
}


if __name__ == "__main__":
    for name, gens in INSTANCES.items():
        res = analyse(gens)
        res.pop("a_table")
        print(name, json.dumps(res))
    print("GHZ4 A-table:", analyse(INSTANCES["GHZ4"])["a_table"])
    print("C4 A-table:", analyse(INSTANCES["C4"])["a_table"])
