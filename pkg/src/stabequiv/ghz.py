"""GHZ states: construction, the consecutive-pair classifier, and an explicit
local Clifford taking any member of the class to the standard generators.

For n >= 3 a fully entangled state is LC-equivalent to GHZ_n exactly when
every consecutive pair ``{i, i+1}`` is the support of one element. On two
qubits every fully entangled stabilizer state is the EPR pair, which is
GHZ_2, so the pair test is replaced by full entanglement there.
"""

from __future__ import annotations

from dataclasses import dataclass

from stabequiv.exceptions import DomainError, InternalError
from stabequiv.gf2 import in_span
from stabequiv.lclifford import LocalCliffordOp, apply, fix_signs
from stabequiv.pauli import Pauli, SupportMask
from stabequiv.stabilizer import StabilizerGroup, a_omega, build, is_fully_entangled


def ghz_stabilizer(n: int) -> StabilizerGroup:
    """``X...X`` followed by ``Z_i Z_{i+1}`` for i = 1..n-1, all signs +."""
    if n < 2:
        raise DomainError(f"GHZ needs at least 2 qubits, got {n}")
    full = (1 << n) - 1
    gens = [Pauli(n, 0, full)] + [Pauli(n, 3 << i, 0) for i in range(n - 1)]
    return build(gens)


def _pair(n: int, i: int) -> SupportMask:
    return SupportMask(n, 3 << i)


def ghz_class_note(g: StabilizerGroup) -> str | None:
    """Why ``g`` is ruled out before the pair test, if it is."""
    if g.n < 2:
        return "single qubit: no GHZ class"
    if not is_fully_entangled(g).fully_entangled:
        return "not fully entangled: the GHZ classification does not apply"
    return None


def is_lc_ghz(g: StabilizerGroup) -> bool:
    if ghz_class_note(g) is not None:
        return False
    if g.n == 2:
        return True
    return all(a_omega(g, _pair(g.n, i)).a_omega == 1 for i in range(g.n - 1))


@dataclass(frozen=True)
class GhzCertificate:
    op: LocalCliffordOp
    target_n: int


def _code(p: Pauli, k: int) -> tuple[int, int]:
    return (p.z >> k) & 1, (p.x >> k) & 1


def ghz_certificate(g: StabilizerGroup) -> GhzCertificate:
    """Local Clifford with ``apply(op, g) == ghz_stabilizer(n)`` as signed groups.

    The consecutive-pair elements form a chain whose shared letter ``b_i``
    on each qubit is sent to Z. Any element outside the chain span then has
    full support with letters ``a_i != b_i``, and those are sent to X.
    """
    if not is_lc_ghz(g):
        raise DomainError("state is not LC-equivalent to a GHZ state")
    n = g.n
    chain = [a_omega(g, _pair(n, i)).witnesses[0] for i in range(n - 1)]

    b = [_code(chain[0], 0)] + [_code(chain[i - 1], i) for i in range(1, n)]
    for i in range(1, n - 1):
        if _code(chain[i], i) != b[i]:
            raise InternalError(f"chain elements disagree on qubit {i + 1}")

    span = [p.z | (p.x << n) for p in chain]
    completion = next((p for p in g.generators if not in_span(p.z | (p.x << n), span)), None)
    if completion is None:
        raise InternalError("chain elements span the whole group")
    a = [_code(completion, k) for k in range(n)]
    for k in range(n):
        if a[k] == (0, 0) or a[k] == b[k]:
            raise InternalError(f"completing element {completion} fails on qubit {k + 1}")

    # inverse of the 2x2 matrix with columns b_k, a_k (determinant 1 over GF(2))
    factors = tuple(((ax, az), (bx, bz)) for (bz, bx), (az, ax) in zip(b, a))
    bare = LocalCliffordOp(factors)
    target = ghz_stabilizer(n)
    op = bare.with_layer(fix_signs(bare, g, target))
    if not apply(op, g).same_group(target):
        raise InternalError("GHZ certificate does not verify")
    return GhzCertificate(op, n)
