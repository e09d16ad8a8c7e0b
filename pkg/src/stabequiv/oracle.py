"""Dense-matrix cross-checks of the bit-level machinery at small n."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from stabequiv import config
from stabequiv.lclifford import LocalCliffordOp, apply, to_dense_unitary
from stabequiv.pauli import SupportMask, to_dense
from stabequiv.stabilizer import (
    StabilizerGroup,
    dense_projector,
    partial_trace,
    reduced_density_dense,
)

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class DenseCheck:
    name: str
    error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tol


def _err(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def verify_dense(g: StabilizerGroup, tol: float = DEFAULT_TOL) -> list[DenseCheck]:
    """Projector properties, stabilization by each generator, and every
    reduced state against the partial trace of the projector."""
    n = g.n
    config.check_cap(n, config.MAX_PROJECTOR_QUBITS, "qubits for dense verification")
    rho = dense_projector(g)
    checks = [
        DenseCheck("idempotent", _err(rho @ rho, rho), tol),
        DenseCheck("hermitian", _err(rho, rho.conj().T), tol),
        DenseCheck("trace one", abs(np.trace(rho) - 1), tol),
    ]
    worst = max(_err(to_dense(p) @ rho, rho) for p in g.generators)
    checks.append(DenseCheck("stabilized by generators", worst, tol))
    worst = 0.0
    for bits in range(1, 1 << n):
        omega = SupportMask(n, bits)
        keep = [i - 1 for i in omega.indices()]
        worst = max(worst, _err(reduced_density_dense(g, omega), partial_trace(rho, keep, n)))
    checks.append(DenseCheck("reduced states", worst, tol))
    return checks


def verify_conjugation(op: LocalCliffordOp, g: StabilizerGroup, tol: float = DEFAULT_TOL) -> DenseCheck:
    """``U rho U^dagger`` against the projector of ``apply(op, g)``."""
    u = to_dense_unitary(op)
    lhs = u @ dense_projector(g) @ u.conj().T
    return DenseCheck("conjugation", _err(lhs, dense_projector(apply(op, g))), tol)
