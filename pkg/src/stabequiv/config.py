"""Size caps. Precedence: explicit argument > environment > default."""

from __future__ import annotations

import os

from stabequiv.exceptions import ResourceLimitError

ENUM_ENV = "STAB_MAX_ENUM_QUBITS"
LC_ENV = "STAB_MAX_LC_QUBITS"

DEFAULT_MAX_ENUM_QUBITS = 20
DEFAULT_MAX_LC_QUBITS = 8
MAX_DENSE_PAULI_QUBITS = 12
MAX_REDUCED_QUBITS = 10
MAX_PROJECTOR_QUBITS = 6
MAX_UNITARY_QUBITS = 6
MAX_SUBGROUP_DIM = 24


def _from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ResourceLimitError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ResourceLimitError(f"{name} must be positive, got {value}")
    return value


def max_enum_qubits(override: int | None = None) -> int:
    return override if override is not None else _from_env(ENUM_ENV, DEFAULT_MAX_ENUM_QUBITS)


def max_lc_qubits(override: int | None = None) -> int:
    return override if override is not None else _from_env(LC_ENV, DEFAULT_MAX_LC_QUBITS)


def check_cap(value: int, cap: int, what: str, env: str | None = None) -> None:
    if value > cap:
        hint = f"; raise it with {env}" if env else ""
        raise ResourceLimitError(f"{what}: {value} exceeds the cap of {cap}{hint}")
