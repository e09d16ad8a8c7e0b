"""Local-equivalence analysis of stabilizer states.

Minimal-support invariants, the minimal-element coverage criterion for
LU = LC, GF(4)-linearity, GHZ classification with explicit local Clifford
certificates, and exhaustive LC-equivalence search at small n.
"""

from stabequiv.exceptions import (
    DimensionError,
    DomainError,
    GeneratorFileError,
    InternalError,
    InvalidStabilizerError,
    PauliParseError,
    ResourceLimitError,
    StabError,
)
from stabequiv.gf2 import BitMatrix, BitVector
from stabequiv.pauli import Pauli, SupportMask
from stabequiv.stabilizer import StabilizerGroup, SupportCount

__all__ = [
    "BitMatrix",
    "BitVector",
    "DimensionError",
    "DomainError",
    "GeneratorFileError",
    "InternalError",
    "InvalidStabilizerError",
    "Pauli",
    "PauliParseError",
    "ResourceLimitError",
    "StabError",
    "StabilizerGroup",
    "SupportCount",
    "SupportMask",
]

__version__ = "0.1.0"
