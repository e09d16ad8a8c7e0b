"""Generator files: one Pauli string per line, ``#`` comments, blank lines ignored."""

from __future__ import annotations

from pathlib import Path
from typing import TextIO

from stabequiv.exceptions import GeneratorFileError, PauliParseError
from stabequiv.pauli import Pauli, pauli_from_string, pauli_to_string
from stabequiv.stabilizer import StabilizerGroup, build


def parse_generators(source: str | Path | TextIO) -> list[Pauli]:
    """Parse without validating the group. Errors carry 1-based line and column."""
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            return parse_generators(fh)
    gens: list[Pauli] = []
    first_line = None
    for lineno, raw in enumerate(source, 1):
        line = raw.rstrip("\n").split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if len(stripped.split()) > 1:
            extra = line.index(stripped.split()[1], col - 1) + 1
            raise GeneratorFileError("one Pauli string per line", lineno, extra)
        try:
            p = pauli_from_string(stripped)
        except PauliParseError as exc:
            raise GeneratorFileError(str(exc).rsplit(" (position", 1)[0], lineno, col + exc.position - 1) from None
        if gens and p.n != gens[0].n:
            raise GeneratorFileError(f"length {p.n} differs from {gens[0].n} on line {first_line}", lineno, col)
        if not gens:
            first_line = lineno
        gens.append(p)
    if not gens:
        raise GeneratorFileError("no generators found", 1)
    return gens


def parse_generator_file(source: str | Path | TextIO) -> StabilizerGroup:
    """Parse and validate. Validation errors name the offending generators."""
    return build(parse_generators(source))


def format_generators(g: StabilizerGroup) -> str:
    return "".join(pauli_to_string(p) + "\n" for p in g.generators)
