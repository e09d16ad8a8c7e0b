"""Exception hierarchy shared by all modules."""


class StabError(Exception):
    """Base class for every domain error raised by this package."""


class DimensionError(StabError, ValueError):
    """Operands disagree on qubit count or vector length."""


class PauliParseError(StabError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class InvalidStabilizerError(StabError, ValueError):
    """Generators do not describe a stabilizer state."""


class GeneratorFileError(StabError, ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class ResourceLimitError(StabError):
    """A configured size cap would be exceeded."""


class InternalError(StabError, RuntimeError):
    """A construction that must succeed did not. Indicates a bug."""


class ContractViolation(StabError, ValueError):
    """Inputs break a documented precondition that cannot be checked cheaply up front."""


class InvalidGraphError(StabError, ValueError):
    """Adjacency matrix is not that of a simple graph, or a graph file is malformed."""


class DomainError(StabError, ValueError):
    """Argument outside the domain of an operation."""
