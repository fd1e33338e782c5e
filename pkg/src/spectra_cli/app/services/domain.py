from dataclasses import dataclass
from enum import Enum, IntEnum


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 1
    VIOLATION = 2


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class MatrixKind(str, Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"


class CliError(Exception):
    """Base class for errors raised by the command-line front door."""


class DocumentSyntaxError(CliError):
    """The input is not UTF-8 JSON; the message carries the position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(CliError):
    """Well-formed JSON that does not match the document schema."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class UsageError(CliError):
    pass


@dataclass
class CommandResult:
    output: str
    exit_code: ExitCode = ExitCode.OK

    @property
    def succeeded(self) -> bool:
        return self.exit_code == ExitCode.OK
