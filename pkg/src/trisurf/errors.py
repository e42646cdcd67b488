"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller passed structurally invalid input (bad vertex id, bad shape)."""


class ParseError(InputError):
    """A text file failed to parse; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CapacityError(InputError):
    """Exact enumeration refused: candidate set too large for the limit."""


class PreconditionError(InputError):
    """A documented precondition failed; message names the violated clause."""


class DefectError(RuntimeError):
    """Internal validation failed on a value we constructed ourselves.

    Raised instead of silently returning a bad structure: it always
    indicates a bug, never a legitimate search miss.
    """
