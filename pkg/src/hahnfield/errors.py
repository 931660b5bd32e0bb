"""Exception types shared across the package."""


class HahnError(Exception):
    """Base class for all domain errors raised by this package."""


class GroupMismatchError(HahnError):
    """Operands belong to different exponent groups."""


class FieldMismatchError(HahnError):
    """Operands belong to different coefficient fields."""


class UnsupportedGroupError(HahnError):
    """Operation needs an archimedean exponent group (lazy grid machinery)."""


class NotInvertibleError(HahnError):
    """Inverse does not exist inside the finite-support representation."""


class ResidueUndefinedError(HahnError):
    """Residue requested for an element of negative valuation."""


class StructureViolationError(HahnError):
    """A truncation-structure operation produced axiom-violating output.

    Carries a human-readable witness so callers can report which identity
    broke and on which element.
    """

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class GridSearchLimitError(HahnError):
    """A lazy-series search (valuation / leading term) hit its probe cap."""


class ParseError(HahnError):
    """Syntax error in an expression or literal; knows its byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.message = message
        self.position = position


class EvalError(HahnError):
    """Expression evaluated to an error; carries the offending fragment."""

    def __init__(self, message: str, fragment: str | None = None):
        detail = f"{message} in '{fragment}'" if fragment else message
        super().__init__(detail)
        self.message = message
        self.fragment = fragment
