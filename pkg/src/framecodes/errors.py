"""Exception classes used across the library.

Each class carries the exit status the command-line tool maps it to:
2 for malformed or oversized input, 1 for a failed mathematical check.
"""


class FrameCodesError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class ParseError(FrameCodesError):
    """Malformed textual input (bad character, bad section, bad line)."""

    exit_code = 2


class DimensionError(FrameCodesError):
    """Operands of mismatched length, or a length outside the supported range."""

    exit_code = 2


class CapacityError(FrameCodesError):
    """An exhaustive enumeration would exceed the configured dimension cap."""

    exit_code = 2


class TruncationError(FrameCodesError):
    """Series truncation orders disagree, or a coefficient beyond the order
    was requested (its value is unknowable, not zero)."""

    exit_code = 2


class ValidationError(FrameCodesError):
    """A structure-code axiom (evenness, containment, frame length) failed."""

    exit_code = 1


class HypothesisError(FrameCodesError):
    """A theorem hypothesis required by an operation does not hold."""

    exit_code = 1


class TrivialityError(FrameCodesError):
    """The requested operation is degenerate (e.g. an identity involution)."""

    exit_code = 1


class InconsistencyError(FrameCodesError):
    """A frame decomposition disagrees with its structure codes."""

    exit_code = 1


class DomainError(FrameCodesError):
    """An argument lies outside the mathematical domain of the operation."""

    exit_code = 1
