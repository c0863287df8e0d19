"""Exception hierarchy for apolarity-lab.

Every error raised on a documented failure path derives from ApolarityError,
so the CLI can map the whole family onto a single usage/validation exit code.
"""


class ApolarityError(Exception):
    """Base class for all apolarity-lab errors."""


class InvalidParameter(ApolarityError):
    """A scalar argument is outside its documented domain."""


class ZeroInverse(ApolarityError):
    """Attempted to invert 0 in a prime field."""


class IndexOutOfRange(ApolarityError):
    """Monomial rank outside [0, dim) for the requested degree."""


class DegreeExceeded(ApolarityError):
    """Differential operator degree exceeds the form degree."""


class VariableMismatch(ApolarityError):
    """Operands live in different ambient variable counts."""


class ZeroForm(ApolarityError):
    """A nonzero form was required (e.g. all-zero linear form coefficients)."""


class RaggedInput(ApolarityError):
    """Coefficient rows of unequal lengths."""


class TypeTooLarge(ApolarityError):
    """Requested quotient type c exceeds the available rank."""


class GenericityFailure(ApolarityError):
    """Random draws failed to produce independent rows in the allowed attempts.

    With the default prime near 2**31 this indicates a bug or a pathological
    prime/seed combination, not bad luck.
    """


class DependentGenerators(ApolarityError):
    """Generator list is linearly dependent over F_p."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(
            f"generator {index} is a linear combination of the previous ones"
        )


class MixedDegrees(ApolarityError):
    """Generators do not all share one degree."""


class MixedVariableCounts(ApolarityError):
    """Generators do not all share one ambient variable count."""


class DegreeOutOfRange(ApolarityError):
    """Requested graded piece outside [0, socle degree]."""


class ShapeMismatch(ApolarityError):
    """Candidate h-vector has the wrong length or wrong top entry."""


class ParseError(ApolarityError):
    """Strict form-file parsing failed; message carries the location."""
