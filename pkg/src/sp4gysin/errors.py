"""Exception hierarchy.  Every error carries a stable ``code`` used by the CLI."""


class Sp4GysinError(Exception):
    code = "E_GENERIC"


class NotARepresentation(Sp4GysinError):
    """Peeling a character produced a negative multiplicity or a non-invariant remainder."""

    code = "E_NOT_A_REPRESENTATION"


class HalfIntegerCoefficient(Sp4GysinError):
    code = "E_HALF_INTEGER"


class NonIntegralResult(Sp4GysinError):
    code = "E_NON_INTEGRAL"


class InconsistentTraces(Sp4GysinError):
    """The untwisted and sigma-twisted traces do not resolve to a valid wreath decomposition."""

    code = "E_INCONSISTENT_TRACES"


class DegreeOutOfRange(Sp4GysinError):
    code = "E_DEGREE_OUT_OF_RANGE"


class UnsupportedWeight(Sp4GysinError):
    code = "E_UNSUPPORTED_WEIGHT"


class PrecisionUnreachable(Sp4GysinError):
    code = "E_PRECISION_UNREACHABLE"


class OddParity(Sp4GysinError):
    code = "E_ODD_PARITY"


class MissingCitation(Sp4GysinError):
    code = "E_MISSING_CITATION"
