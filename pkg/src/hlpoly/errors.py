"""Exception types shared across the package."""


class HLError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(HLError):
    """A rational function was built with (or driven to) a zero denominator."""


class NotDivisible(HLError):
    """Exact polynomial division left a nonzero remainder.

    In several places this is a meaningful outcome (a failed polynomiality
    certificate), not a programming bug.
    """


class NotExpandable(HLError):
    """A rational function has no formal power series in the grading variable."""


class NotAntisymmetric(HLError):
    """Pfaffian input fails the antisymmetry check."""


class OddSize(HLError):
    """Pfaffian input has odd dimension."""


class OddMultiplicity(HLError):
    """A partition with an odd part-multiplicity was passed where even ones
    are required."""


class NotInterlacing(HLError):
    """Two partitions do not interlace."""


class LengthMismatch(HLError):
    """A partition's stored length disagrees with the requested variable count."""


class SizeTooLarge(HLError):
    """A lattice enumeration was requested beyond its tractable range."""


class IdentityViolated(HLError):
    """A structural lattice identity failed; the message names the component."""


class PropertyViolated(HLError):
    """A partition-function property check failed; the message names the
    property index."""


class Mismatch(HLError):
    """Two supposedly equal operator constructions disagree."""
