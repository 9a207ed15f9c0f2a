"""
Error types raised by the engine.

Every error derives from HeckeCentralError so that management commands can
turn any engine failure into a usage error with a single except clause.
"""


class HeckeCentralError(Exception):
    """Base class for all engine errors."""


# Scalars and linear algebra

class DenominatorVanishes(HeckeCentralError):
    """Specialisation hit a pole of a rational function."""


class ZeroParameter(HeckeCentralError):
    """The specialised parameter is zero."""


class MixedDomains(HeckeCentralError):
    """Matrix entries or operands live in different scalar domains."""


class DomainMismatch(MixedDomains):
    """Two algebra elements or modules use different scalar domains."""


class DomainNotField(HeckeCentralError):
    """A field was required but the scalar domain is not one."""


class AmbientMismatch(HeckeCentralError):
    """Subspaces or lattices live in ambient spaces of different dimension."""


class NonIntegralParameter(HeckeCentralError):
    """Integral computations need q = 1 (or -1) and integer structure constants."""


# Combinatorics

class DegreeMismatch(HeckeCentralError):
    """Partitions or compositions of different degrees were compared."""


class ShapeMismatch(HeckeCentralError):
    """Tableaux of different shapes were combined."""


class RangeError(HeckeCentralError):
    """A count parameter is outside its admissible range."""


class InvalidPartition(HeckeCentralError):
    """A list of integers is not a partition of the expected degree."""


# Algebras and modules

class RankMismatch(HeckeCentralError):
    """Hecke algebra elements of different rank n were combined."""


class MixedParameters(HeckeCentralError):
    """Direct summands disagree on n, q or the scalar domain."""


class NotAYoungSum(HeckeCentralError):
    """The module carries no Young summand description."""


class NotAHookSum(NotAYoungSum):
    """Some summand of the module is not a hook partition."""


class BasisMismatch(HeckeCentralError):
    """An endomorphism basis does not belong to the given module."""


class HypothesisFails(HeckeCentralError):
    """The coarsening closure of the summand set is not co-saturated."""


class NotAnInvolution(HeckeCentralError):
    """The permutation is not of order two."""


class WrongCharacteristic(HeckeCentralError):
    """The requested field has the wrong characteristic."""


class TriangularityViolation(HeckeCentralError):
    """A pairing value breaks the triangularity laws of the Murphy basis."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(HeckeCentralError):
    """An internal consistency check of the engine failed."""
