"""Exception types shared across the package."""


class NsgError(Exception):
    """Base class for all domain errors raised by this package."""


class RegularSemigroup(NsgError):
    """The requested semigroup would be all of N (1 is a member)."""


class GcdNotOne(NsgError):
    """Generators with gcd > 1 never give a cofinite semigroup."""


class NotClosed(NsgError):
    """A claimed gap set whose complement is not closed under addition."""


class NotNested(NsgError):
    """Length of E/F requested for ideals with F not contained in E."""


class IndexOutOfRange(NsgError, IndexError):
    """Chain ideal index outside [0, n]."""


class NotASemigroup(NsgError):
    """A reconstructed member set is not closed under addition."""


class InvalidParameters(NsgError):
    """Parameters outside the constraints of a named construction."""


class BoundTooLarge(NsgError):
    """Brute-force enumeration requested beyond its cost guard."""


class UnknownTheorem(NsgError):
    """Verification requested for an unknown suite id."""


class UnknownFamily(NsgError):
    """Generation requested for an unknown classification family id."""
