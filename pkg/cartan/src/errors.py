"""
Errors raised by the root-system, affine, character and module layers.

Every failure carries the name of the violated precondition in its class name,
so the command line can report ``<ClassName>: <message>`` without a lookup table.
"""


class RepresentationError(Exception):
    """Base class for every precondition failure in this package."""


class UnsupportedType(RepresentationError):
    """Unknown finite or affine type label."""


class InvalidWeight(RepresentationError):
    """Weight is not dominant, not integral, or has the wrong length."""


class InvalidIndex(RepresentationError):
    """Node index outside 0..l (affine) or 1..l (finite)."""


class NonPositiveLevel(RepresentationError):
    """Operation needs a weight of strictly positive level."""


class NotInAffineWeylGroup(RepresentationError):
    """Translation vector is not in the lattice M."""


class ChainDidNotTerminate(RepresentationError):
    """Dominance chain exceeded its step budget."""


class NonReducedWord(RepresentationError):
    """Caller-supplied word is not a reduced expression."""


class ModeError(RepresentationError):
    """Mixing affine and finite characters."""


class EmptyCharacter(RepresentationError):
    """Operation needs a nonzero character."""


class NotAModuleCharacter(RepresentationError):
    """Character is not W0-invariant or not a nonnegative sum of irreducibles."""


class NonIntegralPairing(RepresentationError):
    """Demazure operator applied to an exponent with fractional pairing."""


class InvalidHighestWeight(RepresentationError):
    """Highest weight handed to the Demazure character formula is not dominant."""


class NotInX(RepresentationError):
    """(lambda, k) does not determine a g0-stable Demazure module."""


class UnsupportedEvenCase(RepresentationError):
    """A2l(2) Weyl module with even coefficient m_l."""


class NonIntegralDegree(RepresentationError):
    """Delta coordinates of a character do not differ by integers."""
