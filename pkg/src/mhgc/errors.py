"""Exception types shared across the engine."""


class MHGCError(Exception):
    """Base class for all engine errors."""


class BadRational(MHGCError, ValueError):
    """A rational literal could not be parsed (e.g. zero denominator)."""


class SingularMatrix(MHGCError):
    """A matrix that was required to be invertible is not."""


class NotNondegenerate(MHGCError):
    """An algebra product or homomorphism fails nondegeneracy."""


class GroupError(MHGCError):
    """A multiplication table does not define a group."""


class NotASubgroup(MHGCError):
    """The support of the family is not closed under the group law."""


class NotRegular(MHGCError):
    """A damped product does not land in the tensor square."""


class NotScalar(MHGCError):
    """A multiplier that must be a scalar multiple of the identity is not."""


class Inconsistent(MHGCError):
    """Values that must agree across components differ."""


class EmptyUnitComponent(MHGCError):
    """The component at the group identity is zero but the family is not."""


class MultiplierMismatch(MHGCError):
    """Left and right antipode actions do not form a multiplier."""


class NotInvertible(MHGCError):
    """The antipode (or another map) fails to be invertible."""


class NotElement(MHGCError):
    """A multiplier is not represented by an algebra element."""


class NotFaithful(MHGCError):
    """An invariant functional has a nonzero radical."""


class TauInconsistent(MHGCError):
    """The scaling constant differs between components."""


class BlockLeak(MHGCError):
    """A coproduct map does not respect the block decomposition."""


class ParseError(MHGCError):
    """A document is structurally malformed."""


class DimensionMismatch(MHGCError):
    """Declared dimensions and entry indices disagree."""
