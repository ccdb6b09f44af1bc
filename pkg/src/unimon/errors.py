"""Exception types shared across the toolkit."""


class UnimonError(Exception):
    """Base class for every error raised by this package."""


class SizeMismatch(UnimonError):
    pass


class NegativeEntry(UnimonError):
    pass


class BadPosition(UnimonError):
    pass


class OutOfPattern(UnimonError):
    """Matrix has a nonzero entry at a position outside the pattern."""


class PatternNotClosed(UnimonError):
    """Position set is not closed under composition of positions."""


class IdentityGap(UnimonError):
    """The identity matrix was offered as a gap."""


class NotClosed(UnimonError):
    """Two members multiply into the proposed gap set."""

    def __init__(self, left, right, product):
        self.left = left
        self.right = right
        self.product = product
        super().__init__(
            f"product of members {left} and {right} lands in the gap set at {product}"
        )


class GroupMismatch(UnimonError):
    pass


class EmptyGaps(UnimonError):
    """Operation is undefined for the gap-free monoid."""


class PivotNotInMonoid(UnimonError):
    pass


class GeneratorOutOfPattern(UnimonError):
    pass


class IdentityGenerator(UnimonError):
    pass


class EmptyGeneratorSet(UnimonError):
    pass


class NotCofinite(UnimonError):
    """An exact complement is required but only a lazy form is available."""


class IdealMismatch(UnimonError):
    """Ideal operands disagree on base monoid or side."""


class NotAnIdeal(UnimonError):
    """A proposed member set is not stable under monoid translation."""

    def __init__(self, element, factor, product):
        self.element = element
        self.factor = factor
        self.product = product
        super().__init__(
            f"{element} times {factor} escapes the ideal at {product}"
        )


class Infeasible(UnimonError):
    """Search exceeded the configured node budget."""


class UnsupportedSide(UnimonError):
    pass
