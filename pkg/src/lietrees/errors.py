"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for all domain-level errors (CLI exit code 1)."""


class DuplicateLeaf(DomainError):
    pass


class LabelClash(DomainError):
    pass


class EmptyLabelSet(DomainError):
    pass


class ModelMismatch(DomainError):
    pass


class UnknownGroupElement(DomainError):
    pass


class NotMultilinear(DomainError):
    pass


class InfiniteEnumeration(DomainError):
    pass


class NotResolvable(DomainError):
    pass


class LTooSmall(DomainError):
    pass


class NotInLattice(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class ExprSyntaxError(DomainError):
    """Raised by the expression parser; carries the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
