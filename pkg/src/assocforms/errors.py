"""Exception types raised across the package."""


class AlgebraError(Exception):
    """Base class for every error raised by assocforms."""


class DomainMismatch(AlgebraError):
    pass


class DegreeMismatch(AlgebraError):
    pass


class WrongArity(AlgebraError):
    pass


class SingularMatrix(AlgebraError):
    pass


class IncompatibleRadicalScale(AlgebraError):
    pass


class NotSquare(AlgebraError):
    pass


class SingularSystem(AlgebraError):
    pass


class DegenerateForm(AlgebraError):
    """The form has vanishing discriminant (the socle reduction cannot proceed)."""


class BudgetExceeded(AlgebraError):
    pass


class AnchorAmbiguous(AlgebraError):
    pass


class AnchorMismatch(AlgebraError):
    pass


class WrongSpace(AlgebraError):
    pass


class UnsupportedSpace(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


class ParseError(AlgebraError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
