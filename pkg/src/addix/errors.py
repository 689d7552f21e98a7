"""Exception types shared across the package."""


class AddixError(Exception):
    """Base class for all package errors."""


class NotPrime(AddixError):
    pass


class ReducibleModulus(AddixError):
    pass


class FieldTooLarge(AddixError):
    pass


class SingularBasis(AddixError):
    pass


class DivisionByZero(AddixError):
    pass


class IndexOutOfRange(AddixError):
    pass


class NotADivisor(AddixError):
    pass


class MTooLarge(AddixError):
    pass


class DimensionMismatch(AddixError):
    pass


class BudgetExceeded(AddixError):
    pass


class TrivialCharacter(AddixError):
    pass


class UnknownCheck(AddixError):
    pass
