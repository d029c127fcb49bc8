"""Exception types shared across the package."""


class RadextError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(RadextError):
    pass


class NotPrime(InvalidParameter):
    pass


class ReducibleModulus(InvalidParameter):
    pass


class NoSuchRoot(RadextError):
    pass


class CharDividesM(RadextError):
    """The field characteristic divides m; the radical identity fails."""


class WrongCharacteristic(RadextError):
    pass


class VariableMismatch(RadextError):
    pass


class FieldMismatch(RadextError):
    pass


class DivisionByZeroRatFun(RadextError):
    pass


class EvalDenominatorZero(RadextError):
    pass


class UnboundVariable(RadextError):
    pass


class NotSquare(RadextError):
    pass


class IndexOutOfRange(RadextError):
    pass


class TooLarge(RadextError):
    pass


class VerificationFailed(RadextError):
    """An internal identity check failed; indicates an implementation bug."""


class SingularMooreMatrix(RadextError):
    pass


class DegreeTooSmall(RadextError):
    pass


class DuplicateNodes(RadextError):
    pass


class Unsupported(RadextError):
    pass


class FieldTooSmall(RadextError):
    pass


class RetriesExhausted(RadextError):
    pass
