"""Exception types shared across the package."""


class KronmultError(Exception):
    """Base class for all package errors."""


class CapExceeded(KronmultError):
    pass


class InvalidPermutation(KronmultError, ValueError):
    pass


class NotASubgroup(KronmultError, ValueError):
    pass


class FusionMismatch(KronmultError, ValueError):
    pass


class ParseError(KronmultError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ConsistencyError(KronmultError, ValueError):
    pass


class IntegralityDefect(KronmultError, ArithmeticError):
    pass


class IdentityViolation(KronmultError, ArithmeticError):
    pass


class BurnsideViolation(KronmultError, ValueError):
    pass


class MissingInput(KronmultError, ValueError):
    pass
