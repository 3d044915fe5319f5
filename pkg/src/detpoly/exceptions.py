#!/usr/bin/env python3

from typing import Optional


class DetpolyError(Exception):
    # process exit status used by the command line front end
    exit_code: int = 3


class MixedFieldError(DetpolyError):
    pass


class DivisionByZero(DetpolyError, ZeroDivisionError):
    pass


class CharacteristicZeroError(DetpolyError):
    pass


class NotPrime(DetpolyError):
    pass


class ContextMismatch(DetpolyError):
    pass


class UnknownVariable(DetpolyError):
    pass


class ArityMismatch(DetpolyError):
    pass


class ArityError(DetpolyError):
    pass


class DegreeZero(DetpolyError):
    pass


class DegreeMismatch(DetpolyError):
    pass


class ResourceExhausted(DetpolyError):
    exit_code = 4


class NotPrincipal(DetpolyError):
    pass


class TranscendentalOverImage(NotPrincipal):
    pass


class BothZero(DetpolyError):
    pass


class HypothesisNotVerified(DetpolyError):
    pass


class NotDetermined(DetpolyError):
    pass


class PreconditionViolated(DetpolyError):
    pass


class ParseException(DetpolyError):
    exit_code = 5

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ExprSyntaxError(ParseException):
    pass


class BadExponent(ParseException):
    pass


class UndeclaredVariable(ParseException, UnknownVariable):
    exit_code = 5
