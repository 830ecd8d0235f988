"""
.. module:: exceptions
    :platform: Unix, Windows
    :synopsis: Error kinds raised by the library

.. moduleauthor:: sqreflex developers

"""

__all__ = [
    'SqreflexError',
    'NonPrime',
    'EvenCharacteristic',
    'NotASubfield',
    'ParseError',
    'ZeroInput',
    'NotASquare',
    'NonInvertible',
    'ZeroPolynomial',
    'ConstantInput',
    'ConstantPolynomial',
    'NonCoprimeModuli',
    'NotCoprime',
    'NotSquareFree',
    'NotSeparable',
    'ZeroFunction',
    'NonUnitAtPlace',
    'InvalidRamification',
    'UnsupportedSupport',
    'BadInfinityClass',
    'DegreeTooSmall',
    'PreconditionViolated',
    'ZeroEntry',
    'CapExceeded',
    'BudgetExceeded',
    'ConsistencyError',
]


class SqreflexError(Exception):
    """ Base class of all errors raised by the library """
    pass


# Field construction and parsing

class NonPrime(SqreflexError, ValueError):
    pass


class EvenCharacteristic(SqreflexError, ValueError):
    pass


class NotASubfield(SqreflexError, ValueError):
    pass


class ParseError(SqreflexError, ValueError):
    """ Raised when a field, element, polynomial or form literal cannot be parsed """
    pass


# Arithmetic

class ZeroInput(SqreflexError, ArithmeticError):
    pass


class NotASquare(SqreflexError, ArithmeticError):
    pass


class NonInvertible(SqreflexError, ArithmeticError):
    pass


# Polynomial preconditions

class ZeroPolynomial(SqreflexError, ValueError):
    pass


class ConstantInput(SqreflexError, ValueError):
    pass


class ConstantPolynomial(SqreflexError, ValueError):
    pass


class NonCoprimeModuli(SqreflexError, ValueError):
    pass


class NotCoprime(SqreflexError, ValueError):
    pass


class NotSquareFree(SqreflexError, ValueError):
    pass


class NotSeparable(SqreflexError, ValueError):
    pass


# Places and ramification

class ZeroFunction(SqreflexError, ValueError):
    pass


class NonUnitAtPlace(SqreflexError, ValueError):
    pass


class InvalidRamification(SqreflexError, ValueError):
    """ Raised when a ramification sequence built from user input has support of odd size """
    pass


class UnsupportedSupport(SqreflexError, ValueError):
    pass


class BadInfinityClass(SqreflexError, ValueError):
    pass


class DegreeTooSmall(SqreflexError, ValueError):
    pass


class PreconditionViolated(SqreflexError, ValueError):
    pass


class ZeroEntry(SqreflexError, ValueError):
    """ Raised when a quadratic form has a zero diagonal entry """
    pass


# Searches and budgets

class CapExceeded(SqreflexError, RuntimeError):
    """ Raised when a bounded search reaches its degree cap; this says nothing about existence """
    pass


class BudgetExceeded(SqreflexError, RuntimeError):
    pass


class ConsistencyError(SqreflexError, RuntimeError):
    """ Raised when two independent computations of the same fact disagree """
    pass
