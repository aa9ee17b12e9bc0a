#!/usr/bin/env python
# --------------------------------------------------------
#       exceptions raised by the trig sum library
# created on October 18th 2026
# --------------------------------------------------------


class TrigSumError(Exception):
    """ Base class of all library errors. """
    ExitCode = 1


class DomainError(TrigSumError, ValueError):
    """ Parameters outside the validity domain. Carries the violated condition. """
    ExitCode = 2

    def __init__(self, condition, value=None):
        self.Condition = condition
        self.Value = value
        super().__init__(condition if value is None else f'{condition} (got {value})')


class PoleError(TrigSumError, ZeroDivisionError):
    """ A term or a digamma argument sits on a pole. """
    ExitCode = 3

    def __init__(self, index, argument=None, what='term'):
        self.Index = index
        self.Argument = argument
        super().__init__(f'{what} {index} hits a pole' + ('' if argument is None else f' at argument {float(argument):.17g}'))


class NonConvergence(TrigSumError, ArithmeticError):

    def __init__(self, terms, remainder, tol=None):
        self.Terms = terms
        self.Remainder = remainder
        super().__init__(f'series not converged after {terms} terms (remainder {float(remainder):.3e}' + ('' if tol is None else f', target {tol:.1e}') + ')')


class QuadratureFailure(TrigSumError, ArithmeticError):

    def __init__(self, levels, error, tol=None):
        self.Levels = levels
        self.Error = error
        super().__init__(f'quadrature did not reach the tolerance after {levels} levels (error {float(error):.3e}' + ('' if tol is None else f', target {tol:.1e}') + ')')


class UsageError(TrigSumError):
    """ Unknown flags or malformed arguments on the command line. """
    ExitCode = 64


class OutputError(TrigSumError, OSError):
    """ The requested output path cannot be written. """
    ExitCode = 74

    def __init__(self, path, reason=None):
        self.Path = path
        super().__init__(f'cannot write to "{path}"' + ('' if reason is None else f': {reason}'))
