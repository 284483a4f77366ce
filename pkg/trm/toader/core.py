#!/usr/bin/env python

"""
Toader mean package

Core constants, exceptions & small helpers
"""

import math
import numpy as np

# Version number. To be updated
# if config file formats change.
VERSION = 20261019

# machine epsilon of binary64
EPS = float(np.finfo(np.float64).eps)

# half pi, the common value K(0) = E(0)
HALFPI = 0.5*math.pi

# strictness band: a strict inequality failing by less than BAND*scale
# cannot be told apart from rounding and is reported as inconclusive.
BAND = 1.e-13

# abscissa tolerance & iteration cap used by all bisections
XTOL = 1.e-14
MAXITER = 200

def acfg(fname):
    """
    Appends .cfg to a filename if it does not end with it.
    """

    if fname.endswith('.cfg'):
        return fname
    else:
        return fname + '.cfg'

def fmt(value):
    """
    Formats a number for tables and printed values: fixed 17 significant
    digits, enough for a binary64 round trip. Integers and strings pass
    through unchanged.
    """
    if isinstance(value, (bool, str)) or value is None:
        return '' if value is None else str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return '{:.17g}'.format(float(value))

def checkp(p, where):
    """
    Checks that a convex weight p lies in [1/2, 1], raising DomainError
    otherwise. 'where' names the caller for the message.
    """
    if not (0.5 <= p <= 1.):
        raise DomainError(
            f'{where}: weight p = {p!r} lies outside [1/2, 1]'
        )
    return float(p)

class ToaderError(Exception):
    """Root of all errors raised on purpose by trm.toader"""
    pass

class DomainError(ToaderError, ValueError):
    """An argument lies outside the mathematical domain of an operation"""
    pass

class DegenerateInputError(DomainError):
    """a = b where the operation would be trivially satisfied"""
    pass

class DivergenceError(ToaderError, ArithmeticError):
    """The requested value is infinite, e.g. K(1)"""
    pass

class ConvergenceError(ToaderError, ArithmeticError):
    """
    An iterative method failed to reach its tolerance. 'estimate' holds
    the achieved error estimate.
    """
    def __init__(self, message, estimate):
        super().__init__(message)
        self.estimate = estimate

class NoRootError(ToaderError):
    """
    No sign change was found on a search bracket. 'endpoint' is 'left' or
    'right' and names the endpoint whose sign was wrong.
    """
    def __init__(self, message, endpoint):
        super().__init__(message)
        self.endpoint = endpoint

class UsageError(ToaderError):
    """Unknown tag or violated precondition"""
    pass

class InternalError(ToaderError):
    """Something that cannot happen did"""
    pass
