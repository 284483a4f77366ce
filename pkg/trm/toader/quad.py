"""
Adaptive Gauss-Legendre quadrature, used as the independent oracle for the
AGM values of K and E and of the Toader mean.
"""

import math
import logging
import numpy as np
from scipy.special import roots_legendre

from .core import *

__all__ = ['adaptive_gauss_legendre']

logger = logging.getLogger(__name__)

# default rule order and the cap on the number of intervals
ORDER = 20
BUDGET = 1000000

def adaptive_gauss_legendre(func, lo, hi, tol=1.e-13, order=ORDER,
                            budget=BUDGET):
    """Integrates func from lo to hi by interval bisection. Each interval is
    integrated with an 'order'-point Gauss-Legendre rule on the whole and on
    its two halves; the difference serves as the error estimate of the
    halves. An interval is accepted once its estimate is below its share of
    'tol', in proportion to its width.

    Arguments::

      func : callable
         vectorised integrand, called with a 1D numpy array of abscissae.

      lo, hi : float
         integration limits, lo < hi.

      tol : float
         target absolute error of the result.

      order : int
         number of Gauss-Legendre nodes per interval.

      budget : int
         maximum number of intervals before giving up.

    Returns (value, error) where error is the summed estimate over the
    accepted intervals.

    Raises ConvergenceError carrying the achieved estimate if the budget is
    exhausted.
    """
    if not hi > lo:
        raise DomainError(
            f'adaptive_gauss_legendre: need lo < hi, got [{lo}, {hi}]'
        )

    x, w = roots_legendre(order)

    def rule(a, b):
        half = 0.5*(b-a)
        return half*np.dot(w, func(0.5*(a+b) + half*x))

    width = hi - lo
    # intervals still to do: (a, b, integral, share of the parent's estimate)
    stack = [(lo, hi, rule(lo, hi), math.inf)]
    parts, errs = [], []
    nint = 1
    while stack:
        a, b, whole, _ = stack.pop()
        m = 0.5*(a+b)
        left, right = rule(a, m), rule(m, b)
        est = abs(left + right - whole)
        nint += 1

        # the second test stops splitting once the interval can no longer
        # be halved in binary64
        if est <= tol*(b-a)/width or not (a < m < b):
            parts += [left, right]
            errs.append(est)
        elif nint >= budget:
            error = math.fsum(errs + [est] + [s[3] for s in stack])
            raise ConvergenceError(
                'adaptive_gauss_legendre: no convergence within'
                f' {budget} intervals, error estimate = {error:.3e}', error
            )
        else:
            stack.append((a, m, left, 0.5*est))
            stack.append((m, b, right, 0.5*est))

    logger.debug('adaptive_gauss_legendre: %d intervals', nint)
    return math.fsum(parts), math.fsum(errs)
