"""
Complete elliptic integrals of the first and second kind, K(r) and E(r),
as functions of the modulus r. Values come from the arithmetic-geometric
mean iteration; an adaptive quadrature of the defining integrals serves
as an independent oracle. The derivative and Landen-type identities of K
and E are exposed as residual functions that can be checked numerically.
"""

import math
import logging
from collections import namedtuple
from dataclasses import dataclass
import numpy as np

from .core import *
from .quad import adaptive_gauss_legendre

__all__ = [
    'Modulus', 'EllipticValues', 'Residuals', 'agm', 'ellipk', 'ellipe',
    'ellip_pair', 'ellip_oracle', 'derivative_residuals', 'landen_e_residual',
]

logger = logging.getLogger(__name__)

# AGM stopping rule: |a-b| <= AGMTOL*a, at most MAXAGM iterations
AGMTOL = 4*EPS
MAXAGM = 64

@dataclass(frozen=True)
class Modulus:
    """
    A validated elliptic-integral argument. r must lie in [0,1]; anything
    else, NaN included, is rejected here so that the operations never need
    to check it again.

    Attributes::

      r : float
         the modulus.
    """
    r: float

    def __post_init__(self):
        r = float(self.r)
        if not (0. <= r <= 1.):
            raise DomainError(
                f'Modulus: r must lie in [0,1], got {self.r!r}'
            )
        object.__setattr__(self, 'r', r)

    @property
    def rc(self):
        """The complementary modulus r' = sqrt(1-r**2)"""
        return math.sqrt((1.-self.r)*(1.+self.r))

    def complement(self):
        """Returns the complementary Modulus(r')"""
        return Modulus(self.rc)

@dataclass(frozen=True)
class EllipticValues:
    """
    K(r) and E(r) evaluated together.

    Attributes::

      k_first : float
         K(r), first kind.

      e_second : float
         E(r), second kind.

      modulus : Modulus
         the argument r.
    """
    k_first: float
    e_second: float
    modulus: Modulus

    def complementary(self):
        """Returns K' = K(r'), E' = E(r') as an EllipticValues"""
        return ellip_pair(self.modulus.complement())

def agm(r, rc=None):
    """Arithmetic-geometric mean evaluation of K and E for an array of moduli.
    Starting from a = 1, b = r', c = r, the iteration a, b -> (a+b)/2,
    sqrt(ab) with c = (a-b)/2 gives K = pi/(2a) and E = K*(1 - sum
    2**(n-1)*c_n**2). Each element stops on its own once |a-b| <= 4 eps a, so
    an element gives the same bits whether or not it is evaluated alongside
    others.

    Arguments::

      r : float | array
         moduli, all in [0,1). Not checked: use Modulus for validated
         scalar input.

      rc : float | array | None
         complementary moduli r' in (0,1], if known more accurately than
         sqrt(1-r**2), as when r is itself computed from r'.

    Returns (K, E), arrays of the same shape as r.
    """
    r = np.asarray(r, dtype=np.float64)
    a = np.ones_like(r)
    if rc is None:
        b = np.sqrt((1.-r)*(1.+r))
        total = 0.5*r*r
    else:
        b = np.broadcast_to(np.asarray(rc, dtype=np.float64), r.shape).copy()
        total = 0.5*(1.-b)*(1.+b)
    power = 0.5
    active = np.abs(a-b) > AGMTOL*a

    for n in range(MAXAGM):
        if not active.any():
            break
        c = 0.5*(a-b)
        an = 0.5*(a+b)
        bn = np.sqrt(a*b)
        power *= 2.
        a = np.where(active, an, a)
        b = np.where(active, bn, b)
        total = np.where(active, total + power*c*c, total)
        active &= np.abs(a-b) > AGMTOL*a
    else:
        if active.any():
            raise InternalError(
                f'agm: no convergence after {MAXAGM} iterations'
            )

    kval = np.pi/(2.*a)
    return kval, kval*(1.-total)

def ellip_pair(m):
    """
    Returns K(r) and E(r) from a single AGM pass as an EllipticValues.
    Raises DivergenceError for r = 1.
    """
    if m.r == 1.:
        raise DivergenceError('ellip_pair: K(1) is infinite')
    kval, evalue = agm(m.r)
    return EllipticValues(float(kval), float(evalue), m)

def ellipk(m):
    """
    Complete elliptic integral of the first kind K(r) of a Modulus m.
    Raises DivergenceError for r = 1.
    """
    if m.r == 1.:
        raise DivergenceError('ellipk: K(1) is infinite')
    return ellip_pair(m).k_first

def ellipe(m):
    """
    Complete elliptic integral of the second kind E(r) of a Modulus m.
    E(1) = 1 is returned exactly.
    """
    if m.r == 1.:
        return 1.
    return ellip_pair(m).e_second

def ellip_oracle(m, tol=1.e-13):
    """Computes K(r) and E(r) by adaptive Gauss-Legendre quadrature of their
    defining integrals over [0, pi/2]. Used to check the AGM values.

    Arguments::

      m : Modulus
         the modulus, r < 1.

      tol : float
         absolute error target, within [1e-15, 1e-6].

    Returns an EllipticValues.

    Raises DivergenceError for r = 1, DomainError for tol out of range,
    ConvergenceError if the quadrature budget runs out.
    """
    if not (1.e-15 <= tol <= 1.e-6):
        raise DomainError(
            f'ellip_oracle: tol = {tol!r} lies outside [1e-15, 1e-6]'
        )
    if m.r == 1.:
        raise DivergenceError('ellip_oracle: K(1) is infinite')

    r = m.r

    def delta(theta):
        s = r*np.sin(theta)
        return np.sqrt((1.-s)*(1.+s))

    kval, kerr = adaptive_gauss_legendre(
        lambda theta: 1./delta(theta), 0., HALFPI, tol
    )
    evalue, eerr = adaptive_gauss_legendre(delta, 0., HALFPI, tol)
    logger.debug(
        'ellip_oracle: r = %r, error estimates K %.2e, E %.2e', r, kerr, eerr
    )
    return EllipticValues(kval, evalue, m)

# residuals of the four derivative formulas
Residuals = namedtuple('Residuals', ('dk', 'de', 'dek', 'dke'))

def derivative_residuals(m, h, relative=False):
    """Compares central finite differences with step h against the closed
    forms::

      dK/dr        = (E - r'**2 K)/(r r'**2)
      dE/dr        = (E - K)/r
      d(E-r'**2K)/dr = r K
      d(K-E)/dr    = r E / r'**2

    Arguments::

      m : Modulus
         point of evaluation, 0 < r < 1.

      h : float
         finite-difference step, with r-h > 0 and r+h < 1.

      relative : bool
         if True divide each residual by the magnitude of its closed form.

    Returns a Residuals of absolute (or relative) differences. Large values
    for a poorly chosen h are the caller's problem.
    """
    r = m.r
    if not (0. < r-h and r+h < 1. and h > 0.):
        raise DomainError(
            f'derivative_residuals: need 0 < r-h < r+h < 1, got r={r}, h={h}'
        )

    lo, mid, hi = ellip_pair(Modulus(r-h)), ellip_pair(m), ellip_pair(Modulus(r+h))
    kval, evalue = mid.k_first, mid.e_second
    rc2 = (1.-r)*(1.+r)

    def slope(f):
        return (f(hi) - f(lo))/(2.*h)

    def ek(v):
        rv = v.modulus.r
        return v.e_second - (1.-rv)*(1.+rv)*v.k_first

    numeric = (
        slope(lambda v: v.k_first),
        slope(lambda v: v.e_second),
        slope(ek),
        slope(lambda v: v.k_first - v.e_second),
    )
    closed = (
        (evalue - rc2*kval)/(r*rc2),
        (evalue - kval)/r,
        r*kval,
        r*evalue/rc2,
    )
    res = [abs(n-c) for n, c in zip(numeric, closed)]
    if relative:
        res = [d/abs(c) for d, c in zip(res, closed)]
    return Residuals(*res)

def landen_e_residual(m):
    """
    Returns |E(2 sqrt(r)/(1+r)) - (2E(r) - r'**2 K(r))/(1+r)| for 0 <= r < 1,
    the two sides being evaluated independently.
    """
    r = m.r
    if r == 1.:
        raise DomainError('landen_e_residual: need r < 1')
    left = ellipe(Modulus(min(1., 2.*math.sqrt(r)/(1.+r))))
    vals = ellip_pair(m)
    right = (2.*vals.e_second - (1.-r)*(1.+r)*vals.k_first)/(1.+r)
    return abs(left - right)
