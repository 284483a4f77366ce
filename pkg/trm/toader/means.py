"""
Bivariate means: Toader, centroidal, contraharmonic, power, and the
convex-combination families J(x) = Cbar(xa+(1-x)b, xb+(1-x)a) built on
the centroidal and contraharmonic means.

Every mean comes in two forms: a scalar form taking a validated
PositivePair, and an array form '*_values(a, b, ...)' used by the
vectorised sweeps of the analysis module. The scalar forms call the array
forms, so the two agree bit for bit. All means order their arguments as
(max, min) first, which makes them exactly symmetric, and return the
common value exactly on the diagonal a = b.
"""

import math
import logging
from dataclasses import dataclass
import numpy as np

from .core import *
from .elliptic import agm
from .quad import adaptive_gauss_legendre

__all__ = [
    'PositivePair', 'MeanKind', 'toader', 'centroidal', 'power_mean',
    'contraharmonic', 'j_mean', 'convex_contraharmonic', 'toader_excess',
    'toader_quad',
    'evaluate', 'toader_values', 'centroidal_values', 'power_values',
    'contraharmonic_values', 'convex_values',
]

logger = logging.getLogger(__name__)

# largest r at which toader_excess sums the series
SERIES_R = 0.5

@dataclass(frozen=True)
class PositivePair:
    """
    The pair of arguments (a, b) of a mean. Both must be positive and
    finite; a = b is allowed.

    Attributes::

      a, b : float
         the arguments.
    """
    a: float
    b: float

    def __post_init__(self):
        for name in ('a', 'b'):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0.):
                raise DomainError(
                    f'PositivePair: {name} must be positive and finite,'
                    f' got {getattr(self, name)!r}'
                )
            object.__setattr__(self, name, v)

    @property
    def ordered(self):
        """(max, min) of the pair"""
        return (self.a, self.b) if self.a >= self.b else (self.b, self.a)

    @property
    def t(self):
        """The ratio t = min/max in (0, 1]"""
        mx, mn = self.ordered
        return mn/mx

    @property
    def r(self):
        """r = (1-t)/(1+t), the modulus of the reduced problem"""
        t = self.t
        return (1.-t)/(1.+t)

    def scaled(self, k):
        """Returns the pair (k a, k b)"""
        return PositivePair(k*self.a, k*self.b)

    def __iter__(self):
        return iter((self.a, self.b))

def _order(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return np.maximum(a, b), np.minimum(a, b)

def toader_values(a, b):
    """
    Toader mean (2 max/pi) E(sqrt(1-(min/max)**2)) of arrays a, b; the
    common value where a = b.
    """
    mx, mn = _order(a, b)
    t = mn/mx

    # t is the complementary modulus; t = 0 (underflow) means E = 1
    tc = np.where(t > 0., t, 0.5)
    evalue = agm(np.sqrt((1.-tc)*(1.+tc)), tc)[1]
    evalue = np.where(t > 0., evalue, 1.)
    return np.where(mx == mn, mx, (2./np.pi)*mx*evalue)

def centroidal_values(a, b):
    """Centroidal mean 2(a**2+ab+b**2)/(3(a+b)) of arrays a, b"""
    mx, mn = _order(a, b)
    t = mn/mx
    return np.where(mx == mn, mx, mx*(2.*(1.+t+t*t))/(3.*(1.+t)))

def contraharmonic_values(a, b):
    """Contraharmonic mean (a**2+b**2)/(a+b) of arrays a, b"""
    mx, mn = _order(a, b)
    t = mn/mx
    return np.where(mx == mn, mx, mx*(1.+t*t)/(1.+t))

def power_values(a, b, p):
    """Power mean ((a**p+b**p)/2)**(1/p) of arrays a, b; sqrt(ab) for p = 0.

    Evaluated as base*exp(log1p(expm1(u)/2)/p) where base is max for p > 0
    and min for p < 0 and u = p*ln(other/base) <= 0. This cannot overflow
    for any finite p and keeps full accuracy as p -> 0.
    """
    mx, mn = _order(a, b)
    if p == 0.:
        return np.where(mx == mn, mx, np.sqrt(mx*mn))
    base, other = (mx, mn) if p > 0. else (mn, mx)

    # the ratio can leave the normal range for extreme pairs
    with np.errstate(over='ignore', under='ignore'):
        ratio = other/base
    normal = np.isfinite(ratio) & (ratio >= np.finfo(np.float64).tiny)
    logr = np.log(np.where(normal, ratio, 1.))
    logr = np.where(normal, logr, np.log(other) - np.log(base))
    u = p*logr
    value = base*np.exp(np.log1p(0.5*np.expm1(u))/p)
    return np.where(mx == mn, mx, value)

def convex_values(mean, a, b, x):
    """
    Evaluates mean(xa+(1-x)b, xb+(1-x)a) for arrays a, b where 'mean' is
    one of the array forms above; the common value where a = b.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    value = mean(x*a + (1.-x)*b, x*b + (1.-x)*a)
    return np.where(a == b, a, value)

def _checkx(x, where):
    if not (0.5 <= x <= 1.):
        raise DomainError(f'{where}: x = {x!r} lies outside [1/2, 1]')
    return float(x)

def toader(pair):
    """
    Toader mean T(a,b) = (2/pi) int_0^{pi/2} sqrt(a**2 cos**2 + b**2 sin**2),
    evaluated through E of the modulus sqrt(1-(min/max)**2).
    """
    return float(toader_values(pair.a, pair.b))

def centroidal(pair):
    """Centroidal mean 2(a**2+ab+b**2)/(3(a+b))"""
    return float(centroidal_values(pair.a, pair.b))

def power_mean(pair, p):
    """
    p-th power mean ((a**p+b**p)/2)**(1/p), the geometric mean sqrt(ab)
    for p = 0.
    """
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f'power_mean: p must be finite, got {p!r}')
    return float(power_values(pair.a, pair.b, p))

def contraharmonic(pair):
    """Contraharmonic mean (a**2+b**2)/(a+b)"""
    return float(contraharmonic_values(pair.a, pair.b))

def j_mean(pair, x):
    """
    J(x) = Cbar(xa+(1-x)b, xb+(1-x)a) for x in [1/2, 1]. Strictly increasing
    in x when a != b, from the arithmetic mean at x = 1/2 to Cbar(a,b) at
    x = 1.
    """
    x = _checkx(x, 'j_mean')
    return float(convex_values(centroidal_values, pair.a, pair.b, x))

def convex_contraharmonic(pair, x):
    """C(xa+(1-x)b, xb+(1-x)a) for x in [1/2, 1]"""
    x = _checkx(x, 'convex_contraharmonic')
    return float(convex_values(contraharmonic_values, pair.a, pair.b, x))

def toader_excess(pair):
    """
    Returns S = (T/A - 1)/r**2, A the arithmetic mean and r = |a-b|/(a+b),
    so that T - A = A r**2 S holds without forming the difference. For
    r <= 1/2, S comes from the Gauss-Kummer series T = A sum_n
    binom(1/2,n)**2 r**(2n), summed from n = 1; beyond, T/A - 1 >= 1/16
    and is formed directly. S increases with r from 1/4 at the diagonal to
    4/pi - 1 as r -> 1.
    """
    mx, mn = pair.ordered
    t = mn/mx
    r = (1.-t)/(1.+t)
    if r > SERIES_R:
        return (toader(PositivePair(1., t))/(0.5*(1.+t)) - 1.)/(r*r)

    r2 = r*r
    coeff, power, n = 0.5, 1., 1
    terms = []
    while True:
        term = coeff*coeff*power
        terms.append(term)
        if term <= 0.125*EPS:
            break
        n += 1
        coeff *= (1.5-n)/n
        power *= r2
    return math.fsum(terms)

def toader_quad(pair, tol=1.e-13):
    """
    Toader mean by adaptive quadrature of its defining integral. Slow;
    only meant for checking toader().
    """
    a, b = pair

    def integrand(theta):
        return np.sqrt((a*np.cos(theta))**2 + (b*np.sin(theta))**2)

    value, err = adaptive_gauss_legendre(integrand, 0., HALFPI, tol)
    return value/HALFPI

@dataclass(frozen=True)
class MeanKind:
    """
    Tag selecting a mean family, with its parameter where it has one.

    Attributes::

      tag : str
         one of 'toader', 'centroidal', 'contraharmonic', 'power',
         'convex_centroidal'.

      param : float | None
         the exponent p for 'power' (any finite value), the weight x in
         [1/2, 1] for 'convex_centroidal', None otherwise.
    """
    tag: str
    param: float = None

    TAGS = ('toader', 'centroidal', 'contraharmonic', 'power',
            'convex_centroidal')

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise UsageError(f'MeanKind: unknown mean {self.tag!r}')
        if self.tag == 'power':
            if self.param is None or not math.isfinite(self.param):
                raise UsageError(
                    'MeanKind: power needs a finite exponent, e.g. power:1.5'
                )
        elif self.tag == 'convex_centroidal':
            if self.param is None:
                raise UsageError(
                    'MeanKind: convex_centroidal needs a weight, e.g. j:0.75'
                )
            _checkx(self.param, 'MeanKind')
        elif self.param is not None:
            raise UsageError(f'MeanKind: {self.tag} takes no parameter')

    @classmethod
    def parse(cls, text):
        """
        Builds a MeanKind from 'toader', 'centroidal', 'contraharmonic',
        'power:P' or 'convex_centroidal:X' (alias 'j:X').
        """
        tag, sep, param = text.partition(':')
        tag = tag.strip().lower()
        if tag == 'j':
            tag = 'convex_centroidal'
        if sep:
            try:
                value = float(param)
            except ValueError:
                raise UsageError(
                    f'MeanKind.parse: cannot read parameter {param!r}'
                ) from None
        else:
            value = None
        return cls(tag, value)

    def __str__(self):
        return self.tag if self.param is None else f'{self.tag}:{self.param}'

def evaluate(kind, pair):
    """Evaluates the mean selected by a MeanKind at a PositivePair"""
    if kind.tag == 'toader':
        return toader(pair)
    elif kind.tag == 'centroidal':
        return centroidal(pair)
    elif kind.tag == 'contraharmonic':
        return contraharmonic(pair)
    elif kind.tag == 'power':
        return power_mean(pair, kind.param)
    else:
        return j_mean(pair, kind.param)
