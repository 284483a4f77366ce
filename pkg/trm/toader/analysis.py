"""
Machinery behind the sharp bounds of the Toader mean by centroidal means of
convex combinations,

  Cbar(lam a+(1-lam)b, lam b+(1-lam)a) < T(a,b) < Cbar(mu a+(1-mu)b, mu b+(1-mu)a),

lam = (1+sqrt(3)/2)/2, mu = 1/2+sqrt(12/pi-3)/2. With t = b/a < 1 and
r = (1-t)/(1+t), the difference T - J(p) reduces to a/(1+r) f(r) where

  f  = (2/pi)[2E - r'**2 K] - (1-2p)**2 r**2/3 - 1
  f1 = r f'     = (2/pi)[E - r'**2 K] - 2(1-2p)**2 r**2/3
  f2 = f1'/r    = (2/pi) K - 4(1-2p)**2/3

This module evaluates that chain, locates the sign changes of f1 and f2,
inverts J(x) = T to recover the sharp constants, sweeps the inequalities
over seeded random samples and hunts for counterexamples beyond the sharp
constants.
"""

import math
import logging
from collections import namedtuple
from dataclasses import dataclass
import numpy as np
from scipy import optimize, special

from .core import *
from .elliptic import Modulus, ellip_pair
from .means import *

__all__ = [
    'SharpConstants', 'SHARP', 'LAMBDA', 'MU', 'FChain', 'BoundaryTable',
    'SharpnessRecord', 'SharpnessSummary', 'VerificationReport',
    'FAMILIES', 'INEQUALITIES', 'f_chain', 'boundary_table',
    'limit_values_at_mu',
    'reduction_residual', 'find_f2_root', 'find_f1_root', 'solve_sharpness',
    'sharpness_grid', 'scan_sharpness', 'verify_inequality',
    'find_counterexample',
]

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class SharpConstants:
    """
    Closed forms of the best constants.

    Attributes::

      lam : float
         (1+sqrt(3)/2)/2, lower centroidal weight.

      mu : float
         1/2+sqrt(12/pi-3)/2, upper centroidal weight.

      chu_alpha : float
         3/4, lower contraharmonic weight.

      chu_beta : float
         1/2+sqrt(4pi-pi**2)/(2pi), upper contraharmonic weight.

      vuorinen_p : float
         3/2, lower power-mean exponent.

      alzer_qiu_p : float
         ln 2/ln(pi/2), upper power-mean exponent.
    """
    lam: float = 0.5*(1. + math.sqrt(3.)/2.)
    mu: float = 0.5 + 0.5*math.sqrt(12./math.pi - 3.)
    chu_alpha: float = 0.75
    chu_beta: float = 0.5 + math.sqrt(4.*math.pi - math.pi**2)/(2.*math.pi)
    vuorinen_p: float = 1.5
    alzer_qiu_p: float = math.log(2.)/math.log(HALFPI)

SHARP = SharpConstants()
LAMBDA = SHARP.lam
MU = SHARP.mu

# f, f1 = r f', f2 = f1'/r
FChain = namedtuple('FChain', ('f', 'f1', 'f2'))

# limits of f, f1, f2 at r = 0 and r = 1-
BoundaryTable = namedtuple(
    'BoundaryTable', ('f_0', 'f1_0', 'f2_0', 'f_1', 'f1_1', 'f2_1')
)

def f_chain(r, p):
    """Evaluates f, f1 and f2 from their closed forms.

    Arguments::

      r : float
         0 <= r < 1.

      p : float
         convex weight in [1/2, 1].

    Returns an FChain.
    """
    if not (0. <= r < 1.):
        raise DomainError(f'f_chain: r = {r!r} lies outside [0, 1)')
    p = checkp(p, 'f_chain')

    vals = ellip_pair(Modulus(r))
    kval, evalue = vals.k_first, vals.e_second
    q = (1.-2.*p)**2
    rc2 = (1.-r)*(1.+r)

    f = (2.*evalue - rc2*kval)/HALFPI - q*r*r/3. - 1.
    f1 = (evalue - rc2*kval)/HALFPI - 2.*q*r*r/3.
    f2 = kval/HALFPI - 4.*q/3.
    return FChain(f, f1, f2)

def boundary_table(p):
    """
    Closed-form limits of f, f1, f2 at r = 0 and r = 1- for weight p. f2
    diverges at 1-, which is reported as inf.
    """
    p = checkp(p, 'boundary_table')
    q = (1.-2.*p)**2
    return BoundaryTable(
        0., 0., 1. - 4.*q/3.,
        4./math.pi - 1. - q/3., 2./math.pi - 2.*q/3., math.inf
    )

def limit_values_at_mu():
    """
    Returns (f(1-), f1(1-), f2(0)) at p = mu in closed form: 0,
    2(pi-3)/pi and (5pi-16)/pi. f(1-) = 0 is what makes mu sharp.
    """
    return 0., 2.*(math.pi-3.)/math.pi, (5.*math.pi-16.)/math.pi

def reduction_residual(pair, p):
    """
    Returns |[T(a,b) - J(p)] - a/(1+r) f(r)| with a = max(a,b), t = b/a,
    r = (1-t)/(1+t): the two sides of the reduction to f evaluated along
    independent paths. Raises DegenerateInputError for a = b.
    """
    p = checkp(p, 'reduction_residual')
    mx, mn = pair.ordered
    if mx == mn:
        raise DegenerateInputError(
            'reduction_residual: a = b reduces the identity to 0 = 0'
        )
    lhs = toader(pair) - j_mean(pair, p)
    r = pair.r
    rhs = mx/(1.+r)*f_chain(r, p).f
    return abs(lhs - rhs)

def _bisect(func, lo, hi, xtol):
    """
    Bisection on [lo, hi] by scipy; returns (root, iterations).
    """
    root, info = optimize.bisect(
        func, lo, hi, xtol=xtol, maxiter=MAXITER, full_output=True,
        disp=False
    )
    if not info.converged:
        raise InternalError(
            f'_bisect: no convergence on [{lo}, {hi}] in {MAXITER} iterations'
        )
    return root, info.iterations

def find_f2_root(p, xtol=XTOL):
    """Locates r0 with f2(r0) = 0, i.e. K(r0) = (2pi/3)(1-2p)**2. f2 increases
    with r and diverges at 1-, so a root exists exactly when f2(0) < 0, that
    is for p > lam. The search runs over [1e-12, 1-1e-12].

    Raises NoRootError naming the endpoint with the wrong sign; f2(0)
    within the strictness band of zero (p = lam) counts as wrong.
    """
    p = checkp(p, 'find_f2_root')
    lo, hi = 1.e-12, 1.-1.e-12

    def f2(r):
        return f_chain(r, p).f2

    if not f2(lo) < -BAND:
        raise NoRootError(
            f'find_f2_root: f2 is not negative near r = 0 for p = {p!r}',
            'left'
        )
    if not f2(hi) > BAND:
        raise NoRootError(
            f'find_f2_root: f2 is not positive near r = 1 for p = {p!r}',
            'right'
        )
    root, niter = _bisect(f2, lo, hi, xtol)
    logger.debug('find_f2_root: p = %r, r0 = %r, %d iterations', p, root, niter)
    return root

def find_f1_root(p, xtol=XTOL):
    """Locates r1 with f1(r1) = 0 on (r0, 1). f1 starts at 0, decreases while
    f2 < 0 (up to r0) and increases after, so its only interior zero lies
    right of r0 and exists when f1(1-) > 0. The search runs over
    [r0, 1-1e-9].

    Raises NoRootError if either f2 or f1 lacks the sign change.
    """
    p = checkp(p, 'find_f1_root')
    r0 = find_f2_root(p, xtol)
    hi = 1.-1.e-9

    def f1(r):
        return f_chain(r, p).f1

    if not f1(r0) < -BAND:
        raise NoRootError(
            f'find_f1_root: f1 is not negative at r0 = {r0!r}', 'left'
        )
    if not f1(hi) > BAND:
        raise NoRootError(
            f'find_f1_root: f1 is not positive near r = 1 for p = {p!r}',
            'right'
        )
    root, niter = _bisect(f1, r0, hi, xtol)
    logger.debug('find_f1_root: p = %r, r1 = %r, %d iterations', p, root, niter)
    return root

# A family of means M(pair, x) increasing in x that brackets the Toader mean
# on [lo, hi]; 'lower' is the sharp constant approached as t -> 1, 'upper'
# the one approached as t -> 0. Where M - A = A r**2 reduced(x) exactly,
# M - T has the sign of reduced(x) - toader_excess(pair), which is free of
# the cancellation of M - T near the diagonal.
Family = namedtuple(
    'Family', ('mean', 'lo', 'hi', 'lower', 'upper', 'reduced'),
    defaults=(None,)
)

FAMILIES = {
    'centroidal' : Family(
        j_mean, 0.5, 1., SHARP.lam, SHARP.mu, lambda x: (2.*x-1.)**2/3.
    ),
    'contraharmonic' : Family(
        convex_contraharmonic, 0.5, 1., SHARP.chu_alpha, SHARP.chu_beta,
        lambda x: (2.*x-1.)**2
    ),
    'power' : Family(power_mean, 1., 2., SHARP.vuorinen_p, SHARP.alzer_qiu_p),
}

def _family(name):
    try:
        return FAMILIES[name]
    except KeyError:
        raise UsageError(
            f'unknown family {name!r}, expected one of {", ".join(FAMILIES)}'
        ) from None

@dataclass(frozen=True)
class SharpnessRecord:
    """
    Solution of M(x_star) = T at one ratio.

    Attributes::

      t : float
         the ratio b/a in (0, 1).

      x_star : float
         the weight (or exponent, for the power family) at which the family
         matches the Toader mean. In [1/2, 1] for the convex families, in
         [1, 2] for the power family.

      iterations : int
         bisection steps taken.

      residual : float
         |M(x_star) - T|.

      family : str
         the family inverted.

      clamped : bool
         True if T fell outside the family's range on the bracket and
         x_star was clamped to an end. Cannot happen for valid input.
    """
    t: float
    x_star: float
    iterations: int
    residual: float
    family: str = 'centroidal'
    clamped: bool = False

def solve_sharpness(t, family='centroidal', xtol=XTOL):
    """Solves M(pair, x) = T(pair) for x by bisection, where M is the family's
    mean (J for 'centroidal') and the pair is (1, t).

    Arguments::

      t : float | PositivePair
         the ratio in (0, 1), or a pair with a != b which is used as it
         stands (the solution depends only on its ratio).

      family : str
         'centroidal', 'contraharmonic' or 'power'.

      xtol : float
         bisection tolerance on x.

    For the centroidal and contraharmonic families the bisection runs on
    the reduced form of M - T (see FAMILIES), so x_star keeps full accuracy
    as t -> 1. The residual is always |M(x_star) - T|.

    Returns a SharpnessRecord.
    """
    fam = _family(family)
    if isinstance(t, PositivePair):
        pair = t
        if pair.t == 1.:
            raise DegenerateInputError('solve_sharpness: a = b')
    else:
        if not (0. < t < 1.):
            raise DomainError(f'solve_sharpness: t = {t!r} lies outside (0, 1)')
        pair = PositivePair(1., t)

    target = toader(pair)

    def gap(x):
        return fam.mean(pair, x) - target

    if fam.reduced is None:
        search = gap
    else:
        excess = toader_excess(pair)

        def search(x):
            return fam.reduced(x) - excess

    if search(fam.lo) >= 0.:
        x, niter, clamped = fam.lo, 0, True
    elif search(fam.hi) <= 0.:
        x, niter, clamped = fam.hi, 0, True
    else:
        (x, niter), clamped = _bisect(search, fam.lo, fam.hi, xtol), False

    if clamped:
        logger.warning(
            'solve_sharpness: T lies outside the %s range at t = %r,'
            ' x clamped to %r', family, pair.t, x
        )
    return SharpnessRecord(pair.t, x, niter, abs(gap(x)), family, clamped)

# end points of the sharpness grid
TGRID = (1.e-6, 1.-1.e-4)

def sharpness_grid(n, lo=TGRID[0], hi=TGRID[1]):
    """
    Returns n ratios from lo to hi, uniform in log(t/(1-t)), so that both
    ends are sampled as densely as each other on a log scale.
    """
    if n < 2:
        raise DomainError(f'sharpness_grid: need at least 2 points, got {n}')
    return special.expit(np.linspace(special.logit(lo), special.logit(hi), n))

# extremes of a sharpness scan & the family's closed-form constants
SharpnessSummary = namedtuple(
    'SharpnessSummary',
    ('x_min', 't_min', 'x_max', 't_max', 'lower', 'upper')
)

def scan_sharpness(n, family='centroidal', xtol=XTOL):
    """
    Solves for x_star over sharpness_grid(n). Returns the list of
    SharpnessRecords and a SharpnessSummary.
    """
    fam = _family(family)
    records = [
        solve_sharpness(float(t), family, xtol) for t in sharpness_grid(n)
    ]
    lo = min(records, key=lambda rec: rec.x_star)
    hi = max(records, key=lambda rec: rec.x_star)
    summary = SharpnessSummary(
        lo.x_star, lo.t, hi.x_star, hi.t, fam.lower, fam.upper
    )
    logger.info(
        'scan_sharpness: %s, x_star in [%.12f, %.12f]',
        family, lo.x_star, hi.x_star
    )
    return records, summary

# A strict inequality lower(a,b) < upper(a,b) on array forms.
Inequality = namedtuple('Inequality', ('description', 'lower', 'upper'))

INEQUALITIES = {
    'vuorinen_lower' : Inequality(
        'M_{3/2} < T',
        lambda a, b: power_values(a, b, SHARP.vuorinen_p), toader_values
    ),
    'alzer_qiu_upper' : Inequality(
        'T < M_{ln2/ln(pi/2)}',
        toader_values, lambda a, b: power_values(a, b, SHARP.alzer_qiu_p)
    ),
    'chu_lower' : Inequality(
        'C(3/4) < T',
        lambda a, b: convex_values(contraharmonic_values, a, b, SHARP.chu_alpha),
        toader_values
    ),
    'chu_upper' : Inequality(
        'T < C(beta)',
        toader_values,
        lambda a, b: convex_values(contraharmonic_values, a, b, SHARP.chu_beta)
    ),
    'main_lower' : Inequality(
        'J(lam) < T',
        lambda a, b: convex_values(centroidal_values, a, b, SHARP.lam),
        toader_values
    ),
    'main_upper' : Inequality(
        'T < J(mu)',
        toader_values,
        lambda a, b: convex_values(centroidal_values, a, b, SHARP.mu)
    ),
}

# range of the sampled ratios
TSAMPLE = (1.e-8, 1.-1.e-8)

@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of a sweep of one inequality.

    Attributes::

      inequality_id : str
         key into INEQUALITIES.

      samples : int
         number of pairs tested.

      seed : int
         seed of the generator.

      violations : int
         samples failing by more than the strictness band.

      inconclusive : int
         samples whose margin lies within the band either side of zero.

      min_margin : float
         smallest upper - lower over the samples; negative means failure.

      worst_pair : PositivePair
         the pair giving min_margin.
    """
    inequality_id: str
    samples: int
    seed: int
    violations: int
    inconclusive: int
    min_margin: float
    worst_pair: PositivePair

def verify_inequality(ineq_id, samples, seed, band=BAND):
    """Tests one strict inequality on 'samples' pairs (1, t) with log t drawn
    uniformly over [ln 1e-8, ln(1-1e-8)] by numpy's PCG64 generator seeded
    with 'seed'. Homogeneity of all the means makes a = 1 no restriction.
    Equal (samples, seed) give identical reports.

    A sample violates the inequality if upper - lower < -band*T and is
    inconclusive if |upper - lower| <= band*T.

    Raises UsageError for an unknown id or samples < 1.
    """
    try:
        ineq = INEQUALITIES[ineq_id]
    except KeyError:
        raise UsageError(
            f'verify_inequality: unknown inequality {ineq_id!r}, expected'
            f' one of {", ".join(INEQUALITIES)}'
        ) from None
    if samples < 1:
        raise UsageError(
            f'verify_inequality: need at least one sample, got {samples}'
        )

    rng = np.random.default_rng(seed)
    t = np.exp(rng.uniform(math.log(TSAMPLE[0]), math.log(TSAMPLE[1]), samples))
    a = np.ones_like(t)

    margin = ineq.upper(a, t) - ineq.lower(a, t)
    scale = band*toader_values(a, t)
    violations = int(np.count_nonzero(margin < -scale))
    inconclusive = int(np.count_nonzero(np.abs(margin) <= scale))
    worst = int(np.argmin(margin))

    logger.info(
        'verify_inequality: %s (%s), %d samples, %d violations,'
        ' %d inconclusive', ineq_id, ineq.description, samples, violations,
        inconclusive
    )
    return VerificationReport(
        ineq_id, samples, seed, violations, inconclusive,
        float(margin[worst]), PositivePair(1., float(t[worst]))
    )

# number of halvings in the counterexample sweeps
KSWEEP = 40

def find_counterexample(p, side, band=BAND):
    """Demonstrates that a weight beyond a sharp constant fails. For side
    'lower' and p > lam, walks t = 1-2**-k, k = 1..40, for a pair with
    T < J(p); for side 'upper' and p < mu, walks t = 2**-k for T > J(p).
    Failure must exceed band*T.

    Returns the first failing PositivePair, or None if the sweep finds
    none (as for p = lam or p = mu themselves).

    Raises UsageError for p < lam on the lower side or p > mu on the upper
    one, where no counterexample can exist, or for an unknown side.
    """
    p = checkp(p, 'find_counterexample')
    if side == 'lower':
        if p < SHARP.lam:
            raise UsageError(
                f'find_counterexample: lower side needs p >= lambda ='
                f' {SHARP.lam!r}, got {p!r}'
            )
        ratios = [1. - 2.**-k for k in range(1, KSWEEP+1)]
        sign = -1.
    elif side == 'upper':
        if p > SHARP.mu:
            raise UsageError(
                f'find_counterexample: upper side needs p <= mu ='
                f' {SHARP.mu!r}, got {p!r}'
            )
        ratios = [2.**-k for k in range(1, KSWEEP+1)]
        sign = 1.
    else:
        raise UsageError(
            f'find_counterexample: side must be lower or upper, got {side!r}'
        )

    for t in ratios:
        pair = PositivePair(1., t)
        tval = toader(pair)
        if sign*(tval - j_mean(pair, p)) > band*tval:
            logger.info(
                'find_counterexample: p = %r fails on the %s side at t = %r',
                p, side, t
            )
            return pair
    return None
