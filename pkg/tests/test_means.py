import math
import warnings

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from scipy import special

from trm.toader import (
    PositivePair, MeanKind, toader, centroidal, contraharmonic, power_mean,
    j_mean, DomainError, UsageError,
)
from trm.toader.means import (
    convex_contraharmonic, toader_quad, toader_excess, evaluate, toader_values,
    power_values, SERIES_R,
)
from trm.toader.analysis import SHARP

positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)
weight = st.floats(min_value=0.5, max_value=1.)

MEANS = [
    toader, centroidal, contraharmonic,
    lambda pair: power_mean(pair, 1.5),
    lambda pair: power_mean(pair, 0.),
    lambda pair: power_mean(pair, -2.),
    lambda pair: j_mean(pair, 0.95),
    lambda pair: convex_contraharmonic(pair, 0.8),
]

@pytest.mark.parametrize('a, b', [(0., 1.), (-1., 2.), (1., math.inf), (math.nan, 1.)])
def test_pair_rejects(a, b):
    with pytest.raises(DomainError):
        PositivePair(a, b)

def test_pair_ratio():
    pair = PositivePair(1., 3.)
    assert pair.ordered == (3., 1.)
    assert pair.t == pytest.approx(1./3.)
    assert pair.r == pytest.approx(0.5)
    assert tuple(pair.scaled(2.)) == (2., 6.)

def test_known_values():
    pair = PositivePair(2., 1.)
    assert centroidal(pair) == 1.5555555555555556
    assert contraharmonic(pair) == pytest.approx(5./3., rel=1e-15)
    assert power_mean(PositivePair(4., 1.), 0.) == 2.
    assert power_mean(PositivePair(1., 3.), 1.) == pytest.approx(2., rel=1e-15)
    assert power_mean(PositivePair(1., 3.), -1.) == pytest.approx(1.5, rel=1e-15)
    assert power_mean(PositivePair(1., 3.), 2.) == pytest.approx(math.sqrt(5.), rel=1e-15)
    assert toader(pair) == pytest.approx(4./math.pi*special.ellipe(0.75), rel=1e-14)

@pytest.mark.parametrize('mean', MEANS)
@given(a=positive)
def test_diagonal(mean, a):
    assert mean(PositivePair(a, a)) == a

@pytest.mark.parametrize('mean', MEANS)
@given(a=positive, b=positive)
def test_symmetry(mean, a, b):
    assert mean(PositivePair(a, b)) == mean(PositivePair(b, a))

@pytest.mark.parametrize('mean', MEANS)
@given(a=positive, b=positive, k=st.floats(min_value=1e-3, max_value=1e3))
def test_homogeneity(mean, a, b, k):
    pair = PositivePair(a, b)
    assert mean(pair.scaled(k)) == pytest.approx(k*mean(pair), rel=1e-13)

@given(a=positive, b=positive)
def test_toader_between_arithmetic_and_centroidal(a, b):
    pair = PositivePair(a, b)
    value = toader(pair)
    assert 0.5*(a+b)*(1.-1e-15) <= value <= centroidal(pair)*(1.+1e-15)

@given(a=positive, b=positive)
def test_arithmetic_centroidal_contraharmonic_chain(a, b):
    assume(abs(a-b) > 1e-5*max(a, b))
    pair = PositivePair(a, b)
    assert power_mean(pair, 1.) < centroidal(pair) < contraharmonic(pair)

@pytest.mark.parametrize('a, b', [(2., 1.), (10., 1.), (1., 0.01), (1., 1e-6), (3., 2.5)])
def test_toader_between_power_means(a, b):
    pair = PositivePair(a, b)
    value = toader(pair)
    assert power_mean(pair, SHARP.vuorinen_p) < value < power_mean(pair, SHARP.alzer_qiu_p)

@given(a=positive, b=positive, x=weight, y=weight)
def test_j_mean_increasing(a, b, x, y):
    pair = PositivePair(a, b)
    lo, hi = min(x, y), max(x, y)
    assert j_mean(pair, lo) <= j_mean(pair, hi)*(1.+1e-15)

def test_j_mean_ends():
    pair = PositivePair(2., 1.)
    assert j_mean(pair, 0.5) == pytest.approx(1.5, rel=1e-15)
    assert j_mean(pair, 1.) == centroidal(pair)
    assert convex_contraharmonic(pair, 1.) == contraharmonic(pair)

@pytest.mark.parametrize('x', [0.49, 1.01, math.nan])
def test_weight_domain(x):
    pair = PositivePair(2., 1.)
    with pytest.raises(DomainError):
        j_mean(pair, x)
    with pytest.raises(DomainError):
        convex_contraharmonic(pair, x)

def test_power_needs_finite_exponent():
    with pytest.raises(DomainError):
        power_mean(PositivePair(1., 2.), math.inf)

def test_power_no_overflow():
    value = power_mean(PositivePair(1e300, 1e-5), 50.)
    assert math.isfinite(value)
    assert value == pytest.approx(1e300*2.**(-1./50.), rel=1e-14)

@pytest.mark.parametrize('pair, p, expected', [
    (PositivePair(1e-300, 1e300), -1e300, 1e-300),
    (PositivePair(1e-300, 1e300), 1e300, 1e300),
    (PositivePair(1e-200, 1e200), -3., 2.**(1./3.)*1e-200),
])
def test_power_extreme_ratio_is_quiet(pair, p, expected):
    with warnings.catch_warnings():
        warnings.simplefilter('error')
        assert power_mean(pair, p) == pytest.approx(expected, rel=1e-12)

@pytest.mark.parametrize('p', [1e-6, -1e-6])
@given(s=st.floats(min_value=math.exp(-0.02), max_value=1.))
def test_power_continuous_at_zero(p, s):
    pair = PositivePair(1., s)
    assert abs(power_mean(pair, p) - power_mean(pair, 0.)) <= 1e-10

def test_toader_extreme_ratio():
    pair = PositivePair(1e300, 1e-300)
    assert toader(pair) == pytest.approx(2e300/math.pi, rel=1e-15)
    assert toader(PositivePair(1., 1e-12)) == pytest.approx(2./math.pi, rel=1e-12)

def test_toader_near_diagonal():
    t = 1. - 1e-9
    assert toader(PositivePair(1., t)) == pytest.approx(0.5*(1.+t), rel=1e-15)

def test_toader_against_quadrature():
    rng = np.random.default_rng(1)
    a = np.exp(rng.uniform(math.log(0.1), math.log(10.), 100))
    t = np.exp(rng.uniform(math.log(1e-6), 0., 100))
    for ai, ti in zip(a, t):
        pair = PositivePair(ai, ai*ti)
        assert toader_quad(pair) == pytest.approx(toader(pair), rel=1e-11)

def test_excess_on_diagonal():
    assert toader_excess(PositivePair(2., 2.)) == 0.25

def test_excess_small_r():
    pair = PositivePair(1., (1.-1e-3)/(1.+1e-3))
    r = pair.r
    assert toader_excess(pair) == pytest.approx(0.25 + r*r/64. + r**4/256., rel=1e-15)

@pytest.mark.parametrize('r', [0.1, 0.3, SERIES_R, 0.7, 0.99])
def test_excess_matches_difference(r):
    pair = PositivePair(1., (1.-r)/(1.+r))
    mean = 0.5*(1.+pair.t)
    direct = (toader(pair)/mean - 1.)/pair.r**2
    assert toader_excess(pair) == pytest.approx(direct, rel=1e-11)

def test_excess_increasing():
    r = np.linspace(0.01, 0.99, 99)
    s = np.array([toader_excess(PositivePair(1., (1.-ri)/(1.+ri))) for ri in r])
    assert np.all(np.diff(s) > 0.)
    assert 0.25 < s[0] and s[-1] < 4./math.pi - 1.
    t = 1./3.
    below = toader_excess(PositivePair(1., t*(1.+1e-12)))
    above = toader_excess(PositivePair(1., t*(1.-1e-12)))
    assert below == pytest.approx(above, rel=1e-10)

def test_array_forms_match_scalars():
    a = np.array([1., 2., 5., 7.])
    b = np.array([1., 1., 0.25, 7e-6])
    values = toader_values(a, b)
    powers = power_values(a, b, 1.5)
    for i in range(len(a)):
        pair = PositivePair(a[i], b[i])
        assert values[i] == toader(pair)
        assert powers[i] == power_mean(pair, 1.5)

@pytest.mark.parametrize('text, tag, param', [
    ('toader', 'toader', None),
    ('Centroidal', 'centroidal', None),
    ('contraharmonic', 'contraharmonic', None),
    ('power:0', 'power', 0.),
    ('power:-1.5', 'power', -1.5),
    ('j:0.75', 'convex_centroidal', 0.75),
    ('convex_centroidal:1', 'convex_centroidal', 1.),
])
def test_parse(text, tag, param):
    kind = MeanKind.parse(text)
    assert kind.tag == tag
    assert kind.param == param

@pytest.mark.parametrize('text', ['bogus', 'power', 'power:x', 'power:nan', 'j', 'toader:1'])
def test_parse_rejects(text):
    with pytest.raises(UsageError):
        MeanKind.parse(text)

def test_parse_weight_out_of_range():
    with pytest.raises(DomainError):
        MeanKind.parse('j:1.5')

def test_kind_str():
    assert str(MeanKind('power', 1.5)) == 'power:1.5'
    assert str(MeanKind('toader')) == 'toader'

def test_evaluate_dispatch():
    pair = PositivePair(3., 1.)
    assert evaluate(MeanKind.parse('toader'), pair) == toader(pair)
    assert evaluate(MeanKind.parse('centroidal'), pair) == centroidal(pair)
    assert evaluate(MeanKind.parse('contraharmonic'), pair) == contraharmonic(pair)
    assert evaluate(MeanKind.parse('power:2'), pair) == power_mean(pair, 2.)
    assert evaluate(MeanKind.parse('j:0.9'), pair) == j_mean(pair, 0.9)
