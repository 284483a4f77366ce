import math

import numpy as np
import pytest
from scipy import special

from trm.toader import (
    Modulus, EllipticValues, ellipk, ellipe, ellip_pair, ellip_oracle,
    toader, PositivePair, DomainError, DivergenceError,
)
from trm.toader.elliptic import agm, derivative_residuals, landen_e_residual

MODULI = np.round(np.arange(1, 100)*0.01, 2)

@pytest.mark.parametrize('r', [-0.1, 1.1, math.nan, math.inf])
def test_modulus_rejects(r):
    with pytest.raises(DomainError):
        Modulus(r)

def test_modulus_complement():
    m = Modulus(0.6)
    assert m.rc == pytest.approx(0.8, rel=1e-15)
    assert m.complement().r == m.rc

def test_values_at_zero_are_exact():
    vals = ellip_pair(Modulus(0.))
    assert vals.k_first == math.pi/2
    assert vals.e_second == math.pi/2

def test_e_at_one_is_exact():
    assert ellipe(Modulus(1.)) == 1.

def test_k_at_one_diverges():
    with pytest.raises(DivergenceError):
        ellipk(Modulus(1.))
    with pytest.raises(DivergenceError):
        ellip_pair(Modulus(1.))

def test_pair_matches_single_calls():
    m = Modulus(0.5)
    vals = ellip_pair(m)
    assert vals.k_first == ellipk(m)
    assert vals.e_second == ellipe(m)
    assert vals.modulus == m

def test_against_scipy():
    # scipy works with the parameter m = r**2
    r = np.linspace(0., 0.99, 100)
    kval, evalue = agm(r)
    assert np.allclose(kval, special.ellipk(r*r), rtol=1e-14, atol=0.)
    assert np.allclose(evalue, special.ellipe(r*r), rtol=1e-14, atol=0.)

def test_near_one_against_scipy():
    for r in (1.-1e-6, 1.-1e-9, 1.-1e-12):
        kval = ellipk(Modulus(r))
        assert kval == pytest.approx(special.ellipkm1((1.-r)*(1.+r)), rel=1e-13)

def test_monotone():
    r = np.linspace(0., 1.-1e-9, 2001)
    kval, evalue = agm(r)
    assert np.all(np.diff(kval) > 0.)
    assert np.all(np.diff(evalue) < 0.)

def test_array_matches_scalar():
    r = np.array([0., 0.1, 0.5, 0.9, 0.999999])
    kval, evalue = agm(r)
    for i, ri in enumerate(r):
        vals = ellip_pair(Modulus(ri))
        assert vals.k_first == kval[i]
        assert vals.e_second == evalue[i]

def test_legendre_relation():
    for r in (0.1, 0.5, 0.6, 0.9):
        vals = ellip_pair(Modulus(r))
        comp = vals.complementary()
        assert isinstance(comp, EllipticValues)
        lhs = (vals.e_second*comp.k_first + comp.e_second*vals.k_first
               - vals.k_first*comp.k_first)
        assert lhs == pytest.approx(math.pi/2, rel=1e-13)

@pytest.mark.parametrize('r', MODULI)
def test_oracle_agrees(r):
    m = Modulus(r)
    vals, oracle = ellip_pair(m), ellip_oracle(m, 1e-13)
    assert oracle.k_first == pytest.approx(vals.k_first, rel=1e-12)
    assert oracle.e_second == pytest.approx(vals.e_second, rel=1e-12)

def test_oracle_at_zero():
    vals = ellip_oracle(Modulus(0.))
    assert vals.k_first == pytest.approx(math.pi/2, abs=1e-13)
    assert vals.e_second == pytest.approx(math.pi/2, abs=1e-13)

def test_oracle_matches_toader():
    # T(2,1) = (4/pi) E(sqrt(3)/2)
    vals = ellip_oracle(Modulus(math.sqrt(3.)/2.))
    assert 4./math.pi*vals.e_second == pytest.approx(
        toader(PositivePair(2., 1.)), rel=1e-12
    )

@pytest.mark.parametrize('tol', [1e-16, 1e-5])
def test_oracle_tolerance_range(tol):
    with pytest.raises(DomainError):
        ellip_oracle(Modulus(0.5), tol)

def test_oracle_diverges():
    with pytest.raises(DivergenceError):
        ellip_oracle(Modulus(1.))

@pytest.mark.parametrize('r', np.round(np.arange(1, 20)*0.05, 2))
def test_derivatives(r):
    res = derivative_residuals(Modulus(r), 1e-5, relative=True)
    assert max(res) <= 1e-6

def test_derivatives_near_singular_end():
    res = derivative_residuals(Modulus(0.9), 1e-6, relative=True)
    assert max(res) <= 1e-5

@pytest.mark.parametrize('r, h', [(0.5, 0.6), (0.99, 0.02), (0.5, 0.)])
def test_derivative_step_checked(r, h):
    with pytest.raises(DomainError):
        derivative_residuals(Modulus(r), h)

def test_landen_at_zero():
    assert landen_e_residual(Modulus(0.)) <= 1e-15

@pytest.mark.parametrize('r', np.append(np.linspace(0., 0.99, 100), 0.999))
def test_landen(r):
    assert landen_e_residual(Modulus(r)) <= 1e-12

def test_landen_needs_r_below_one():
    with pytest.raises(DomainError):
        landen_e_residual(Modulus(1.))
