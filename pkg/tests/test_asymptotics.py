import mpmath
import numpy as np
import pytest

from src.asymptotics import (AlternatingPsiExpansion, Flavor, Regime, alternating_psi_expansion, asympt_Cn, asympt_Cn_phi1, asympt_ctg_tg_halfstep, asympt_Sn,
                             asympt_Sn_0a, asympt_Sn_phi1, asympt_Sn_phi_a, asymptotic, classify_regime, csc_deriv_poly, deriv_diff_integral_check, deriv_poly,
                             deriv_poly_polygamma_check, in_strip, lemma3_expansion, log_tail_coefficient, phi1_crossover, sec_deriv_poly)
from src.errors import DomainError
from src.sums import Family, SumSpec

LN2 = np.log(2)


def gap(series, exact):
    return abs(float(series.value - exact) if series.Kernel.IsWide else series.value - float(exact))


def enveloped(series, exact, rel=0.):
    """ truncation error within twice the first omitted term """
    return gap(series, exact) <= 2 * abs(float(series.Next)) + rel * abs(float(exact)) + 1e-28


# ----------------------------------------
# region DERIVATIVE POLYNOMIALS
def test_deriv_poly_structure():
    assert csc_deriv_poly(1).Coeffs == {(1, 1): -1} and str(csc_deriv_poly(1)) == '-u*v'
    assert csc_deriv_poly(3).Coeffs == {(1, 3): -1, (3, 1): -5}
    assert str(csc_deriv_poly(3)) == '-u*v^3 - 5*u^3*v'
    assert sec_deriv_poly(3).Coeffs == {(1, 3): 1, (3, 1): 5}
    assert deriv_poly('csc', 5) is csc_deriv_poly(5)


@pytest.mark.parametrize('order', [1, 3, 5, 7])
@pytest.mark.parametrize('x', [.4, 1.3, 2.9])
def test_deriv_poly_values(order, x):
    with mpmath.workdps(40):
        exact = float(mpmath.diff(mpmath.csc, x, order))
        exact_sec = float(mpmath.diff(mpmath.sec, x - 1.5, order))
    assert csc_deriv_poly(order)(x) == pytest.approx(exact, rel=1e-12)
    assert sec_deriv_poly(order)(x - 1.5) == pytest.approx(exact_sec, rel=1e-12)


def test_deriv_poly_domain():
    for family, order in [('csc', 2), ('csc', 0), ('csc', 121), ('tg', 1)]:
        with pytest.raises(DomainError):
            deriv_poly(family, order)


@pytest.mark.parametrize('order', [1, 3, 5])
@pytest.mark.parametrize('alpha', [.7, 2.])
def test_polygamma_form(order, alpha):
    scale = max(1, abs(csc_deriv_poly(order)(alpha)))
    assert deriv_poly_polygamma_check(order, alpha) < 1e-11 * scale
    assert deriv_poly_polygamma_check(order, alpha, precision='wide') < 1e-26 * scale
    assert deriv_poly_polygamma_check(order, alpha - 1, Family.Sec) < 1e-11 * max(1, abs(sec_deriv_poly(order)(alpha - 1)))
    with pytest.raises(DomainError):
        deriv_poly_polygamma_check(order, 4.)


@pytest.mark.parametrize('order', [1, 3])
@pytest.mark.parametrize('phi, a', [(2., 1.), (1., 1.3), (np.pi / 2, 1.)])
def test_deriv_diff_integral(order, phi, a):
    assert deriv_diff_integral_check(order, phi, a) < 1e-9
# endregion DERIVATIVE POLYNOMIALS
# ----------------------------------------


# ----------------------------------------
# region S_n EXPANSIONS
def test_log_tail_coefficients():
    q, p = log_tail_coefficient(1)
    assert q == pytest.approx(-1 / 36) and p == 1
    assert asympt_Sn(100, 2).Tail[0] == pytest.approx(-np.pi / 3600, rel=1e-14)


@pytest.mark.parametrize('flavor', list(Flavor))
def test_asympt_sn_accuracy(flavor, mp_sum):
    exact = mp_sum('csc', 100, 0)
    assert gap(asympt_Sn(100, 3, flavor), exact) < 1e-11
    errors = [gap(asympt_Sn(100, N, flavor, 'wide'), exact) for N in (2, 3, 4)]
    assert errors[0] > errors[1] > errors[2] and errors[2] < 1e-15
    for N in (2, 3, 4):
        assert enveloped(asympt_Sn(100, N, flavor, 'wide'), exact)


@pytest.mark.parametrize('N', [2, 3])
def test_asympt_sn_order_slope(N, mp_sum):
    ns = [50, 100, 200]
    errors = [gap(asympt_Sn(n, N, Flavor.Log, 'wide'), mp_sum('csc', n, 0)) for n in ns]
    slope = np.polyfit(np.log(ns), np.log(errors), 1)[0]
    assert slope == pytest.approx(-(2 * N - 1), abs=.15)


def test_asympt_sn_wide_value(mp_sum):
    """ the wide value keeps the digits of the partial sum instead of rounding to a double """
    series = asympt_Sn(100, 6, Flavor.Log, 'wide')
    with mpmath.workdps(50):
        assert abs(series.value.to_mpf() - mp_sum('csc', 100, 0)) < mpmath.mpf(10) ** -20
        assert series.value.to_mpf() == series.Kernel.out(series.partial()).to_mpf()


@pytest.mark.parametrize('phi', [.5, 1.2, 2 * LN2, 2.8])
@pytest.mark.parametrize('N', [2, 3, 4])
def test_asympt_sn_phi1(phi, N, mp_sum):
    series = asympt_Sn_phi1(100, phi, N, 'wide')
    assert series.Regime == Regime.CtgPlusLogA1 and set(series.Leading) == {'ctg', 'log'}
    assert enveloped(series, mp_sum('csc', 100, phi))


@pytest.mark.parametrize('a', [LN2, .3, .9])
def test_asympt_sn_0a_below_one(a, mp_sum):
    exact = mp_sum('csc', 200, 0, a)
    log_series, harmonic_series = asympt_Sn_0a(200, a, 3), asympt_Sn_0a(200, a, 3, Flavor.Harmonic)
    assert log_series.Regime == Regime.LogOnlyA01 and 'ctg' not in log_series.Leading
    assert gap(log_series, exact) < 1e-9 * float(exact)
    assert gap(harmonic_series, exact) < 1e-9 * float(exact)


@pytest.mark.parametrize('a', [2 * LN2, 1.6, 1.75])
def test_asympt_sn_0a_above_one(a, mp_sum):
    series = asympt_Sn_0a(201, a, 3, precision='wide')
    assert series.Regime == Regime.CtgPlusLogAover1 and 'ctg' in series.Leading
    exact = mp_sum('csc', 201, 0, a)
    assert gap(series, exact) < 1e-8 * max(1, abs(float(exact)))


def test_asympt_sn_0a_domain():
    for a in [1, 0, 2, 2.5]:
        with pytest.raises(DomainError):
            asympt_Sn_0a(50, a)
    with pytest.raises(DomainError):
        asympt_Sn_0a(10, 1.25)
    assert asympt_Sn_0a(10, .5).Regime == Regime.LogOnlyA01


@pytest.mark.parametrize('phi, a', [(1., 1.3), (2., .8), (.5, 1.2)])
def test_asympt_sn_phi_a(phi, a, mp_sum):
    assert in_strip(Family.Csc, phi, a)
    series = asympt_Sn_phi_a(200, phi, a, 3, 'wide')
    exact = mp_sum('csc', 200, phi, a)
    assert gap(series, exact) < 1e-8 * max(1, abs(float(exact)))
    assert series.result().Order == 3 and series.result().Error == abs(float(series.Next))


def test_asympt_sn_phi_a_matches_phi1():
    general, special = asympt_Sn_phi_a(100, 1.2, 1., 3), asympt_Sn_phi1(100, 1.2, 3)
    assert general.value == pytest.approx(special.value, rel=1e-10)
# endregion S_n EXPANSIONS
# ----------------------------------------


# ----------------------------------------
# region C_n AND HALF STEP
@pytest.mark.parametrize('phi, a', [(.2, 1.2), (0., .7), (-.3, 1.)])
def test_asympt_cn(phi, a, mp_sum):
    series = asympt_Cn(150, phi, a, 3, 'wide')
    exact = mp_sum('sec', 150, phi, a)
    assert gap(series, exact) < 1e-8 * max(1, abs(float(exact)))


@pytest.mark.parametrize('phi', [-.7, .1, 1.])
def test_asympt_cn_phi1(phi, mp_sum):
    assert enveloped(asympt_Cn_phi1(100, phi, 3, 'wide'), mp_sum('sec', 100, phi))


@pytest.mark.parametrize('phi, a', [(.2, 1.5), (0., 2.), (2., 1.)])
def test_asympt_cn_strip(phi, a):
    with pytest.raises(DomainError):
        asympt_Cn(50, phi, a)


@pytest.mark.parametrize('family, phi', [('ctg', .4), ('ctg', 1.2), ('tg', 2.), ('tg', 2.9)])
def test_asympt_halfstep(family, phi, mp_sum):
    series = asympt_ctg_tg_halfstep(100, phi, 3, family, 'wide')
    assert 'ctg' not in series.Leading
    assert enveloped(series, mp_sum(family, 100, phi, .5))


def test_asympt_halfstep_domain():
    with pytest.raises(DomainError):
        asympt_ctg_tg_halfstep(100, 2., 3, 'ctg')
    with pytest.raises(DomainError):
        asympt_ctg_tg_halfstep(100, 2., 3, 'csc')
# endregion C_n AND HALF STEP
# ----------------------------------------


# ----------------------------------------
# region REGIMES AND FLAGS
def test_classify_panels():
    assert classify_regime(2 * LN2, 1).regime == Regime.CtgPlusLogA1
    assert classify_regime(0, 1).regime == Regime.LogOnly
    assert classify_regime(0, 2 * LN2).regime == Regime.CtgPlusLogAover1
    assert classify_regime(0, LN2).regime == Regime.LogOnlyA01
    assert classify_regime(1., 1.3).regime == Regime.General
    assert classify_regime(4., 1.3).regime == Regime.Unsupported


def test_asymptotic_dispatch():
    assert asymptotic(SumSpec('csc', 50, 0, 1)).Regime == Regime.LogOnly
    assert asymptotic(SumSpec('csc', 50, 0, LN2)).Regime == Regime.LogOnlyA01
    assert asymptotic(SumSpec('csc', 50, 1., 1.3)).Regime == Regime.General
    assert asymptotic(SumSpec('sec', 50, .1, 1)).Regime == Regime.CtgPlusLogA1
    assert asymptotic(SumSpec('ctg', 50, .4, .5)).Spec.family == Family.Ctg
    with pytest.raises(DomainError):
        asymptotic(SumSpec('csc', 50, 4., 1.3))
    with pytest.raises(DomainError):
        asymptotic(SumSpec('tg', 50, 2., 1.))


def test_order_limits():
    for N in [1, 31, 2.5]:
        with pytest.raises(DomainError):
            asympt_Sn(50, N)


def test_below_n0_flag():
    assert 'below-n0' in asympt_Sn(5).Flags
    assert 'below-n0' in asympt_Sn(5).result().Flags
    assert asympt_Sn(20).Flags == []


def test_unreliable_flag():
    series = asympt_Sn_phi1(10, np.pi / 10 + 1e-9)
    assert 'unreliable' in series.Flags


def test_series_partial_sums():
    series = asympt_Sn(40, 4)
    assert len(series.Tail) == 3
    assert series.partial(1) == pytest.approx(sum(series.Leading.values()))
    assert series.partial() == pytest.approx(series.value)
    assert series.tail_coeffs[0] == pytest.approx(-np.pi / 36)


def test_phi1_crossover():
    phis = [.5, 1e-3, .1, 1e-2, 1e-4]
    rows, crossing = phi1_crossover(50, phis)
    assert [r['phi'] for r in rows] == sorted(phis)
    assert crossing == .1
# endregion REGIMES AND FLAGS
# ----------------------------------------


@pytest.mark.parametrize('beta2', [.7, None])
def test_alternating_psi_expansion(beta2):
    expansion = AlternatingPsiExpansion(1., .3, beta2, n=100, N=3)
    assert expansion.value == pytest.approx(expansion.direct_sum(), abs=1e-11)


def test_alternating_psi_expansion_wide():
    expansion = AlternatingPsiExpansion(.5, .2, .9, n=200, N=4, precision='wide')
    assert abs(float(expansion.value - expansion.direct_sum())) < 1e-18


def test_alternating_psi_expansion_domain():
    with pytest.raises(DomainError):
        AlternatingPsiExpansion(0, .3)
    assert AlternatingPsiExpansion(1., .4, .4).value == 0
    assert alternating_psi_expansion(1., .3, n=50).value == pytest.approx(AlternatingPsiExpansion(1., .3, None, 50).value)
    assert lemma3_expansion(1., .3, .7, n=80, N=2).value == alternating_psi_expansion(1., .3, .7, n=80, N=2).value
