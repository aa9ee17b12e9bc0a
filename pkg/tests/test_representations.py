import mpmath
import numpy as np
import pytest

from src.errors import DomainError, NonConvergence
from src.numerics import Native, Wide
from src.representations import (DigammaSum, EulerTransform, Scheme, SeriesAccel, digamma_summation_check, eval_cotangent_form, eval_digamma_finite,
                                 eval_digamma_infinite, eval_integral_form, eval_mixed_form, in_integral_strip, integral_strip, sum_alternating)
from src.sums import Family, Method, SumSpec, eval_direct

InStrip = [('csc', 7, .3, .7), ('csc', 10, 0, 1), ('csc', 12, .1, 1), ('csc', 5, .2, .4), ('sec', 6, -.3, .5), ('sec', 9, 0, .5)]


def close(value, exact, rel):
    return abs(float(value) - float(exact)) <= rel * max(1, abs(float(exact)))


def test_euler_transform_log2():
    e = EulerTransform()
    for j in range(60):
        e.add((-1) ** j / (j + 1))
    assert e.Sum == pytest.approx(np.log(2), abs=1e-14)


def test_sum_alternating():
    value, rem, used = sum_alternating(lambda j: (-1) ** j / (j + 1), SeriesAccel(), Native)
    assert value == pytest.approx(np.log(2), abs=1e-13)
    assert rem < 1e-13 and used < 200


def test_sum_alternating_direct_scheme():
    accel = SeriesAccel(scheme='direct', max_terms=1000)
    with pytest.raises(NonConvergence):
        sum_alternating(lambda j: (-1) ** j / (j + 1), accel, Native)
    value, _, _ = sum_alternating(lambda j: (-.5) ** j, accel, Native)
    assert value == pytest.approx(2 / 3, abs=1e-13)


def test_series_accel_validation():
    assert SeriesAccel().scheme == Scheme.Euler
    assert SeriesAccel().for_kernel(Wide).target_tol <= 1e-28
    for kw in [{'max_terms': 0}, {'max_terms': 10 ** 8}, {'target_tol': 0}]:
        with pytest.raises(DomainError):
            SeriesAccel(**kw)


@pytest.mark.parametrize('n, phi', [(10, 0), (12, .1), (7, 2.5), (50, 0)])
def test_cotangent_form(n, phi, mp_sum):
    exact = mp_sum('csc', n, phi)
    assert close(eval_cotangent_form(n, phi).Value, exact, 1e-13)
    res = eval_cotangent_form(n, phi, 'wide')
    assert res.Method == Method.CotangentId
    assert abs(res.Value.to_mpf() - exact) < 1e-25 * max(1, abs(exact))


def test_cotangent_form_wide_at_zero(mp_sum):
    with mpmath.workdps(50):
        assert abs(eval_cotangent_form(10, 0, 'wide').Value.to_mpf() - mp_sum('csc', 10, 0)) < mpmath.mpf(10) ** -28


def test_cotangent_form_domain():
    with pytest.raises(DomainError):
        eval_cotangent_form(5, 4.)


@pytest.mark.parametrize('n, phi', [(10, 0), (12, .1), (30, .05)])
def test_mixed_form(n, phi, mp_sum):
    exact = mp_sum('csc', n, phi)
    assert close(eval_mixed_form(n, phi).Value, exact, 1e-12)
    assert abs(eval_mixed_form(n, phi, 'wide').Value.to_mpf() - exact) < 1e-25 * max(1, abs(exact))


@pytest.mark.parametrize('family, n, phi, a', InStrip)
def test_digamma_finite(family, n, phi, a, mp_sum):
    spec, exact = SumSpec(family, n, phi, a), mp_sum(family, n, phi, a)
    assert close(eval_digamma_finite(spec).Value, exact, 1e-12)
    assert abs(eval_digamma_finite(spec, 'wide').Value.to_mpf() - exact) < 1e-25 * max(1, abs(exact))


def test_digamma_finite_family():
    with pytest.raises(DomainError):
        eval_digamma_finite(SumSpec('tg', 5, .1, .5))


@pytest.mark.parametrize('family, n, phi, a', InStrip)
def test_digamma_infinite(family, n, phi, a, mp_sum):
    spec, exact = SumSpec(family, n, phi, a), mp_sum(family, n, phi, a)
    res = eval_digamma_infinite(spec)
    assert close(res.Value, exact, 1e-10)
    assert abs(float(res.Value) - float(exact)) <= res.Error + 1e-10 * max(1, abs(float(exact)))
    assert any(f.startswith('terms=') for f in res.Flags) and 'outside-strip' not in res.Flags


def test_digamma_infinite_harmonic_branch(mp_sum):
    res = eval_digamma_infinite(SumSpec('csc', 10, 0, 1), precision='wide')
    assert abs(res.Value.to_mpf() - mp_sum('csc', 10, 0)) < 1e-24


def test_digamma_infinite_outside_strip(mp_sum):
    spec = SumSpec('csc', 10, 1., 1)
    assert not in_integral_strip(Family.Csc, 10, 1., 1)
    res = eval_digamma_infinite(spec)
    assert 'outside-strip' in res.Flags


@pytest.mark.parametrize('family, n, phi, a', InStrip)
def test_integral_form(family, n, phi, a, mp_sum):
    spec, exact = SumSpec(family, n, phi, a), mp_sum(family, n, phi, a)
    res = eval_integral_form(spec)
    assert close(res.Value, exact, 1e-11)
    assert res.Method == Method.Integral and res.Flags[0].startswith('panels=')


@pytest.mark.parametrize('family, n, phi, a', [('csc', 10, 0, 1), ('csc', 7, .3, .7)])
def test_integral_form_wide(family, n, phi, a, mp_sum):
    exact = mp_sum(family, n, phi, a)
    assert abs(eval_integral_form(SumSpec(family, n, phi, a), precision='wide').Value.to_mpf() - exact) < 1e-20 * max(1, abs(exact))


def test_integral_strip():
    kappa, c, _ = integral_strip(Family.Csc, 10, 0, 1)
    assert kappa == 2 and c == 0
    with pytest.raises(DomainError) as err:
        eval_integral_form(SumSpec('csc', 10, 1., 1))
    assert 'phi' in err.value.Condition


def test_representations_agree(rng, mp_sum):
    """ all representations of S_n(phi, 1) against each other inside the integral strip """
    for _ in range(10):
        n = int(rng.integers(2, 65))
        phi = float(rng.uniform(0, np.pi / n * .9))
        spec = SumSpec('csc', n, phi, 1)
        results = [eval_cotangent_form(n, phi), eval_mixed_form(n, phi), eval_digamma_finite(spec), eval_digamma_infinite(spec), eval_integral_form(spec)]
        exact = float(mp_sum('csc', n, phi))
        for r in results:
            assert abs(float(r.Value) - exact) <= r.Error + 1e-9 * abs(exact), r.Method


def strip_draw(rng, family, n, a):
    """ phi in the middle half of the convergence strip of S_n(., a) or C_n(., a) """
    lo = -a * np.pi / n if family == 'csc' else -a * np.pi / n - np.pi / 2
    hi = a * np.pi / n + np.pi * (1 - a) if family == 'csc' else np.pi / 2 + a * np.pi / n - np.pi * a
    return lo + (hi - lo) * float(rng.uniform(.25, .75))


def test_representations_agree_across_regimes(rng, mp_sum):
    """ direct, finite digamma, infinite digamma and integral forms of S_n and C_n for random n, phi and a inside the strip """
    for i in range(24):
        family = ['csc', 'sec'][i % 2]
        n = int(rng.integers(3, 41))
        a = 1. if i % 3 == 0 else float(rng.uniform(.5, 1))
        phi = strip_draw(rng, family, n, a)
        spec = SumSpec(family, n, phi, a)
        assert in_integral_strip(spec.family, n, phi, a)
        exact = float(mp_sum(family, n, phi, a))
        for r in [eval_direct(spec), eval_digamma_finite(spec), eval_digamma_infinite(spec), eval_integral_form(spec)]:
            assert abs(float(r.Value) - exact) <= r.Error + 1e-9 * max(1, abs(exact)), (r.Method, family, n, phi, a)


@pytest.mark.parametrize('ident', list(DigammaSum))
@pytest.mark.parametrize('n', [2, 5, 17])
def test_digamma_summation(ident, n):
    assert digamma_summation_check(ident, n, .2137 if ident.NeedsZ else None) < 1e-20 * n


def test_digamma_summation_domain():
    with pytest.raises(DomainError):
        digamma_summation_check(DigammaSum.PsiHalfGrid, 1)
    with pytest.raises(DomainError):
        digamma_summation_check(DigammaSum.PsiPairTangent, 4)


def test_wide_pi_in_strip():
    with mpmath.workprec(128):
        assert integral_strip(Family.Csc, 5, mpmath.pi / 4, 1, mpmath.pi)[1] == mpmath.mpf(.5)
