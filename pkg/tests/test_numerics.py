from fractions import Fraction

import mpmath
import numpy as np
import pytest

from src.errors import DomainError
from src.numerics import (Accumulator, DoubleWide, EULER, bernoulli_even, bernoulli_table, check_positive_int, compensated_sum, cospi, get_kernel, harmonic,
                          reduce_turns, sinpi, turn_distance, two_prod, two_sum, zeta_even)


def test_two_sum_is_exact():
    s, e = two_sum(1., 1e-20)
    assert s == 1. and e == 1e-20
    s, e = two_sum(.1, .2)
    assert Fraction(s) + Fraction(e) == Fraction(.1) + Fraction(.2)


def test_two_prod_is_exact():
    p, e = two_prod(.1, 3.)
    assert Fraction(p) + Fraction(e) == Fraction(.1) * 3


def test_double_wide_arithmetic():
    x = DoubleWide(1.) + 1e-20
    assert x.hi == 1. and x.lo == 1e-20
    assert float(x - 1.) == pytest.approx(1e-20)
    y = DoubleWide.from_fraction(Fraction(1, 3))
    assert abs((y * 3).to_fraction() - 1) < Fraction(1, 10 ** 30)
    assert abs((DoubleWide(1.) / 3).to_fraction() - Fraction(1, 3)) < Fraction(1, 10 ** 30)
    assert -y < 0 < y
    assert abs(-y) == y


def test_double_wide_from_mpf():
    with mpmath.workprec(200):
        x = DoubleWide.from_mpf(mpmath.pi)
        assert abs(x.to_mpf() - mpmath.pi) < mpmath.mpf(10) ** -31


def test_compensated_sum_cancellation():
    terms = [1e16, 1., -1e16, 1e-10]
    assert float(compensated_sum(terms)) == 1. + 1e-10
    assert float(compensated_sum(reversed(terms))) == float(compensated_sum(terms))


def test_compensated_sum_rejects_non_finite():
    with pytest.raises(DomainError):
        compensated_sum([1., np.inf])
    with pytest.raises(DomainError):
        Accumulator([np.nan])


def test_accumulator_merge_is_order_independent(rng):
    x = rng.normal(size=1000) * 10. ** rng.integers(-8, 8, size=1000)
    a, b = Accumulator(x[:300]), Accumulator(x[300:])
    assert a.merge(b).value() == compensated_sum(x)
    assert Accumulator(x[::-1]).value() == compensated_sum(x)


def test_turns():
    assert reduce_turns(2.5) == pytest.approx(.5)
    assert reduce_turns(-1.5) == pytest.approx(.5)
    assert sinpi(1.) == 0. and sinpi(2.) == 0.
    assert sinpi(.5) == 1. and cospi(1.) == -1.
    assert cospi(.5) == pytest.approx(0, abs=1e-17)
    assert turn_distance(1.9999) == pytest.approx(1e-4)
    assert turn_distance(.5, .5) == 0


@pytest.mark.parametrize('precision', ['native', 'wide'])
def test_kernel_constants(precision):
    k = get_kernel(precision)
    with k.context():
        assert float(k.pi) == pytest.approx(np.pi, rel=1e-16)
        assert float(k.euler) == pytest.approx(EULER, rel=1e-16)
        assert float(k.ln2) == pytest.approx(np.log(2), rel=1e-16)
        assert float(k.out(k.fsum([k.num(1), k.num(2)]))) == 3.


def test_get_kernel_rejects_unknown():
    with pytest.raises(DomainError):
        get_kernel('quad')


def test_bernoulli_numbers():
    t = bernoulli_table(20)
    assert t[0] == 1 and t[1] == Fraction(-1, 2)
    assert t.even(1) == Fraction(1, 6)
    assert t.even(2) == Fraction(-1, 30)
    assert t.even(6) == Fraction(691, -2730)
    assert all(t[i] == 0 for i in range(3, 21, 2))
    assert bernoulli_even(30) == Fraction(*map(int, mpmath.bernfrac(60)))


def test_bernoulli_table_limits():
    with pytest.raises(DomainError):
        bernoulli_table(121)
    with pytest.raises(DomainError):
        bernoulli_table(20).even(11)


@pytest.mark.parametrize('r', [1, 2, 5, 20])
def test_zeta_even(r):
    with mpmath.workprec(200):
        assert abs(zeta_even(r).to_mpf() - mpmath.zeta(2 * r)) < mpmath.mpf(10) ** -28


@pytest.mark.parametrize('n', [1, 2, 10, 1000, 10000, 10001, 10 ** 6])
def test_harmonic(n):
    with mpmath.workprec(200):
        exact = mpmath.harmonic(n)
        assert abs(harmonic(n).to_mpf() - exact) < mpmath.mpf(10) ** -28 * exact


def test_check_positive_int():
    assert check_positive_int(3.) == 3
    for bad in [0, 2.5, True]:
        with pytest.raises(DomainError):
            check_positive_int(bad)
