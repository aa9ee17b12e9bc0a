import numpy as np
import pytest

from src.errors import DomainError
from src.identities import (IdentityCase, IdentityId, WideTol, cas_turns, dht, half_grid_table_residual, identity_residuals, idht, log_derivative_spotcheck,
                            run_digamma_hartley, run_dht_roundtrip, run_identity, sides)
from src.numerics import Native

OddOnly = (IdentityId.TgSquareOdd, IdentityId.AlternatingCsc, IdentityId.AlternatingSec)


def params(ident, n, phi=.9, x=2.5, j=2):
    """ the keyword arguments an identity takes """
    p = {'n': n}
    if ident.UsesPhi:
        p['phi'] = phi
    if ident.UsesX:
        p['x'] = x
    if ident in (IdentityId.Eisenstein, IdentityId.SecCos):
        p['j'] = j
    return p


@pytest.mark.parametrize('ident', list(IdentityId))
def test_identity_defaults(ident):
    assert run_identity(IdentityCase(ident)) < WideTol
    assert run_identity(IdentityCase(ident), 'native') < 1e-11


@pytest.mark.parametrize('ident', list(IdentityId))
@pytest.mark.parametrize('n', [3, 6, 7, 12])
def test_identity_grid(ident, n):
    if ident in OddOnly and n % 2 == 0:
        pytest.skip('odd n only')
    assert run_identity(IdentityCase(ident, params(ident, n))) < WideTol


@pytest.mark.parametrize('ident', [i for i in IdentityId if i.UsesX and i != IdentityId.LogDerivative])
@pytest.mark.parametrize('x', [-.6, .95, -3.])
def test_rational_identities_in_x(ident, x):
    assert run_identity(IdentityCase(ident, params(ident, 5, phi=.3, x=x))) < WideTol


@pytest.mark.parametrize('n', [3, 5, 7, 11])
def test_secant_sign_for_odd_n(n):
    """ the secant sums pick up (-1)^((n-1)/2) against the cosecant ones """
    with Native.context():
        lhs, rhs = sides(IdentityId.SecDoubleStep, Native, n=n, phi=0.)
        assert rhs == pytest.approx((-1) ** (n // 2) * n) and lhs == pytest.approx(rhs)
        lhs, rhs = sides(IdentityId.AlternatingSec, Native, n=n, phi=0.)
        assert lhs == pytest.approx(rhs)


def test_even_double_step_vanishes():
    with Native.context():
        for ident in (IdentityId.CscDoubleStep, IdentityId.SecDoubleStep):
            lhs, rhs = sides(ident, Native, n=6, phi=.4)
            assert rhs == 0 and lhs == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize('ident', OddOnly)
def test_parity_gates(ident):
    with pytest.raises(DomainError):
        run_identity(IdentityCase(ident, params(ident, 4)))


@pytest.mark.parametrize('ident, p', [(IdentityId.CtgSum, {'phi': 0.}), (IdentityId.TgSum, {'phi': np.pi / 2}), (IdentityId.AlternatingSec, {'phi': np.pi / 2}),
                                      (IdentityId.Eisenstein, {'j': 0}), (IdentityId.Eisenstein, {'j': 5}), (IdentityId.SecCos, {'j': 10}),
                                      (IdentityId.RationalFullGrid, {'x': 1.}), (IdentityId.LogDerivative, {'x': -.5}), (IdentityId.CscSquareRational, {'x': 0.}),
                                      (IdentityId.CtgSum, {'n': 0})])
def test_identity_domain(ident, p):
    with pytest.raises(DomainError):
        run_identity(IdentityCase(ident, p))


@pytest.mark.parametrize('precision, tol', [('wide', WideTol), ('native', 1e-11)])
def test_identity_residuals(precision, tol):
    """ sum tg^2(pi l/21) = 420: the absolute residual is the relative one scaled by the right-hand side """
    case = IdentityCase(IdentityId.TgSquareOdd, {'n': 21})
    absolute, relative = identity_residuals(case, precision)
    assert relative == run_identity(case, precision) and relative < tol
    assert absolute == pytest.approx(420 * relative, rel=1e-12, abs=1e-300) and absolute < 420 * tol


def test_identity_case():
    case = IdentityCase('ctg-sum', {'n': 5, 'phi': .37})
    assert case.id == IdentityId.CtgSum and str(case) == 'ctg-sum(n=5, phi=0.37)'
    with pytest.raises(DomainError):
        IdentityCase(IdentityId.CtgSum, residual_tol=0)
    with pytest.raises(ValueError):
        IdentityCase('cot-sum')


@pytest.mark.parametrize('n, x', [(5, .3), (8, 2.), (3, -.7)])
def test_half_grid_table_correction(n, x):
    assert half_grid_table_residual(n, x) < WideTol
    assert half_grid_table_residual(n, x, corrected=False) > 1e-6


@pytest.mark.parametrize('n', [2, 5, 8])
def test_digamma_hartley(n):
    for nu in range(1, n + 1):
        assert run_digamma_hartley(n, nu) < WideTol
    assert run_digamma_hartley(n, 1, 'native') < 1e-12


def test_digamma_hartley_domain():
    for nu in [0, 6, 1.5]:
        with pytest.raises(DomainError):
            run_digamma_hartley(5, nu)


def test_cas_turns():
    with Native.context():
        assert cas_turns(Native, 1, 1, 4) == pytest.approx(1)
        assert cas_turns(Native, 3, 1, 4) == pytest.approx(-1)


def test_dht_of_delta():
    n = 8
    h = np.zeros(n)
    h[0] = 1
    nu = np.arange(1, n + 1)
    assert dht(h) == pytest.approx((np.sin(2 * np.pi * nu / n) + np.cos(2 * np.pi * nu / n)) / np.sqrt(n), abs=1e-15)


def test_dht_roundtrip(rng):
    signal = rng.normal(size=16)
    assert run_dht_roundtrip(16, signal) < 1e-12
    assert idht(dht(signal)) == pytest.approx(signal, abs=1e-12)
    with pytest.raises(DomainError):
        run_dht_roundtrip(15, signal)


def test_log_derivative_spotcheck():
    assert log_derivative_spotcheck(5, 2.) < WideTol
    assert log_derivative_spotcheck(12, .4, 'native') < 1e-12
