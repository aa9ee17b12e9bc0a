#!/usr/bin/env python
# --------------------------------------------------------
#       classical finite trigonometric sums and products checked numerically
# created on October 18th 2026
# --------------------------------------------------------
from dataclasses import dataclass, field
from enum import Enum

import mpmath
import numpy as np

from src.errors import DomainError
from src.gammafun import psi
from src.numerics import get_kernel
from src.sums import require

WideTol = 1e-20
NearOneTol = 1e-14
LatticeDistance = 1e-9


class IdentityId(str, Enum):
    EulerProduct = 'euler-product'
    CtgSum = 'ctg-sum'
    CtgSquareSum = 'ctg2-sum'
    TgSquareOdd = 'tg2-odd'
    Eisenstein = 'ctg-sin'
    SecCos = 'sec-cos'
    AlternatingCsc = 'alternating-csc'
    AlternatingSec = 'alternating-sec'
    TgSum = 'tg-sum'
    CscDoubleStep = 'csc-2pi-step'
    SecDoubleStep = 'sec-2pi-step'
    CscSquareSum = 'csc2-sum'
    SecSquareSum = 'sec2-sum'
    TgSquareSum = 'tg2-sum'
    LogDerivative = 'log-derivative'
    RationalFullGrid = 'rational-full-grid'
    RationalHalfGridPlus = 'rational-half-grid+'
    RationalHalfGridMinus = 'rational-half-grid-'
    RationalShiftedGrid = 'rational-shifted-grid'
    RationalOddGridPlus = 'rational-odd-grid+'
    RationalOddGridMinus = 'rational-odd-grid-'
    CtgRational = 'ctg-rational'
    CscSquareRational = 'csc2-rational'

    @property
    def UsesX(self):
        return self.value.startswith('rational') or self in (IdentityId.EulerProduct, IdentityId.LogDerivative, IdentityId.CtgRational, IdentityId.CscSquareRational)

    @property
    def UsesPhi(self):
        return self in (IdentityId.EulerProduct, IdentityId.CtgSum, IdentityId.CtgSquareSum, IdentityId.AlternatingCsc, IdentityId.AlternatingSec, IdentityId.TgSum,
                        IdentityId.CscDoubleStep, IdentityId.SecDoubleStep, IdentityId.CscSquareSum, IdentityId.SecSquareSum, IdentityId.TgSquareSum,
                        IdentityId.CtgRational, IdentityId.CscSquareRational)


@dataclass(frozen=True)
class IdentityCase:
    id: IdentityId
    params: dict = field(default_factory=dict)
    residual_tol: float = WideTol

    def __post_init__(self):
        object.__setattr__(self, 'id', IdentityId(self.id))
        if not self.residual_tol > 0:
            raise DomainError('residual_tol > 0', self.residual_tol)

    def __str__(self):
        return f'{self.id.value}({", ".join(f"{key}={value:.6g}" if isinstance(value, float) else f"{key}={value}" for key, value in self.params.items())})'


# ----------------------------------------
# region DOMAIN
def check_n(n, odd=False, minimum=1):
    require(not isinstance(n, bool) and int(n) == n and n >= minimum, f'n must be an integer >= {minimum}', n)
    if odd:
        require(n % 2 == 1, 'n must be odd (n = 1, 3, 5, ...)', n)
    return int(n)


def check_lattice(args, shift, clause):
    """ no argument (in radians) may sit on the pole lattice pi (j + shift) """
    t = np.asarray([float(x) for x in args]) / np.pi - shift
    require(np.min(np.abs(t - np.round(t))) > LatticeDistance, clause)


def check_x(x, positive=False):
    require(abs(float(x)) != 1, '|x| != 1', x)
    if positive:
        require(float(x) > 0, 'x > 0', x)
# endregion DOMAIN
# ----------------------------------------


# ----------------------------------------
# region SIDES
def grid(k, phi, n, step=1, lower=0, upper=None):
    """ phi + step pi l / n for l = lower..upper """
    upper = n - 1 if upper is None else upper
    return [phi + step * k.pi * l / n for l in range(lower, upper + 1)]


def euler_product(k, n, phi, x, a=1):
    a, x = k.num(a), k.num(x)
    lhs = mpmath.fprod if k.IsWide else np.prod
    return lhs([a * a - 2 * a * x * k.cos((phi + 2 * k.pi * l) / n) + x * x for l in range(n)]), a ** (2 * n) - 2 * a ** n * x ** n * k.cos(phi) + x ** (2 * n)


def trig_sums(k, ident, n, phi):
    """ the Euler-type sums over phi + pi l / n (or the 2 pi / n step) """
    sin, cos, fsum = k.sin, k.cos, k.fsum
    odd = n % 2 == 1
    ctg = lambda y: cos(y) / sin(y)  # noqa
    if ident == IdentityId.CtgSum:
        check_lattice(grid(k, phi, n) + [n * phi], 0, 'phi must avoid pi (j - l/n)')
        return fsum(ctg(y) for y in grid(k, phi, n)), n * ctg(n * phi)
    if ident == IdentityId.CtgSquareSum:
        check_lattice(grid(k, phi, n) + [n * phi], 0, 'phi must avoid pi (j - l/n)')
        return fsum(ctg(y) ** 2 for y in grid(k, phi, n)), n * n / sin(n * phi) ** 2 - n
    if ident == IdentityId.CscSquareSum:
        check_lattice(grid(k, phi, n) + [n * phi], 0, 'phi must avoid pi (j - l/n)')
        return fsum(1 / sin(y) ** 2 for y in grid(k, phi, n)), n * n / sin(n * phi) ** 2
    if ident in (IdentityId.AlternatingCsc, IdentityId.AlternatingSec):
        check_n(n, odd=True)
        f, shift = (sin, 0) if ident == IdentityId.AlternatingCsc else (cos, .5)
        check_lattice(grid(k, phi, n) + [n * phi], shift, 'phi must avoid the poles of the terms')
        sign = 1 if ident == IdentityId.AlternatingCsc else (-1) ** (n // 2)
        return fsum((-1) ** l / f(y) for l, y in enumerate(grid(k, phi, n))), sign * n / f(n * phi)
    if ident == IdentityId.TgSum:
        check_lattice(grid(k, phi, n), .5, 'phi must avoid pi (j + 1/2 - l/n)')
        check_lattice([n * phi], .5 if odd else 0, 'n phi must avoid the poles of the closed form')
        return fsum(k.tan(y) for y in grid(k, phi, n)), n * k.tan(n * phi) if odd else -n * ctg(n * phi)
    if ident in (IdentityId.CscDoubleStep, IdentityId.SecDoubleStep):
        f, shift = (sin, 0) if ident == IdentityId.CscDoubleStep else (cos, .5)
        ys = grid(k, phi, n, step=2)
        check_lattice(ys + ([n * phi] if odd else []), shift, 'phi must avoid the poles of the terms')
        sign = 1 if ident == IdentityId.CscDoubleStep else (-1) ** (n // 2)
        return fsum(1 / f(y) for y in ys), sign * n / f(n * phi) if odd else k.num(0)
    if ident in (IdentityId.SecSquareSum, IdentityId.TgSquareSum):
        check_lattice(grid(k, phi, n), .5, 'phi must avoid pi (j + 1/2 - l/n)')
        check_lattice([n * phi], .5 if odd else 0, 'n phi must avoid the poles of the closed form')
        terms = [1 / cos(y) ** 2 if ident == IdentityId.SecSquareSum else k.tan(y) ** 2 for y in grid(k, phi, n)]
        rhs = n * n / (cos(n * phi) if odd else sin(n * phi)) ** 2
        return fsum(terms), rhs - (n if ident == IdentityId.TgSquareSum else 0)
    raise DomainError('not an Euler-type sum', ident.value)


def integer_sums(k, ident, n, j=None):
    """ sums over rational multiples of pi without free angle """
    if ident == IdentityId.TgSquareOdd:
        check_n(n, odd=True, minimum=3)
        return k.fsum(k.tan(k.pi * l / n) ** 2 for l in range(1, n)), k.num(n * (n - 1))
    if ident == IdentityId.Eisenstein:
        require(j is not None and 1 <= j <= n - 1, 'k = 1, 2, ..., n-1', j)
        return k.fsum(k.cospi(k.num(l) / n) / k.sinpi(k.num(l) / n) * k.sinpi(k.num(2 * l * j % (2 * n)) / n) for l in range(1, n)), k.num(n - 2 * j)
    if ident == IdentityId.SecCos:
        require(j is not None and 0 <= j <= 2 * n - 1, 'k = 0, 1, ..., 2n-1', j)
        lhs = k.fsum(k.cospi(k.num((2 * j + 1) * l % (4 * n)) / (2 * n)) / k.cospi(k.num(l) / (2 * n)) for l in range(n))
        return lhs, k.num((-1) ** j * (n - 2 * ((j + 1) // 2)))
    raise DomainError('not an integer sum', ident.value)


def rational_sums(k, ident, n, x):
    """ sums of 1 / (1 +- 2x cos + x^2) over the various grids """
    check_x(x)
    x, cos, fsum = k.num(x), k.cos, k.fsum
    q = x * x - 1
    if ident == IdentityId.LogDerivative:
        check_x(x, positive=True)
        return fsum((x - 1 / x) / (1 - 2 * x * cos(2 * k.pi * l / n) + x * x) for l in range(n)), n * (x ** n + 1) / (x * (x ** n - 1))
    if ident == IdentityId.RationalFullGrid:
        rhs = n * (x ** n - 1) / (q * (x ** n + 1)) if n % 2 else n * (x ** n + 1) / (q * (x ** n - 1))
        return fsum(1 / (1 + 2 * x * cos(2 * k.pi * l / n) + x * x) for l in range(n)), rhs
    if ident in (IdentityId.RationalHalfGridPlus, IdentityId.RationalHalfGridMinus):
        s = 1 if ident == IdentityId.RationalHalfGridPlus else -1
        lhs = fsum(1 / (1 + s * 2 * x * k.cospi(k.num(l) / n) + x * x) for l in range(1, n))
        return lhs, n * (x ** (2 * n) + 1) / (q * (x ** (2 * n) - 1)) - (x * x + 1) / q ** 2
    if ident == IdentityId.RationalShiftedGrid:
        lhs = fsum(1 / (1 - 2 * x * k.cospi((l + k.num(.5)) / n) + x * x) for l in range(n))
        return lhs, n * (x ** (2 * n) - 1) / (q * (x ** (2 * n) + 1))
    if ident in (IdentityId.RationalOddGridPlus, IdentityId.RationalOddGridMinus):
        s, m = (1 if ident == IdentityId.RationalOddGridPlus else -1), 2 * n + 1
        lhs = fsum(1 / (1 + s * 2 * x * k.cospi(k.num(2 * l) / m) + x * x) for l in range(1, n + 1))
        return lhs, (n * (x ** m - s) + x ** m) / (q * (x ** m + s)) - x / (q * (x + s))
    raise DomainError('not a rational sum', ident.value)


def ctg_rational(k, n, phi, x):
    """ sum_l 1 / (x + ctg(phi + pi l/n)) against the complex closed form """
    check_lattice(grid(k, phi, n) + [n * phi], 0, 'phi must avoid pi (j - l/n)')
    x, ctg = k.num(x), lambda y: k.cos(y) / k.sin(y)  # noqa
    lhs = k.fsum(1 / (x + ctg(y)) for y in grid(k, phi, n))
    i, c = (mpmath.mpc(0, 1) if k.IsWide else 1j), ctg(n * phi)
    rhs = n * ((i - c) * (i * x + 1) ** (n - 1) + (i + c) * (i * x - 1) ** (n - 1)) / ((1 + i * c) * (i * x + 1) ** n + (1 - i * c) * (i * x - 1) ** n)
    return lhs, rhs.real


def csc_square_rational(k, n, phi, x):
    """ sum_l 1 / (x^2 - 1 + csc^2(phi + pi l/n)); the second odd power in the numerator is (x - 1)^(2n-1) """
    check_lattice(grid(k, phi, n), 0, 'phi must avoid pi (j - l/n)')
    require(float(x) != 0, 'x != 0', x)
    x = k.num(x)
    lhs = k.fsum(1 / (x * x - 1 + 1 / k.sin(y) ** 2) for y in grid(k, phi, n))
    s2, p = k.sin(n * phi) ** 2, (x * x - 1) ** (n - 1)
    num = (x + 1) ** (2 * n - 1) - 2 * x * p + (x - 1) ** (2 * n - 1) + 4 * x * p * s2
    den = x * ((x + 1) ** n - (x - 1) ** n) ** 2 + 4 * x * (x * x - 1) ** n * s2
    return lhs, n * num / den


def sides(ident: IdentityId, k, n=5, phi=.37, x=.3, j=1):
    """ both sides of a corpus identity as kernel numbers; call inside the kernel context """
    ident = IdentityId(ident)
    n = check_n(n)
    phi = k.num(phi)
    if ident == IdentityId.EulerProduct:
        return euler_product(k, n, phi, x)
    if ident in (IdentityId.TgSquareOdd, IdentityId.Eisenstein, IdentityId.SecCos):
        return integer_sums(k, ident, n, j)
    if ident == IdentityId.LogDerivative or ident.value.startswith('rational'):
        return rational_sums(k, ident, n, x)
    if ident == IdentityId.CtgRational:
        return ctg_rational(k, n, phi, x)
    if ident == IdentityId.CscSquareRational:
        return csc_square_rational(k, n, phi, x)
    return trig_sums(k, ident, n, phi)
# endregion SIDES
# ----------------------------------------


def relative_residual(lhs, rhs):
    return float(abs(lhs - rhs) / max(1, abs(rhs)))


def identity_residuals(case: IdentityCase, precision='wide'):
    """ (|LHS - RHS|, |LHS - RHS| / max(1, |RHS|)) """
    k = get_kernel(precision)
    with k.context():
        lhs, rhs = sides(case.id, k, **case.params)
        return float(abs(lhs - rhs)), relative_residual(lhs, rhs)


def run_identity(case: IdentityCase, precision='wide') -> float:
    """ relative residual, the value compared against the corpus tolerances """
    return identity_residuals(case, precision)[1]


def half_grid_table_residual(n, x, corrected=True, precision='wide') -> float:
    """ residual of the sum over 1 / (1 + 2x cos(pi l/n) + x^2) against the table entry with the numerator x^2n + 1 (corrected) or x^2n - 1 """
    k = get_kernel(precision)
    with k.context():
        lhs, rhs = rational_sums(k, IdentityId.RationalHalfGridPlus, check_n(n), x)
        if not corrected:
            x = k.num(x)
            rhs -= 2 * n / ((x * x - 1) * (x ** (2 * n) - 1))
        return relative_residual(lhs, rhs)


# ----------------------------------------
# region HARTLEY
def cas_turns(k, l, nu, n):
    """ cas(2 pi l nu / n) with the argument reduced exactly """
    t = k.num(2 * l * nu % (2 * n)) / n
    return k.sinpi(t) + k.cospi(t)


def digamma_hartley_sides(k, n, nu):
    lhs = k.fsum(psi(k, k.num(l) / n) * cas_turns(k, l, nu, n) for l in range(1, n + 1))
    if nu == n:
        return lhs, -n * k.log(k.num(n)) - n * k.euler
    return lhs, n * (k.ln2 - k.pi / 2) + n * k.log(k.sinpi(k.num(nu) / n)) + k.pi * nu


def run_digamma_hartley(n, nu, precision='wide') -> float:
    n = check_n(n)
    require(int(nu) == nu and 1 <= nu <= n, '1 <= nu <= n', nu)
    k = get_kernel(precision)
    with k.context():
        return relative_residual(*digamma_hartley_sides(k, n, int(nu)))


def dht(h) -> np.ndarray:
    """ H(nu) = n^(-1/2) sum_{l=1}^n h(l) cas(2 pi l nu / n) for nu = 1..n """
    h = np.asarray(h, dtype='d')
    f = np.fft.fft(np.roll(h, 1))
    return np.roll((f.real - f.imag) / np.sqrt(h.size), -1)


idht = dht


def run_dht_roundtrip(n, signal) -> float:
    signal = np.asarray(signal, dtype='d')
    check_n(n)
    if signal.size != n:
        raise DomainError('signal length must equal n', signal.size)
    return float(np.max(np.abs(idht(dht(signal)) - signal)))
# endregion HARTLEY
# ----------------------------------------


def log_derivative_spotcheck(n, x, precision='wide') -> float:
    """ partial logarithmic derivative of the Euler product at phi = 0, a = 1 """
    return run_identity(IdentityCase(IdentityId.LogDerivative, {'n': n, 'x': x}), precision)


if __name__ == '__main__':
    print(run_identity(IdentityCase(IdentityId.CtgSum, {'n': 5, 'phi': .37})), run_digamma_hartley(8, 3), run_dht_roundtrip(4, [1, 2, 3, 4]))
