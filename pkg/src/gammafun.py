#!/usr/bin/env python
# --------------------------------------------------------
#       digamma, polygamma and log-gamma on the real axis
# created on October 18th 2026
# --------------------------------------------------------
from dataclasses import dataclass
from math import factorial

from src.analysis import Analysis
from src.errors import DomainError, PoleError
from src.numerics import bernoulli_table, get_kernel

NativeShift = Analysis.get_config('gammafun', 'native shift', float, 12.)
WideShift = Analysis.get_config('gammafun', 'wide shift', float, 30.)
MaxTerms = Analysis.get_config('gammafun', 'max terms', int, 30)
MaxOrder = 2 * 60 - 1


def shift_threshold(k, order=0):
    return (WideShift if k.IsWide else NativeShift) + 2 * order


def bernoulli(k, r):
    """ B_2r as a kernel number """
    t = bernoulli_table()
    return k.num(t.even(r)) if k.IsWide else t.Floats[2 * r]


def check_pole(x, what='digamma argument'):
    if x <= 0 and x == int(x):
        raise PoleError(int(x), x, what)


# ----------------------------------------
# region KERNEL LEVEL
def psi(k, x):
    """ digamma of the kernel number x; must be called inside the kernel context """
    check_pole(x)
    if x < 0:
        return psi(k, 1 - x) - k.pi * k.cospi(x) / k.sinpi(x)
    parts, thr = [], shift_threshold(k)
    while x < thr:
        parts.append(-1 / x)
        x += 1
    parts += [k.log(x), -1 / (2 * x)]
    x2, xp = x * x, x * x
    for r in range(1, MaxTerms + 1):
        t = bernoulli(k, r) / (2 * r * xp)
        parts.append(-t)
        if abs(t) < k.Eps * 1e-3:
            break
        xp *= x2
    return k.fsum(parts)


def psi_m(k, m, x):
    """ polygamma of order m >= 1: upward recurrence to the asymptotic region, valid for any non-integer x """
    check_pole(x, 'polygamma argument')
    sign, fm = (-1) ** (m + 1), factorial(m)
    parts, thr = [], shift_threshold(k, m)
    while x < thr:
        parts.append(sign * fm / x ** (m + 1))
        x += 1
    xm = x ** m
    parts += [sign * factorial(m - 1) / xm, sign * fm / (2 * xm * x)]
    x2, xp, lead = x * x, xm * x * x, abs(parts[-2])
    for r in range(1, MaxTerms + 1):
        # (2r+m-1)! / (2r)!
        t = sign * bernoulli(k, r) * (factorial(2 * r + m - 1) // factorial(2 * r)) / xp
        parts.append(t)
        if abs(t) < k.Eps * 1e-3 * lead:
            break
        xp *= x2
    return k.fsum(parts)


def lngamma(k, x):
    if x <= 0:
        raise DomainError('log_gamma requires x > 0', x)
    shift, thr = [], shift_threshold(k)
    while x < thr:
        shift.append(-k.log(x))
        x += 1
    parts = shift + [(x - .5) * k.log(x), -x, k.log(2 * k.pi) / 2]
    x2, xp = x * x, x
    for r in range(1, MaxTerms + 1):
        t = bernoulli(k, r) / (2 * r * (2 * r - 1) * xp)
        parts.append(t)
        if abs(t) < k.Eps * 1e-3:
            break
        xp *= x2
    return k.fsum(parts)
# endregion KERNEL LEVEL
# ----------------------------------------


def digamma(x, precision='native'):
    """ Psi(x) for real x off the non-positive integers (native float or DoubleWide). """
    k = get_kernel(precision)
    with k.context():
        return k.out(psi(k, k.num(x)))


@dataclass(frozen=True)
class PolygammaRequest:
    order: int
    argument: float

    def __post_init__(self):
        if int(self.order) != self.order or not 0 <= self.order <= MaxOrder:
            raise DomainError(f'polygamma order must be an integer in 0..{MaxOrder}', self.order)
        if self.argument != self.argument or abs(float(self.argument)) == float('inf'):
            raise DomainError('polygamma argument must be finite', self.argument)

    def __call__(self, precision='native'):
        k = get_kernel(precision)
        with k.context():
            x = k.num(self.argument)
            return k.out(psi(k, x) if self.order == 0 else psi_m(k, int(self.order), x))


def polygamma(m, x, precision='native'):
    return PolygammaRequest(m, x)(precision)


def log_gamma(x, precision='native'):
    k = get_kernel(precision)
    with k.context():
        return k.out(lngamma(k, k.num(x)))


def alternating_digamma_sum(b, precision='native'):
    """ sum_{k>=0} (-1)^k / (k + b) = (Psi(1/2 + b/2) - Psi(b/2)) / 2 """
    if not b > 0:
        raise DomainError('b must be positive', b)
    k = get_kernel(precision)
    with k.context():
        b = k.num(b)
        return k.out((psi(k, (b + 1) / 2) - psi(k, b / 2)) / 2)


def gauss_digamma(r: int, m: int, precision='native'):
    """ Psi(r/m) for integers 0 < r <= m from the Gauss digamma theorem """
    if not 0 < r <= m:
        raise DomainError('Gauss digamma theorem requires 0 < r <= m', (r, m))
    k = get_kernel(precision)
    with k.context():
        if r == m:
            return k.out(-k.euler)
        parts = [-k.euler, -k.log(2 * k.num(m)), -k.pi / 2 * k.cospi(k.num(r) / m) / k.sinpi(k.num(r) / m)]
        parts += [k.cospi(k.num(2 * r * j % (2 * m)) / m) * k.log(k.sinpi(k.num(j) / m)) for j in range(1, m)]
        return k.out(k.fsum(parts))


if __name__ == '__main__':
    print(digamma(1), digamma(.5, 'wide'), polygamma(1, .5), log_gamma(.5))
