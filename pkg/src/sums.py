#!/usr/bin/env python
# --------------------------------------------------------
#       direct evaluation of the finite csc/sec/tg/ctg sums and their functional identities
# created on October 18th 2026
# --------------------------------------------------------
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import mpmath
import numpy as np
from mpmath import mpf
from uncertainties import ufloat

from src.analysis import Analysis
from src.errors import DomainError, PoleError
from src.numerics import Accumulator, DoubleWide, Wide, compensated_sum, get_kernel, two_prod, reduce_turns, sinpi, cospi, turn_distance

PoleDistance = Analysis.get_config('sums', 'pole distance', float, 1e-12)
PVDistance = Analysis.get_config('sums', 'pv distance', float, 1e-10)
PVMagnitude = Analysis.get_config('sums', 'pv magnitude', float, 1e14)


class Family(str, Enum):
    """ the four sum families; each one is csc or ctg of the argument shifted by `Shift` turns (units of pi) """
    Csc = 'csc'
    Sec = 'sec'
    Tg = 'tg'
    Ctg = 'ctg'

    @property
    def Shift(self):
        return .5 if self in (Family.Sec, Family.Tg) else 0.

    @property
    def Sign(self):
        return -1 if self == Family.Tg else 1

    @property
    def IsCsc(self):
        return self in (Family.Csc, Family.Sec)

    def f(self, k, x):
        """ the family's function at the kernel number x (radians) """
        if self == Family.Csc:
            return 1 / k.sin(x)
        if self == Family.Sec:
            return 1 / k.cos(x)
        return k.tan(x) if self == Family.Tg else 1 / k.tan(x)


class Method(str, Enum):
    Direct = 'direct'
    CotangentId = 'cotangent'
    DigammaFinite = 'digamma-finite'
    DigammaInfinite = 'digamma-infinite'
    Integral = 'integral'
    Mixed = 'mixed'
    Asymptotic = 'asympt'


@dataclass(frozen=True)
class SumSpec:
    family: Family
    n: int
    phi: float
    a: float = 1.
    principal_value: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 2:
            raise DomainError('n must be an integer >= 2', self.n)
        object.__setattr__(self, 'n', int(self.n))
        if not np.isfinite(float(self.phi)):
            raise DomainError('phi must be finite', self.phi)
        if not float(self.a) > 0:
            raise DomainError('a must be positive', self.a)

    def __str__(self):
        return f'{self.family.value}_{self.n}({float(self.phi):.6g}, {float(self.a):.6g}){" p.v." if self.principal_value else ""}'


class EvalResult:
    """ value of a sum with the method used and an a priori error estimate """

    def __init__(self, value, method: Method, error=0., skipped=None, flags=None, order=None, spec: Optional[SumSpec] = None):
        self.Value = value
        self.Method = Method(method)
        self.Order = order
        self.Error = abs(float(error))
        self.Skipped = list(skipped or [])
        self.Flags = list(flags or [])
        self.Spec = spec

    def __float__(self):
        return float(self.Value)

    def __str__(self):
        return f'{self.Value} +- {self.Error:.1e} ({self.method_str})'

    def __repr__(self):
        return f'{self.__class__.__name__}: {self.Spec} = {self}' + (f' [{", ".join(self.Flags)}]' if self.Flags else '')

    @property
    def method_str(self):
        return self.Method.value + ('' if self.Order is None else f':{self.Order}')

    @property
    def u(self):
        return ufloat(float(self.Value), self.Error)

    @property
    def is_wide(self):
        return isinstance(self.Value, DoubleWide)

    def row(self):
        return {'value': float(self.Value), 'lo': self.Value.lo if self.is_wide else 0., 'method': self.method_str, 'err_estimate': self.Error,
                'skipped': ' '.join(str(i) for i in self.Skipped), 'flags': ' '.join(self.Flags)}


# ----------------------------------------
# region DIRECT
def native_turns(n, phi, a, lower, upper):
    """ arguments (in units of pi) of the terms l=lower..upper, with a*l/n reduced exactly mod 2 """
    l = np.arange(lower, upper + 1, dtype='d')
    p, e = two_prod(float(a), l)
    return reduce_turns(float(phi) / np.pi + (np.fmod(p, 2. * n) + e) / n)


def native_values(family: Family, t):
    with np.errstate(divide='ignore', invalid='ignore'):
        t = t + family.Shift
        if family.IsCsc:
            return 1. / sinpi(t)
        return family.Sign * cospi(t) / sinpi(t)


def wide_turn(k, n, phi, a, l):
    return phi / k.pi + a * l / n


def wide_value(k, family: Family, t):
    t = t + family.Shift
    s = k.sinpi(t)
    if not s:
        return mpmath.inf
    return 1 / s if family.IsCsc else family.Sign * k.cospi(t) / s


def wide_distance(t):
    return abs(t - mpmath.nint(t))


def wide_terms(k, family: Family, n, phi, a, lower, upper, pv=False):
    """ term values as mpf (inside the wide context) together with the skipped indices and flags """
    phi, a = k.num(phi), k.num(a)
    terms, skipped, flags = [], [], []
    for l in range(lower, upper + 1):
        t = wide_turn(k, n, phi, a, l)
        dist = wide_distance(t + family.Shift) * k.pi
        v = wide_value(k, family, t)
        if pv and dist < PVDistance:
            if abs(v) > PVMagnitude:
                skipped.append(l)
                continue
            flags.append('near-pole')
        elif dist < PoleDistance:
            raise PoleError(l, t * k.pi)
        terms.append(v)
    return terms, skipped, sorted(set(flags))


def term_sum(family: Family, n, phi, a, lower=1, upper=None, k=Wide, pv=False):
    """ sum_{l=lower}^{upper} f(phi + a*pi*l/n) inside the kernel context, without parameter validation (a may be negative, n may be 1) """
    upper = n - 1 if upper is None else upper
    if k.IsWide:
        return k.fsum(wide_terms(k, family, n, phi, a, lower, upper, pv)[0])
    return eval_native(family, n, phi, a, lower, upper, pv)[0]


def eval_native(family, n, phi, a, lower, upper, pv=False, chunk=None):
    t = native_turns(n, phi, a, lower, upper)
    values = native_values(family, t)
    dist = turn_distance(t + family.Shift) * np.pi
    near = dist < PVDistance
    skip = near & (~np.isfinite(values) | (np.abs(values) > PVMagnitude)) if pv else np.zeros(values.size, '?')
    poles = (dist < PoleDistance) & ~skip
    if poles.any() and not pv:
        i = int(np.argmax(poles))
        raise PoleError(lower + i, t[i] * np.pi)
    kept = values[~skip]
    if chunk:
        acc = Accumulator()
        for part in np.array_split(kept, max(1, kept.size // chunk)):
            acc.merge(Accumulator(part))
        value = acc.value()
    else:
        value = compensated_sum(kept)
    skipped = (np.nonzero(skip)[0] + lower).tolist()
    flags = ['near-pole'] if (near & ~skip).any() else []
    return float(value), (kept.size * np.abs(kept).max() * 2. ** -52 if kept.size else 0.), skipped, flags


def eval_wide(family, n, phi, a, lower, upper, pv=False):
    k = Wide
    with k.context():
        phi, a = k.num(phi), k.num(a)
        terms, skipped, flags = wide_terms(k, family, n, phi, a, lower, upper, pv)
        mx = max((abs(v) for v in terms), default=mpf(0))
        return k.out(k.fsum(terms)), float(len(terms) * mx * k.Eps), skipped, flags


def eval_direct(spec: SumSpec, precision='native', chunk=None) -> EvalResult:
    """ Compensated direct summation of the n-1 terms. In p.v. mode the terms on a pole are dropped and reported in `Skipped`. """
    k = get_kernel(precision)
    args = spec.family, spec.n, spec.phi, spec.a, 1, spec.n - 1, spec.principal_value
    value, err, skipped, flags = eval_wide(*args) if k.IsWide else eval_native(*args, chunk=chunk)
    return EvalResult(value, Method.Direct, err, skipped, flags, spec=spec)


def S(n, phi, a=1., precision='native', pv=False) -> EvalResult:
    return eval_direct(SumSpec(Family.Csc, n, phi, a, pv), precision)


def C(n, phi, a=1., precision='native', pv=False) -> EvalResult:
    return eval_direct(SumSpec(Family.Sec, n, phi, a, pv), precision)
# endregion DIRECT
# ----------------------------------------


# ----------------------------------------
# region IDENTITIES
class SumIdentity(str, Enum):
    AntiPeriodic = 'antiperiodic'
    Periodic = 'periodic'
    APeriodic = 'a-periodic'
    Parity = 'parity'
    Reflection = 'reflection'
    Doubling = 'doubling'
    Multiplication = 'multiplication'
    MultiplicationCommuted = 'multiplication-commuted'
    RecurrenceN = 'recurrence-n'
    RecurrencePhi = 'recurrence-phi'
    SecShift = 'sec-shift'
    S1Zero = 's1-zero'
    S2 = 's2'
    A2kn = 'a-2kn'
    A2Plus2kn = 'a-2-plus-2kn'
    SecPVZero = 'sec-pv-zero'
    TgEuler = 'tg-euler'

    @property
    def Special(self):
        return self in (SumIdentity.S1Zero, SumIdentity.S2, SumIdentity.A2kn, SumIdentity.A2Plus2kn, SumIdentity.SecPVZero, SumIdentity.TgEuler)


def require(condition, text, value=None):
    if not condition:
        raise DomainError(text, value)


def sides(ident: SumIdentity, n=5, phi=.3, a=.7, k=1):
    """ both sides of the identity as mpf values (call inside the wide context) """
    w, cs = Wide, Family.Csc
    phi, a, pi = w.num(phi), w.num(a), w.pi
    ssum = lambda m, p, b, **kw: term_sum(cs, m, p, b, **kw)  # noqa
    csc = lambda x: 1 / mpmath.sin(x)  # noqa
    if ident == SumIdentity.AntiPeriodic:
        return ssum(n, phi + (2 * k - 1) * pi, a), -ssum(n, phi, a)
    if ident == SumIdentity.Periodic:
        return ssum(n, phi + 2 * k * pi, a), ssum(n, phi, a)
    if ident == SumIdentity.APeriodic:
        return ssum(n, phi, a + 2 * k * n), ssum(n, phi, a)
    if ident == SumIdentity.Parity:
        return ssum(n, phi, -a), -ssum(n, -phi, a)
    if ident == SumIdentity.Reflection:
        return ssum(n, -phi, 1 + 2 * k * n), ssum(n, phi, 1)
    if ident == SumIdentity.Doubling:
        return ssum(2 * n, phi, a), ssum(n, phi, a / 2) + ssum(n, phi + a * pi / 2, a / 2) + csc(phi + a * pi / 2)
    if ident in (SumIdentity.Multiplication, SumIdentity.MultiplicationCommuted):
        require(k >= 2 and int(k) == k, 'multiplication theorems need an integer k >= 2', k)
        m1, m2 = (k, n) if ident == SumIdentity.Multiplication else (n, k)
        return ssum(k * n, phi, a), w.fsum([ssum(m2, phi + a * pi * l / m1, a / m1) for l in range(m1)]) + ssum(m1, phi, a)
    if ident == SumIdentity.RecurrenceN:
        return ssum(n + 1, phi, a), ssum(n, phi, a * n / (n + 1)) + csc(phi + a * pi * n / (n + 1))
    if ident == SumIdentity.RecurrencePhi:
        m, b = 2 * n + 1, mpf(2 * n) / (2 * n + 1)
        return ssum(n, phi + pi / m, b), ssum(n, phi, b) - m * csc(m * phi) + csc(phi) - csc(phi + pi / m) - csc(phi - pi / m)
    if ident == SumIdentity.SecShift:
        return term_sum(Family.Sec, n, phi, a), ssum(n, phi + pi / 2, a)
    if ident == SumIdentity.S1Zero:
        return ssum(1, phi, a), mpf(0)
    if ident == SumIdentity.S2:
        return ssum(2, phi, a), csc(phi + a * pi / 2)
    if ident == SumIdentity.A2kn:
        require(k >= 1, 'a = 2kn needs k >= 1', k)
        return ssum(n, phi, 2 * k * n), (n - 1) * csc(phi)
    if ident == SumIdentity.A2Plus2kn:
        return ssum(n, phi, 2 + 2 * k * n), (n * csc(n * phi) if n % 2 else 0) - csc(phi)
    if ident == SumIdentity.SecPVZero:
        return term_sum(Family.Sec, n, 0, 1, pv=True), mpf(0)
    if ident == SumIdentity.TgEuler:
        lhs = term_sum(Family.Tg, n, phi, 1, lower=0)
        return lhs, n * mpmath.tan(n * phi) if n % 2 else -n / mpmath.tan(n * phi)
    raise DomainError('unknown identity', ident)


def check_functional_identity(ident, **params) -> float:
    """ |LHS - RHS| with both sides summed directly in wide precision """
    ident = SumIdentity(ident)
    with Wide.context():
        lhs, rhs = sides(ident, **params)
        return float(abs(lhs - rhs))


def check_special_value(ident, **params) -> float:
    ident = SumIdentity(ident)
    require(ident.Special, 'not a special value identity', ident.value)
    return check_functional_identity(ident, **params)
# endregion IDENTITIES
# ----------------------------------------


if __name__ == '__main__':
    print(repr(S(10, 0)), repr(S(10, 0, precision='wide')), repr(C(5, 0, pv=True)))
