#!/usr/bin/env python
# --------------------------------------------------------
#       large-n expansions of the cosecant, secant and half-step sums
# created on October 18th 2026
# --------------------------------------------------------
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial, log

import numpy as np

from src.analysis import Analysis
from src.errors import DomainError
from src.gammafun import psi, psi_m, lngamma, bernoulli
from src.numerics import bernoulli_even, get_kernel, harmonic
from src.quadrature import QuadratureConfig, integrate_half_line
from src.sums import EvalResult, Family, Method, SumSpec, term_sum
from utility.utils import warning

N0 = Analysis.get_config('asymptotics', 'n0', int, 8)
DefaultOrder = Analysis.get_config('asymptotics', 'default order', int, 3)
CtgPoleDistance = Analysis.get_config('asymptotics', 'ctg pole distance', float, 1e-6)
MaxOrder = 30


class Flavor(str, Enum):
    Harmonic = 'harmonic'
    Log = 'log'


class Regime(str, Enum):
    LogOnly = 'log-only'
    CtgPlusLogA1 = 'ctg+log(a=1)'
    LogOnlyA01 = 'log-only(0<a<1)'
    CtgPlusLogAover1 = 'ctg+log(1<a<2)'
    General = 'general'
    Unsupported = 'unsupported'


RegimeInfo = namedtuple('RegimeInfo', ['regime', 'leading'])


# ----------------------------------------
# region DERIVATIVE POLYNOMIALS
class TrigDerivPoly:
    """ d^order/dx^order of csc (resp. sec) as an integer polynomial in (u, v) = (csc, ctg) (resp. (sec, tg)). """

    def __init__(self, family: Family, order: int, coeffs: dict):
        self.Family = family
        self.Order = order
        self.Coeffs = {key: c for key, c in coeffs.items() if c}

    def __repr__(self):
        return f'{"F" if self.Family == Family.Csc else "G"}_{self.Order}: {self}'

    def __str__(self):
        def mono(i, j):
            return '*'.join(f'{s}^{e}' if e > 1 else s for s, e in [('u', i), ('v', j)] if e)
        txt = ' '.join(f'{"-" if c < 0 else "+"} {"" if abs(c) == 1 else f"{abs(c)}*"}{mono(i, j)}' for (i, j), c in sorted(self.Coeffs.items()))
        return txt[2:] if txt.startswith('+') else '-' + txt[2:]

    def __eq__(self, other):
        return isinstance(other, TrigDerivPoly) and (self.Family, self.Order, self.Coeffs) == (other.Family, other.Order, other.Coeffs)

    def __hash__(self):
        return hash((self.Family, self.Order, tuple(sorted(self.Coeffs.items()))))

    def derive(self) -> 'TrigDerivPoly':
        """ d(u^i v^j) = -i u^i v^(j+1) - j u^(i+2) v^(j-1) for csc, with the opposite sign for sec """
        s, new = (-1 if self.Family == Family.Csc else 1), {}
        for (i, j), c in self.Coeffs.items():
            new[(i, j + 1)] = new.get((i, j + 1), 0) + s * i * c
            if j:
                new[(i + 2, j - 1)] = new.get((i + 2, j - 1), 0) + s * j * c
        return TrigDerivPoly(self.Family, self.Order + 1, new)

    def uv(self, k, x):
        if self.Family == Family.Csc:
            s = k.sin(x)
            return 1 / s, k.cos(x) / s
        c = k.cos(x)
        return 1 / c, k.sin(x) / c

    def __call__(self, x, k=None):
        """ value at the kernel number x; run inside the kernel context for the wide tier """
        k = get_kernel('native' if k is None else k)
        u, v = self.uv(k, x)
        return k.fsum(k.num(c) * u ** i * v ** j for (i, j), c in self.Coeffs.items())


@lru_cache(maxsize=None)
def deriv_poly(family: Family, order: int) -> TrigDerivPoly:
    family = Family(family)
    if family not in (Family.Csc, Family.Sec):
        raise DomainError('derivative polynomials exist for csc and sec only', family.value)
    if int(order) != order or order < 1 or order % 2 == 0 or order > 2 * 60 - 1:
        raise DomainError('order must be odd with 1 <= order <= 119', order)
    if order == 1:
        return TrigDerivPoly(family, 1, {(1, 1): -1 if family == Family.Csc else 1})
    return deriv_poly(family, order - 2).derive().derive()


def csc_deriv_poly(order: int) -> TrigDerivPoly:
    return deriv_poly(Family.Csc, order)


def sec_deriv_poly(order: int) -> TrigDerivPoly:
    return deriv_poly(Family.Sec, order)


def polygamma_form(k, family: Family, order, alpha):
    """ the same derivative from four polygamma values """
    z, q = alpha / (2 * k.pi), (k.num(.5), 0, k.num(.5), 1) if family == Family.Csc else (k.num(.75), k.num(.25), k.num(.25), k.num(.75))
    parts = [psi_m(k, order, q[0] + z), psi_m(k, order, q[2] - z), -psi_m(k, order, q[1] + z), -psi_m(k, order, q[3] - z)]
    return k.fsum(parts) / (2 * k.pi) ** (order + 1)


def deriv_poly_polygamma_check(order, alpha, family=Family.Csc, precision='native') -> float:
    family = Family(family)
    lo, hi = (0, np.pi) if family == Family.Csc else (-np.pi / 2, np.pi / 2)
    if not lo < float(alpha) < hi:
        raise DomainError(f'{lo:.6g} < alpha < {hi:.6g}', alpha)
    poly, k = deriv_poly(family, order), get_kernel(precision)
    with k.context():
        alpha = k.num(alpha)
        return float(abs(poly(alpha, k) - polygamma_form(k, family, order, alpha)))


def deriv_diff_integral(order, phi, a, family=Family.Csc, cfg: QuadratureConfig = None):
    """ F(phi) - F(phi + a pi) (or the G difference) from its integral over the half line """
    family, m = Family(family), order
    check_strip(family, phi, a)
    c = 2 * phi / np.pi + a - (2 if family == Family.Csc else 1)
    kappa = 1 - abs(a - 1) - abs(c)
    if c == 0:
        return 0.
    scale = factorial(m) / kappa ** (m + 1)
    cutoff = (m + 1) / kappa
    for _ in range(5):
        cutoff = (log(scale / 1e-20) + m * log(cutoff)) / kappa

    def f(t):
        with np.errstate(invalid='ignore', over='ignore'):
            return np.sign(c) / 2 * np.exp(-kappa * t) * (1 + np.exp(-2 * t * abs(a - 1))) * -np.expm1(-2 * t * abs(c)) / (1 + np.exp(-2 * t)) * t ** m
    cfg = QuadratureConfig() if cfg is None else cfg
    value = integrate_half_line(f, 1., cutoff, cfg, 'native', cfg.abs_tol * max(1., scale))[0]
    return 2 ** (m + 2) / np.pi ** (m + 1) * value


def deriv_diff_integral_check(order, phi, a, family=Family.Csc) -> float:
    family = Family(family)
    poly = deriv_poly(family, order)
    return abs(poly(float(phi)) - poly(float(phi) + float(a) * np.pi) - deriv_diff_integral(order, float(phi), float(a), family))
# endregion DERIVATIVE POLYNOMIALS
# ----------------------------------------


# ----------------------------------------
# region HELPERS
def strip(family: Family):
    """ phi range and the a range as a function of phi """
    if family == Family.Csc:
        return (0, np.pi), lambda phi: (1 - phi / np.pi, 2 - phi / np.pi), '0 < phi < pi and 1 - phi/pi < a < 2 - phi/pi'
    return (-np.pi / 2, np.pi / 2), lambda phi: (.5 - phi / np.pi, 1.5 - phi / np.pi), '-pi/2 < phi < pi/2 and 1/2 - phi/pi < a < 3/2 - phi/pi'


def in_strip(family: Family, phi, a):
    (lo, hi), arange, _ = strip(Family(family))
    return lo < phi < hi and arange(phi)[0] < a < arange(phi)[1]


def check_strip(family: Family, phi, a):
    if not in_strip(family, float(phi), float(a)):
        raise DomainError(strip(Family(family))[2], (float(phi), float(a)))


def check_order(N):
    if int(N) != N or not 2 <= N <= MaxOrder:
        raise DomainError(f'N must be an integer with 2 <= N <= {MaxOrder}', N)
    return int(N)


def factor(k, r):
    """ B_2r / (2r)! as a kernel number """
    return k.num(Fraction(bernoulli_even(r), factorial(2 * r)))


def sporadic_ctg(k, x, flags):
    """ ctg of the sporadic argument; flags it when it comes closer than the configured distance to a pole """
    dist = abs(x - k.pi * round(float(x / k.pi)))
    if dist < CtgPoleDistance and 'unreliable' not in flags:
        flags.append('unreliable')
        warning(f'cotangent argument {float(x):.10g} is {float(dist):.1e} from a pole, the expansion is unreliable')
    s = k.sin(x)
    return float('inf') if s == 0 else k.cos(x) / s


def n0_flags(n):
    if n <= N0:
        warning(f'n = {n} is not above the validity onset n0 = {N0}')
        return ['below-n0']
    return []
# endregion HELPERS
# ----------------------------------------


class AsymptoticSeries:
    """ Truncated large-n expansion: named leading terms plus the Bernoulli tail terms r = 1..N-1.
        `Next` is the r = N term, used as the error estimate. """

    def __init__(self, spec: SumSpec, N, leading: dict, tail: list, nxt, regime: Regime, flags=None, k=None):
        self.Spec = spec
        self.N = N
        self.Leading = leading
        self.Tail = tail
        self.Next = nxt
        self.Regime = regime
        self.Flags = flags or []
        self.Kernel = get_kernel('native' if k is None else k)

    def __repr__(self):
        return f'{self.__class__.__name__} of {self.Spec} to N={self.N} ({self.Regime.value}): {self.value}'

    def partial(self, N=None):
        """ kernel-number value keeping the tail terms r < N """
        N = self.N if N is None else N
        with self.Kernel.context():
            return self.Kernel.fsum(list(self.Leading.values()) + self.Tail[:N - 1])

    @property
    def value(self):
        with self.Kernel.context():
            return self.Kernel.out(self.partial())

    @property
    def tail_coeffs(self):
        """ tail terms with the n-power taken out, r = 1..N-1 """
        with self.Kernel.context():
            return [t * self.Spec.n ** (2 * r - 1) for r, t in enumerate(self.Tail, 1)]

    def result(self) -> EvalResult:
        return EvalResult(self.value, Method.Asymptotic, abs(float(self.Next)), flags=self.Flags, order=self.N, spec=self.Spec)


def make_tail(N, term):
    """ tail terms r = 1..N-1 and the first omitted one """
    values = [term(r) for r in range(1, N + 1)]
    return values[:-1], values[-1]


# ----------------------------------------
# region S_n
def log_tail_coefficient(r) -> tuple:
    """ r-th tail coefficient of the logarithmic S_n expansion as (q, p): the term is q pi^p / n^(2r-1) """
    b = bernoulli_even(r)
    return Fraction(2 * (-1) ** r * (2 ** (2 * r - 1) - 1)) * b * b / (r * factorial(2 * r)), 2 * r - 1


def harmonic_tail_coefficient(r) -> dict:
    """ r-th tail coefficient of the harmonic S_n expansion as {pi power: rational} """
    b = bernoulli_even(r)
    return {-1: b / r, 2 * r - 1: -(-1) ** (r + 1) * (2 ** (2 * r) - 2) * b * b / (r * factorial(2 * r))}


def asympt_Sn(n, N=DefaultOrder, flavor=Flavor.Log, precision='native') -> AsymptoticSeries:
    """ S_n = (2n/pi)(ln(2n/pi) + gamma) - pi/(36n) + ... or the same with H_n """
    spec, N, flavor, k = SumSpec(Family.Csc, n, 0, 1), check_order(N), Flavor(flavor), get_kernel(precision)
    with k.context():
        pi, n_ = k.pi, k.num(n)
        if flavor == Flavor.Log:
            leading = {'log': 2 * n_ / pi * (k.log(2 * n_ / pi) + k.euler)}
            coeffs = [log_tail_coefficient(r) for r in range(1, N + 1)]
            tail, nxt = make_tail(N, lambda r: k.num(coeffs[r - 1][0]) * pi ** coeffs[r - 1][1] / n_ ** (2 * r - 1))
        else:
            leading = {'harmonic': 2 * n_ / pi * (k.num(harmonic(n)) - k.log(pi / 2)), 'const': -1 / pi}
            tail, nxt = make_tail(N, lambda r: k.fsum(k.num(q) * pi ** p for p, q in harmonic_tail_coefficient(r).items()) / n_ ** (2 * r - 1))
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.LogOnly, n0_flags(n), k)


def asympt_Sn_phi_a(n, phi, a, N=DefaultOrder, precision='native') -> AsymptoticSeries:
    """ General strip: sporadic ctg term, log term, half the edge cosecants and the derivative-polynomial tail. """
    spec, N, k = SumSpec(Family.Csc, n, phi, a), check_order(N), get_kernel(precision)
    check_strip(Family.Csc, phi, a)
    flags = n0_flags(n)
    with k.context():
        pi, phi, a = k.pi, k.num(phi), k.num(a)
        leading = {'ctg': n / a * sporadic_ctg(k, n * (pi - phi) / a, flags),
                   'log': n / (a * pi) * k.log(k.tan(pi - pi * a / 2 - phi / 2) / k.tan(phi / 2)),
                   'const': -(1 / k.sin(phi) + 1 / k.sin(phi + a * pi)) / 2}

        def term(r):
            p = csc_deriv_poly(2 * r - 1)
            return -(a * pi / n) ** (2 * r - 1) * factor(k, r) * (p(phi, k) - p(phi + a * pi, k))
        tail, nxt = make_tail(N, term)
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.General, flags, k)


def asympt_Sn_phi1(n, phi, N=DefaultOrder, precision='native') -> AsymptoticSeries:
    """ S_n(phi,1) = -n ctg(n phi) - (2n/pi) ln tg(phi/2) - 2 sum pi^(2r-1) B_2r / (n^(2r-1) (2r)!) F_(2r-1)(phi) """
    spec, N, k = SumSpec(Family.Csc, n, phi, 1), check_order(N), get_kernel(precision)
    if not 0 < float(phi) < np.pi:
        raise DomainError('0 < phi < pi', phi)
    flags = n0_flags(n)
    with k.context():
        pi, phi = k.pi, k.num(phi)
        leading = {'ctg': -n * sporadic_ctg(k, n * phi, flags), 'log': -2 * n / pi * k.log(k.tan(phi / 2))}
        tail, nxt = make_tail(N, lambda r: -2 * (pi / n) ** (2 * r - 1) * factor(k, r) * csc_deriv_poly(2 * r - 1)(phi, k))
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.CtgPlusLogA1, flags, k)


def asympt_Sn_0a(n, a, N=DefaultOrder, flavor=Flavor.Log, precision='native') -> AsymptoticSeries:
    """ S_n(0,a) for 0 < a < 2, a != 1; the sporadic term is present only for a > 1 """
    spec, N, flavor, k = SumSpec(Family.Csc, n, 0, a), check_order(N), Flavor(flavor), get_kernel(precision)
    if not 0 < float(a) < 2 or float(a) == 1:
        raise DomainError('0 < a < 2 and a != 1', a)
    flags, delta = n0_flags(n), 0 if float(a) < 1 else 1
    if delta and (Fraction(n) / Fraction(float(a))).denominator == 1:
        raise DomainError('a != n/k', a)
    with k.context():
        pi, a, n_ = k.pi, k.num(a), k.num(n)
        leading = {'ctg': n / a * sporadic_ctg(k, pi * n / a, flags)} if delta else {}
        if flavor == Flavor.Log:
            leading['log'] = n / (a * pi) * (k.log(2 * n_ / (pi * a)) + k.euler + k.log(abs(k.tan(pi * a / 2))))
        else:
            leading['harmonic'] = n_ * k.num(harmonic(n)) / (a * pi)
            leading['log'] = n / (a * pi) * (k.log(abs(k.tan(pi * a / 2))) + k.log(2 / (pi * a)))
            leading['half'] = -1 / (2 * pi * a)
        leading['const'] = -1 / (2 * k.sin(a * pi))

        def term(r):
            b = k.num(bernoulli_even(r))
            value = (a * pi / n) ** (2 * r - 1) * factor(k, r) * (csc_deriv_poly(2 * r - 1)(a * pi, k) - (2 ** (2 * r) - 2) * (-1) ** (r + 1) * b / (2 * r))
            return value + (n_ / (a * pi) * b / (2 * r * n_ ** (2 * r)) if flavor == Flavor.Harmonic else 0)
        tail, nxt = make_tail(N, term)
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.CtgPlusLogAover1 if delta else Regime.LogOnlyA01, flags, k)
# endregion S_n
# ----------------------------------------


# ----------------------------------------
# region C_n AND HALF STEP
def asympt_Cn(n, phi, a, N=DefaultOrder, precision='native') -> AsymptoticSeries:
    spec, N, k = SumSpec(Family.Sec, n, phi, a), check_order(N), get_kernel(precision)
    check_strip(Family.Sec, phi, a)
    flags = n0_flags(n)
    with k.context():
        pi, phi, a = k.pi, k.num(phi), k.num(a)
        leading = {'ctg': n / a * sporadic_ctg(k, n * (pi / 2 - phi) / a, flags),
                   'log': n / (a * pi) * k.log(k.tan(3 * pi / 4 - pi * a / 2 - phi / 2) / k.tan(phi / 2 + pi / 4)),
                   'const': -(1 / k.cos(phi) + 1 / k.cos(phi + a * pi)) / 2}

        def term(r):
            g = sec_deriv_poly(2 * r - 1)
            return -(a * pi / n) ** (2 * r - 1) * factor(k, r) * (g(phi, k) - g(phi + a * pi, k))
        tail, nxt = make_tail(N, term)
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.General, flags, k)


def asympt_Cn_phi1(n, phi, N=DefaultOrder, precision='native') -> AsymptoticSeries:
    spec, N, k = SumSpec(Family.Sec, n, phi, 1), check_order(N), get_kernel(precision)
    if not -np.pi / 2 < float(phi) < np.pi / 2:
        raise DomainError('-pi/2 < phi < pi/2', phi)
    flags = n0_flags(n)
    with k.context():
        pi, phi = k.pi, k.num(phi)
        leading = {'ctg': -n * sporadic_ctg(k, n * (phi + pi / 2), flags), 'log': -2 * n / pi * k.log(k.tan(phi / 2 + pi / 4))}
        tail, nxt = make_tail(N, lambda r: -2 * (pi / n) ** (2 * r - 1) * factor(k, r) * sec_deriv_poly(2 * r - 1)(phi, k))
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.CtgPlusLogA1, flags, k)


def asympt_ctg_tg_halfstep(n, phi, N=DefaultOrder, family=Family.Ctg, precision='native') -> AsymptoticSeries:
    """ sum_l ctg(phi + pi l/2n) or sum_l tg(phi + pi l/2n); no sporadic term """
    spec, N, family, k = SumSpec(family, n, phi, .5), check_order(N), Family(family), get_kernel(precision)
    if family not in (Family.Ctg, Family.Tg):
        raise DomainError('family must be ctg or tg', family.value)
    lo = 0 if family == Family.Ctg else np.pi / 2
    if not lo < float(phi) < lo + np.pi / 2:
        raise DomainError('0 < phi < pi/2' if family == Family.Ctg else 'pi/2 < phi < pi', phi)
    flags = n0_flags(n)
    with k.context():
        pi, phi = k.pi, k.num(phi)
        if family == Family.Ctg:
            leading = {'log': -2 * n / pi * k.log(k.tan(phi)), 'const': -k.cos(2 * phi) / k.sin(2 * phi)}
        else:
            leading = {'log': -2 * n / pi * k.log(k.tan(pi - phi)), 'const': k.cos(2 * phi) / k.sin(2 * phi)}
        tail, nxt = make_tail(N, lambda r: -2 * (pi / n) ** (2 * r - 1) * factor(k, r) * csc_deriv_poly(2 * r - 1)(2 * phi, k))
        return AsymptoticSeries(spec, N, leading, tail, nxt, Regime.General, flags, k)
# endregion C_n AND HALF STEP
# ----------------------------------------


# ----------------------------------------
# region ALTERNATING DIGAMMA TAIL
class AlternatingPsiExpansion:
    """ Large-n expansion of sum_{k>=1} (-1)^k {Psi(n(alpha k + beta1)) - Psi(n(alpha k + beta2))}.
        Without beta2 the reference is Psi(n alpha k). """

    def __init__(self, alpha, beta1, beta2=None, n=100, N=DefaultOrder, precision='native'):
        if not alpha > 0 or not beta1 > 0 or (beta2 is not None and not beta2 > 0):
            raise DomainError('alpha and the betas must be positive', (alpha, beta1, beta2))
        self.Alpha, self.Beta1, self.Beta2 = alpha, beta1, beta2
        self.n, self.N = int(n), check_order(N)
        self.Kernel = get_kernel(precision)
        self.Constant, self.FirstOrder, self.Tail = self.make_terms()

    def __repr__(self):
        return f'{self.__class__.__name__}(alpha={self.Alpha}, beta1={self.Beta1}, beta2={self.Beta2}, n={self.n}, N={self.N}) = {self.value}'

    def bracket(self, k, beta, r):
        b, al = k.num(beta) / (2 * k.num(self.Alpha)), k.num(self.Alpha)
        return psi_m(k, 2 * r - 1, b) - psi_m(k, 2 * r - 1, b + k.num(.5)) - (2 * al) ** (2 * r) * factorial(2 * r - 1) / k.num(beta) ** (2 * r)

    def make_terms(self):
        if self.Beta2 is not None and self.Beta1 == self.Beta2:
            return 0, 0, [0] * (self.N - 1)
        k, n = self.Kernel, self.n
        with k.context():
            al, b1 = k.num(self.Alpha), k.num(self.Beta1) / (2 * k.num(self.Alpha))
            half = k.num(.5)
            if self.Beta2 is None:
                const = k.log(al / k.num(self.Beta1)) + lngamma(k, half + b1) - lngamma(k, b1) + k.ln2 - k.log(k.pi) / 2
                first = -k.ln2 / (2 * al * n) - (psi(k, half + b1) - psi(k, b1) - 2 * al / k.num(self.Beta1)) / (4 * al * n)
                extra = [(2 ** (2 * r) - 2) * (2 * k.pi) ** (2 * r) * (-1) ** (r + 1) * bernoulli(k, r) / (4 * r) for r in range(1, self.N)]
                tail = [self.bracket(k, self.Beta1, r) + extra[r - 1] for r in range(1, self.N)]
            else:
                b2 = k.num(self.Beta2) / (2 * al)
                const = lngamma(k, half + b1) + lngamma(k, b2) - lngamma(k, half + b2) - lngamma(k, b1) - k.log(k.num(self.Beta1) / k.num(self.Beta2))
                first = -(psi(k, half + b1) - psi(k, b1) - psi(k, half + b2) + psi(k, b2) - 2 * al / k.num(self.Beta1) + 2 * al / k.num(self.Beta2)) / (4 * al * n)
                tail = [self.bracket(k, self.Beta1, r) - self.bracket(k, self.Beta2, r) for r in range(1, self.N)]
            tail = [-bernoulli(k, r) / (2 * r * (2 * al * n) ** (2 * r) * factorial(2 * r - 1)) * t for r, t in enumerate(tail, 1)]
            return const, first, tail

    @property
    def value(self):
        k = self.Kernel
        with k.context():
            return k.out(k.fsum([self.Constant, self.FirstOrder] + self.Tail))

    def direct_sum(self, accel=None):
        """ the alternating digamma series itself, summed with the Euler transformation """
        from src.representations import sum_alternating, SeriesAccel
        k, n = self.Kernel, self.n
        accel = (SeriesAccel() if accel is None else accel).for_kernel(k)
        with k.context():
            al, b1 = k.num(self.Alpha), k.num(self.Beta1)
            b2 = None if self.Beta2 is None else k.num(self.Beta2)

            def term(j):
                return (-1) ** j * (psi(k, n * (al * j + b1)) - psi(k, n * (al * j + (0 if b2 is None else b2))))
            return k.out(sum_alternating(term, accel, k, start=1)[0])


def alternating_psi_expansion(alpha, beta1, beta2=None, n=100, N=DefaultOrder, precision='native') -> AlternatingPsiExpansion:
    return AlternatingPsiExpansion(alpha, beta1, beta2, n, N, precision)


lemma3_expansion = alternating_psi_expansion
# endregion ALTERNATING DIGAMMA TAIL
# ----------------------------------------


# ----------------------------------------
# region REGIMES
def classify_regime(phi, a) -> RegimeInfo:
    phi, a = float(phi), float(a)
    if phi == 0 and a == 1:
        return RegimeInfo(Regime.LogOnly, '(2n/pi)(ln(2n/pi) + gamma)')
    if a == 1 and 0 < phi < np.pi:
        return RegimeInfo(Regime.CtgPlusLogA1, '-n ctg(n phi) - (2n/pi) ln tg(phi/2)')
    if phi == 0 and 0 < a < 1:
        return RegimeInfo(Regime.LogOnlyA01, '(n/(a pi))(ln(2n/(pi a)) + gamma + ln tg(pi a/2)) - csc(a pi)/2')
    if phi == 0 and 1 < a < 2:
        return RegimeInfo(Regime.CtgPlusLogAover1, '(n/a) ctg(pi n/a) + (n/(a pi))(ln(2n/(pi a)) + gamma + ln tg(pi - pi a/2)) - csc(a pi)/2')
    if in_strip(Family.Csc, phi, a):
        balanced = ' (2 phi + a pi = 2 pi: vanishing tail)' if np.isclose(2 * phi + a * np.pi, 2 * np.pi, rtol=0, atol=1e-15) else ''
        return RegimeInfo(Regime.General, '(n/a) ctg(n(pi - phi)/a) + (n/(a pi)) ln[tg(pi - pi a/2 - phi/2)/tg(phi/2)] - (csc(phi) + csc(phi + a pi))/2' + balanced)
    return RegimeInfo(Regime.Unsupported, '')


def asymptotic(spec: SumSpec, N=DefaultOrder, flavor=Flavor.Log, precision='native') -> AsymptoticSeries:
    """ the expansion that applies to the given sum """
    n, phi, a = spec.n, float(spec.phi), float(spec.a)
    if spec.family == Family.Sec:
        return asympt_Cn_phi1(n, phi, N, precision) if a == 1 else asympt_Cn(n, phi, a, N, precision)
    if spec.family in (Family.Ctg, Family.Tg):
        if a != .5:
            raise DomainError('ctg and tg expansions exist for a = 1/2 only', a)
        return asympt_ctg_tg_halfstep(n, phi, N, spec.family, precision)
    regime = classify_regime(phi, a).regime
    if regime == Regime.LogOnly:
        return asympt_Sn(n, N, flavor, precision)
    if regime == Regime.CtgPlusLogA1:
        return asympt_Sn_phi1(n, phi, N, precision)
    if regime in (Regime.LogOnlyA01, Regime.CtgPlusLogAover1):
        return asympt_Sn_0a(n, a, N, flavor, precision)
    if regime == Regime.General:
        return asympt_Sn_phi_a(n, phi, a, N, precision)
    raise DomainError('(phi, a) outside all asymptotic regimes', (phi, a))


def phi1_crossover(n, phis, N=DefaultOrder):
    """ Errors of the S_n(phi,1) expansion and of the phi = 0 expansion along phi -> 0+, against the wide direct sum.
        Returns the rows and the smallest phi where the phi-expansion is the better one (None if never). """
    at_zero = asympt_Sn(n, N, Flavor.Log, 'wide').value
    rows, k = [], get_kernel('wide')
    for phi in sorted(phis):
        with k.context():
            exact = k.out(term_sum(Family.Csc, n, k.num(phi), 1, k=k))
        row = {'phi': phi, 'exact': float(exact), 'phi-expansion': abs(float(asympt_Sn_phi1(n, phi, N, 'wide').value - exact)),
               'zero-expansion': abs(float(at_zero - exact))}
        rows.append(row)
    crossing = next((r['phi'] for r in rows if r['phi-expansion'] < r['zero-expansion']), None)
    return rows, crossing
# endregion REGIMES
# ----------------------------------------


if __name__ == '__main__':
    print(csc_deriv_poly(3), asympt_Sn(10, 4).value, classify_regime(0, np.log(2)))
