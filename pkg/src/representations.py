#!/usr/bin/env python
# --------------------------------------------------------
#       alternative representations of the cosecant and secant sums
# created on October 18th 2026
# --------------------------------------------------------
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.analysis import Analysis
from src.errors import DomainError, NonConvergence, PoleError
from src.gammafun import psi
from src.numerics import get_kernel, harmonic
from src.quadrature import QuadratureConfig, integrate_half_line
from src.sums import EvalResult, Family, Method, SumSpec, term_sum, PoleDistance
from utility.utils import warning

__all__ = ['QuadratureConfig', 'SeriesAccel', 'EulerTransform', 'eval_cotangent_form', 'eval_digamma_finite', 'eval_digamma_infinite', 'eval_mixed_form',
           'eval_integral_form', 'digamma_summation_check', 'DigammaSum', 'integral_strip', 'th_integrand']


class Scheme(str, Enum):
    Euler = 'euler'
    Direct = 'direct'


@dataclass(frozen=True)
class SeriesAccel:
    scheme: Scheme = Scheme(Analysis.get_config('series', 'scheme', default='euler'))
    max_terms: int = Analysis.get_config('series', 'max terms', int, 100000)
    target_tol: float = Analysis.get_config('series', 'target tol', float, 1e-14)
    direct_terms: int = Analysis.get_config('series', 'direct terms', int, 10)

    def __post_init__(self):
        object.__setattr__(self, 'scheme', Scheme(self.scheme))
        if not 1 <= self.max_terms <= 10 ** 7:
            raise DomainError('max_terms <= 10^7', self.max_terms)
        if not self.target_tol > 0:
            raise DomainError('target_tol > 0', self.target_tol)

    def for_kernel(self, k):
        """ a wide evaluation with the native default tolerance asks for wide accuracy instead """
        return SeriesAccel(self.scheme, self.max_terms, min(self.target_tol, 1e-28), self.direct_terms) if k.IsWide else self


class EulerTransform:
    """ Incremental Euler transformation (van Wijngaarden) of an alternating series. The terms are passed with their signs. """

    def __init__(self):
        self.Table = []
        self.N = 0
        self.Sum = 0
        self.Last = float('inf')

    def __repr__(self):
        return f'{self.__class__.__name__} of order {self.N}: {self.Sum}'

    def add(self, term):
        if not self.Table:
            self.Table, self.N = [term], 1
            self.Last = term / 2
        else:
            tmp, self.Table[0] = self.Table[0], term
            for j in range(self.N - 1):
                self.Table[j + 1], tmp = (self.Table[j] + tmp) / 2, self.Table[j + 1]
            new = (self.Table[self.N - 1] + tmp) / 2
            if len(self.Table) <= self.N:
                self.Table.append(new)
            else:
                self.Table[self.N] = new
            if abs(new) <= abs(self.Table[self.N - 1]):
                self.Last = new / 2
                self.N += 1
            else:
                self.Last = new
        self.Sum += self.Last
        return self.Sum


def sum_alternating(term, accel: SeriesAccel, k, start=0):
    """ sum_{j>=start} term(j) of an alternating series; returns value, remainder estimate and the number of terms used """
    head = [term(j) for j in range(start, start + accel.direct_terms)]
    if accel.scheme == Scheme.Direct:
        for j in range(start + accel.direct_terms, start + accel.max_terms):
            t = term(j)
            if abs(t) < accel.target_tol:
                return k.fsum(head), abs(t), j - start
            head.append(t)
        raise NonConvergence(accel.max_terms, abs(head[-1]), accel.target_tol)
    euler, small = EulerTransform(), 0
    for j in range(start + accel.direct_terms, start + accel.max_terms):
        euler.add(term(j))
        small = small + 1 if abs(euler.Last) < accel.target_tol else 0
        if small == 3:
            return k.fsum(head) + euler.Sum, abs(euler.Last) * 2, j - start
    raise NonConvergence(accel.max_terms, abs(euler.Last), accel.target_tol)


# ----------------------------------------
# region HELPERS
def ctg(k, x):
    s = k.sin(x)
    if abs(s) < PoleDistance:
        raise PoleError('ctg', x, 'cotangent term')
    return k.cos(x) / s


def estimate(k, parts, factor=1):
    """ rounding estimate of a sum of the given parts """
    return float(len(parts) * max((abs(p) for p in parts), default=0) * k.Eps * abs(factor))


def psi_term(k, x, l):
    try:
        return psi(k, x)
    except PoleError:
        raise PoleError(l, x, 'digamma argument of term')


def check_family(spec: SumSpec, *families):
    if spec.family not in families:
        raise DomainError(f'family must be one of {[f.value for f in families]}', spec.family.value)


def integral_strip(family: Family, n, phi, a, pi=np.pi):
    """ Convergence strip of the integral representation. Returns the exponential decay rate kappa (> 0 inside the strip), the shift c and the condition text. """
    c = 2 * phi / pi + a - (1 if family == Family.Csc else 0)
    cond = '-a*pi/n < phi < a*pi/n + pi*(1-a)' if family == Family.Csc else '-a*pi/n - pi/2 < phi < pi/2 + a*pi/n - pi*a'
    return n - a * (n - 2) - n * abs(c), c, cond


def in_integral_strip(family: Family, n, phi, a):
    return integral_strip(family, n, float(phi), float(a))[0] > 0
# endregion HELPERS
# ----------------------------------------


def eval_cotangent_form(n, phi, precision='native') -> EvalResult:
    """ S_n(phi,1) = sum_l ctg(phi/2 + pi l/2n) - n ctg(n phi) + ctg(phi); at phi = 0 the last two terms cancel and only the cotangent sum remains. """
    spec = SumSpec(Family.Csc, n, phi, 1)
    if not 0 <= float(phi) < np.pi:
        raise DomainError('0 <= phi < pi', phi)
    k = get_kernel(precision)
    with k.context():
        phi = k.num(phi)
        cot = term_sum(Family.Ctg, 2 * n, phi / 2, 1, 1, n - 1, k)
        parts = [cot] if phi == 0 else [cot, -n * ctg(k, n * phi), ctg(k, phi)]
        return EvalResult(k.out(k.fsum(parts)), Method.CotangentId, estimate(k, parts, n), spec=spec)


def eval_digamma_finite(spec: SumSpec, precision='native') -> EvalResult:
    """ (1/2pi) sum_l of four digamma values per term, quarters 3/4, 1/4 for the secant sum """
    check_family(spec, Family.Csc, Family.Sec)
    k = get_kernel(precision)
    c1, c0, d1, d0 = (.5, 0, 1, .5) if spec.family == Family.Csc else (.75, .25, .75, .25)
    with k.context():
        n, a, pi = spec.n, k.num(spec.a), k.pi
        z, parts = k.num(spec.phi) / (2 * pi), []
        for l in range(1, n):
            x = a * l / (2 * n)
            parts += [psi_term(k, c1 + x + z, l), -psi_term(k, c0 + x + z, l), psi_term(k, d1 + x - z - a / 2, l), -psi_term(k, d0 + x - z - a / 2, l)]
        return EvalResult(k.out(k.fsum(parts) / (2 * pi)), Method.DigammaFinite, estimate(k, parts, 1 / (2 * pi)) * 8, spec=spec)


def eval_digamma_infinite(spec: SumSpec, accel: SeriesAccel = None, precision='native') -> EvalResult:
    """ Alternating series of digamma differences, summed with the Euler transformation.
        S_n(0,1) uses the harmonic form 2nH_n/pi - 2(1-ln2)/pi + (2n/pi) sum_k (-1)^k {Psi(nk+n) - Psi(nk)}. """
    check_family(spec, Family.Csc, Family.Sec)
    k = get_kernel(precision)
    accel = (SeriesAccel() if accel is None else accel).for_kernel(k)
    flags = []
    if not in_integral_strip(spec.family, spec.n, spec.phi, spec.a):
        flags.append('outside-strip')
        warning(f'{spec} lies outside the convergence strip of the integral representation')
    with k.context():
        n, a, pi = spec.n, k.num(spec.a), k.pi
        if spec.family == Family.Csc and float(spec.phi) == 0 and float(spec.a) == 1:
            tail, rem, used = sum_alternating(lambda j: (-1) ** j * (psi(k, k.num(n * j + n)) - psi(k, k.num(n * j))), accel, k, start=1)
            value = 2 * n * k.num(harmonic(n)) / pi - 2 * (1 - k.ln2) / pi + 2 * n / pi * tail
            return EvalResult(k.out(value), Method.DigammaInfinite, 2 * n / pi * rem + abs(value) * k.Eps * 10, flags=flags + [f'terms={used}'], spec=spec)
        z = n * k.num(spec.phi) / (a * pi) + (0 if spec.family == Family.Csc else k.num(n) / (2 * a))
        na = n / a

        def term(j):
            m = na * j
            return (-1) ** j * (psi(k, m + n + z) - psi(k, 1 + m + na - z - n) - psi(k, 1 + m + z) + psi(k, m + na - z))
        tail, rem, used = sum_alternating(term, accel, k)
        value = na / pi * tail
        return EvalResult(k.out(value), Method.DigammaInfinite, float(na / pi * rem) + float(abs(value)) * k.Eps * 10 * n, flags=flags + [f'terms={used}'], spec=spec)


def eval_mixed_form(n, phi, precision='native') -> EvalResult:
    """ S_n(phi,1) through n ctg(n phi), ctg(phi), two digamma values and a finite digamma sum """
    spec = SumSpec(Family.Csc, n, phi, 1)
    k = get_kernel(precision)
    with k.context():
        pi, phi, ln2 = k.pi, k.num(phi), k.ln2
        if phi == 0:
            parts = [-2 * n * k.log(k.num(n)) / pi, -2 * (k.euler + ln2) * (n - 1) / pi] + [-2 / pi * psi_term(k, k.num(l) / (2 * n), l) for l in range(1, n)]
        else:
            parts = [-2 * n * k.log(k.num(n)) / pi, -2 * (n - 1) * ln2 / pi, n * ctg(k, n * phi), -ctg(k, phi), 2 / pi * (n * psi(k, n * phi / pi) - psi(k, phi / pi))]
            z = phi / (2 * pi)
            parts += [-(psi_term(k, k.num(l) / (2 * n) + z, l) + psi_term(k, k.num(l) / (2 * n) - z, l)) / pi for l in range(1, n)]
        return EvalResult(k.out(k.fsum(parts)), Method.Mixed, estimate(k, parts) * 8, spec=spec)


# ----------------------------------------
# region INTEGRAL
def th_integrand(n, k=None):
    """ th(nx)/th(x) - 1, the integrand of S_n(0,1) """
    k = get_kernel('native' if k is None else k)
    if k.IsWide:
        return lambda x: (n - 1) if x == 0 else k.tanh(n * x) / k.tanh(x) - 1

    def f(x):
        with np.errstate(invalid='ignore', divide='ignore'):
            v = -np.expm1(-2 * n * x) * (1 + np.exp(-2 * x)) / ((1 + np.exp(-2 * n * x)) * -np.expm1(-2 * x)) - 1
        return np.where(x > 0, v, n - 1.)
    return f


def integrand(n, a, c, kappa, k):
    """ sh(ax(n-1)) ch(nxc) / (sh(ax) ch(nx)) written with decaying exponentials only """
    if k.IsWide:
        def f(x):
            if x == 0:
                return k.num(n - 1)
            return k.exp(-kappa * x) * k.expm1(-2 * a * x * (n - 1)) / k.expm1(-2 * a * x) * (1 + k.exp(-2 * n * x * abs(c))) / (1 + k.exp(-2 * n * x))
        return f

    def f(x):
        with np.errstate(invalid='ignore', divide='ignore'):
            v = np.exp(-kappa * x) * np.expm1(-2 * a * x * (n - 1)) / np.expm1(-2 * a * x) * (1 + np.exp(-2 * n * x * abs(c))) / (1 + np.exp(-2 * n * x))
        return np.where(x > 0, v, n - 1.)
    return f


def eval_integral_form(spec: SumSpec, cfg: QuadratureConfig = None, precision='native') -> EvalResult:
    """ (2n/pi) int_0^inf sh(ax(n-1)) ch(nxc) / (sh(ax) ch(nx)) dx with c = 2phi/pi + a - 1 (csc) or 2phi/pi + a (sec) """
    check_family(spec, Family.Csc, Family.Sec)
    cfg = QuadratureConfig() if cfg is None else cfg
    n, a = spec.n, float(spec.a)
    kappa, c, cond = integral_strip(spec.family, n, float(spec.phi), a)
    if not kappa > 0:
        raise DomainError(cond, (float(spec.phi), a))
    k = get_kernel(precision)
    tol = min(cfg.abs_tol, 1e-28) if k.IsWide else cfg.abs_tol
    cutoff = np.log(2 * (n - 1) / (kappa * min(cfg.truncation_ratio, tol))) / kappa
    th_form = spec.family == Family.Csc and float(spec.phi) == 0 and a == 1
    with k.context():
        if k.IsWide:
            kappa, c = integral_strip(spec.family, n, k.num(spec.phi), k.num(a), k.pi)[:2]
        f = th_integrand(n, k) if th_form else integrand(n, k.num(a), c, kappa, k)
        value, err, panels = integrate_half_line(f, 1 / (2 * max(n, a)), cutoff, cfg, k, tol)
        value = 2 * n / k.pi * value
        return EvalResult(k.out(value), Method.Integral, 2 * n / np.pi * (err + min(cfg.truncation_ratio, tol)) + float(abs(value)) * k.Eps * 10,
                          flags=[f'panels={panels}'], spec=spec)
# endregion INTEGRAL
# ----------------------------------------


# ----------------------------------------
# region DIGAMMA SUMMATION
class DigammaSum(str, Enum):
    PsiHalfGrid = 'psi-half-grid'
    WeightedPsiOddGrid = 'weighted-psi-odd-grid'
    PsiPairTangent = 'psi-pair-tangent'
    PsiPairCosecant = 'psi-pair-cosecant'
    CosecantViaWeightedPsi = 'cosecant-via-weighted-psi'
    CotangentOddGrid = 'cotangent-odd-grid'

    @property
    def NeedsZ(self):
        return self in (DigammaSum.PsiPairTangent, DigammaSum.PsiPairCosecant)


def digamma_summation_sides(ident: DigammaSum, n, z, k):
    pi, euler, ln2, log = k.pi, k.euler, k.ln2, k.log
    s_n = term_sum(Family.Csc, n, 0, 1, k=k)
    grid = [k.num(l) / (2 * n) for l in range(n + 1)]
    if ident == DigammaSum.PsiHalfGrid:
        return k.fsum(psi(k, g) for g in grid[1:]), -n * (euler + log(2 * n)) - ln2 - pi / 2 * s_n
    odd = [k.num(2 * l + 1) / (2 * n) for l in range(n)]
    weighted = k.fsum(x * psi(k, x) for x in odd)
    if ident == DigammaSum.WeightedPsiOddGrid:
        return weighted, -n * (euler + log(4 * n)) / 2 + pi / 4 * s_n
    if ident == DigammaSum.CosecantViaWeightedPsi:
        return s_n, 2 * n * (euler + log(4 * n)) / pi + 4 / pi * weighted
    if ident == DigammaSum.CotangentOddGrid:
        return s_n, -k.fsum((2 * j + 1) * ctg(k, pi * (2 * j + 1) / (2 * n)) for j in range(n)) / n
    z = k.num(z)
    if ident == DigammaSum.PsiPairTangent:
        lhs = k.fsum(psi(k, g + z) + psi(k, g - z) for g in grid[1:n])
        tg = term_sum(Family.Tg, 2 * n, pi * z, 1, 1, n - 1, k)
        return lhs, 2 * n * psi(k, 2 * n * z) - 2 * psi(k, 2 * z) - 2 * n * log(2 * n) + 2 * ln2 - pi * tg
    lhs = k.fsum(psi(k, g + z) + psi(k, g - z) for g in grid[1:])
    cs = term_sum(Family.Csc, n, 2 * pi * z, 1, k=k)
    rhs = [2 * n * psi(k, 2 * n * z), -2 * psi(k, 2 * z), 2 * psi(k, z + k.num(.5)), -2 * n * log(k.num(n)), -2 * (n - 1) * ln2, pi * n * ctg(k, 2 * pi * n * z),
           -pi / k.sin(2 * pi * z), -pi * cs]
    return lhs, k.fsum(rhs)


def digamma_summation_check(ident, n, z=None, precision='wide') -> float:
    """ |LHS - RHS| of a digamma summation formula; all digamma values from gammafun, S_n by direct summation """
    ident = DigammaSum(ident)
    if int(n) != n or n < 2:
        raise DomainError('n must be an integer >= 2', n)
    if ident.NeedsZ and z is None:
        raise DomainError(f'{ident.value} needs z')
    k = get_kernel(precision)
    with k.context():
        lhs, rhs = digamma_summation_sides(ident, int(n), z, k)
        return float(abs(lhs - rhs))
# endregion DIGAMMA SUMMATION
# ----------------------------------------
