#!/usr/bin/env python
# --------------------------------------------------------
#       exact and compensated arithmetic: Bernoulli numbers, harmonic numbers, double-wide floats
# created on October 18th 2026
# --------------------------------------------------------
import math
from contextlib import nullcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import chain
from typing import Iterable, Union

import mpmath
import numpy as np
from mpmath import mp, mpf

from src.analysis import Analysis
from src.errors import DomainError

WidePrec = Analysis.get_config('numerics', 'wide precision', int, 128)
HarmonicSwitch = Analysis.get_config('numerics', 'harmonic switch', int, 10000)
MaxBernoulli = Analysis.get_config('numerics', 'max bernoulli', int, 120)

EULER = 0.5772156649015329
SPLITTER = 134217729.0  # 2^27 + 1


# ----------------------------------------
# region ERROR FREE TRANSFORMS
def two_sum(a, b):
    """ s + e == a + b exactly (Knuth). Works elementwise on numpy arrays. """
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    """ requires |a| >= |b| """
    s = a + b
    return s, b - (s - a)


def split(a):
    c = SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    """ p + e == a * b exactly. Uses fma for scalars when available, the Dekker split otherwise (also for arrays). """
    p = a * b
    if hasattr(math, 'fma') and not isinstance(p, np.ndarray):
        return p, math.fma(a, b, -p)
    ahi, alo = split(a)
    bhi, blo = split(b)
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
# endregion ERROR FREE TRANSFORMS
# ----------------------------------------


class DoubleWide(tuple):
    """ Unevaluated sum hi + lo of two doubles with |lo| <= ulp(hi)/2 (about 31 significant digits). """
    __slots__ = ()

    def __new__(cls, hi: float = 0., lo: float = 0.):
        return super().__new__(cls, two_sum(float(hi), float(lo)))

    @property
    def hi(self):
        return self[0]

    @property
    def lo(self):
        return self[1]

    # ----------------------------------------
    # region CONVERSION
    @staticmethod
    def make(x) -> 'DoubleWide':
        if isinstance(x, DoubleWide):
            return x
        if isinstance(x, Fraction):
            return DoubleWide.from_fraction(x)
        if isinstance(x, mpf):
            return DoubleWide.from_mpf(x)
        return DoubleWide(float(x))

    @staticmethod
    def from_mpf(x) -> 'DoubleWide':
        hi = float(x)
        return DoubleWide(hi, float(mpmath.fsub(x, hi, exact=True))) if math.isfinite(hi) else DoubleWide(hi)

    @staticmethod
    def from_fraction(q: Fraction) -> 'DoubleWide':
        hi = float(q)
        return DoubleWide(hi, float(q - Fraction(hi)))

    def to_mpf(self):
        return mpmath.fadd(self[0], self[1], exact=True)

    def to_fraction(self):
        return Fraction(self[0]) + Fraction(self[1])

    def __float__(self):
        return self[0] + self[1]
    # endregion CONVERSION
    # ----------------------------------------

    def __repr__(self):
        return f'DoubleWide(hi={self[0]!r}, lo={self[1]!r})'

    def __str__(self):
        return mpmath.nstr(self.to_mpf(), 32) if math.isfinite(self[0]) else str(self[0])

    # ----------------------------------------
    # region ARITHMETIC
    def __add__(self, other):
        other = DoubleWide.make(other)
        s, e = two_sum(self[0], other[0])
        t, f = two_sum(self[1], other[1])
        s, e = quick_two_sum(s, e + t)
        return DoubleWide(*quick_two_sum(s, e + f))

    __radd__ = __add__

    def __neg__(self):
        return DoubleWide(-self[0], -self[1])

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self[0] < 0 or (self[0] == 0 and self[1] < 0) else self

    def __sub__(self, other):
        return self + -DoubleWide.make(other)

    def __rsub__(self, other):
        return DoubleWide.make(other) - self

    def __mul__(self, other):
        other = DoubleWide.make(other)
        p, e = two_prod(self[0], other[0])
        return DoubleWide(*quick_two_sum(p, e + (self[0] * other[1] + self[1] * other[0])))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = DoubleWide.make(other)
        q1 = self[0] / other[0]
        r = self - other * q1
        q2 = r[0] / other[0]
        r = r - other * q2
        return DoubleWide(*quick_two_sum(q1, q2)) + r[0] / other[0]

    def __rtruediv__(self, other):
        return DoubleWide.make(other) / self
    # endregion ARITHMETIC
    # ----------------------------------------

    # ----------------------------------------
    # region COMPARISON
    def _cmp(self, other):
        d = self - other
        return (d[0] > 0 or d[0] == 0 and d[1] > 0) - (d[0] < 0 or d[0] == 0 and d[1] < 0)

    def __eq__(self, other):
        return self._cmp(other) == 0

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    __hash__ = tuple.__hash__
    # endregion COMPARISON
    # ----------------------------------------


Number = Union[float, int, Fraction, DoubleWide, mpf]


# ----------------------------------------
# region SUMMATION
class Accumulator:
    """ Exact running sum kept as non-overlapping partials (Shewchuk). Merging accumulators is exact, so partial reductions can be combined in any order. """

    def __init__(self, terms: Iterable = ()):
        self.Partials = []
        self.extend(terms)

    def __repr__(self):
        return f'{self.__class__.__name__} with {len(self.Partials)} partials: {self.value()}'

    def add(self, x):
        if isinstance(x, DoubleWide):
            return self.add(x[0]).add(x[1])
        x = float(x)
        if not math.isfinite(x):
            raise DomainError('all summands must be finite', x)
        i = 0
        for y in self.Partials:
            if abs(x) < abs(y):
                x, y = y, x
            hi, lo = quick_two_sum(x, y)
            if lo:
                self.Partials[i] = lo
                i += 1
            x = hi
        self.Partials[i:] = [x]
        return self

    def extend(self, terms: Iterable):
        for t in terms:
            self.add(t)
        return self

    def merge(self, other: 'Accumulator'):
        return self.extend(other.Partials)

    def value(self) -> DoubleWide:
        hi = math.fsum(self.Partials)
        return DoubleWide(hi, math.fsum(self.Partials + [-hi]))


def compensated_sum(terms: Iterable) -> DoubleWide:
    """ Exact sum of the inputs rounded to a DoubleWide; the result does not depend on the order of the terms. """
    values = np.fromiter(chain.from_iterable(t if isinstance(t, DoubleWide) else (t,) for t in terms), dtype='d')
    if not np.isfinite(values).all():
        raise DomainError('all summands must be finite', values[~np.isfinite(values)][0])
    hi = math.fsum(values)
    return DoubleWide(hi, math.fsum(chain(values, [-hi])))
# endregion SUMMATION
# ----------------------------------------


# ----------------------------------------
# region TURNS
def reduce_turns(t):
    """ reduce an angle given in units of pi to [-1, 1] """
    r = np.fmod(t, 2.)
    r = np.where(r > 1, r - 2., r)
    return np.where(r < -1, r + 2., r)


def sinpi(t):
    """ sin(pi t) with exact reduction, elementwise """
    r = reduce_turns(t)
    r = np.where(r > .5, 1. - r, r)
    return np.sin(np.pi * np.where(r < -.5, -1. - r, r))


def cospi(t):
    r = np.abs(reduce_turns(t))
    return np.where(r < .25, np.cos(np.pi * r), np.sin(np.pi * (.5 - r)))


def turn_distance(t, shift=0.):
    """ distance (in units of pi) from t to the lattice shift + Z """
    r = np.abs(reduce_turns(np.asarray(t) - shift))
    return np.minimum(r, 1. - r)
# endregion TURNS
# ----------------------------------------


# ----------------------------------------
# region PRECISION KERNELS
class Precision(str, Enum):
    Native = 'native'
    Wide = 'wide'


class NativeKernel:
    """ 64-bit float arithmetic """

    Tier = Precision.Native
    Eps = 2. ** -52
    IsWide = False

    def __repr__(self):
        return 'native kernel'

    @staticmethod
    def context():
        return nullcontext()

    @staticmethod
    def num(x):
        return float(x)

    @staticmethod
    def out(x):
        return float(x)

    pi = math.pi
    euler = EULER
    ln2 = math.log(2)
    sin, cos, tan, sinh, cosh, tanh = math.sin, math.cos, math.tan, math.sinh, math.cosh, math.tanh
    log, exp, expm1, log1p, sqrt = math.log, math.exp, math.expm1, math.log1p, math.sqrt

    @staticmethod
    def sinpi(x):
        return float(sinpi(x))

    @staticmethod
    def cospi(x):
        return float(cospi(x))

    @staticmethod
    def fsum(terms):
        return float(compensated_sum(terms))

    @staticmethod
    def floor(x):
        return math.floor(x)


class WideKernel:
    """ mpmath arithmetic at the configured working precision; results leave as DoubleWide """

    Tier = Precision.Wide
    Eps = 1e-30
    IsWide = True
    Bits = WidePrec

    def __repr__(self):
        return f'wide kernel ({self.Bits} bits)'

    def context(self):
        return mp.workprec(self.Bits)

    @staticmethod
    def num(x):
        if isinstance(x, DoubleWide):
            return x.to_mpf()
        if isinstance(x, Fraction):
            return mpf(x.numerator) / x.denominator
        return mpf(x)

    @staticmethod
    def out(x):
        """ exact for mpf, Fraction and DoubleWide input, independent of the working precision """
        return DoubleWide.make(x) if isinstance(x, (mpf, Fraction, DoubleWide)) else DoubleWide.from_mpf(mpf(x))

    @property
    def pi(self):
        return +mp.pi

    @property
    def euler(self):
        return +mp.euler

    @property
    def ln2(self):
        return +mp.ln2

    sin, cos, tan, sinh, cosh, tanh = map(staticmethod, [mpmath.sin, mpmath.cos, mpmath.tan, mpmath.sinh, mpmath.cosh, mpmath.tanh])
    log, exp, expm1, log1p, sqrt = map(staticmethod, [mpmath.log, mpmath.exp, mpmath.expm1, mpmath.log1p, mpmath.sqrt])
    sinpi, cospi, floor = map(staticmethod, [mpmath.sinpi, mpmath.cospi, mpmath.floor])

    @staticmethod
    def fsum(terms):
        return mpmath.fsum(terms)


Native, Wide = NativeKernel(), WideKernel()


def get_kernel(precision='native'):
    if isinstance(precision, (NativeKernel, WideKernel)):
        return precision
    try:
        return Wide if Precision(precision) == Precision.Wide else Native
    except ValueError:
        raise DomainError('precision must be "native" or "wide"', precision)
# endregion PRECISION KERNELS
# ----------------------------------------


# ----------------------------------------
# region BERNOULLI
class BernoulliTable:
    """ exact Bernoulli numbers B_0..B_max with their nearest-even float projections """

    def __init__(self, max_index: int):
        self.MaxIndex = max_index
        self.Values = bernoulli_numbers(max_index)
        self.Floats = tuple(float(b) for b in self.Values)

    def __getitem__(self, i):
        return self.Values[i]

    def __len__(self):
        return len(self.Values)

    def __repr__(self):
        return f'Bernoulli table B_0..B_{self.MaxIndex}'

    def even(self, r: int) -> Fraction:
        if 2 * r > self.MaxIndex:
            raise DomainError(f'B_{2 * r} requires max_index >= {2 * r}', self.MaxIndex)
        return self.Values[2 * r]


@lru_cache(maxsize=None)
def bernoulli_numbers(max_index: int) -> tuple:
    """ Akiyama-Tanigawa triangle, returned with the B_1 = -1/2 convention """
    a = [Fraction(0)] * (max_index + 1)
    values = []
    for m in range(max_index + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        values.append(a[0])
    if max_index >= 1:
        values[1] = -values[1]
    return tuple(values)


@lru_cache(maxsize=None)
def bernoulli_table(max_index: int = MaxBernoulli) -> BernoulliTable:
    if int(max_index) != max_index or max_index % 2 or not 2 <= max_index <= 120:
        raise DomainError('max_index must be even with 2 <= max_index <= 120', max_index)
    return BernoulliTable(int(max_index))


def bernoulli_even(r: int) -> Fraction:
    """ B_{2r} from the default table """
    return bernoulli_table().even(r)
# endregion BERNOULLI
# ----------------------------------------


def check_positive_int(n, name='n', minimum=1):
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise DomainError(f'{name} must be an integer >= {minimum}', n)
    return int(n)


def harmonic(n: int) -> DoubleWide:
    """ H_n as a double-wide number.
        Up to `[numerics] harmonic switch` (default n = 10^4) the reciprocals are summed with their rounding errors.
        Above it H_n = ln n + gamma + 1/2n - sum_r B_2r / (2r n^2r) is summed in wide precision until the terms drop below the working precision. """
    n = check_positive_int(n)
    if n <= HarmonicSwitch:
        k = np.arange(1, n + 1, dtype='d')
        q = 1. / k
        p, e = two_prod(q, k)
        return compensated_sum(np.concatenate([q, ((1. - p) - e) / k]))
    with mp.workprec(WidePrec):
        x = mpf(n)
        h = mpmath.log(x) + mp.euler + 1 / (2 * x)
        for r in range(1, 30):
            t = Wide.num(bernoulli_even(r)) / (2 * r * x ** (2 * r))
            h -= t
            if abs(t) < mpf(2) ** (-WidePrec - 8) * h:
                break
        return DoubleWide.from_mpf(h)


def zeta_even(r: int, table: BernoulliTable = None) -> DoubleWide:
    """ zeta(2r) = (-1)^(r+1) (2 pi)^(2r) B_2r / (2 (2r)!) """
    r = check_positive_int(r, 'r')
    table = choose_table(table)
    b = table.even(r)
    with mp.workprec(WidePrec):
        return DoubleWide.from_mpf((-1) ** (r + 1) * (2 * mp.pi) ** (2 * r) * Wide.num(b) / (2 * mpmath.factorial(2 * r)))


def choose_table(table=None):
    return bernoulli_table() if table is None else table


if __name__ == '__main__':
    t = bernoulli_table(12)
    print(t[12], harmonic(3), zeta_even(2))
