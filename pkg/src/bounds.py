#!/usr/bin/env python
# --------------------------------------------------------
#       two-sided bounds of the cosecant and secant sums
# created on October 18th 2026
# --------------------------------------------------------
from enum import Enum

import numpy as np

from src.asymptotics import AsymptoticSeries, Flavor, asympt_Sn, asympt_Sn_phi_a, asympt_Sn_phi1, asympt_Cn, asympt_Cn_phi1, check_strip
from src.errors import DomainError
from src.numerics import EULER, check_positive_int, get_kernel
from src.sums import Family, S
from utility.utils import print_table

INF = float('inf')


class BoundFlavor(str, Enum):
    Harmonic = 'harmonic'
    Log = 'log'
    General = 'general'
    Phi1 = 'phi1'
    Secant = 'secant'
    SecantPhi1 = 'secant-phi1'
    CochranePeral = 'cochrane-peral'
    AlzerKoumandos = 'alzer-koumandos'
    Pomerance = 'pomerance'
    TongEtAl = 'tong'


class BoundPair:
    """ lower < sum < upper; one-sided bounds carry an infinite side """

    def __init__(self, lower, upper, flavor: BoundFlavor, valid=True, constants=None, n=None):
        self.Lower = lower
        self.Upper = upper
        self.Flavor = BoundFlavor(flavor)
        self.Valid = valid
        self.Constants = constants or {}
        self.n = n

    def __str__(self):
        return f'{float(self.Lower):.17g} < S < {float(self.Upper):.17g}'

    def __repr__(self):
        return f'{self.Flavor.value} bounds (n={self.n}): {self}' + ('' if self.Valid else ' [invalid]')

    def __contains__(self, value):
        return (float(self.Lower) == -INF or self.Lower < value) and (float(self.Upper) == INF or value < self.Upper)

    @property
    def lower(self):
        return self.Lower

    @property
    def upper(self):
        return self.Upper

    @property
    def width(self):
        return float(self.Upper) - float(self.Lower)

    @property
    def is_one_sided(self):
        return INF in (abs(float(self.Lower)), abs(float(self.Upper)))

    def row(self):
        return {'bound': self.Flavor.value, 'n': self.n, 'lower': float(self.Lower), 'upper': float(self.Upper), 'valid': self.Valid}


def enveloping_pair(series: AsymptoticSeries, flavor, constants=None, N=2) -> BoundPair:
    """ consecutive partial sums N and N + 1 of an enveloping expansion, ordered """
    k = series.Kernel
    with k.context():
        p, q = series.partial(N), series.partial(N + 1)
        lo, hi = min(p, q), max(p, q)
        return BoundPair(k.out(lo), k.out(hi), flavor, 'unreliable' not in series.Flags, constants, series.Spec.n)


# ----------------------------------------
# region S_n
def sn_bound_constants():
    pi = np.pi
    return {'A': pi / 36 - 1 / (6 * pi), 'B': 7 * pi ** 3 / 21600 - 1 / (60 * pi), 'C': pi / 36, 'D': 7 * pi ** 3 / 21600}


def bounds_Sn(n, flavor=BoundFlavor.Harmonic, precision='native') -> BoundPair:
    """ -A/n < S_n - (2n/pi)(H_n - ln(pi/2)) + 1/pi < -A/n + B/n^3, or the same with C, D around (2n/pi)(ln(2n/pi) + gamma) """
    flavor = BoundFlavor(flavor)
    if flavor not in (BoundFlavor.Harmonic, BoundFlavor.Log):
        raise DomainError('S_n bounds are harmonic or log', flavor.value)
    n = check_positive_int(n, minimum=2)
    c = sn_bound_constants()
    series = asympt_Sn(n, 3, Flavor.Harmonic if flavor == BoundFlavor.Harmonic else Flavor.Log, precision)
    constants = {key: c[key] for key in (('A', 'B') if flavor == BoundFlavor.Harmonic else ('C', 'D'))}
    return enveloping_pair(series, flavor, constants)
# endregion S_n
# ----------------------------------------


# ----------------------------------------
# region GENERAL STRIP AND SECANT
def general_constants(family, phi, a):
    """ A, B of the first two tail terms A/n and -B/n^3 """
    s = -1 if family == Family.Csc else 1
    if family == Family.Csc:
        u = [1 / np.sin(x) for x in (phi, phi + a * np.pi)]
        v = [np.cos(x) / np.sin(x) for x in (phi, phi + a * np.pi)]
    else:
        u = [1 / np.cos(x) for x in (phi, phi + a * np.pi)]
        v = [np.tan(x) for x in (phi, phi + a * np.pi)]
    f1 = [u[i] * v[i] for i in range(2)]
    f3 = [u[i] * v[i] ** 3 + 5 * u[i] ** 3 * v[i] for i in range(2)]
    return {'A': -s * a * np.pi / 12 * (f1[0] - f1[1]), 'B': -s * (a * np.pi) ** 3 / 720 * (f3[0] - f3[1])}


def bounds_Sn_phi_a(n, phi, a, precision='native') -> BoundPair:
    check_strip(Family.Csc, phi, a)
    return enveloping_pair(asympt_Sn_phi_a(n, phi, a, 3, precision), BoundFlavor.General, general_constants(Family.Csc, float(phi), float(a)))


def bounds_Sn_phi1(n, phi, precision='native') -> BoundPair:
    phi = float(phi)
    u, v = 1 / np.sin(phi), np.cos(phi) / np.sin(phi)
    constants = {'A': np.pi * u * v / 6, 'B': np.pi ** 3 / 360 * (u * v ** 3 + 5 * u ** 3 * v)}
    return enveloping_pair(asympt_Sn_phi1(n, phi, 3, precision), BoundFlavor.Phi1, constants)


def bounds_Cn(n, phi, a, precision='native') -> BoundPair:
    check_strip(Family.Sec, phi, a)
    return enveloping_pair(asympt_Cn(n, phi, a, 3, precision), BoundFlavor.Secant, general_constants(Family.Sec, float(phi), float(a)))


def bounds_Cn_phi1(n, phi, precision='native') -> BoundPair:
    phi = float(phi)
    u, v = 1 / np.cos(phi), np.tan(phi)
    constants = {'A': -np.pi * u * v / 6, 'B': -np.pi ** 3 / 360 * (u * v ** 3 + 5 * u ** 3 * v)}
    return enveloping_pair(asympt_Cn_phi1(n, phi, 3, precision), BoundFlavor.SecantPhi1, constants)
# endregion GENERAL STRIP AND SECANT
# ----------------------------------------


# ----------------------------------------
# region HISTORICAL
def historical_constants():
    pi = np.pi
    return {'cochrane-peral': 1 - 1 / pi, 'alpha': 1 - 4 * (EULER + 2 * np.log(2) - np.log(pi)) / pi, 'beta': 0., 'tong-lower': -.358 / pi, 'tong-upper': -.186 / pi}


def historical_bounds(n, precision='native') -> list:
    """ Cochrane-Peral, Alzer-Koumandos, Pomerance and Tong et al. bounds of S_n """
    n, k, c = check_positive_int(n, minimum=2), get_kernel(precision), historical_constants()
    with k.context():
        pi = k.pi
        center = 2 * n / pi * (k.log(2 * k.num(n) / pi) + k.euler)
        out = k.out
        return [BoundPair(-INF, out(center + 1 - 1 / pi), BoundFlavor.CochranePeral, constants={'c': c['cochrane-peral']}, n=n),
                BoundPair(out(center + 1 - 4 * (k.euler + 2 * k.ln2 - k.log(pi)) / pi), out(center), BoundFlavor.AlzerKoumandos,
                          constants={key: c[key] for key in ('alpha', 'beta')}, n=n),
                BoundPair(-INF, out(2 * n / pi * (k.log(4 * k.num(n) / pi) + pi ** 2 / (12 * k.num(n) ** 2))), BoundFlavor.Pomerance, n=n),
                BoundPair(out(center - k.num(.358) / (pi * n)), out(center - k.num(.186) / (pi * n)), BoundFlavor.TongEtAl,
                          constants={key: c[key] for key in ('tong-lower', 'tong-upper')}, n=n)]
# endregion HISTORICAL
# ----------------------------------------


def envelope_check(n, N, precision='wide'):
    """ whether S_n lies strictly between the partial sums N and N + 1 of the harmonic expansion; returns the flag, the pair and S_n """
    pair = enveloping_pair(asympt_Sn(n, N + 1, Flavor.Harmonic, precision), BoundFlavor.Harmonic, N=N)
    exact = S(n, 0, 1, precision).Value
    return exact in pair, pair, exact


def compare_upper_bounds(ns, precision='wide', prnt=True):
    """ upper bound minus S_n for the harmonic and log flavors and the historical upper bounds """
    rows = []
    for n in ns:
        exact = S(n, 0, 1, precision).Value
        pairs = [bounds_Sn(n, BoundFlavor.Harmonic, precision), bounds_Sn(n, BoundFlavor.Log, precision)] + historical_bounds(n, precision)
        rows.append([n] + [float(p.Upper - exact) for p in pairs])
    if prnt:
        print_table(rows, header=['n'] + [f.value for f in BoundFlavor if f not in (BoundFlavor.General, BoundFlavor.Phi1, BoundFlavor.Secant, BoundFlavor.SecantPhi1)])
    return rows


if __name__ == '__main__':
    print(bounds_Sn(10), historical_bounds(10))
