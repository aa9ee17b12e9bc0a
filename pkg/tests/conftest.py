#!/usr/bin/env python
# --------------------------------------------------------
#       shared fixtures: 50 digit mpmath oracle and a seeded generator
# created on October 18th 2026
# --------------------------------------------------------
import sys
from pathlib import Path

import mpmath
import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

OracleDigits = 50


def oracle_sum(family, n, phi, a=1, lower=1, upper=None, pv=False):
    """ sum_{l=lower}^{upper} f(phi + a pi l/n) term by term in mpmath; pole terms are dropped in p.v. mode """
    upper = n - 1 if upper is None else upper
    with mpmath.workdps(OracleDigits):
        phi, a, total = mpmath.mpf(phi), mpmath.mpf(a), mpmath.mpf(0)
        for l in range(lower, upper + 1):
            x = phi + a * mpmath.pi * l / n
            s, c = mpmath.sin(x), mpmath.cos(x)
            den = {'csc': s, 'sec': c, 'tg': c, 'ctg': s}[family]
            if pv and abs(den) < mpmath.mpf(10) ** -30:
                continue
            total += {'csc': 1 / s, 'sec': 1 / c, 'tg': s / c, 'ctg': c / s}[family]
        return +total


@pytest.fixture
def mp_sum():
    return oracle_sum


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)
