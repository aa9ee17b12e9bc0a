#!/usr/bin/env python
# --------------------------------------------------------
#       tanh-sinh quadrature on panels of a truncated half line
# created on October 18th 2026
# --------------------------------------------------------
from dataclasses import dataclass

import numpy as np

from src.analysis import Analysis
from src.errors import DomainError, QuadratureFailure
from src.numerics import get_kernel


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = Analysis.get_config('quadrature', 'abs tol', float, 1e-13)
    max_levels: int = Analysis.get_config('quadrature', 'max levels', int, 9)
    truncation_ratio: float = Analysis.get_config('quadrature', 'truncation ratio', float, 1e-20)
    max_panels: int = Analysis.get_config('quadrature', 'max panels', int, 4096)

    def __post_init__(self):
        if not self.abs_tol >= 1e-30:
            raise DomainError('abs_tol >= 1e-30', self.abs_tol)
        if not 0 < self.truncation_ratio <= 1e-20:
            raise DomainError('truncation_ratio <= 1e-20', self.truncation_ratio)
        if self.max_levels < 1:
            raise DomainError('max_levels >= 1', self.max_levels)


def tmax(k):
    """ |t| beyond which the double exponential weights underflow the working precision """
    return 4.2 if k.IsWide else 3.5


# ----------------------------------------
# region RULES
def native_nodes(level, t_max):
    h = 2. ** -level
    j = np.arange(1, int(t_max / h) + 1)
    t = (j if level == 0 else j[j % 2 == 1]) * h
    t = np.concatenate([-t[::-1], [0.] if level == 0 else [], t])
    u = np.pi / 2 * np.sinh(t)
    return np.tanh(u), np.pi / 2 * np.cosh(t) / np.cosh(u) ** 2


def tanh_sinh(f, lo, hi, tol, max_levels, k=None):
    """ Integrate f over [lo, hi], halving the step until two levels agree to tol. f is vectorised for the native kernel and scalar for the wide one. Returns value, error, levels. """
    k = get_kernel('native' if k is None else k)
    half, mid = (hi - lo) / 2, (hi + lo) / 2
    total, prev, t_max = 0, None, tmax(k)
    for level in range(max_levels + 1):
        if k.IsWide:
            total += k.fsum(w * f(mid + half * x) for x, w in wide_nodes(k, level, t_max))
        else:
            x, w = native_nodes(level, t_max)
            total += np.dot(w, f(mid + half * x))
        value = half * total * 2 ** -level
        if prev is not None and level >= 2 and abs(value - prev) < tol:
            return value, abs(value - prev), level
        prev, err = value, (abs(value - prev) if prev is not None else float('inf'))
    raise QuadratureFailure(max_levels, err, tol)


def wide_nodes(k, level, t_max):
    h = k.num(2) ** -level
    for j in range(-int(t_max * 2 ** level), int(t_max * 2 ** level) + 1):
        if level and not j % 2:
            continue
        t = j * h
        u = k.pi / 2 * k.sinh(t)
        yield k.tanh(u), k.pi / 2 * k.cosh(t) / k.cosh(u) ** 2
# endregion RULES
# ----------------------------------------


def integrate_half_line(f, scale, cutoff, cfg: QuadratureConfig = None, precision='native', tol=None):
    """ Integral of f over [0, cutoff] on the panels [0, s], [s, 2s], [2s, 4s], ... with s = scale.
        Returns value, error, number of panels. Run inside the kernel context for the wide tier. """
    cfg = QuadratureConfig() if cfg is None else cfg
    k = get_kernel(precision)
    edges = [0, scale]
    while edges[-1] < cutoff:
        edges.append(min(2 * edges[-1], cutoff) if 2 * edges[-1] < 1.5 * cutoff else cutoff)
        if len(edges) > cfg.max_panels:
            raise QuadratureFailure(0, float('inf'), cfg.abs_tol)
    tol = cfg.abs_tol if tol is None else tol
    values, errors = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e, _ = tanh_sinh(f, k.num(lo), k.num(hi), tol / (len(edges) - 1), cfg.max_levels, k)
        values.append(v)
        errors.append(e)
    return k.fsum(values), float(sum(errors)), len(edges) - 1
