#!/usr/bin/env python
# --------------------------------------------------------
#       registry of identity checks run with random parameter draws
# created on October 18th 2026
# --------------------------------------------------------
from collections import namedtuple
from typing import Callable

import numpy as np

from src.analysis import Analysis
from src.errors import DomainError, TrigSumError
from src.identities import IdentityCase, IdentityId, NearOneTol, WideTol, half_grid_table_residual, relative_residual, run_digamma_hartley, run_dht_roundtrip, run_identity
from src.numerics import Wide
from src.representations import DigammaSum, digamma_summation_sides
from src.sums import SumIdentity, sides
from utility.utils import PBar, choose, print_table

DefaultDraws = Analysis.get_config('corpus', 'draws', int, 50)
MaxRejects = Analysis.get_config('corpus', 'max rejects', int, 20)
RoundTripTol = 1e-12
NearOne = 1e-3


class CheckResult(namedtuple('CheckResult', 'name group draws passed worst tol rejected inverted')):

    @property
    def ok(self):
        return self.passed == self.draws and self.draws > 0

    def row(self):
        return {'check': self.name, 'group': self.group, 'draws': self.draws, 'passed': self.passed, 'worst residual': self.worst, 'tol': self.tol,
                'rejected': self.rejected, 'ok': self.ok}


class Check:
    """ one identity with a parameter drawer; inverted checks pass when the residual exceeds the tolerance """

    def __init__(self, name, group, draw: Callable, evaluate: Callable, description=None, inverted=False):
        self.Name = name
        self.Group = group
        self.Draw = draw
        self.Evaluate = evaluate
        self.Description = choose(description, name)
        self.Inverted = inverted

    def __call__(self, rng):
        """ draws parameters until they lie in the domain, returns (residual, tol, params) """
        for _ in range(MaxRejects):
            params, tol = self.Draw(rng)
            try:
                return self.Evaluate(params), tol, params
            except TrigSumError:
                continue
        raise DomainError(f'no valid parameters for {self.Name} after {MaxRejects} draws')

    def __str__(self):
        return self.Name

    def __repr__(self):
        return f'{self.Group} check {self.Name}' + (' (inverted)' if self.Inverted else '') + f': {self.Description}'

    def passes(self, residual, tol):
        return residual > tol if self.Inverted else residual <= tol


# ----------------------------------------
# region DRAWS
def draw_int(rng, lo, hi, odd=False):
    if odd:
        return 2 * int(rng.integers((lo - 1) // 2, (hi - 1) // 2, endpoint=True)) + 1
    return int(rng.integers(lo, hi, endpoint=True))


def draw_x(rng, lo=-3., hi=3., gap=.05):
    """ x away from 0 and +-1; the tolerance is relaxed close to |x| = 1 """
    while True:
        x = float(rng.uniform(lo, hi))
        if abs(x) > gap and abs(abs(x) - 1) > 1e-6:
            return x, NearOneTol if abs(abs(x) - 1) < NearOne else WideTol


def identity_draw(ident: IdentityId):
    def f(rng):
        tol = WideTol
        odd = ident in (IdentityId.TgSquareOdd, IdentityId.AlternatingCsc, IdentityId.AlternatingSec)
        p = {'n': draw_int(rng, 3 if ident == IdentityId.TgSquareOdd else 1, 11 if odd else 12, odd)}
        if ident == IdentityId.Eisenstein:
            p['n'] = draw_int(rng, 2, 16)
            p['j'] = draw_int(rng, 1, p['n'] - 1)
        if ident == IdentityId.SecCos:
            p['j'] = draw_int(rng, 0, 2 * p['n'] - 1)
        if ident.UsesPhi:
            p['phi'] = float(rng.uniform(-np.pi, np.pi))
        if ident.UsesX:
            p['x'], tol = draw_x(rng, .05 if ident == IdentityId.LogDerivative else -3.)
        return p, tol
    return f


def sum_identity_draw(ident: SumIdentity):
    def f(rng):
        k = draw_int(rng, 2, 3) if ident in (SumIdentity.Multiplication, SumIdentity.MultiplicationCommuted) else draw_int(rng, 1, 2)
        return {'n': draw_int(rng, 1, 8), 'phi': float(rng.uniform(-1.5, 1.5)), 'a': float(rng.uniform(.1, 1.9)), 'k': k}, WideTol
    return f


def digamma_sum_draw(ident: DigammaSum):
    def f(rng):
        return {'n': draw_int(rng, 2, 10), 'z': float(rng.uniform(.02, .98)) if ident.NeedsZ else None}, WideTol
    return f


def hartley_draw(rng):
    n = draw_int(rng, 1, 16)
    return {'n': n, 'nu': draw_int(rng, 1, n)}, WideTol


def roundtrip_draw(rng):
    n = draw_int(rng, 1, 64)
    return {'n': n, 'signal': rng.normal(size=n)}, RoundTripTol


def uncorrected_draw(rng):
    return {'n': draw_int(rng, 1, 8), 'x': float(rng.uniform(1.2, 3))}, WideTol


def sum_identity_residual(ident: SumIdentity):
    def f(p):
        with Wide.context():
            return relative_residual(*sides(ident, **p))
    return f


def digamma_sum_residual(ident: DigammaSum):
    def f(p):
        with Wide.context():
            return relative_residual(*digamma_summation_sides(ident, p['n'], p['z'], Wide))
    return f
# endregion DRAWS
# ----------------------------------------


class Corpus(Analysis):
    """ Named collection of identity checks with functionality to list, filter and run them. """

    def __init__(self, verbose=False):
        super().__init__(verbose)
        self.Checks = {}
        self.make()

    def __getitem__(self, name):
        return self.get(name)

    def __iter__(self):
        return iter(self.Checks.values())

    def __len__(self):
        return len(self.Checks)

    def __repr__(self):
        return f'{self} instance with {len(self)} checks in {len(self.groups)} groups'

    def make(self):
        for ident in IdentityId:
            self.register(Check(ident.value, 'trig', identity_draw(ident), lambda p, i=ident: run_identity(IdentityCase(i, p))))
        self.register(Check('digamma-hartley', 'trig', hartley_draw, lambda p: run_digamma_hartley(**p), 'digamma values weighted with the Hartley kernel'))
        self.register(Check('dht-roundtrip', 'trig', roundtrip_draw, lambda p: run_dht_roundtrip(**p), 'the discrete Hartley transform is its own inverse'))
        self.register(Check('half-grid-uncorrected', 'trig', uncorrected_draw, lambda p: half_grid_table_residual(p['n'], p['x'], corrected=False),
                            'table entry with the numerator x^2n - 1 must fail', inverted=True))
        for ident in SumIdentity:
            self.register(Check(ident.value, 'special' if ident.Special else 'functional', sum_identity_draw(ident), sum_identity_residual(ident)))
        for ident in DigammaSum:
            self.register(Check(ident.value, 'digamma', digamma_sum_draw(ident), digamma_sum_residual(ident)))

    def register(self, check: Check):
        if check.Name in self.Checks:
            return self.warning(f'{check.Name} is already registered')
        self.Checks[check.Name] = check

    def get(self, name):
        if name not in self.Checks:
            raise DomainError(f'unknown check, choose from {self.names}', name)
        return self.Checks[name]

    def remove(self, name):
        return self.Checks.pop(name, None)

    @property
    def names(self):
        return [c.Name for c in self]

    @property
    def groups(self):
        return sorted({c.Group for c in self})

    def select(self, names=None, group=None):
        checks = list(self) if names is None else [self.get(name) for name in names]
        return [c for c in checks if group is None or c.Group == group]

    def show(self, prnt=True):
        return print_table([[c.Name, c.Group, 'x' if c.Inverted else '', c.Description] for c in self], ['Check', 'Group', 'Inv', 'Description'], prnt=prnt)

    def run_check(self, check: Check, draws, rng, pbar=None) -> CheckResult:
        passed, residuals, tol, rejected = 0, [], 0., 0
        for _ in range(draws):
            try:
                residual, t, params = check(rng)
            except DomainError:
                rejected += 1
                continue
            finally:
                if pbar is not None:
                    pbar.update()
            passed += check.passes(residual, t)
            residuals.append(residual)
            tol = max(tol, t)
            if not check.passes(residual, t):
                self.warning(f'{check.Name} failed for {params}: residual {residual:.3e} (tol {t:.0e})')
        worst = (min if check.Inverted else max)(residuals, default=0.)
        return CheckResult(check.Name, check.Group, draws - rejected, passed, worst, tol, rejected, check.Inverted)

    def run(self, draws=None, seed=None, names=None, group=None, prnt=None) -> list:
        """ runs every selected check with random parameter draws and prints the summary table """
        draws = choose(draws, DefaultDraws)
        if draws < 1:
            raise DomainError('draws >= 1', draws)
        checks, rng = self.select(names, group), np.random.default_rng(seed)
        pbar = PBar(len(checks) * draws, counter=True, prnt=self.Verbose)
        results = [self.run_check(c, draws, rng, pbar) for c in checks]
        self.show_results(results, choose(prnt, self.Verbose))
        return results

    @staticmethod
    def show_results(results, prnt=True):
        rows = [[r.name, r.group, f'{r.passed}/{r.draws}', f'{r.worst:.2e}', f'{r.tol:.0e}', r.rejected, 'ok' if r.ok else 'FAIL'] for r in results]
        if rows:
            n = sum(r.ok for r in results)
            print_table(rows, ['Check', 'Group', 'Passed', 'Worst', 'Tol', 'Rejected', ''], ['all', '', f'{n}/{len(results)}', '', '', '', 'ok' if n == len(results) else 'FAIL'], prnt)
        return rows


if __name__ == '__main__':
    z = Corpus(verbose=True)
    z.show()
    z.run(5, seed=1)
