#!/usr/bin/env python
# --------------------------------------------------------
#       data tables behind the comparison figures and the timing bench
# created on October 18th 2026
# --------------------------------------------------------
from time import perf_counter

import numpy as np
from scipy.stats import linregress

from src.analysis import Analysis
from src.asymptotics import Flavor, asympt_Sn, asympt_Sn_0a, classify_regime
from src.bounds import BoundFlavor, bounds_Sn, historical_bounds
from src.errors import DomainError
from src.sums import S
from utility.utils import PBar

LN2 = np.log(2)
Panels = [(2 * LN2, 1.), (0., 1.), (0., 2 * LN2), (0., LN2)]
PanelNames = ['S(2ln2,1)', 'S(0,1)', 'S(0,2ln2)', 'S(0,ln2)']
WideOracleMax = Analysis.get_config('figures', 'wide oracle max', int, 100000)


class Figures(Analysis):
    """ Produces the rows of the comparison tables as (header, rows). """

    Which = {'panels': 'panels', 'errors': 'expansion_errors', 'gaps': 'bound_gaps', '2': 'panels', '3': 'expansion_errors', '5': 'bound_gaps'}

    def __init__(self, verbose=False):
        super().__init__(verbose)
        self.PBar = PBar(prnt=verbose)
        if verbose:
            self.print_start()

    def __call__(self, which, nmax=None, nmin=None):
        if which not in self.Which:
            raise DomainError(f'figure must be one of {list(self.Which)}', which)
        return getattr(self, self.Which[which])(**{key: v for key, v in [('nmax', nmax), ('nmin', nmin)] if v is not None})

    def sweep(self, ns, f):
        ns = list(ns)
        self.PBar.start(len(ns))
        rows = []
        for n in ns:
            rows.append(f(n))
            self.PBar.update()
        return rows

    @staticmethod
    def check_range(nmin, nmax, minimum=2):
        if nmin < minimum or nmax < nmin:
            raise DomainError(f'{minimum} <= nmin <= nmax', (nmin, nmax))
        return range(int(nmin), int(nmax) + 1)

    def panels(self, nmax=500, nmin=2):
        """ S_n(phi, a) as a function of n for the four regime panels """
        t = self.info(f'computing S_n for n = {nmin}..{nmax} on {len(Panels)} panels')
        rows = self.sweep(self.check_range(nmin, nmax), lambda n: [n] + [S(n, phi, a).Value for phi, a in Panels])
        self.add_info(t)
        return ['n'] + PanelNames, rows

    def expansion_errors(self, nmax=200, nmin=2):
        """ absolute errors of the log and harmonic S_n expansions at N = 3 and N = 4 against the wide direct sum """
        def row(n):
            exact = S(n, 0, 1, 'wide').Value
            errors = [abs(float(asympt_Sn(n, N, fl, 'wide').value - exact)) for N in (3, 4) for fl in (Flavor.Harmonic, Flavor.Log)]
            return [n] + errors
        t = self.info(f'computing expansion errors for n = {nmin}..{nmax}')
        rows = self.sweep(self.check_range(nmin, nmax), row)
        self.add_info(t)
        return ['n', 'harmonic N=3', 'log N=3', 'harmonic N=4', 'log N=4'], rows

    def bound_gaps(self, nmax=2000, nmin=10):
        """ upper bound minus S_n for the harmonic and log bounds and the Pomerance and Tong et al. bounds """
        def row(n):
            exact = S(n, 0, 1, 'wide').Value
            hist = {b.Flavor: b for b in historical_bounds(n, 'wide')}
            pairs = [bounds_Sn(n, BoundFlavor.Harmonic, 'wide'), bounds_Sn(n, BoundFlavor.Log, 'wide'), hist[BoundFlavor.Pomerance], hist[BoundFlavor.TongEtAl]]
            gaps = [float(p.Upper - exact) for p in pairs]
            return [n] + gaps + [gaps[0] / float(exact)]
        t = self.info(f'computing upper bound gaps for n = {nmin}..{nmax}')
        rows = self.sweep(self.check_range(nmin, nmax), row)
        self.add_info(t)
        return ['n', 'harmonic', 'log', 'pomerance', 'tong', 'harmonic relative'], rows

    def sporadic_dominance(self, nmax=500, phi=0., a=2 * LN2):
        """ at the n of the largest |S_n(phi, a)| for n <= nmax: magnitudes of the sporadic ctg term and of the log term """
        regime = classify_regime(phi, a)
        values = np.array(self.sweep(range(2, nmax + 1), lambda n: abs(S(n, phi, a).Value)))
        n = int(np.argmax(values)) + 2
        leading = asympt_Sn_0a(n, a).Leading
        return {'n': n, 'S': float(values[n - 2]), 'regime': regime.regime.value, 'ctg': abs(float(leading.get('ctg', 0))), 'log': abs(float(leading['log']))}

    # ----------------------------------------
    # region BENCH
    @staticmethod
    def timed(f, reps):
        times = []
        for _ in range(reps):
            t = perf_counter()
            value = f()
            times.append(perf_counter() - t)
        return float(np.median(times)), value

    @staticmethod
    def bench_sizes(nmax, nmin=100):
        if nmax < nmin:
            raise DomainError(f'nmax >= {nmin}', nmax)
        return np.unique(np.logspace(np.log10(nmin), np.log10(nmax), max(2, int(np.log10(nmax / nmin)) + 1)).round().astype('i8')).tolist()

    def bench(self, nmax=10 ** 6, reps=5, nmin=100):
        """ median wall time of the direct sum and of the N = 3 expansion of S_n, with the relative accuracy of the expansion """
        reps = max(1, int(reps))

        def row(n):
            t_direct, direct = self.timed(lambda: S(n, 0, 1).Value, reps)
            t_asympt, approx = self.timed(lambda: asympt_Sn(n, 3).value, reps)
            exact = float(S(n, 0, 1, 'wide').Value) if n <= WideOracleMax else direct
            return [n, t_direct, t_asympt, abs(approx - exact) / exact]
        t = self.info(f'timing direct and asymptotic evaluation for n up to {nmax}')
        rows = self.sweep(self.bench_sizes(nmax, nmin), row)
        self.add_info(t)
        return ['n', 'direct [s]', 'asympt:3 [s]', 'asympt:3 relative error'], rows

    @staticmethod
    def slopes(rows):
        """ log-log slopes of the direct and asymptotic timings against n """
        ns, direct, asympt = (np.array([r[i] for r in rows], 'd') for i in range(3))
        return {name: linregress(np.log(ns), np.log(np.maximum(t, 1e-9))).slope for name, t in [('direct', direct), ('asympt:3', asympt)]}
    # endregion BENCH
    # ----------------------------------------


if __name__ == '__main__':
    z = Figures(verbose=True)
    print(z.bound_gaps(60, 50)[1][-1], z.sporadic_dominance(200))
