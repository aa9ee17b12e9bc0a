import numpy as np
import pytest

from src.asymptotics import Regime
from src.errors import DomainError
from src.figures import LN2, Figures
from src.sums import S


def test_sporadic_dominance():
    res = Figures().sporadic_dominance(nmax=60)
    assert set(res) == {'n', 'S', 'regime', 'ctg', 'log'}
    assert 2 <= res['n'] <= 60 and res['regime'] == Regime.CtgPlusLogAover1.value
    assert res['S'] == max(abs(S(n, 0, 2 * LN2).Value) for n in range(2, 61)) == abs(S(res['n'], 0, 2 * LN2).Value)
    assert res['log'] > 0 and res['ctg'] >= 0


@pytest.mark.parametrize('number, name', [('2', 'panels'), ('3', 'errors'), ('5', 'gaps')])
def test_figure_numbers(number, name):
    figures = Figures()
    assert figures(number, 12, 10) == figures(name, 12, 10)


def test_unknown_figure():
    with pytest.raises(DomainError):
        Figures()('4')


def test_slopes():
    rows = [[n, 1e-8 * n, 1e-6, 0.] for n in [100, 1000, 10000]]
    slopes = Figures.slopes(rows)
    assert slopes['direct'] == pytest.approx(1) and slopes['asympt:3'] == pytest.approx(0, abs=1e-12)
    assert Figures.bench_sizes(10 ** 4) == [100, 1000, 10000] and np.all(np.diff(Figures.bench_sizes(10 ** 5)) > 0)
