from src.analysis import Analysis
from utility.utils import Config, PBar, choose, print_table


def test_choose():
    assert choose(None, 3) == 3 and choose(0, 3) == 0
    assert choose(None, lambda x: 2 * x, 'None', 4) == 8
    assert choose(1, 2, decider=None) == 2 and choose(1, 2, decider=True) == 1


def test_print_table(capsys):
    rows = [['ctg-sum', 1.5e-30, 3], ['tg-sum', 2., 0]]
    assert print_table(rows, ['Check', 'Worst', 'Rejected'], ['all', '', 3]) is rows
    lines = capsys.readouterr().err.splitlines()
    assert len(lines) == 9 and lines[0] == lines[2] == lines[5] == lines[7] and set(lines[0]) == {'~'}
    assert lines[3].split('|')[2].strip() == '1.500e-30'
    print_table(rows, prnt=False)
    assert capsys.readouterr().err == ''


def test_config(tmp_path):
    path = tmp_path / 'test.ini'
    path.write_text('[sums]\npole distance = 1e-12\nflags = ["a", "b"]\nstrict = yes\n')
    cfg = Config(path)
    assert cfg.get_value('sums', 'pole distance', float) == 1e-12
    assert cfg.get_value('sums', 'flags', list) == ['a', 'b']
    assert cfg.get_value('sums', 'strict', bool) is True
    assert cfg.get_value('sums', 'missing', default=4) == 4 and cfg.get_value('nope', 'x') is None
    assert Config(path, 'sums').get_value('pole distance', dtype=float) == 1e-12


def test_analysis_config():
    assert Analysis.get_config('asymptotics', 'n0', int) == 8
    assert Analysis.get_config('asymptotics', 'unknown', default=1.) == 1.
    assert repr(Analysis()) == 'ANALYSIS (verbose=False)'


def test_silent_pbar():
    bar = PBar(10, prnt=False)
    bar.update()
    assert bar.Bar is None
