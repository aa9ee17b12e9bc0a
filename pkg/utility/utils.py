# --------------------------------------------------------
#       UTILITY FUNCTIONS
# created on October 18th 2026
# --------------------------------------------------------
from configparser import ConfigParser, NoOptionError, NoSectionError
from datetime import datetime
from json import loads
from pathlib import Path
import sys
from time import time

from progressbar import Bar, ETA, Percentage, ProgressBar, SimpleProgress
from termcolor import colored as tcolored


Dir = Path(__file__).resolve().parent.parent

GREEN = 'green'
YELLOW = 'yellow'
RED = 'red'
CYAN = 'cyan'


# ----------------------------------------
# region LOGGING
def get_t_str():
    return datetime.now().strftime('%H:%M:%S')


def colored(string, color=None, attrs=None):
    return string if color is None else tcolored(string, color, attrs=attrs)


def info(msg, blank_lines=0, endl=True, prnt=True):
    if prnt:
        print('\n' * blank_lines + f'{colored("INFO:", CYAN, ["bold"])} {get_t_str()} --> {msg}', end='\n' if endl else ' ', file=sys.stderr, flush=True)
    return time()


def add_to_info(t, msg='Done', prnt=True):
    if prnt:
        print(f'{msg} ({time() - t:2.2f} s)', file=sys.stderr, flush=True)


def warning(msg, prnt=True):
    if prnt:
        print(f'{colored("WARNING:", YELLOW, ["bold"])} {get_t_str()} --> {msg}', file=sys.stderr, flush=True)


def error(msg, prnt=True):
    if prnt:
        print(f'{colored("ERROR:", RED, ["bold"])} {get_t_str()} --> {msg}', file=sys.stderr, flush=True)


def print_banner(msg, symbol='~', new_lines=1, color=None):
    msg = f'{msg} |'
    print(colored('{n}{delim}\n{msg}\n{delim}{n}'.format(delim=len(msg) * symbol, msg=msg, n='\n' * new_lines), color), file=sys.stderr)


def cell_str(v, fmt):
    return format(v, fmt) if isinstance(v, float) else str(v)


def print_table(rows, header=None, footer=None, prnt=True, fmt='.3e'):
    """ boxed table on stderr, reals written with `fmt`; returns the rows unchanged """
    t = [[cell_str(v, fmt) for v in row] for row in ([header] if header else []) + list(rows) + ([footer] if footer else [])]
    col_width = [max(len(row[i]) for row in t) for i in range(len(t[0]))]
    hline = '~' * (sum(col_width) + len(col_width) * 3 + 1)
    if prnt:
        rules = {0} | ({1} if header else set()) | ({len(t) - 1} if footer else set())
        for i, row in enumerate(t):
            if i in rules:
                print(hline, file=sys.stderr)
            print('| {} |'.format(' | '.join(word.ljust(n) for word, n in zip(row, col_width))), file=sys.stderr)
        print(f'{hline}\n', file=sys.stderr)
    return rows
# endregion LOGGING
# ----------------------------------------


def choose(v, default, decider='None', *args, **kwargs):
    use_default = decider is None if decider != 'None' else v is None
    if callable(default) and use_default:
        default = default(*args, **kwargs)
    return default if use_default else v


# ----------------------------------------
# region CLASSES
class Config(ConfigParser):
    """ ConfigParser with typed access. Lists and dicts are stored as json strings. """

    def __init__(self, file_name, section=None, **kwargs):
        super().__init__(**kwargs)
        self.FilePath = Path(file_name)
        self.read(self.FilePath)
        self.Section = section

    def __str__(self):
        return f'{self.__class__.__name__}: {self.FilePath.name}'

    def __repr__(self):
        return f'{self} ({len(self.sections())} sections)'

    def get_value(self, section, option=None, dtype: type = str, default=None):
        section, option = (self.Section, section) if option is None else (section, option)
        try:
            if dtype is bool:
                return self.getboolean(section, option)
            v = self.get(section, option)
            return loads(v) if dtype in [list, dict, type] else dtype(v)
        except (NoOptionError, NoSectionError):
            return default

    def show(self):
        for sec in self.sections():
            print(colored(f'[{sec}]', YELLOW), file=sys.stderr)
            for option, value in self.items(sec):
                print(f'{option} = {value}', file=sys.stderr)
            print(file=sys.stderr)


class PBar(object):
    """ progress bar of a sweep, silent unless `prnt` """

    def __init__(self, start=None, counter=False, prnt=True):
        self.Bar = None
        self.Counter = counter
        self.Show = prnt
        self.Step = 0
        self.start(start)

    @staticmethod
    def widgets(counter):
        return ['Progress: ', SimpleProgress('/') if counter else Percentage(), ' ', Bar(marker='>'), ' ', ETA()]

    def start(self, n, counter=None):
        if n is None or not self.Show:
            return
        self.Step = 0
        self.Bar = ProgressBar(widgets=self.widgets(choose(counter, self.Counter)), maxval=n).start()

    def update(self):
        if self.Bar is None or self.Step >= self.Bar.maxval:
            return
        self.Step += 1
        self.Bar.update(self.Step)
        if self.Step == self.Bar.maxval:
            self.Bar.finish()
# endregion CLASSES
# ----------------------------------------
