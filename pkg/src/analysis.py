#!/usr/bin/env python
# --------------------------------------------------------
#       base class with config and logging for all evaluators
# created on October 18th 2026
# --------------------------------------------------------
from shutil import copyfile

from utility.utils import Dir, Config, choose, info, add_to_info, warning, print_banner, GREEN


def load_config():
    config_file_path = Dir.joinpath('config', 'main.ini')
    if not config_file_path.is_file():
        warning('The main config file "config/main.ini" does not exist! Using the default!')
        try:
            copyfile(Dir.joinpath('config', 'default.ini'), config_file_path)
        except OSError:
            return Config(Dir.joinpath('config', 'default.ini'))
    return Config(config_file_path)


class Analysis:
    """ The analysis class provides the config and the verbosity handling and is the parent of all evaluator objects. """

    Config = load_config()

    def __init__(self, verbose=False):
        self.Verbose = verbose

    def __str__(self):
        return self.__class__.__name__.upper()

    def __repr__(self):
        return f'{self} (verbose={self.Verbose})'

    @classmethod
    def get_config(cls, section, option, dtype=str, default=None):
        return cls.Config.get_value(section, option, dtype, default)

    def info(self, msg, blank_lines=0, endl=True, prnt=None):
        return info(msg, blank_lines, endl, choose(prnt, self.Verbose))

    def add_info(self, t, msg='Done', prnt=None):
        add_to_info(t, msg, prnt=choose(prnt, self.Verbose))

    def warning(self, msg, prnt=True):
        warning(f'{self}: {msg}', prnt)

    def print_start(self):
        print_banner(f'STARTING {self!r}', color=GREEN)


if __name__ == '__main__':
    z = Analysis(verbose=True)
    z.Config.show()
