#!/usr/bin/env python
# --------------------------------------------------------
#       small script to evaluate, expand and bound the finite trig sums
# created on October 18th 2026
# --------------------------------------------------------
from sys import exit

from src.cli import main

if __name__ == '__main__':
    exit(main())
