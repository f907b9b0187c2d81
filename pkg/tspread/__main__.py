#!/usr/bin/env python3
"""
tspread - Command Line Tool

Entry point for `python -m tspread`.
"""

import sys

from tspread.cli import main

if __name__ == '__main__':
    sys.exit(main())
