#!/usr/bin/env python3

import os
import sys

if __name__ == '__main__' and __package__ is None:
    sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from skewbrace.cli import main


if __name__ == '__main__':
    sys.exit(main())
