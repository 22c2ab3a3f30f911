"""Run the command-line interface with ``python3 -m weightconj``."""

import sys

from .cli import main

sys.exit(main())
