"""
Zero-Error Adder Toolkit
========================
Command-line entry point; see zero_error_adder/cli.py for the subcommands.

    python main.py bound theorem1 --r1 1.0
"""

import sys

from zero_error_adder.cli import main

if __name__ == "__main__":
    sys.exit(main())
