# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
pmmeas - Entry Point

    python run_pmmeas.py verify --out report.json
    python run_pmmeas.py explore --mode find-pi-top-violation
    python run_pmmeas.py export --what eps:1 --out eps1.csv

Configuration is read from --config or from pmmeas_config.yaml in the
default locations.
"""

import sys

from src.app import PMMeasApp


def main() -> int:
    """Run the pmmeas CLI."""
    return PMMeasApp().run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
