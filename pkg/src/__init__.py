# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
pmmeas - Standalone Package

Algebra of distance distribution functions, triangle functions and
probabilistic-valued decomposable set functions, with theorem suites that
verify the laws on finite instances against grid oracles.
"""

from .app import PMMeasApp

__all__ = ['PMMeasApp']
__version__ = '1.0.0'
