# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Sub-command handlers for the pmmeas CLI."""

from .verify import handle_verify
from .explore import handle_explore
from .export import handle_export

__all__ = [
    'handle_verify',
    'handle_explore',
    'handle_export',
]
