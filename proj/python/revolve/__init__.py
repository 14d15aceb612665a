"""Revolving-sequence grammars, revolving groups, and finite-depth series
evaluation of self-similar sets (dragons, flakes, and friends)."""

from revolve._core import *  # noqa: F401,F403
from revolve._core import __doc__  # noqa: F401
