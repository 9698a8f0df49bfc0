"""Nested canalyzing function symmetry toolkit."""

from ._ncfsym import *  # noqa: F401,F403
from ._ncfsym import __doc__  # noqa: F401

__version__ = "1.0.0"
