"""Quasi-local masses, horizons and horizon criteria for spherically
symmetric, conformally flat metrics."""

from ._qlmass import *  # noqa: F401,F403
from ._qlmass import __version__  # noqa: F401
