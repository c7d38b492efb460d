"""Steady-state optical response of a three-level atom with incoherent gain.

Thin wrapper around the compiled core. All rates and frequencies are in
units of gamma0, cross-sections in units of sigma0, powers in units of
hbar * omega0 * gamma0.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
