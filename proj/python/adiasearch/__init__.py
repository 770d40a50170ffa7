"""Adiabatic unstructured search: spectra, schedules, exact dynamics and runtimes."""

from ._adiasearch import *  # noqa: F401,F403
from ._adiasearch import __doc__  # noqa: F401

__version__ = "0.1.0"
