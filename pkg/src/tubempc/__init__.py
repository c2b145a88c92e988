"""Tube-based robust MPC for polytopic quasi-LPV systems."""

from .lp import LPResult

__version__ = "0.1.0"
