"""Depth-zero supercuspidals restricted to a special maximal compact subgroup."""

from .qpoly import Q, QPolynomial
from .rootdata import RootDatum, build_root_system

__version__ = "0.1.0"
