"""Exact computations in truncated categories of graded current-algebra modules."""
from tiltcat.rootdata import CartanDatum, RootSystem, build_root_system

__all__ = ["CartanDatum", "RootSystem", "build_root_system"]
__version__ = "0.1.0"
