"""Exact verification toolkit for the exceptional 7-dimensional geometry

and the lattice arithmetic of degree-18 K3 surfaces and their Hilbert cubes.
"""

from .scalars import GF, QQ, PolyRing

__all__ = ["GF", "QQ", "PolyRing"]
__version__ = "0.1.0"
