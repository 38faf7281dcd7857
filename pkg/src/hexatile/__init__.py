"""Exact enumeration of lozenge tilings and the symmetry classes of plane partitions.

Counts are produced by three independent routes (brute-force matching
enumeration, Gessel-Viennot determinants and closed product formulas) and
compared as exact rationals.
"""

from hexatile.errors import DomainError, ResourceError

__version__ = "0.1.0"

__all__ = ["DomainError", "ResourceError", "__version__"]
