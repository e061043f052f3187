"""
catkit: 0-Hecke monoids, Catalan and double Catalan monoids, Dyck path
combinatorics, finite Coxeter generalizations, and exact certification of
minimal effective representation dimensions.
"""

__version__ = "0.1.0"

from . import boolmat, coxeter, dcm, dyck, hecke, monoid, permutations, repmin

__all__ = [
    "__version__",
    "boolmat",
    "coxeter",
    "dcm",
    "dyck",
    "hecke",
    "monoid",
    "permutations",
    "repmin",
]
