"""
Combinatorics of the BC_l weight lattice.
"""

from src.weights.dominance import (
    DominantWeight,
    dominance_leq,
    make_weight,
    weights_below,
)
from src.weights.orbits import (
    SymmetricPoly,
    is_W_invariant,
    orbit_sum,
    to_orbit_basis,
    weyl_orbit,
)

__all__ = [
    "DominantWeight",
    "SymmetricPoly",
    "dominance_leq",
    "is_W_invariant",
    "make_weight",
    "orbit_sum",
    "to_orbit_basis",
    "weights_below",
    "weyl_orbit",
]
