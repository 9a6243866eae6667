"""Package Series - Séries q formelles, séries thêta et fonctions de branchement.

Ce package contient les modules pour :
- Séries formelles tronquées à décalage rationnel (Series_Q)
- Séries thêta des translatés de √k·Q_L (Theta_Reseau)
- Fonctions de corde et de branchement, reconstruction (Branchement)
"""

from .Series_Q import FormalQSeries, sommer
from .Theta_Reseau import lattice_theta_series, minimal_norm_representative
from .Branchement import (
    BranchingResult,
    graded_dimension_series,
    string_series,
    branching_series,
    lowest_conformal_weight,
    heisenberg_character,
    reconstruct_affine_character,
    verify_reconstruction,
)

__all__ = [
    # Series_Q
    "FormalQSeries",
    "sommer",
    # Theta_Reseau
    "lattice_theta_series",
    "minimal_norm_representative",
    # Branchement
    "BranchingResult",
    "graded_dimension_series",
    "string_series",
    "branching_series",
    "lowest_conformal_weight",
    "heisenberg_character",
    "reconstruct_affine_character",
    "verify_reconstruction",
]
