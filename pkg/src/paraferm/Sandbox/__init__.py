"""Package Sandbox - Module du vide universel tronqué et vérifications explicites.

Ce package contient les modules pour :
- Base de Chevalley par cocycle de signes, familles A, D, E (Algebre_Lie)
- Base PBW, actions de modes, Sugawara, produits itérés (PBW)
- ω_aff, ω_h, ω_α, W³_α, vecteur singulier, rapport de vérification (Generateurs)
- Quotient simple, commutants, contrôle de génération (Quotient)
"""

from .Algebre_Lie import LieAlgebraData, build_chevalley_basis
from .PBW import (
    PBWMonomial,
    PBWVector,
    TruncatedModule,
    current_mode_action,
    combination_mode_action,
    sugawara_mode,
    heisenberg_virasoro_mode,
    coset_virasoro_mode,
    monomial_mode_action,
    vector_from_modes,
    universal_graded_dims,
    universal_weight_dims,
)
from .Generateurs import (
    omega_aff,
    omega_h,
    h_alpha,
    build_omega_alpha,
    build_W3_alpha,
    singular_vector,
    verify_singular,
    virasoro_bracket_defect,
    verify_generators,
)
from .Quotient import simple_quotient_graded_dims, commutant_graded_dims, generation_check

__all__ = [
    # Algebre_Lie
    "LieAlgebraData",
    "build_chevalley_basis",
    # PBW
    "PBWMonomial",
    "PBWVector",
    "TruncatedModule",
    "current_mode_action",
    "combination_mode_action",
    "sugawara_mode",
    "heisenberg_virasoro_mode",
    "coset_virasoro_mode",
    "monomial_mode_action",
    "vector_from_modes",
    "universal_graded_dims",
    "universal_weight_dims",
    # Generateurs
    "omega_aff",
    "omega_h",
    "h_alpha",
    "build_omega_alpha",
    "build_W3_alpha",
    "singular_vector",
    "verify_singular",
    "virasoro_bracket_defect",
    "verify_generators",
    # Quotient
    "simple_quotient_graded_dims",
    "commutant_graded_dims",
    "generation_check",
]
