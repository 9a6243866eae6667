"""Package Algebre - Systèmes de racines, représentations finies et niveau affine.

Ce package contient les modules pour :
- Réseaux entiers : formes de Hermite et de Smith (Reseaux)
- Systèmes de racines et réseau des racines longues (Systeme_Racines)
- Multiplicités de L_g(Λ) et dimension de Weyl (Representations_Finies)
- P₊ᵏ, n_Λ, charges centrales, Freudenthal affine (Niveau_Affine)
"""

from .Systeme_Racines import (
    AlgebraSpec,
    Weight,
    RootSystem,
    build_root_system,
    inner_product,
    dual_coxeter_number,
    k_alpha,
    simple_current_nodes,
    q_mod_kql_representatives,
    lattice_group_structure,
    weight_from_fw,
    weight_from_sr,
    is_root,
    is_dominant,
    is_integral,
    coroot,
    height,
    simple_reflection,
    dominant_conjugate,
    long_roots,
    in_long_root_lattice,
    to_document,
)
from .Representations_Finies import (
    WeightMultiplicityTable,
    weyl_dimension,
    weight_multiplicities,
    dominant_character,
    weyl_character_multiplicities,
)
from .Niveau_Affine import (
    LevelData,
    AffineMultiplicityTable,
    central_charges,
    enumerate_level_k_dominants,
    conformal_weight_n_Lambda,
    affine_weight_multiplicities,
    level_bound_ok,
    weights_at_depth,
)

__all__ = [
    # Systeme_Racines
    "AlgebraSpec",
    "Weight",
    "RootSystem",
    "build_root_system",
    "inner_product",
    "dual_coxeter_number",
    "k_alpha",
    "simple_current_nodes",
    "q_mod_kql_representatives",
    "lattice_group_structure",
    "weight_from_fw",
    "weight_from_sr",
    "is_root",
    "is_dominant",
    "is_integral",
    "coroot",
    "height",
    "simple_reflection",
    "dominant_conjugate",
    "long_roots",
    "in_long_root_lattice",
    "to_document",
    # Representations_Finies
    "WeightMultiplicityTable",
    "weyl_dimension",
    "weight_multiplicities",
    "dominant_character",
    "weyl_character_multiplicities",
    # Niveau_Affine
    "LevelData",
    "AffineMultiplicityTable",
    "central_charges",
    "enumerate_level_k_dominants",
    "conformal_weight_n_Lambda",
    "affine_weight_multiplicities",
    "level_bound_ok",
    "weights_at_depth",
]
