"""Package Classification - Étiquettes, courants simples et atlas des modules.

Ce package contient les modules pour :
- Étiquettes M^{Λ,λ}, normalisation modulo kQ_L, images Λ⁽ⁱ⁾ (Courants_Simples)
- Orbites, empreintes et atlas (Modules_Irreductibles)
"""

from .Courants_Simples import (
    ModuleLabel,
    SimpleCurrentMap,
    enumerate_labels,
    lattice_translation_normalize,
    twisted_conformal_shift,
    simple_current_image,
    simple_current_maps,
    label_action,
    known_image_oracle,
)
from .Modules_Irreductibles import AtlasEntry, compute_orbits, emit_atlas, empreinte

__all__ = [
    # Courants_Simples
    "ModuleLabel",
    "SimpleCurrentMap",
    "enumerate_labels",
    "lattice_translation_normalize",
    "twisted_conformal_shift",
    "simple_current_image",
    "simple_current_maps",
    "label_action",
    "known_image_oracle",
    # Modules_Irreductibles
    "AtlasEntry",
    "compute_orbits",
    "emit_atlas",
    "empreinte",
]
