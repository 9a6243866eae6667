"""Package Rapports - Documents JSON/CSV et affichage console.

Ce package contient les modules pour :
- Sérialisation déterministe des documents info, branch, atlas, sandbox (Documents)
- Tableaux rich sur la sortie d'erreur (Console)
"""

from .Documents import (
    vers_json,
    label_to_document,
    info_to_document,
    branch_to_document,
    atlas_to_document,
    atlas_to_csv,
    quotient_dims_to_document,
)
from .Console import afficher_info, afficher_atlas

__all__ = [
    # Documents
    "vers_json",
    "label_to_document",
    "info_to_document",
    "branch_to_document",
    "atlas_to_document",
    "atlas_to_csv",
    "quotient_dims_to_document",
    # Console
    "afficher_info",
    "afficher_atlas",
]
