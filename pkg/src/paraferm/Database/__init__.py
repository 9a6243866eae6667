"""Package Database - Cache SQLite des tables de multiplicités affines.

Ce package contient les modules pour :
- Vérification des prérequis (Verif_Prerequis_BDD)
- Création et intégrité du cache (Creation_BDD)
- Lecture / écriture des tables (Tables_Multiplicites)
"""

from .constants import TABLE_MULTIPLICITES
from .Verif_Prerequis_BDD import verif_repertoire_db
from .Creation_BDD import verif_presence_db, integrite_db
from .Tables_Multiplicites import (
    cle_table,
    enregistrer_table_multiplicites,
    charger_table_multiplicites,
)

__all__ = [
    # Constants
    "TABLE_MULTIPLICITES",
    # Verif_Prerequis_BDD
    "verif_repertoire_db",
    # Creation_BDD
    "verif_presence_db",
    "integrite_db",
    # Tables_Multiplicites
    "cle_table",
    "enregistrer_table_multiplicites",
    "charger_table_multiplicites",
]
