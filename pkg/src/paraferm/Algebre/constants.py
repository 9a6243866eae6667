"""Constantes pour le package Algebre.

Ce fichier centralise les tables par famille : rangs admis, diagrammes de
Dynkin (étiquetage de Kac) et dimensions de référence.

Normalisation : les racines longues ont une longueur au carré égale à 2,
les racines courtes 1 (B, C, F) ou 2/3 (G). Deux noeuds reliés du diagramme
ont un produit scalaire de -1 si l'un des deux est long, -1/2 entre deux
racines courtes de longueur 1 (B, C, F).
"""

from fractions import Fraction

FAMILLES = ("A", "B", "C", "D", "E", "F", "G")

# === Rangs admis par famille (min, max) ; None = pas de borne ===
RANGS_ADMIS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

LONGUEUR_LONGUE = Fraction(2)
LONGUEUR_COURTE_BCF = Fraction(1)
LONGUEUR_COURTE_G = Fraction(2, 3)

# === Noeud de branchement des diagrammes E (étiquetage de Kac) ===
# E_6 : chaîne 1-2-3-4-5, noeud 6 relié à 3
# E_7 : chaîne 1-...-6, noeud 7 relié à 3
# E_8 : chaîne 1-...-7, noeud 8 relié à 5
BRANCHEMENT_E = {6: 3, 7: 3, 8: 5}


def dimension_reference(famille: str, rang: int) -> int:
    """Dimension de g d'après les formules classiques (oracle de contrôle)."""
    l = rang
    if famille == "A":
        return l * (l + 2)
    if famille in ("B", "C"):
        return l * (2 * l + 1)
    if famille == "D":
        return l * (2 * l - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[
        (famille, rang)
    ]
