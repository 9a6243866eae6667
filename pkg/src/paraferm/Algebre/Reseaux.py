"""Réseaux entiers : forme normale de Hermite, de Smith et réduction modulo.

Les vecteurs sont donnés en coordonnées sur les racines simples. Une base
de sous-réseau est renvoyée sous forme de colonnes d'une matrice triangulaire
supérieure (forme de Hermite), ce qui donne directement :
- un représentant canonique de x + L (réduction dans la boîte fondamentale)
- un système complet de représentants de Z^l / L (la boîte elle-même)
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from loguru import logger
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form, invariant_factors

from paraferm.exceptions import IncoherenceError

logger = logger.bind(type_log="RACINES")

Colonne = tuple[int, ...]


def base_hermite(generateurs: Sequence[Sequence[int]]) -> list[Colonne]:
    """Base triangulaire du réseau engendré par `generateurs` (vecteurs entiers).

    Renvoie les colonnes de la forme normale de Hermite : la colonne j n'a
    de coefficients non nuls que sur les lignes 0..j et son pivot est > 0.

    Raises:
        IncoherenceError: si le réseau n'est pas de rang plein.
    """
    if not generateurs:
        raise IncoherenceError("Aucun générateur fourni pour le réseau.")
    rang = len(generateurs[0])
    m = Matrix(rang, len(generateurs), lambda i, j: int(generateurs[j][i]))
    h = hermite_normal_form(m)
    colonnes = [
        tuple(int(h[i, j]) for i in range(h.rows))
        for j in range(h.cols)
        if any(h[i, j] != 0 for i in range(h.rows))
    ]
    if len(colonnes) != rang:
        raise IncoherenceError(
            f"Réseau de rang {len(colonnes)} au lieu de {rang} (générateurs: {generateurs})"
        )
    for j, col in enumerate(colonnes):
        if col[j] <= 0 or any(col[i] != 0 for i in range(j + 1, rang)):
            raise IncoherenceError(f"Forme de Hermite non triangulaire : {colonnes}")
    return colonnes


def multiplier_base(base: Sequence[Colonne], k: int) -> list[Colonne]:
    return [tuple(k * c for c in col) for col in base]


def reduire_modulo(coords: Sequence[Fraction | int], base: Sequence[Colonne]) -> tuple[Fraction, ...]:
    """Représentant canonique de coords + L dans la boîte 0 <= x_i < pivot_i.

    Fonctionne pour des coordonnées rationnelles ; le résultat est idempotent.
    """
    x = [Fraction(c) for c in coords]
    for i in range(len(base) - 1, -1, -1):
        col = base[i]
        n = math.floor(x[i] / col[i])
        if n:
            for r in range(i + 1):
                x[r] -= n * col[r]
    return tuple(x)


def appartient(coords: Sequence[Fraction | int], base: Sequence[Colonne]) -> bool:
    """Vrai si coords appartient au réseau de base `base`."""
    return all(c == 0 for c in reduire_modulo(coords, base))


def representants_quotient(base: Sequence[Colonne]) -> list[Colonne]:
    """Système complet et irredondant de représentants de Z^l / L, ordre canonique."""
    pivots = [col[i] for i, col in enumerate(base)]
    return [tuple(reversed(t)) for t in itertools.product(*(range(p) for p in reversed(pivots)))]


def indice(base: Sequence[Colonne]) -> int:
    """|Z^l / L|, produit des pivots (= |det|)."""
    return math.prod(col[i] for i, col in enumerate(base))


def facteurs_invariants(base: Sequence[Colonne]) -> list[int]:
    """Facteurs invariants (forme de Smith) de Z^l / L, les 1 étant omis."""
    rang = len(base)
    m = Matrix(rang, rang, lambda i, j: base[j][i])
    facteurs = [int(abs(d)) for d in invariant_factors(m)]
    if math.prod(facteurs) != indice(base):
        raise IncoherenceError(
            f"Forme de Smith incohérente : {facteurs} vs indice {indice(base)}"
        )
    return [d for d in facteurs if d != 1]


def entiers(coords: Iterable[Fraction]) -> bool:
    return all(Fraction(c).denominator == 1 for c in coords)
