"""Représentations irréductibles de dimension finie L_g(Λ).

Multiplicités des poids par la récurrence de Freudenthal, parcourue par
profondeur croissante depuis Λ. Les poids sont manipulés en interne comme
décalages entiers n ∈ N^l, avec μ = Λ - Σ n_i α_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from loguru import logger

from paraferm.Algebre.Systeme_Racines import (
    RootSystem,
    Weight,
    inner_product,
    is_dominant,
    is_integral,
    simple_reflection,
    weight_from_sr,
)
from paraferm.exceptions import IncoherenceError, PoidsInvalideError

logger = logger.bind(type_log="FINREP")

Decalage = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WeightMultiplicityTable:
    """Poids de L_g(Λ) avec leurs multiplicités (strictement positives)."""

    highest_weight: Weight
    entries: dict[Weight, int]

    def multiplicity(self, mu: Weight) -> int:
        return self.entries.get(mu, 0)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())


def verifier_dominant_entier(Lambda: Weight) -> None:
    """Lève PoidsInvalideError si Λ n'est pas dominant entier."""
    if not is_integral(Lambda):
        raise PoidsInvalideError(f"Poids {Lambda} non entier (labels de Dynkin non entiers)")
    if not is_dominant(Lambda):
        raise PoidsInvalideError(f"Poids {Lambda} non dominant (label négatif)")


def weyl_dimension(rs: RootSystem, Lambda: Weight) -> int:
    """dim L_g(Λ) = Π_{α>0} ⟨Λ+ρ,α⟩/⟨ρ,α⟩."""
    verifier_dominant_entier(Lambda)
    decale = Lambda + rs.rho
    produit = Fraction(1)
    for alpha in rs.positive_roots:
        produit *= inner_product(rs, decale, alpha) / inner_product(rs, rs.rho, alpha)
    if produit.denominator != 1:
        raise IncoherenceError(f"Dimension de Weyl non entière pour {Lambda} : {produit}")
    return int(produit)


@lru_cache(maxsize=256)
def multiplicites_par_decalage(rs: RootSystem, Lambda: Weight) -> dict[Decalage, int]:
    """Récurrence de Freudenthal : décalage n ↦ mult(Λ - Σ n_i α_i) (valeurs > 0).

    Le dictionnaire renvoyé est partagé par le cache et ne doit pas être modifié.
    """
    verifier_dominant_entier(Lambda)
    l = rs.rank
    forme = rs.form_matrix
    positives = [tuple(int(c) for c in a.sr_coords) for a in rs.positive_roots]
    # (α_i, α) pour chaque racine positive α
    colonnes = [
        [sum((forme[i][j] * a[j] for j in range(l)), Fraction(0)) for i in range(l)]
        for a in positives
    ]
    lambda_alpha = [inner_product(rs, Lambda, a) for a in rs.positive_roots]
    # 2(Λ+ρ, α_i)
    deux_lr = [2 * inner_product(rs, Lambda + rs.rho, s) for s in rs.simple_roots]

    def produit_decalage(n: Decalage, m: Decalage) -> Fraction:
        return sum(
            (forme[i][j] * n[i] * m[j] for i in range(l) for j in range(l) if n[i] and m[j]),
            Fraction(0),
        )

    origine = tuple([0] * l)
    mults: dict[Decalage, int] = {origine: 1}
    front = [origine]
    while front:
        candidats = sorted(
            {tuple(c + (1 if j == i else 0) for j, c in enumerate(n)) for n in front for i in range(l)}
        )
        front = []
        for n in candidats:
            denominateur = sum((deux_lr[i] * n[i] for i in range(l)), Fraction(0)) - produit_decalage(n, n)
            if denominateur <= 0:
                continue
            somme = Fraction(0)
            for a, col, la in zip(positives, colonnes, lambda_alpha):
                j = 1
                while True:
                    m = tuple(n[i] - j * a[i] for i in range(l))
                    if any(c < 0 for c in m):
                        break
                    mult = mults.get(m)
                    if mult:
                        # (μ + jα, α) = (Λ, α) - Σ m_i (α_i, α)
                        somme += (la - sum((col[i] * m[i] for i in range(l)), Fraction(0))) * mult
                    j += 1
            valeur = 2 * somme / denominateur
            if valeur.denominator != 1:
                raise IncoherenceError(
                    f"Multiplicité non entière {valeur} pour Λ={Lambda}, décalage {n}"
                )
            if valeur > 0:
                mults[n] = int(valeur)
                front.append(n)
    return mults


def weight_multiplicities(rs: RootSystem, Lambda: Weight) -> WeightMultiplicityTable:
    """Table complète des multiplicités de L_g(Λ).

    Raises:
        PoidsInvalideError: si Λ n'est pas dominant entier.
    """
    mults = multiplicites_par_decalage(rs, Lambda)
    entries = {Lambda - weight_from_sr(rs, n): m for n, m in mults.items()}
    logger.debug(f"L_g({Lambda}) : {len(entries)} poids, dimension {sum(entries.values())}")
    return WeightMultiplicityTable(highest_weight=Lambda, entries=entries)


def dominant_character(rs: RootSystem, Lambda: Weight) -> dict[Weight, int]:
    """Poids dominants de L_g(Λ) avec leurs multiplicités."""
    table = weight_multiplicities(rs, Lambda)
    return {mu: m for mu, m in table.entries.items() if is_dominant(mu)}


def _orbite_signee(rs: RootSystem, v: Weight) -> dict[Weight, int]:
    """Orbite de Weyl d'un poids régulier, avec la signature (-1)^longueur."""
    orbite = {v: 1}
    front = [v]
    while front:
        suivant = []
        for w in front:
            for i in range(1, rs.rank + 1):
                image = simple_reflection(rs, i, w)
                if image not in orbite:
                    orbite[image] = -orbite[w]
                    suivant.append(image)
        front = suivant
    return orbite


def weyl_character_multiplicities(rs: RootSystem, Lambda: Weight) -> dict[Weight, int]:
    """Multiplicités par la formule des caractères de Weyl (somme alternée).

    Le numérateur Σ ε(w) e^{w(Λ+ρ)-ρ} est divisé successivement par chaque
    facteur (1 - e^{-α}), α > 0. Coût exponentiel : réservé aux petits cas.
    """
    verifier_dominant_entier(Lambda)
    l = rs.rank
    decale = Lambda + rs.rho
    numerateur: dict[Decalage, int] = {}
    for w, signe in _orbite_signee(rs, decale).items():
        n = tuple(int(c) for c in (decale - w).sr_coords)
        numerateur[n] = numerateur.get(n, 0) + signe
    bornes = [max(n[i] for n in numerateur) for i in range(l)]
    boite = sorted(itertools.product(*(range(b + 1) for b in bornes)), key=sum)
    courant = {n: numerateur.get(n, 0) for n in boite}
    for alpha in rs.positive_roots:
        a = tuple(int(c) for c in alpha.sr_coords)
        quotient: dict[Decalage, int] = {}
        for n in boite:
            precedent = tuple(x - y for x, y in zip(n, a))
            quotient[n] = courant[n] + quotient.get(precedent, 0)
        courant = quotient
    return {Lambda - weight_from_sr(rs, n): m for n, m in courant.items() if m}
