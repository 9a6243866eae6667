"""Fonctions de branchement de M^{Λ,λ} et identité de reconstruction.

La fonction de corde de λ dans L_ĝ(k,Λ) est multipliée par Π(1-qⁿ)^rang
(le caractère du module de Heisenberg M_ĥ(k,λ) est retiré sans division).
La série obtenue a pour décalage n_Λ - ⟨λ,λ⟩/2k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from loguru import logger

from paraferm.Algebre.Niveau_Affine import (
    AffineMultiplicityTable,
    LevelData,
    affine_weight_multiplicities,
    conformal_weight_n_Lambda,
    entrees_affines,
)
from paraferm.Algebre.Systeme_Racines import Weight, inner_product, q_mod_kql_representatives
from paraferm.exceptions import IncoherenceError, IndetermineError, PoidsInvalideError
from paraferm.Series.Series_Q import FormalQSeries, sommer
from paraferm.Series.Theta_Reseau import lattice_theta_series, minimal_norm_representative

logger = logger.bind(type_log="BRANCHEMENT")


@dataclass(frozen=True)
class BranchingResult:
    """Série graduée de M^{Λ,λ} ; h_min vaut None si la série est nulle jusqu'à D."""

    label: tuple[Weight, Weight]
    series: FormalQSeries
    h_min: Optional[Fraction]
    first_nonzero_depth: Optional[int]

    @property
    def determined(self) -> bool:
        return self.h_min is not None


def _verifier_classe(Lambda: Weight, lam: Weight) -> None:
    if not (lam - Lambda).is_root_lattice:
        raise PoidsInvalideError(f"λ={lam} n'appartient pas à Λ + Q pour Λ={Lambda}")


def string_series(table: AffineMultiplicityTable, lam: Weight, D: int) -> FormalQSeries:
    """Σ_n mult(λ, n) qⁿ, décalage n_Λ.

    Raises:
        PoidsInvalideError: si λ ∉ Λ + Q.
    """
    _verifier_classe(table.Lambda, lam)
    if D > table.depth_cutoff:
        raise PoidsInvalideError(
            f"Profondeur {D} au-delà de la table calculée ({table.depth_cutoff})"
        )
    return FormalQSeries(
        table.n_Lambda, tuple(table.multiplicity(lam, n) for n in range(D + 1))
    )


def branching_series(ld: LevelData, Lambda: Weight, lam: Weight, D: int) -> BranchingResult:
    """Série de branchement de M^{Λ,λ} tronquée à D."""
    _verifier_classe(Lambda, lam)
    table = affine_weight_multiplicities(ld, Lambda, D)
    corde = string_series(table, lam, D)
    produit = corde * FormalQSeries.euler_product(ld.rs.rank, D)
    decalage = table.n_Lambda - inner_product(ld.rs, lam, lam) / (2 * ld.level)
    serie = FormalQSeries(decalage, produit.coeffs)
    if any(c < 0 for c in serie.coeffs):
        raise IncoherenceError(
            f"Coefficient négatif dans la série de branchement de ({Lambda}, {lam}) : {serie.coeffs}"
        )
    premier = serie.first_nonzero
    h_min = None if premier is None else decalage + premier
    return BranchingResult(label=(Lambda, lam), series=serie, h_min=h_min, first_nonzero_depth=premier)


def lowest_conformal_weight(ld: LevelData, Lambda: Weight, lam: Weight, D: int) -> Fraction:
    """h_min = n_Λ - ⟨λ,λ⟩/2k + première profondeur non nulle.

    Raises:
        IndetermineError: si la série est nulle jusqu'à la profondeur D.
    """
    resultat = branching_series(ld, Lambda, lam, D)
    if resultat.h_min is None:
        raise IndetermineError(
            f"M^({Lambda},{lam}) indéterminé à la profondeur {D} (série nulle)", profondeur=D
        )
    return resultat.h_min


def graded_dimension_series(ld: LevelData, Lambda: Weight, D: int) -> FormalQSeries:
    """Σ_n dim L_ĝ(k,Λ)_{n_Λ+n} qⁿ, décalage n_Λ."""
    coeffs = [0] * (D + 1)
    for (_, n), m in entrees_affines(ld, Lambda, D).items():
        coeffs[n] += m
    return FormalQSeries(conformal_weight_n_Lambda(ld, Lambda), tuple(coeffs))


def heisenberg_character(ld: LevelData, lam: Weight, D: int) -> FormalQSeries:
    """Caractère de M_ĥ(k,λ) : q^{⟨λ,λ⟩/2k} Π(1-qⁿ)^(-rang)."""
    serie = FormalQSeries.euler_product_inverse(ld.rs.rank, D)
    return FormalQSeries(inner_product(ld.rs, lam, lam) / (2 * ld.level), serie.coeffs)


def reconstruct_affine_character(ld: LevelData, Lambda: Weight, D: int) -> FormalQSeries:
    """Σ_{β_i ∈ Q/kQ_L} θ_{Λ+β_i} · Π(1-qⁿ)^(-rang) · b_{Λ,Λ+β_i}, à comparer au caractère gradué.

    Chaque classe est représentée par son élément de norme minimale, ce qui
    aligne tous les termes sur le décalage n_Λ.
    """
    rs = ld.rs
    k = ld.level
    termes = []
    for beta in q_mod_kql_representatives(rs, k):
        lam = minimal_norm_representative(rs, k, Lambda + beta)
        theta = lattice_theta_series(rs, k, lam, D)
        heis = FormalQSeries.euler_product_inverse(rs.rank, D)
        branche = branching_series(ld, Lambda, lam, D).series
        termes.append(theta * heis * branche)
    total = sommer(termes)
    n_lambda = conformal_weight_n_Lambda(ld, Lambda)
    if total.offset != n_lambda:
        total = total.realign(n_lambda)
    return total


def verify_reconstruction(ld: LevelData, Lambda: Weight, D: int) -> FormalQSeries:
    """Compare la reconstruction au caractère gradué ; lève IncoherenceError en cas d'écart."""
    reconstruit = reconstruct_affine_character(ld, Lambda, D)
    attendu = graded_dimension_series(ld, Lambda, D)
    if reconstruit != attendu:
        message = (
            f"Reconstruction incohérente pour {ld.rs.spec} k={ld.level} Λ={Lambda} : "
            f"{reconstruit.coeffs} (décalage {reconstruit.offset}) vs {attendu.coeffs} "
            f"(décalage {attendu.offset})"
        )
        logger.error(message)
        raise IncoherenceError(message)
    logger.debug(f"Reconstruction vérifiée pour Λ={Lambda} jusqu'à la profondeur {D}.")
    return reconstruit
