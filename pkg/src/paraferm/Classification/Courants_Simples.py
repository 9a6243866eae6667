"""Courants simples : étiquettes M^{Λ,λ}, translations par kQ_L et images Λ⁽ⁱ⁾.

L'image Λ⁽ⁱ⁾ est obtenue par le décalage spectral Δ(h^i, z), h^i = t_{Λ_i} :
sur L_ĝ(k,Λ), L⁽ⁱ⁾(0) = L(0) + h^i(0) + k⟨Λ_i,Λ_i⟩/2. Le poids conforme
minimal du module tordu vaut n_{Λ⁽ⁱ⁾}, et les vecteurs qui le réalisent,
de poids décalés de kΛ_i, portent les poids de L_g(Λ⁽ⁱ⁾).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from loguru import logger

from paraferm.Algebre import Reseaux
from paraferm.Algebre.Niveau_Affine import (
    LevelData,
    conformal_weight_n_Lambda,
    entrees_affines,
    enumerate_level_k_dominants,
    verifier_niveau,
)
from paraferm.Algebre.Representations_Finies import weight_multiplicities
from paraferm.Algebre.Systeme_Racines import (
    RootSystem,
    Weight,
    base_kql,
    height,
    inner_product,
    is_dominant,
    q_mod_kql_representatives,
    simple_current_nodes,
    weight_from_fw,
    weight_from_sr,
)
from paraferm.exceptions import CourantSimpleError, IncoherenceError, PoidsInvalideError

logger = logger.bind(type_log="CLASSIFICATION")

PROFONDEUR_INITIALE = 2
PLAFOND_PROFONDEUR = 24


@dataclass(frozen=True)
class ModuleLabel:
    """Étiquette (Λ, classe de λ modulo kQ_L) d'un module candidat M^{Λ,λ}."""

    Lambda: Weight
    lambda_class: Weight

    def __post_init__(self) -> None:
        if not (self.lambda_class - self.Lambda).is_root_lattice:
            raise PoidsInvalideError(
                f"λ={self.lambda_class} n'appartient pas à Λ + Q pour Λ={self.Lambda}"
            )

    def cle(self) -> tuple:
        """Clé d'ordre lexicographique : labels de Λ puis coordonnées sr de λ."""
        return (tuple(self.Lambda.fw_coords), tuple(self.lambda_class.sr_coords))

    def __str__(self) -> str:
        return f"({self.Lambda}, {self.lambda_class})"


@dataclass(frozen=True, eq=False)
class SimpleCurrentMap:
    node: int
    Lambda_image_table: dict[Weight, Weight]
    shift: Weight


def _verifier_noeud(rs: RootSystem, i: int) -> None:
    if i not in simple_current_nodes(rs):
        raise PoidsInvalideError(
            f"Noeud {i} sans courant simple pour {rs.spec} (marques {rs.marks_a})"
        )


def lattice_translation_normalize(rs: RootSystem, k: int, lam: Weight) -> Weight:
    """Représentant canonique de λ + kQ_L : réduction dans la boîte de Hermite de kQ_L."""
    return weight_from_sr(rs, Reseaux.reduire_modulo(lam.sr_coords, base_kql(rs, k)))


def enumerate_labels(ld: LevelData) -> list[ModuleLabel]:
    """|P₊ᵏ| × |Q/kQ_L| étiquettes distinctes, dans l'ordre canonique."""
    rs = ld.rs
    representants = q_mod_kql_representatives(rs, ld.level)
    labels = [
        ModuleLabel(Lambda, lattice_translation_normalize(rs, ld.level, Lambda + beta))
        for Lambda in enumerate_level_k_dominants(rs, ld.level)
        for beta in representants
    ]
    if len(set(labels)) != len(labels):
        raise IncoherenceError(f"Étiquettes dupliquées pour {rs.spec} k={ld.level}")
    return labels


def twisted_conformal_shift(ld: LevelData, i: int, mu: Weight, n: int, Lambda: Weight) -> Fraction:
    """Poids conforme dans L(k,Λ)^{(h^i)} d'un vecteur de poids μ à la profondeur n.

    n_Λ + n + ⟨μ, Λ_i⟩ + k⟨Λ_i,Λ_i⟩/2.

    Args:
        ld: données de niveau k.
        i: noeud de courant simple (numérotation de Kac, à partir de 1).
        mu: poids du vecteur dans L(k,Λ).
        n: profondeur du vecteur, c'est-à-dire sa valeur propre de L(0) moins n_Λ.
        Lambda: plus haut poids du module L(k,Λ) tordu ; il fixe le terme n_Λ,
            sans lequel μ et n ne suffisent pas à situer le vecteur.

    Raises:
        PoidsInvalideError: si le noeud i ne porte pas de courant simple.
    """
    rs = ld.rs
    _verifier_noeud(rs, i)
    fondamental = rs.fundamental_weights[i - 1]
    return (
        conformal_weight_n_Lambda(ld, Lambda)
        + n
        + inner_product(rs, mu, fondamental)
        + ld.level * inner_product(rs, fondamental, fondamental) / 2
    )


def _candidat_verifie(ld: LevelData, i: int, Lambda: Weight, D: int) -> Weight | None:
    rs = ld.rs
    decalage_k = rs.fundamental_weights[i - 1] * ld.level
    valeurs: dict[tuple[Weight, int], tuple[Fraction, int]] = {}
    for (x, n), m in entrees_affines(ld, Lambda, D).items():
        mu = Lambda - weight_from_sr(rs, x)
        valeurs[(mu, n)] = (twisted_conformal_shift(ld, i, mu, n, Lambda), m)
    minimum = min(v for v, _ in valeurs.values())
    decales: Counter[Weight] = Counter()
    for (mu, _), (v, m) in valeurs.items():
        if v == minimum:
            decales[mu + decalage_k] += m
    dominants = [w for w in decales if is_dominant(w)]
    if not dominants:
        return None
    candidat = max(dominants, key=lambda w: (height(w), tuple(w.fw_coords)))
    try:
        verifier_niveau(ld, candidat)
    except PoidsInvalideError:
        return None
    if conformal_weight_n_Lambda(ld, candidat) != minimum:
        return None
    if dict(decales) != weight_multiplicities(rs, candidat).entries:
        return None
    return candidat


@lru_cache(maxsize=1024)
def simple_current_image(
    ld: LevelData,
    i: int,
    Lambda: Weight,
    D_init: int = PROFONDEUR_INITIALE,
    plafond: int = PLAFOND_PROFONDEUR,
) -> Weight:
    """Λ⁽ⁱ⁾ par minimisation du décalage spectral, profondeur doublée jusqu'à vérification.

    Raises:
        PoidsInvalideError: si a_i ≠ 1 ou Λ ∉ P₊ᵏ.
        CourantSimpleError: si aucun candidat n'est vérifié sous le plafond.
    """
    _verifier_noeud(ld.rs, i)
    verifier_niveau(ld, Lambda)
    D = max(D_init, 0)
    while D <= plafond:
        candidat = _candidat_verifie(ld, i, Lambda, D)
        if candidat is not None:
            logger.debug(f"Λ={Lambda} -> Λ^({i})={candidat} vérifié à la profondeur {D}")
            return candidat
        D = max(1, 2 * D)
    raise CourantSimpleError(
        f"Aucune image Λ^({i}) vérifiée pour Λ={Lambda} ({ld.rs.spec}, k={ld.level}) "
        f"jusqu'à la profondeur {plafond}"
    )


def simple_current_maps(
    ld: LevelData, D_init: int = PROFONDEUR_INITIALE, plafond: int = PLAFOND_PROFONDEUR
) -> list[SimpleCurrentMap]:
    """Une application par noeud a_i = 1, bijectivité sur P₊ᵏ vérifiée."""
    rs = ld.rs
    dominants = enumerate_level_k_dominants(rs, ld.level)
    applications = []
    for i in sorted(simple_current_nodes(rs)):
        table = {L: simple_current_image(ld, i, L, D_init, plafond) for L in dominants}
        if set(table.values()) != set(dominants):
            raise IncoherenceError(f"L'application du noeud {i} ne permute pas P₊^{ld.level}")
        applications.append(
            SimpleCurrentMap(node=i, Lambda_image_table=table, shift=rs.fundamental_weights[i - 1] * ld.level)
        )
    logger.info(f"{len(applications)} courant(s) simple(s) pour {rs.spec} k={ld.level}")
    return applications


def label_action(
    ld: LevelData,
    label: ModuleLabel,
    i: int,
    D_init: int = PROFONDEUR_INITIALE,
    plafond: int = PLAFOND_PROFONDEUR,
) -> ModuleLabel:
    """M^{Λ,λ} ≅ M^{Λ⁽ⁱ⁾, λ+kΛ_i} : (Λ⁽ⁱ⁾, normalize(λ + kΛ_i))."""
    rs = ld.rs
    image = simple_current_image(ld, i, label.Lambda, D_init, plafond)
    decale = label.lambda_class + rs.fundamental_weights[i - 1] * ld.level
    return ModuleLabel(image, lattice_translation_normalize(rs, ld.level, decale))


def known_image_oracle(rs: RootSystem, k: int, i: int, Lambda: Weight) -> Weight:
    """Image connue pour A_l : rotation des labels affines (λ_0, ..., λ_l) de i crans."""
    if rs.spec.family != "A":
        raise PoidsInvalideError(f"Oracle disponible uniquement pour la famille A, pas {rs.spec}")
    labels = [int(a) for a in Lambda.fw_coords]
    affines = [k - sum(labels)] + labels
    taille = len(affines)
    tournes = [affines[(j - i) % taille] for j in range(taille)]
    return weight_from_fw(rs, tournes[1:])
