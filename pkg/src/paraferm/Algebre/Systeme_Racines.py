"""Systèmes de racines exacts dans la normalisation ⟨θ,θ⟩ = 2.

Toutes les coordonnées sont rationnelles (fractions.Fraction) et exprimées
sur la base des racines simples (sr). Les coordonnées sur les poids
fondamentaux (fw) s'en déduisent par la matrice de Cartan symétrisée :
fw_j = ⟨λ, α_j∨⟩.

Ce module gère :
- La validation d'une algèbre (famille, rang)
- La construction des racines positives par fermeture des chaînes de racines
- Les données dérivées : θ, ρ, marques a_i, h∨, poids fondamentaux
- Le sous-réseau Q_L des racines longues et les représentants de Q/kQ_L
- La sérialisation canonique du système pour la commande `info`
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from loguru import logger
from sympy import Matrix, Rational

from paraferm.Algebre import Reseaux
from paraferm.Algebre.constants import (
    BRANCHEMENT_E,
    FAMILLES,
    LONGUEUR_COURTE_BCF,
    LONGUEUR_COURTE_G,
    LONGUEUR_LONGUE,
    RANGS_ADMIS,
)
from paraferm.exceptions import AlgebreInvalideError, PoidsInvalideError
from paraferm.utils.rationnels import formater_rationnel, formater_vecteur

logger = logger.bind(type_log="RACINES")


@dataclass(frozen=True, order=True)
class AlgebraSpec:
    """Algèbre de Lie simple désignée par sa famille et son rang."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILLES:
            raise AlgebreInvalideError(
                f"Famille inconnue '{self.family}' (attendu : {', '.join(FAMILLES)})"
            )
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise AlgebreInvalideError(f"Rang non entier : {self.rank!r}")
        rang_min, rang_max = RANGS_ADMIS[self.family]
        if self.rank < rang_min or (rang_max is not None and self.rank > rang_max):
            borne = f"{rang_min}" if rang_max is None else f"{rang_min}..{rang_max}"
            raise AlgebreInvalideError(
                f"Rang {self.rank} invalide pour la famille {self.family} (admis : {borne}"
                f"{'+' if rang_max is None else ''})"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Poids exact, connu à la fois sur les racines simples et sur les poids fondamentaux."""

    sr_coords: tuple[Fraction, ...]
    fw_coords: tuple[Fraction, ...]

    def __add__(self, other: Weight) -> Weight:
        _verifier_dimensions(self, other)
        return Weight(
            tuple(a + b for a, b in zip(self.sr_coords, other.sr_coords)),
            tuple(a + b for a, b in zip(self.fw_coords, other.fw_coords)),
        )

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.sr_coords), tuple(-a for a in self.fw_coords))

    def __mul__(self, scalaire: int | Fraction) -> Weight:
        s = Fraction(scalaire)
        return Weight(tuple(s * a for a in self.sr_coords), tuple(s * a for a in self.fw_coords))

    __rmul__ = __mul__

    @property
    def rank(self) -> int:
        return len(self.sr_coords)

    @property
    def is_root_lattice(self) -> bool:
        """Vrai si le poids appartient au réseau des racines Q."""
        return Reseaux.entiers(self.sr_coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.sr_coords)

    def __str__(self) -> str:
        return "[" + ", ".join(formater_rationnel(a) for a in self.fw_coords) + "]"


def _verifier_dimensions(u: Weight, v: Weight) -> None:
    if len(u.sr_coords) != len(v.sr_coords):
        raise PoidsInvalideError(
            f"Dimensions incompatibles : {len(u.sr_coords)} vs {len(v.sr_coords)}"
        )


@dataclass(frozen=True)
class RootSystem:
    """Système de racines d'une algèbre simple, immuable après construction."""

    spec: AlgebraSpec
    form_matrix: tuple[tuple[Fraction, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    theta: Weight
    rho: Weight
    fundamental_weights: tuple[Weight, ...]
    marks_a: tuple[int, ...]
    dual_coxeter: int
    dim_g: int
    long_root_basis: tuple[Weight, ...]
    # Passage fw -> sr : inverse de la matrice C (fw = sr . C)
    fw_vers_sr: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    base_ql: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def zero(self) -> Weight:
        nul = tuple(Fraction(0) for _ in range(self.rank))
        return Weight(nul, nul)

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(-a for a in self.positive_roots)


# === Diagrammes de Dynkin ===


def _longueurs_et_aretes(spec: AlgebraSpec) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Longueurs au carré des racines simples et arêtes du diagramme (indices 0..l-1)."""
    l = spec.rank
    longueurs = [LONGUEUR_LONGUE] * l
    chaine = [(i, i + 1) for i in range(l - 1)]
    if spec.family == "B":
        longueurs[l - 1] = LONGUEUR_COURTE_BCF
    elif spec.family == "C":
        longueurs = [LONGUEUR_COURTE_BCF] * (l - 1) + [LONGUEUR_LONGUE]
    elif spec.family == "D":
        chaine = [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    elif spec.family == "E":
        chaine = [(i, i + 1) for i in range(l - 2)] + [(BRANCHEMENT_E[l] - 1, l - 1)]
    elif spec.family == "F":
        longueurs = [LONGUEUR_LONGUE, LONGUEUR_LONGUE, LONGUEUR_COURTE_BCF, LONGUEUR_COURTE_BCF]
    elif spec.family == "G":
        longueurs = [LONGUEUR_COURTE_G, LONGUEUR_LONGUE]
    return longueurs, chaine


def _matrice_forme(spec: AlgebraSpec) -> tuple[tuple[Fraction, ...], ...]:
    longueurs, aretes = _longueurs_et_aretes(spec)
    l = spec.rank
    b = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        b[i][i] = longueurs[i]
    for i, j in aretes:
        # -1 dès qu'une extrémité est longue, -1/2 entre deux racines courtes de B, C, F
        b[i][j] = b[j][i] = -max(longueurs[i], longueurs[j]) / 2
    _verifier_definie_positive(spec, b)
    return tuple(tuple(ligne) for ligne in b)


def _verifier_definie_positive(spec: AlgebraSpec, forme: Sequence[Sequence[Fraction]]) -> None:
    """Lève AlgebreInvalideError si la matrice de Gram n'est pas définie positive."""
    l = len(forme)
    gram = Matrix(l, l, lambda i, j: Rational(forme[i][j].numerator, forme[i][j].denominator))
    if not gram.is_positive_definite:
        raise AlgebreInvalideError(f"Forme de {spec} non définie positive : {gram.tolist()}")


def _vers_fw(sr: Sequence[Fraction], forme: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    l = len(sr)
    return tuple(
        sum((sr[i] * 2 * forme[i][j] / forme[j][j] for i in range(l)), Fraction(0))
        for j in range(l)
    )


def _vers_sr(fw: Sequence[Fraction], passage: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    l = len(fw)
    return tuple(
        sum((fw[i] * passage[i][j] for i in range(l)), Fraction(0)) for j in range(l)
    )


# === Constructeurs de poids ===


def weight_from_sr(rs: RootSystem, coords: Iterable[int | Fraction]) -> Weight:
    """Poids donné par ses coordonnées sur les racines simples."""
    sr = tuple(Fraction(c) for c in coords)
    if len(sr) != rs.rank:
        raise PoidsInvalideError(f"Attendu {rs.rank} coordonnées sr, reçu {len(sr)} : {sr}")
    return Weight(sr, _vers_fw(sr, rs.form_matrix))


def weight_from_fw(rs: RootSystem, coords: Iterable[int | Fraction]) -> Weight:
    """Poids donné par ses labels de Dynkin (coordonnées sur les poids fondamentaux)."""
    fw = tuple(Fraction(c) for c in coords)
    if len(fw) != rs.rank:
        raise PoidsInvalideError(f"Attendu {rs.rank} labels de Dynkin, reçu {len(fw)} : {fw}")
    return Weight(_vers_sr(fw, rs.fw_vers_sr), fw)


# === Construction ===


def _racines_positives(
    forme: Sequence[Sequence[Fraction]],
) -> list[tuple[int, ...]]:
    """Racines positives (coordonnées sr entières) par fermeture des chaînes α_i."""
    l = len(forme)
    simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    connues = set(simples)
    niveau = list(simples)
    toutes = list(simples)
    while niveau:
        suivant = []
        for beta in niveau:
            fw = _vers_fw([Fraction(c) for c in beta], forme)
            for i in range(l):
                # p : nombre de soustractions possibles de α_i en restant racine
                p = 0
                courant = list(beta)
                while True:
                    courant[i] -= 1
                    if tuple(courant) in connues:
                        p += 1
                    else:
                        break
                q = p - fw[i]
                if q > 0:
                    candidat = tuple(c + (1 if j == i else 0) for j, c in enumerate(beta))
                    if candidat not in connues:
                        connues.add(candidat)
                        suivant.append(candidat)
                        toutes.append(candidat)
        niveau = sorted(suivant)
    return sorted(toutes, key=lambda r: (sum(r), tuple(-c for c in r)))


@lru_cache(maxsize=None)
def build_root_system(spec: AlgebraSpec) -> RootSystem:
    """Construit le système de racines complet de `spec`.

    Raises:
        AlgebreInvalideError: si la famille ou le rang sont invalides.
    """
    if not isinstance(spec, AlgebraSpec):
        raise AlgebreInvalideError(f"Spécification d'algèbre invalide : {spec!r}")
    l = spec.rank
    forme = _matrice_forme(spec)
    cartan = tuple(
        tuple(int(2 * forme[i][j] / forme[i][i]) for j in range(l)) for i in range(l)
    )
    c = Matrix(l, l, lambda i, j: Rational(2 * forme[i][j] / forme[j][j]))
    inverse = c.inv()
    passage = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(l))
        for i in range(l)
    )

    def depuis_sr(coords: Sequence[int | Fraction]) -> Weight:
        sr = tuple(Fraction(x) for x in coords)
        return Weight(sr, _vers_fw(sr, forme))

    positives_sr = _racines_positives(forme)
    positives = tuple(depuis_sr(r) for r in positives_sr)
    simples = tuple(depuis_sr([int(i == j) for j in range(l)]) for i in range(l))
    theta_sr = max(positives_sr, key=lambda r: (sum(r), r))
    theta = depuis_sr(theta_sr)
    fondamentaux = tuple(
        Weight(passage[i], tuple(Fraction(int(i == j)) for j in range(l))) for i in range(l)
    )
    rho = Weight(
        tuple(sum((w.sr_coords[j] for w in fondamentaux), Fraction(0)) for j in range(l)),
        tuple(Fraction(1) for _ in range(l)),
    )

    def produit(u: Weight, v: Weight) -> Fraction:
        return _produit_forme(forme, u, v)

    longues = [r for r, w in zip(positives_sr, positives) if produit(w, w) == LONGUEUR_LONGUE]
    base_ql = tuple(Reseaux.base_hermite(longues))

    rs = RootSystem(
        spec=spec,
        form_matrix=forme,
        cartan_matrix=cartan,
        simple_roots=simples,
        positive_roots=positives,
        theta=theta,
        rho=rho,
        fundamental_weights=fondamentaux,
        marks_a=tuple(int(x) for x in theta_sr),
        dual_coxeter=int(1 + produit(rho, theta)),
        dim_g=l + 2 * len(positives),
        long_root_basis=tuple(depuis_sr(col) for col in base_ql),
        fw_vers_sr=passage,
        base_ql=base_ql,
    )
    logger.debug(
        f"Système {spec} construit : {len(positives)} racines positives, "
        f"h∨={rs.dual_coxeter}, marques={rs.marks_a}"
    )
    return rs


# === Produit scalaire et données dérivées ===


def _produit_forme(forme: Sequence[Sequence[Fraction]], u: Weight, v: Weight) -> Fraction:
    l = len(forme)
    return sum(
        (u.sr_coords[i] * forme[i][j] * v.sr_coords[j] for i in range(l) for j in range(l)
         if u.sr_coords[i] and v.sr_coords[j]),
        Fraction(0),
    )


def inner_product(rs: RootSystem, u: Weight, v: Weight) -> Fraction:
    """⟨u, v⟩ calculé sur les coordonnées sr via la matrice de Gram.

    Raises:
        PoidsInvalideError: si les dimensions ne correspondent pas au rang.
    """
    if u.rank != rs.rank or v.rank != rs.rank:
        raise PoidsInvalideError(
            f"Poids de dimension {u.rank}/{v.rank} incompatibles avec le rang {rs.rank}"
        )
    return _produit_forme(rs.form_matrix, u, v)


def dual_coxeter_number(rs: RootSystem) -> int:
    return rs.dual_coxeter


def is_root(rs: RootSystem, alpha: Weight) -> bool:
    if alpha.rank != rs.rank:
        return False
    return alpha in _ensemble_racines(rs)


@lru_cache(maxsize=None)
def _ensemble_racines(rs: RootSystem) -> frozenset[Weight]:
    return frozenset(rs.roots)


def k_alpha(rs: RootSystem, alpha: Weight, k: int) -> int:
    """Niveau k_α = (⟨θ,θ⟩/⟨α,α⟩)·k de la sous-algèbre sl₂ associée à α.

    Raises:
        PoidsInvalideError: si alpha n'est pas une racine.
    """
    if not is_root(rs, alpha):
        raise PoidsInvalideError(f"{alpha} n'est pas une racine de {rs.spec}")
    rapport = inner_product(rs, rs.theta, rs.theta) / inner_product(rs, alpha, alpha)
    return int(rapport * k)


def coroot(rs: RootSystem, alpha: Weight) -> Weight:
    return alpha * (Fraction(2) / inner_product(rs, alpha, alpha))


def simple_current_nodes(rs: RootSystem) -> set[int]:
    """Noeuds i (numérotés à partir de 1) de marque a_i = 1."""
    return {i + 1 for i, a in enumerate(rs.marks_a) if a == 1}


def long_roots(rs: RootSystem) -> tuple[Weight, ...]:
    return tuple(a for a in rs.roots if inner_product(rs, a, a) == LONGUEUR_LONGUE)


def in_long_root_lattice(rs: RootSystem, w: Weight) -> bool:
    return Reseaux.appartient(w.sr_coords, rs.base_ql)


def base_kql(rs: RootSystem, k: int) -> list[tuple[int, ...]]:
    """Base triangulaire (colonnes sr) de kQ_L."""
    if k < 1:
        raise PoidsInvalideError(f"Niveau k={k} invalide (k >= 1 attendu)")
    return Reseaux.multiplier_base(rs.base_ql, k)


def q_mod_kql_representatives(rs: RootSystem, k: int) -> list[Weight]:
    """Système complet et irredondant de représentants de Q/kQ_L."""
    base = base_kql(rs, k)
    representants = [weight_from_sr(rs, r) for r in Reseaux.representants_quotient(base)]
    if len(representants) != Reseaux.indice(base):
        raise AlgebreInvalideError(
            f"Nombre de représentants {len(representants)} différent de l'indice "
            f"{Reseaux.indice(base)}"
        )
    return representants


def lattice_group_structure(rs: RootSystem, k: int) -> list[int]:
    """Facteurs invariants de Q/kQ_L (forme de Smith)."""
    return Reseaux.facteurs_invariants(base_kql(rs, k))


# === Prédicats et opérations sur les poids ===


def is_integral(w: Weight) -> bool:
    return Reseaux.entiers(w.fw_coords)


def is_dominant(w: Weight) -> bool:
    return all(a >= 0 for a in w.fw_coords)


def height(w: Weight) -> Fraction:
    return sum(w.sr_coords, Fraction(0))


def simple_reflection(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Réflexion s_i (noeud i numéroté à partir de 1) : w - ⟨w, α_i∨⟩ α_i."""
    if not 1 <= i <= rs.rank:
        raise PoidsInvalideError(f"Noeud {i} hors de 1..{rs.rank}")
    return w - rs.simple_roots[i - 1] * w.fw_coords[i - 1]


def dominant_conjugate(rs: RootSystem, w: Weight) -> Weight:
    """Conjugué dominant de w par réflexions simples successives."""
    courant = w
    while True:
        for i, a in enumerate(courant.fw_coords):
            if a < 0:
                courant = simple_reflection(rs, i + 1, courant)
                break
        else:
            return courant


# === Sérialisation ===


def to_document(rs: RootSystem) -> dict:
    """Document JSON canonique du système de racines (rationnels en "p/q")."""
    return {
        "algebre": str(rs.spec),
        "famille": rs.spec.family,
        "rang": rs.rank,
        "dim_g": rs.dim_g,
        "coxeter_dual": rs.dual_coxeter,
        "matrice_cartan": [list(ligne) for ligne in rs.cartan_matrix],
        "matrice_forme": [formater_vecteur(ligne) for ligne in rs.form_matrix],
        "racines_positives": [formater_vecteur(a.sr_coords) for a in rs.positive_roots],
        "theta": formater_vecteur(rs.theta.sr_coords),
        "rho": formater_vecteur(rs.rho.sr_coords),
        "marques": list(rs.marks_a),
        "poids_fondamentaux": [formater_vecteur(w.sr_coords) for w in rs.fundamental_weights],
        "noeuds_courants_simples": sorted(simple_current_nodes(rs)),
        "base_racines_longues": [formater_vecteur(w.sr_coords) for w in rs.long_root_basis],
    }
