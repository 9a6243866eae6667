"""Données de niveau k : P₊ᵏ, poids conforme n_Λ, charges centrales et
multiplicités graduées de L_ĝ(k,Λ) par la récurrence de Freudenthal affine.

Conventions : ρ̂ = ρ + h∨Λ_0, (Λ_0, δ) = 1, (δ, δ) = 0. Un poids de L_ĝ(k,Λ)
est noté (μ, n) pour μ + kΛ_0 - nδ ; n est la profondeur. Les racines
imaginaires nδ interviennent avec la multiplicité rang(g).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from loguru import logger

from paraferm.Algebre.Representations_Finies import (
    multiplicites_par_decalage,
    verifier_dominant_entier,
)
from paraferm.Algebre.Systeme_Racines import (
    RootSystem,
    Weight,
    coroot,
    inner_product,
    weight_from_fw,
    weight_from_sr,
)
from paraferm.Database import charger_table_multiplicites, enregistrer_table_multiplicites
from paraferm.exceptions import IncoherenceError, PoidsInvalideError, TroncatureError
from paraferm.utils.env_loader import cache_disabled
from paraferm.utils.paths import get_cache_db_path

logger = logger.bind(type_log="AFFINE")

Decalage = tuple[int, ...]
# (décalage sr depuis Λ, profondeur) -> multiplicité
EntreesAffines = dict[tuple[Decalage, int], int]


@dataclass(frozen=True)
class LevelData:
    rs: RootSystem
    level: int
    c_aff: Fraction
    c_heis: Fraction
    c_para: Fraction


@dataclass(frozen=True, eq=False)
class AffineMultiplicityTable:
    """Multiplicités des poids (μ, n) de L_ĝ(k,Λ) pour n <= depth_cutoff."""

    Lambda: Weight
    depth_cutoff: int
    entries: dict[tuple[Weight, int], int]
    n_Lambda: Fraction = Fraction(0)

    def multiplicity(self, mu: Weight, n: int) -> int:
        if n > self.depth_cutoff:
            raise TroncatureError(f"Profondeur {n} au-delà de la troncature {self.depth_cutoff}")
        return self.entries.get((mu, n), 0)


def central_charges(rs: RootSystem, k: int) -> LevelData:
    """Charges centrales c_aff = k·dim g/(k+h∨), c_heis = rang, c_para = c_aff - rang."""
    if k < 1:
        raise PoidsInvalideError(f"Niveau k={k} invalide (k >= 1 attendu)")
    c_aff = Fraction(k * rs.dim_g, k + rs.dual_coxeter)
    c_heis = Fraction(rs.rank)
    return LevelData(rs=rs, level=k, c_aff=c_aff, c_heis=c_heis, c_para=c_aff - c_heis)


def niveau_du_poids(rs: RootSystem, Lambda: Weight) -> Fraction:
    """⟨Λ, θ⟩."""
    return inner_product(rs, Lambda, rs.theta)


def verifier_niveau(ld: LevelData, Lambda: Weight) -> None:
    """Lève PoidsInvalideError si Λ n'est pas dans P₊ᵏ."""
    verifier_dominant_entier(Lambda)
    if niveau_du_poids(ld.rs, Lambda) > ld.level:
        raise PoidsInvalideError(
            f"Poids {Lambda} hors de P₊^{ld.level} : ⟨Λ,θ⟩ = {niveau_du_poids(ld.rs, Lambda)}"
        )


def enumerate_level_k_dominants(rs: RootSystem, k: int) -> list[Weight]:
    """Tous les Λ dominants entiers avec ⟨Λ,θ⟩ <= k, triés par (⟨Λ,θ⟩, labels)."""
    if k < 1:
        raise PoidsInvalideError(f"Niveau k={k} invalide (k >= 1 attendu)")
    comarques = [int(inner_product(rs, w, rs.theta)) for w in rs.fundamental_weights]
    labels: list[tuple[int, ...]] = []

    def parcourir(i: int, courant: list[int], reste: int) -> None:
        if i == rs.rank:
            labels.append(tuple(courant))
            return
        for x in range(reste // comarques[i] + 1):
            courant.append(x)
            parcourir(i + 1, courant, reste - x * comarques[i])
            courant.pop()

    parcourir(0, [], k)
    labels.sort(key=lambda t: (sum(a * c for a, c in zip(t, comarques)), t))
    return [weight_from_fw(rs, t) for t in labels]


def conformal_weight_n_Lambda(ld: LevelData, Lambda: Weight) -> Fraction:
    """n_Λ = ⟨Λ, Λ+2ρ⟩ / (2(k+h∨))."""
    verifier_niveau(ld, Lambda)
    rs = ld.rs
    return inner_product(rs, Lambda, Lambda + rs.rho * 2) / (2 * (ld.level + rs.dual_coxeter))


def level_bound_ok(ld: LevelData, mu: Weight) -> bool:
    """Contrainte d'intégrabilité |⟨μ, α∨⟩| <= k·⟨θ,θ⟩/⟨α,α⟩ pour toute α > 0."""
    rs = ld.rs
    for alpha in rs.positive_roots:
        borne = ld.level * Fraction(2) / inner_product(rs, alpha, alpha)
        if abs(inner_product(rs, mu, coroot(rs, alpha))) > borne:
            return False
    return True


# === Récurrence de Freudenthal affine ===


def _freudenthal_affine(ld: LevelData, Lambda: Weight, D: int) -> EntreesAffines:
    rs = ld.rs
    l = rs.rank
    k = ld.level
    forme = rs.form_matrix
    racines = [tuple(int(c) for c in a.sr_coords) for a in rs.roots]
    positives = set(tuple(int(c) for c in a.sr_coords) for a in rs.positive_roots)
    colonnes = {
        a: [sum((forme[i][j] * a[j] for j in range(l)), Fraction(0)) for i in range(l)]
        for a in racines
    }
    lambda_alpha = {a: inner_product(rs, Lambda, weight_from_sr(rs, a)) for a in racines}
    deux_lr = [2 * inner_product(rs, Lambda + rs.rho, s) for s in rs.simple_roots]
    theta = tuple(int(c) for c in rs.theta.sr_coords)
    kh = k + rs.dual_coxeter

    def produit(x: Decalage, alpha: Decalage) -> Fraction:
        col = colonnes[alpha]
        return sum((col[i] * x[i] for i in range(l) if x[i]), Fraction(0))

    def carre(x: Decalage) -> Fraction:
        return sum(
            (forme[i][j] * x[i] * x[j] for i in range(l) for j in range(l) if x[i] and x[j]),
            Fraction(0),
        )

    mults: EntreesAffines = {}
    # Profondeur 0 : L_g(Λ)
    for n0, m in multiplicites_par_decalage(rs, Lambda).items():
        mults[(n0, 0)] = m
    hauteur_min: dict[int, int] = {}

    for n in range(1, D + 1):
        # Graines : (μ + θ, n) pour tout poids (μ, n-1)
        graines = {
            tuple(x[i] - theta[i] for i in range(l))
            for (x, p) in mults
            if p == n - 1
        }
        paquets: dict[int, set[Decalage]] = {}
        for x in graines:
            paquets.setdefault(sum(x), set()).add(x)
        vus: set[Decalage] = set(graines)
        h = min(paquets) if paquets else 0
        hauteur_min[n] = h
        while paquets:
            for x in sorted(paquets.pop(h, ())):
                denominateur = (
                    sum((deux_lr[i] * x[i] for i in range(l)), Fraction(0)) - carre(x) + 2 * kh * n
                )
                if denominateur <= 0:
                    continue
                somme = Fraction(0)
                # Racines réelles α + mδ, m >= 0 (α > 0 si m = 0)
                for alpha in racines:
                    for m in range(0, n + 1):
                        if m == 0 and alpha not in positives:
                            continue
                        j = 1
                        while n - j * m >= 0:
                            y = tuple(x[i] - j * alpha[i] for i in range(l))
                            if m == 0 and sum(y) < hauteur_min[n]:
                                break
                            mult = mults.get((y, n - j * m))
                            if mult:
                                # (μ + jα, α) + k·m avec μ + jα = Λ - y
                                somme += (lambda_alpha[alpha] - produit(y, alpha) + k * m) * mult
                            j += 1
                # Racines imaginaires mδ, multiplicité rang
                for m in range(1, n + 1):
                    j = 1
                    while j * m <= n:
                        mult = mults.get((x, n - j * m))
                        if mult:
                            somme += l * k * m * mult
                        j += 1
                valeur = 2 * somme / denominateur
                if valeur.denominator != 1 or valeur < 0:
                    raise IncoherenceError(
                        f"Multiplicité affine incohérente {valeur} pour Λ={Lambda}, "
                        f"décalage {x}, profondeur {n}"
                    )
                if valeur == 0:
                    continue
                mults[(x, n)] = int(valeur)
                for i in range(l):
                    enfant = tuple(c + (1 if r == i else 0) for r, c in enumerate(x))
                    if enfant not in vus:
                        vus.add(enfant)
                        paquets.setdefault(h + 1, set()).add(enfant)
            h += 1
    return mults


# === Caches (mémoire puis SQLite) ===

_CACHE_MEMOIRE: dict[tuple, tuple[int, EntreesAffines]] = {}


def _chemin_cache() -> Optional[str]:
    if cache_disabled():
        return None
    try:
        return str(get_cache_db_path())
    except OSError as e:
        logger.warning(f"Cache disque indisponible : {e}")
        return None


def _tronquer(entrees: EntreesAffines, D: int) -> EntreesAffines:
    return {cle: m for cle, m in entrees.items() if cle[1] <= D}


def entrees_affines(ld: LevelData, Lambda: Weight, D: int) -> EntreesAffines:
    """Entrées (décalage, profondeur) -> multiplicité, avec caches mémoire et disque."""
    if D < 0:
        raise PoidsInvalideError(f"Profondeur D={D} invalide (D >= 0 attendu)")
    verifier_niveau(ld, Lambda)
    spec = ld.rs.spec
    labels = tuple(int(a) for a in Lambda.fw_coords)
    cle = (spec, ld.level, labels)
    en_memoire = _CACHE_MEMOIRE.get(cle)
    if en_memoire is not None and en_memoire[0] >= D:
        return _tronquer(en_memoire[1], D)

    db_path = _chemin_cache()
    if db_path is not None:
        lues = charger_table_multiplicites(db_path, spec.family, spec.rank, ld.level, labels, D)
        if lues is not None:
            _CACHE_MEMOIRE[cle] = (D, lues)
            return lues

    logger.info(f"Freudenthal affine {spec} k={ld.level} Λ={Lambda} jusqu'à la profondeur {D}...")
    entrees = _freudenthal_affine(ld, Lambda, D)
    logger.success(f"Table {spec} k={ld.level} Λ={Lambda} D={D} : {len(entrees)} entrées.")
    _CACHE_MEMOIRE[cle] = (D, entrees)
    if db_path is not None:
        try:
            enregistrer_table_multiplicites(
                db_path, spec.family, spec.rank, ld.level, labels, D, entrees
            )
        except Exception as e:  # le cache disque reste optionnel
            logger.warning(f"Écriture du cache impossible : {e}")
    return entrees


def affine_weight_multiplicities(ld: LevelData, Lambda: Weight, D: int) -> AffineMultiplicityTable:
    """Table des multiplicités de L_ĝ(k,Λ) jusqu'à la profondeur D.

    Raises:
        PoidsInvalideError: si Λ n'est pas dans P₊ᵏ ou si D < 0.
    """
    entrees = entrees_affines(ld, Lambda, D)
    table = {
        (Lambda - weight_from_sr(ld.rs, x), n): m for (x, n), m in entrees.items()
    }
    return AffineMultiplicityTable(
        Lambda=Lambda,
        depth_cutoff=D,
        entries=table,
        n_Lambda=conformal_weight_n_Lambda(ld, Lambda),
    )


def weights_at_depth(table: AffineMultiplicityTable, n: int) -> dict[Weight, int]:
    return {mu: m for (mu, p), m in table.entries.items() if p == n}

