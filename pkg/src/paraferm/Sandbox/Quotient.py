"""Quotient simple L_ĝ(k,0) = V_ĝ(k,0)/J, commutants et contrôle de génération.

J est engendré par le vecteur singulier : J_{k+1} est la g-clôture de
x_θ(-1)^{k+1}1 et J_d est l'espace engendré par les a(-n)J_{d-n}. Tous les
rangs sont calculés exactement sur QQ (sympy DomainMatrix, forme creuse).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Hashable, Mapping, Optional, Sequence

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from paraferm.exceptions import IncoherenceError
from paraferm.Sandbox.Generateurs import (
    build_omega_alpha,
    build_W3_alpha,
    singular_vector,
    verify_singular,
)
from paraferm.Sandbox.PBW import (
    PBWVector,
    TruncatedModule,
    basis_by_weight,
    current_mode_action,
    monomial_mode_action,
    universal_weight_dims,
)

logger = logger.bind(type_log="SANDBOX")

Poids = tuple[int, ...]
Colonne = Mapping[Hashable, Fraction]


def _matrice(colonnes: Sequence[Colonne]) -> DomainMatrix:
    index: dict[Hashable, int] = {}
    lignes: dict[int, dict[int, object]] = {}
    for j, colonne in enumerate(colonnes):
        for cle, c in colonne.items():
            i = index.setdefault(cle, len(index))
            lignes.setdefault(i, {})[j] = QQ(c.numerator, c.denominator)
    return DomainMatrix(lignes, (len(index), len(colonnes)), QQ)


def rang(colonnes: Sequence[Colonne]) -> int:
    """Rang exact d'une famille de vecteurs creux."""
    colonnes = [c for c in colonnes if c]
    if not colonnes:
        return 0
    return _matrice(colonnes).rank()


def colonnes_pivots(colonnes: Sequence[Colonne]) -> list[int]:
    """Indices d'une sous-famille libre maximale, choisie de gauche à droite."""
    if not any(colonnes):
        return []
    _, pivots = _matrice(colonnes).rref()
    return list(pivots)


def _nouveaux(existants: Sequence[PBWVector], candidats: Sequence[PBWVector]) -> list[PBWVector]:
    """Candidats indépendants modulo la famille libre `existants`."""
    if not candidats:
        return []
    pivots = colonnes_pivots([v.terms for v in existants] + [w.terms for w in candidats])
    return [candidats[p - len(existants)] for p in pivots if p >= len(existants)]


def _poids_vecteur(tm: TruncatedModule, v: PBWVector) -> Poids:
    return tm.weight(next(iter(v.terms)))


def _sous_module_maximal(tm: TruncatedModule) -> dict[int, dict[Poids, list[PBWVector]]]:
    """Bases de J_d(μ) pour d <= D, mémorisées dans tm.quotient_data.

    Raises:
        IncoherenceError: si x_θ(-1)^{k+1}1 n'est pas singulier.
    """
    if tm.quotient_data is not None:
        return tm.quotient_data
    k, D = tm.level, tm.max_degree
    algebre = tm.algebre
    J: dict[int, dict[Poids, list[PBWVector]]] = {d: {} for d in range(D + 1)}
    if k + 1 <= D:
        s = singular_vector(tm)
        if not verify_singular(tm, s):
            raise IncoherenceError(f"x_θ(-1)^{k + 1}1 n'est pas singulier pour {tm.rs.spec}")
        l = algebre.rank
        abaissements = [
            algebre.generateur_racine(tuple(-int(r == i) for r in range(l))) for i in range(l)
        ]
        cloture: dict[Poids, list[PBWVector]] = defaultdict(list)
        cloture[_poids_vecteur(tm, s)].append(s)
        file = [s]
        while file:
            v = file.pop()
            for a in abaissements:
                w = current_mode_action(tm, a, 0, v)
                if w.is_zero():
                    continue
                mu = _poids_vecteur(tm, w)
                if _nouveaux(cloture[mu], [w]):
                    cloture[mu].append(w)
                    file.append(w)
        J[k + 1] = dict(cloture)
        logger.debug(f"J_{k + 1} de dimension {sum(len(b) for b in cloture.values())}")

        for d in range(k + 2, D + 1):
            candidats: dict[Poids, list[PBWVector]] = defaultdict(list)
            for n in range(1, d - k):
                for mu, base in J[d - n].items():
                    for v in base:
                        for a in range(algebre.dim):
                            w = current_mode_action(tm, a, -n, v)
                            if not w.is_zero():
                                nu = tuple(x + y for x, y in zip(mu, algebre.poids[a]))
                                candidats[nu].append(w)
            J[d] = {nu: _nouveaux([], liste) for nu, liste in candidats.items()}
            logger.debug(f"J_{d} de dimension {sum(len(b) for b in J[d].values())}")
    tm.quotient_data = J
    return J


def simple_quotient_graded_dims(tm: TruncatedModule) -> dict[tuple[Poids, int], int]:
    """dim L_ĝ(k,0)_d(μ) indexé par (coordonnées sr de μ, d), valeurs nulles omises."""
    J = _sous_module_maximal(tm)
    dims = {}
    for (mu, d), dim in universal_weight_dims(tm).items():
        reste = dim - len(J[d].get(mu, []))
        if reste < 0:
            raise IncoherenceError(f"dim J_{d}({mu}) dépasse la dimension universelle {dim}")
        if reste:
            dims[(mu, d)] = reste
    logger.info(f"Quotient simple {tm.rs.spec} k={tm.level} calculé jusqu'au degré {tm.max_degree}")
    return dims


def commutant_graded_dims(tm: TruncatedModule, in_quotient: bool = False) -> list[int]:
    """Dimensions graduées du commutant de l'algèbre de Heisenberg.

    N(g,k) dans V_ĝ(k,0) si in_quotient est faux, K(g,k) dans L_ĝ(k,0) sinon :
    noyau des h_i(n), n >= 1, sur le sous-espace de poids 0.
    """
    l = tm.algebre.rank
    zero = tuple([0] * l)
    J = _sous_module_maximal(tm) if in_quotient else None
    dims = []
    for d in range(tm.max_degree + 1):
        base = basis_by_weight(tm, d).get(zero, [])
        if d == 0:
            dims.append(len(base))
            continue
        images = [
            {(i, n, Y): c for i in range(l) for n in range(1, d + 1) for Y, c in tm.mode_monome(i, n, X).items()}
            for X in base
        ]
        if J is None:
            dims.append(len(base) - rang(images))
            continue
        relations = [
            {(i, n, Y): c for Y, c in j.terms.items()}
            for i in range(l)
            for n in range(1, d + 1)
            for j in J[d - n].get(zero, [])
        ]
        rang_images = rang(images + relations) - len(relations)
        dims.append(len(base) - rang_images - len(J[d].get(zero, [])))
    return dims


def _generateurs(tm: TruncatedModule, D: int) -> list[PBWVector]:
    vecteurs = []
    for alpha in tm.rs.simple_roots:
        if D >= 2:
            vecteurs.append(build_omega_alpha(tm, alpha))
        if D >= 3:
            vecteurs.append(build_W3_alpha(tm, alpha))
    return [v for v in vecteurs if not v.is_zero()]


def generation_check(tm: TruncatedModule, D: Optional[int] = None, in_quotient: bool = True) -> dict:
    """Compare, degré par degré, l'espace engendré par les modes itérés des ω_{α_i}
    et W³_{α_i} sur 1 avec le commutant."""
    D = tm.max_degree if D is None else min(D, tm.max_degree)
    zero = tuple([0] * tm.algebre.rank)
    J = _sous_module_maximal(tm) if in_quotient else {d: {} for d in range(tm.max_degree + 1)}
    generateurs = _generateurs(tm, D)
    engendre: dict[int, list[PBWVector]] = {d: [] for d in range(D + 1)}
    engendre[0].append(PBWVector.vacuum())
    traites: set[tuple[int, int, int, int]] = set()
    modifie = True
    while modifie:
        modifie = False
        for d_cible in range(D + 1):
            candidats = []
            for iu, u in enumerate(generateurs):
                du = u.degree or 0
                for d_source in range(D + 1):
                    for iv, v in enumerate(engendre[d_source]):
                        cle = (iu, d_source, iv, d_cible)
                        if cle in traites:
                            continue
                        traites.add(cle)
                        w = monomial_mode_action(tm, u, du + d_source - d_cible - 1, v)
                        if not w.is_zero():
                            candidats.append(w)
            existants = J[d_cible].get(zero, []) + engendre[d_cible]
            nouveaux = _nouveaux(existants, candidats)
            if nouveaux:
                engendre[d_cible].extend(nouveaux)
                modifie = True
    commutant = commutant_graded_dims(tm, in_quotient)
    degres = [
        {"degre": d, "engendre": len(engendre[d]), "commutant": commutant[d], "ok": len(engendre[d]) == commutant[d]}
        for d in range(D + 1)
    ]
    ok = all(entree["ok"] for entree in degres)
    if ok:
        logger.success(f"Génération vérifiée pour {tm.rs.spec} k={tm.level} jusqu'au degré {D}")
    else:
        deficits = [e["degre"] for e in degres if not e["ok"]]
        logger.warning(f"Déficit de génération aux degrés {deficits}")
    return {
        "algebre": str(tm.rs.spec),
        "niveau": tm.level,
        "degre_max": D,
        "quotient": in_quotient,
        "degres": degres,
        "ok": ok,
    }
