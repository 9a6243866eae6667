"""Vecteurs explicites du module du vide : ω_aff, ω_h, ω_α, W³_α et le
vecteur singulier x_θ(-1)^{k+1}1, avec leurs vérifications."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from loguru import logger

from paraferm.Algebre.Niveau_Affine import central_charges
from paraferm.Algebre.Systeme_Racines import Weight, inner_product, k_alpha
from paraferm.exceptions import PoidsInvalideError, TroncatureError
from paraferm.Sandbox.PBW import (
    PBWVector,
    TruncatedModule,
    combination_mode_action,
    coset_virasoro_mode,
    current_mode_action,
    monomial_mode_action,
)
from paraferm.utils.rationnels import formater_rationnel

logger = logger.bind(type_log="SANDBOX")

ModeVirasoro = Callable[[TruncatedModule, int, PBWVector], PBWVector]
Combinaison = tuple[tuple[int, Fraction], ...]


def formater_vecteur_pbw(tm: TruncatedModule, v: PBWVector) -> str:
    """Écriture lisible et déterministe, par exemple "1/2 h1(-1)h1(-1)1 + x+1(-1)x-1(-1)1"."""
    if v.is_zero():
        return "0"
    noms = tm.algebre.noms
    morceaux = []
    for X in sorted(v.terms):
        facteurs = "".join(f"{noms[a]}(-{n})" for n, a in X)
        morceaux.append(f"{formater_rationnel(v.terms[X])} {facteurs}1")
    return " + ".join(morceaux)


def _coords_racine(tm: TruncatedModule, alpha: Weight) -> tuple[int, ...]:
    coords = tuple(int(c) for c in alpha.sr_coords)
    if coords not in tm.algebre.index_racine:
        raise PoidsInvalideError(f"{alpha} n'est pas une racine de {tm.rs.spec}")
    return coords


def h_alpha(tm: TruncatedModule, alpha: Weight) -> Combinaison:
    """h_α = (2/⟨α,α⟩) Σ c_i h_i pour α = Σ c_i α_i."""
    coords = _coords_racine(tm, alpha)
    facteur = Fraction(2) / inner_product(tm.rs, alpha, alpha)
    return tuple((i, facteur * c) for i, c in enumerate(coords) if c)


def _appliquer(tm: TruncatedModule, operations: Sequence[tuple[Combinaison, int]]) -> PBWVector:
    """o_1(m_1) ... o_r(m_r) · 1 pour des combinaisons de générateurs o_j."""
    v = PBWVector.vacuum()
    for combinaison, m in reversed(operations):
        v = combination_mode_action(tm, combinaison, m, v)
    return v


def _quadratique_vide(tm: TruncatedModule, generateurs: Iterable[int], prefacteur: Fraction) -> PBWVector:
    v = PBWVector()
    vide = PBWVector.vacuum()
    for a in generateurs:
        for b, g_ab in tm.algebre.duale[a]:
            terme = current_mode_action(tm, a, -1, current_mode_action(tm, b, -1, vide))
            v = v + terme * g_ab
    return v * prefacteur


def omega_aff(tm: TruncatedModule) -> PBWVector:
    """ω_aff = 1/(2(k+h∨)) Σ_a a(-1) a^dual(-1) 1."""
    return _quadratique_vide(
        tm, range(tm.algebre.dim), Fraction(1, 2 * (tm.level + tm.rs.dual_coxeter))
    )


def omega_h(tm: TruncatedModule) -> PBWVector:
    """ω_h = 1/(2k) Σ_i h_i(-1) h_i^dual(-1) 1."""
    return _quadratique_vide(tm, range(tm.algebre.rank), Fraction(1, 2 * tm.level))


def build_omega_alpha(tm: TruncatedModule, alpha: Weight) -> PBWVector:
    """ω_α = (-k_α h_α(-2)1 - h_α(-1)²1 + 2k_α x_α(-1)x_{-α}(-1)1) / (2k_α(k_α+2))."""
    coords = _coords_racine(tm, alpha)
    ka = k_alpha(tm.rs, alpha, tm.level)
    h = h_alpha(tm, alpha)
    x_plus = ((tm.algebre.generateur_racine(coords), Fraction(1)),)
    x_moins = ((tm.algebre.generateur_racine(tuple(-c for c in coords)), Fraction(1)),)
    v = (
        _appliquer(tm, [(h, -2)]) * (-ka)
        - _appliquer(tm, [(h, -1), (h, -1)])
        + _appliquer(tm, [(x_plus, -1), (x_moins, -1)]) * (2 * ka)
    )
    return v * Fraction(1, 2 * ka * (ka + 2))


def build_W3_alpha(tm: TruncatedModule, alpha: Weight) -> PBWVector:
    """W³_α, vecteur de degré 3 du commutant attaché à la racine α."""
    coords = _coords_racine(tm, alpha)
    ka = k_alpha(tm.rs, alpha, tm.level)
    h = h_alpha(tm, alpha)
    xp = ((tm.algebre.generateur_racine(coords), Fraction(1)),)
    xm = ((tm.algebre.generateur_racine(tuple(-c for c in coords)), Fraction(1)),)
    termes = [
        (ka**2, [(h, -3)]),
        (3 * ka, [(h, -2), (h, -1)]),
        (2, [(h, -1), (h, -1), (h, -1)]),
        (-6 * ka, [(h, -1), (xp, -1), (xm, -1)]),
        (3 * ka**2, [(xp, -2), (xm, -1)]),
        (-3 * ka**2, [(xp, -1), (xm, -2)]),
    ]
    v = PBWVector()
    for coefficient, operations in termes:
        v = v + _appliquer(tm, operations) * coefficient
    return v


def singular_vector(tm: TruncatedModule) -> PBWVector:
    """x_θ(-1)^{k+1} 1.

    Raises:
        TroncatureError: si k+1 > D.
    """
    k = tm.level
    if k + 1 > tm.max_degree:
        raise TroncatureError(
            f"Vecteur singulier de degré {k + 1} au-delà de la troncature D={tm.max_degree}"
        )
    theta = tuple(int(c) for c in tm.rs.theta.sr_coords)
    g = tm.algebre.generateur_racine(theta)
    return PBWVector({((1, g),) * (k + 1): Fraction(1)})


def verify_singular(tm: TruncatedModule, v: PBWVector) -> bool:
    """v annulé par tous les a(n), n > 0, et par les x_{α_i}(0)."""
    d = v.degree or 0
    for a in range(tm.algebre.dim):
        for n in range(1, d + 1):
            if not current_mode_action(tm, a, n, v).is_zero():
                logger.debug(f"{tm.algebre.noms[a]}({n}) n'annule pas le vecteur")
                return False
    l = tm.algebre.rank
    for i in range(l):
        simple = tuple(int(r == i) for r in range(l))
        if not current_mode_action(tm, tm.algebre.generateur_racine(simple), 0, v).is_zero():
            return False
    return True


def virasoro_bracket_defect(
    tm: TruncatedModule, L: ModeVirasoro, c: Fraction, m: int, n: int, v: PBWVector
) -> PBWVector:
    """[L(m),L(n)]v - (m-n)L(m+n)v - δ_{m+n,0}(c/12)(m³-m)v, nul pour un Virasoro."""
    defaut = L(tm, m, L(tm, n, v)) - L(tm, n, L(tm, m, v)) - L(tm, m + n, v) * (m - n)
    if m + n == 0:
        defaut = defaut - v * (Fraction(c) * (m**3 - m) / 12)
    return defaut


def commutant_defect(tm: TruncatedModule, v: PBWVector) -> Optional[tuple[int, int]]:
    """Premier couple (i, n), n >= 0, tel que h_i(n)v ≠ 0, ou None."""
    d = v.degree or 0
    for i in range(tm.algebre.rank):
        for n in range(0, d + 1):
            if not current_mode_action(tm, i, n, v).is_zero():
                return (i, n)
    return None


def _verification(nom: str, cible: str, ok: bool, temoin: Optional[str] = None) -> dict:
    return {"nom": nom, "cible": cible, "ok": ok, "temoin": None if ok else temoin}


def verify_generators(
    tm: TruncatedModule,
    racines: Optional[Sequence[Weight]] = None,
    degre_bracket: int = 3,
) -> dict:
    """Rapport de vérification de ω_α et W³_α et du Virasoro L = L_aff - L_h.

    Les racines par défaut sont les racines simples.

    Raises:
        TroncatureError: si D < 3.
    """
    if tm.max_degree < 3:
        raise TroncatureError(f"La vérification des générateurs demande D >= 3, pas {tm.max_degree}")
    rs = tm.rs
    ld = central_charges(rs, tm.level)
    if racines is None:
        racines = rs.simple_roots
    verifications = []
    for alpha in racines:
        nom_racine = str(tuple(int(c) for c in alpha.sr_coords))
        ka = k_alpha(rs, alpha, tm.level)
        omega = build_omega_alpha(tm, alpha)
        w3 = build_W3_alpha(tm, alpha)
        for nom, vecteur, poids in (("omega", omega, 2), ("W3", w3, 3)):
            fautif = commutant_defect(tm, vecteur)
            verifications.append(
                _verification(
                    f"commutant_{nom}",
                    nom_racine,
                    fautif is None,
                    None if fautif is None else f"h{fautif[0] + 1}({fautif[1]}) non nul",
                )
            )
            ecart = coset_virasoro_mode(tm, 0, vecteur) - vecteur * poids
            verifications.append(
                _verification(f"L0_{nom}", nom_racine, ecart.is_zero(), formater_vecteur_pbw(tm, ecart))
            )
        c_alpha = Fraction(2 * (ka - 1), ka + 2)
        ecart = monomial_mode_action(tm, omega, 3, omega) - PBWVector.vacuum() * (c_alpha / 2)
        verifications.append(
            _verification("omega_3_omega", nom_racine, ecart.is_zero(), formater_vecteur_pbw(tm, ecart))
        )
        ecart = monomial_mode_action(tm, omega, 1, omega) - omega * 2
        verifications.append(
            _verification("omega_1_omega", nom_racine, ecart.is_zero(), formater_vecteur_pbw(tm, ecart))
        )

    D = tm.max_degree
    temoin = None
    for d in range(min(degre_bracket, D) + 1):
        for X in tm.basis(d):
            v = PBWVector({X: Fraction(1)})
            for m in range(-2, 3):
                for n in range(-2, m):
                    if max(d - n, d - m, d - m - n) > D:
                        continue
                    defaut = virasoro_bracket_defect(tm, coset_virasoro_mode, ld.c_para, m, n, v)
                    if not defaut.is_zero() and temoin is None:
                        temoin = f"[L({m}),L({n})] sur {formater_vecteur_pbw(tm, v)}"
    verifications.append(_verification("virasoro_coset", "base", temoin is None, temoin))

    ok = all(v["ok"] for v in verifications)
    rapport = {
        "algebre": str(rs.spec),
        "niveau": tm.level,
        "degre_max": D,
        "c_para": formater_rationnel(ld.c_para),
        "verifications": verifications,
        "ok": ok,
    }
    if ok:
        logger.success(f"Générateurs vérifiés pour {rs.spec} k={tm.level} ({len(verifications)} contrôles)")
    else:
        logger.warning(f"Échecs de vérification pour {rs.spec} k={tm.level}")
    return rapport
