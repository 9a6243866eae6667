"""Séries thêta des translatés du réseau √k·Q_L.

Pour un décalage s, on énumère les β ∈ Q_L par leurs coordonnées c sur la
base triangulaire de Q_L. L'exposant est f(β) = |kβ + s|²/2k
= (k/2)(c+t)ᵀG(c+t) où G est la matrice de Gram de la base et t les
coordonnées de s/k. La borne de Cauchy-Schwarz (c_j+t_j)² <= (G⁻¹)_jj·2F/k
délimite une boîte finie contenant tous les points d'exposant <= F.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from sympy import Matrix, Rational

from paraferm.Algebre.Systeme_Racines import RootSystem, Weight, inner_product
from paraferm.exceptions import PoidsInvalideError
from paraferm.Series.Series_Q import FormalQSeries


@lru_cache(maxsize=None)
def _gram_inverse(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    base = rs.long_root_basis
    l = rs.rank
    gram = Matrix(l, l, lambda i, j: Rational(inner_product(rs, base[i], base[j])))
    inverse = gram.inv()
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(l))
        for i in range(l)
    )


def _coordonnees_reseau(rs: RootSystem, v: Weight) -> list[Fraction]:
    """Coordonnées de v sur la base triangulaire de Q_L (substitution arrière)."""
    base = rs.base_ql
    l = rs.rank
    x = list(v.sr_coords)
    c = [Fraction(0)] * l
    for i in range(l - 1, -1, -1):
        c[i] = x[i] / base[i][i]
        for r in range(i + 1):
            x[r] -= c[i] * base[i][r]
    return c


def _exposant(rs: RootSystem, k: int, beta: Weight, shift: Weight) -> Fraction:
    v = beta * k + shift
    return inner_product(rs, v, v) / (2 * k)


def points_reseau(rs: RootSystem, k: int, shift: Weight, marge: int) -> Iterator[tuple[Weight, Fraction]]:
    """Points β ∈ Q_L avec leur exposant |kβ+s|²/2k, couvrant tous ceux d'exposant <= min + marge."""
    if k < 1:
        raise PoidsInvalideError(f"Niveau k={k} invalide (k >= 1 attendu)")
    if shift.rank != rs.rank:
        raise PoidsInvalideError(f"Décalage {shift} incompatible avec le rang {rs.rank}")
    t = [c / k for c in _coordonnees_reseau(rs, shift)]
    base = rs.long_root_basis
    inverse = _gram_inverse(rs)

    def vecteur(c: tuple[int, ...]) -> Weight:
        beta = rs.zero
        for cj, bj in zip(c, base):
            if cj:
                beta = beta + bj * cj
        return beta

    centre = tuple(-round(tj) for tj in t)
    borne = _exposant(rs, k, vecteur(centre), shift) + marge
    intervalles = []
    for j, tj in enumerate(t):
        rayon_carre = inverse[j][j] * 2 * borne / k
        rayon = math.isqrt(math.ceil(rayon_carre)) + 1
        intervalles.append(range(math.floor(-tj - rayon), math.ceil(-tj + rayon) + 1))
    for c in itertools.product(*intervalles):
        beta = vecteur(c)
        exposant = _exposant(rs, k, beta, shift)
        if exposant <= borne:
            yield beta, exposant


def lattice_theta_series(rs: RootSystem, k: int, shift: Weight, D: int) -> FormalQSeries:
    """Σ_{β∈Q_L} q^{|kβ+s|²/2k}, décalage = exposant minimal, tronquée à D."""
    if D < 0:
        raise PoidsInvalideError(f"Profondeur D={D} invalide (D >= 0 attendu)")
    exposants = [e for _, e in points_reseau(rs, k, shift, D)]
    minimum = min(exposants)
    coeffs = [0] * (D + 1)
    for e in exposants:
        ecart = e - minimum
        if ecart.denominator != 1:
            raise PoidsInvalideError(
                f"Décalage {shift} : exposants non alignés ({e} vs {minimum})"
            )
        if ecart <= D:
            coeffs[int(ecart)] += 1
    return FormalQSeries(minimum, tuple(coeffs))


def minimal_norm_representative(rs: RootSystem, k: int, lam: Weight) -> Weight:
    """Représentant de norme minimale de λ + kQ_L (départage : labels décroissants)."""
    candidats = [(e, lam + beta * k) for beta, e in points_reseau(rs, k, lam, 0)]
    minimum = min(e for e, _ in candidats)
    meilleurs = [w for e, w in candidats if e == minimum]
    return min(meilleurs, key=lambda w: tuple(-a for a in w.fw_coords))

