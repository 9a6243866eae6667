"""Module du vide universel V_ĝ(k,0) tronqué au degré D, en base PBW.

Un monôme est un tuple trié de facteurs (n, a) représentant a(-n), n >= 1 ;
l'ordre normal est (mode décroissant, indice de générateur croissant) et le
monôme (f_1, ..., f_r) désigne f_1 f_2 ... f_r · 1. Les actions de modes sont
redressées récursivement sur le premier facteur et mémorisées.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from loguru import logger

from paraferm.Algebre.Systeme_Racines import RootSystem
from paraferm.exceptions import TroncatureError
from paraferm.Sandbox.Algebre_Lie import LieAlgebraData, build_chevalley_basis
from paraferm.utils.env_loader import BUDGET_SANDBOX_DEFAUT

logger = logger.bind(type_log="SANDBOX")

Facteur = tuple[int, int]
PBWMonomial = tuple[Facteur, ...]
Termes = dict[PBWMonomial, Fraction]

VIDE: PBWMonomial = ()


def degre_monome(X: PBWMonomial) -> int:
    return sum(n for n, _ in X)


def _ajouter(cible: Termes, X: PBWMonomial, c: Fraction) -> None:
    if not c:
        return
    total = cible.get(X, Fraction(0)) + c
    if total:
        cible[X] = total
    else:
        cible.pop(X, None)


@dataclass(frozen=True)
class PBWVector:
    """Combinaison linéaire exacte de monômes PBW, sans coefficient nul."""

    terms: dict[PBWMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        propres = {X: Fraction(c) for X, c in self.terms.items() if c}
        object.__setattr__(self, "terms", propres)

    @classmethod
    def vacuum(cls) -> PBWVector:
        return cls({VIDE: Fraction(1)})

    @property
    def degree(self) -> Optional[int]:
        """Degré commun des monômes, None pour le vecteur nul ou non homogène."""
        degres = {degre_monome(X) for X in self.terms}
        return degres.pop() if len(degres) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, X: PBWMonomial) -> Fraction:
        return self.terms.get(X, Fraction(0))

    def __add__(self, other: PBWVector) -> PBWVector:
        termes = dict(self.terms)
        for X, c in other.terms.items():
            _ajouter(termes, X, c)
        return PBWVector(termes)

    def __neg__(self) -> PBWVector:
        return PBWVector({X: -c for X, c in self.terms.items()})

    def __sub__(self, other: PBWVector) -> PBWVector:
        return self + (-other)

    def __mul__(self, scalaire: int | Fraction) -> PBWVector:
        return PBWVector({X: c * scalaire for X, c in self.terms.items()})

    __rmul__ = __mul__


class TruncatedModule:
    """V_ĝ(k,0) jusqu'au degré D pour g simplement lacée.

    Raises:
        AlgebreInvalideError: famille non simplement lacée.
        TroncatureError: si dim g · D dépasse le budget.
    """

    def __init__(
        self, rs: RootSystem, level: int, max_degree: int, budget: int = BUDGET_SANDBOX_DEFAUT
    ):
        if level < 1:
            raise TroncatureError(f"Niveau k={level} invalide pour le bac à sable (k >= 1)")
        if max_degree < 0:
            raise TroncatureError(f"Degré maximal {max_degree} négatif")
        self.algebre: LieAlgebraData = build_chevalley_basis(rs)
        if self.algebre.dim * max_degree > budget:
            raise TroncatureError(
                f"dim g · D = {self.algebre.dim}·{max_degree} dépasse le budget {budget} "
                f"pour {rs.spec}"
            )
        self.rs = rs
        self.level = level
        self.max_degree = max_degree
        self.budget = budget
        self._bases: dict[int, list[PBWMonomial]] = {}
        self._modes: dict[tuple[int, int, PBWMonomial], Termes] = {}
        self._sugawara: dict[tuple[str, int, PBWMonomial], Termes] = {}
        self._produits: dict[tuple[PBWMonomial, int, PBWMonomial], Termes] = {}
        # Rempli par Sandbox.Quotient : (degré -> poids -> base réduite de J)
        self.quotient_data: Optional[dict[int, dict[tuple[int, ...], list[PBWVector]]]] = None
        logger.debug(f"Module tronqué {rs.spec} k={level} D={max_degree} (dim g={self.algebre.dim})")

    @property
    def spec(self) -> tuple[str, int]:
        return (str(self.rs.spec), self.level)

    # -- base PBW --------------------------------------------------------

    def _controler_degre(self, d: int) -> None:
        if d > self.max_degree:
            raise TroncatureError(f"Degré {d} au-delà de la troncature D={self.max_degree}")

    def basis(self, d: int) -> list[PBWMonomial]:
        """Monômes PBW de degré d, dans l'ordre normal."""
        self._controler_degre(d)
        if d not in self._bases:
            facteurs = [(n, a) for n in range(1, d + 1) for a in range(self.algebre.dim)]
            monomes: list[PBWMonomial] = []

            def etendre(reste: int, depuis: int, courant: list[Facteur]) -> None:
                if reste == 0:
                    monomes.append(tuple(courant))
                    return
                for idx in range(depuis, len(facteurs)):
                    f = facteurs[idx]
                    if f[0] > reste:
                        break
                    courant.append(f)
                    etendre(reste - f[0], idx, courant)
                    courant.pop()

            etendre(d, 0, [])
            self._bases[d] = monomes
        return self._bases[d]

    @property
    def basis_by_degree(self) -> list[list[PBWMonomial]]:
        return [self.basis(d) for d in range(self.max_degree + 1)]

    def weight(self, X: PBWMonomial) -> tuple[int, ...]:
        poids = [0] * self.algebre.rank
        for _, a in X:
            for i, c in enumerate(self.algebre.poids[a]):
                poids[i] += c
        return tuple(poids)

    # -- action des modes a(m) -------------------------------------------

    def mode_monome(self, a: int, m: int, X: PBWMonomial) -> Termes:
        """a(m) · X sous forme normale."""
        d = degre_monome(X) - m
        if d < 0:
            return {}
        self._controler_degre(d)
        cle = (a, m, X)
        if cle in self._modes:
            return self._modes[cle]
        algebre = self.algebre
        res: Termes = {}
        if m < 0:
            f = (-m, a)
            if not X or f <= X[0]:
                res[(f,) + X] = Fraction(1)
            else:
                (p, b), reste = X[0], X[1:]
                for Y, c in self.mode_monome(a, m, reste).items():
                    for Z, c2 in self.mode_monome(b, -p, Y).items():
                        _ajouter(res, Z, c * c2)
                for g, coeff in algebre.crochet(a, b):
                    for Z, c2 in self.mode_monome(g, m - p, reste).items():
                        _ajouter(res, Z, coeff * c2)
        elif X:
            (p, b), reste = X[0], X[1:]
            for Y, c in self.mode_monome(a, m, reste).items():
                for Z, c2 in self.mode_monome(b, -p, Y).items():
                    _ajouter(res, Z, c * c2)
            for g, coeff in algebre.crochet(a, b):
                for Z, c2 in self.mode_monome(g, m - p, reste).items():
                    _ajouter(res, Z, coeff * c2)
            if m == p:
                _ajouter(res, reste, m * algebre.produit(a, b) * self.level)
        self._modes[cle] = res
        return res

    # -- Sugawara ----------------------------------------------------------

    def _quadratique(self, nom: str, n: int, X: PBWMonomial) -> Termes:
        """Σ_a Σ_m :a(m) a^dual(n-m): · X, normalisé par le préfacteur de nom."""
        d = degre_monome(X)
        if d - n < 0:
            return {}
        self._controler_degre(d - n)
        cle = (nom, n, X)
        if cle in self._sugawara:
            return self._sugawara[cle]
        algebre = self.algebre
        if nom == "aff":
            generateurs = range(algebre.dim)
            prefacteur = Fraction(1, 2 * (self.level + self.rs.dual_coxeter))
        else:
            generateurs = range(algebre.rank)
            prefacteur = Fraction(1, 2 * self.level)
        res: Termes = {}
        for a in generateurs:
            for b, g_ab in algebre.duale[a]:
                for m in range(n - d, d + 1):
                    p = n - m
                    # ordre normal : le mode négatif à gauche
                    gauche, droite = ((a, m), (b, p)) if m < 0 else ((b, p), (a, m))
                    for Y, c in self.mode_monome(droite[0], droite[1], X).items():
                        for Z, c2 in self.mode_monome(gauche[0], gauche[1], Y).items():
                            _ajouter(res, Z, prefacteur * g_ab * c * c2)
        self._sugawara[cle] = res
        return res

    # -- produits normaux itérés ---------------------------------------------

    def produit_monomes(self, U: PBWMonomial, n: int, X: PBWMonomial) -> Termes:
        """(U·1)_{(n)} X par l'expansion itérée de Y(a(-m)w, z) sur le premier facteur."""
        if not U:
            return {X: Fraction(1)} if n == -1 else {}
        dU, dX = degre_monome(U), degre_monome(X)
        d = dU + dX - n - 1
        if d < 0:
            return {}
        self._controler_degre(d)
        cle = (U, n, X)
        if cle in self._produits:
            return self._produits[cle]
        (m, a), W = U[0], U[1:]
        dW = dU - m
        signe = -1 if m % 2 else 1
        res: Termes = {}
        for j in range(max(dW + dX - n - 1, dX) + 1):
            binome = comb(m + j - 1, j)
            if dW + dX - n - j - 1 >= 0:
                for Y, c in self.produit_monomes(W, n + j, X).items():
                    for Z, c2 in self.mode_monome(a, -m - j, Y).items():
                        _ajouter(res, Z, binome * c * c2)
            if j <= dX:
                for Y, c in self.mode_monome(a, j, X).items():
                    for Z, c2 in self.produit_monomes(W, n - m - j, Y).items():
                        _ajouter(res, Z, -signe * binome * c * c2)
        self._produits[cle] = res
        return res


def _lineaire(v: PBWVector, action: Callable[[PBWMonomial], Termes]) -> PBWVector:
    res: Termes = {}
    for X, c in v.terms.items():
        for Y, c2 in action(X).items():
            _ajouter(res, Y, c * c2)
    return PBWVector(res)


def current_mode_action(tm: TruncatedModule, a: int, n: int, v: PBWVector) -> PBWVector:
    """a(n)·v, redressé en forme normale.

    Raises:
        TroncatureError: si le résultat dépasse le degré D.
    """
    return _lineaire(v, lambda X: tm.mode_monome(a, n, X))


def combination_mode_action(
    tm: TruncatedModule, combinaison: Iterable[tuple[int, Fraction]], n: int, v: PBWVector
) -> PBWVector:
    """(Σ c_a a)(n)·v pour une combinaison de générateurs (h_α par exemple)."""
    res = PBWVector()
    for a, c in combinaison:
        res = res + current_mode_action(tm, a, n, v) * c
    return res


def sugawara_mode(tm: TruncatedModule, n: int, v: PBWVector) -> PBWVector:
    """L_aff(n)·v."""
    return _lineaire(v, lambda X: tm._quadratique("aff", n, X))


def heisenberg_virasoro_mode(tm: TruncatedModule, n: int, v: PBWVector) -> PBWVector:
    """L_h(n)·v, Virasoro de l'algèbre de Heisenberg de charge centrale rang(g)."""
    return _lineaire(v, lambda X: tm._quadratique("h", n, X))


def coset_virasoro_mode(tm: TruncatedModule, n: int, v: PBWVector) -> PBWVector:
    """L(n) = L_aff(n) - L_h(n)."""
    return sugawara_mode(tm, n, v) - heisenberg_virasoro_mode(tm, n, v)


def monomial_mode_action(tm: TruncatedModule, u: PBWVector, n: int, v: PBWVector) -> PBWVector:
    """u_{(n)} v, linéaire en u et en v."""
    res: Termes = {}
    for U, cu in u.terms.items():
        for X, cv in v.terms.items():
            for Y, c in tm.produit_monomes(U, n, X).items():
                _ajouter(res, Y, cu * cv * c)
    return PBWVector(res)


def vector_from_modes(
    tm: TruncatedModule, modes: Sequence[tuple[int, int]], coefficient: int | Fraction = 1
) -> PBWVector:
    """coefficient · a_1(m_1) a_2(m_2) ... a_r(m_r) · 1."""
    v = PBWVector.vacuum()
    for a, m in reversed(modes):
        v = current_mode_action(tm, a, m, v)
    return v * coefficient


def universal_graded_dims(tm: TruncatedModule) -> list[int]:
    """dim V_ĝ(k,0)_d pour d = 0..D."""
    return [len(tm.basis(d)) for d in range(tm.max_degree + 1)]


def universal_weight_dims(tm: TruncatedModule) -> dict[tuple[tuple[int, ...], int], int]:
    """dim V_ĝ(k,0)_d(μ), indexé par (coordonnées sr de μ, d)."""
    dims: Counter[tuple[tuple[int, ...], int]] = Counter()
    for d in range(tm.max_degree + 1):
        for X in tm.basis(d):
            dims[(tm.weight(X), d)] += 1
    return dict(dims)


def basis_by_weight(tm: TruncatedModule, d: int) -> dict[tuple[int, ...], list[PBWMonomial]]:
    """Monômes de degré d regroupés par poids."""
    groupes: dict[tuple[int, ...], list[PBWMonomial]] = defaultdict(list)
    for X in tm.basis(d):
        groupes[tm.weight(X)].append(X)
    return dict(groupes)
