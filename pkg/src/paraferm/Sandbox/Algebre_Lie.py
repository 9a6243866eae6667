"""Base de Chevalley d'une algèbre simplement lacée par le cocycle de signes.

Générateurs : h_1..h_l (h_i = t_{α_i}, matrice de Gram égale à la matrice
de forme), puis x_α pour les racines positives, puis x_α pour les négatives.

Le cocycle ε est bimultiplicatif sur Q avec, sur les racines simples,
ε(α_i,α_i) = -1, ε(α_i,α_j) = (-1)^{(α_i|α_j)} si i < j et 1 si i > j.
Avec E_α tels que [E_α,E_β] = ε(α,β)E_{α+β} et [E_α,E_{-α}] = -t_α, on pose
x_α = E_α et x_{-α} = -E_{-α} pour α > 0 ; alors [x_α,x_{-α}] = t_α = h_α
et ⟨x_α, x_{-α}⟩ = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix, Rational

from paraferm.Algebre.Systeme_Racines import RootSystem
from paraferm.exceptions import AlgebreInvalideError

FAMILLES_SIMPLEMENT_LACEES = ("A", "D", "E")

Racine = tuple[int, ...]


@dataclass(frozen=True)
class LieAlgebraData:
    """Constantes de structure exactes d'une base de g."""

    rs: RootSystem
    noms: tuple[str, ...]
    poids: tuple[Racine, ...]
    # [a, b] = Σ coeff · générateur
    crochets: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]
    # ⟨a, b⟩ non nuls
    forme: dict[tuple[int, int], Fraction]
    # base duale : a ↦ [(b, g^{ab})]
    duale: tuple[tuple[tuple[int, Fraction], ...], ...]
    index_racine: dict[Racine, int]

    @property
    def dim(self) -> int:
        return len(self.noms)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def crochet(self, a: int, b: int) -> tuple[tuple[int, Fraction], ...]:
        return self.crochets.get((a, b), ())

    def produit(self, a: int, b: int) -> Fraction:
        return self.forme.get((a, b), Fraction(0))

    def generateur_racine(self, alpha: Racine) -> int:
        return self.index_racine[tuple(alpha)]

    def est_cartan(self, a: int) -> bool:
        return a < self.rank


def _epsilon(forme: tuple[tuple[Fraction, ...], ...], a: Racine, b: Racine) -> int:
    l = len(a)
    exposant = 0
    for i in range(l):
        for j in range(l):
            if not (a[i] and b[j]):
                continue
            if i == j:
                exposant += a[i] * b[j]
            elif i < j:
                exposant += int(forme[i][j]) * a[i] * b[j]
    return -1 if exposant % 2 else 1


def build_chevalley_basis(rs: RootSystem) -> LieAlgebraData:
    """Constantes de structure et forme invariante de g (familles A, D, E).

    Raises:
        AlgebreInvalideError: pour une famille non simplement lacée.
    """
    if rs.spec.family not in FAMILLES_SIMPLEMENT_LACEES:
        raise AlgebreInvalideError(
            f"Bac à sable limité aux familles simplement lacées, pas {rs.spec}"
        )
    l = rs.rank
    forme_racines = rs.form_matrix
    positives = [tuple(int(c) for c in a.sr_coords) for a in rs.positive_roots]
    racines = positives + [tuple(-c for c in a) for a in positives]
    noms = tuple(f"h{i + 1}" for i in range(l)) + tuple(
        ("x+" if sum(a) > 0 else "x-") + "".join(str(abs(c)) for c in a) for a in racines
    )
    poids = tuple(tuple([0] * l) for _ in range(l)) + tuple(racines)
    index_racine = {a: l + i for i, a in enumerate(racines)}

    def signe(a: Racine) -> int:
        return 1 if sum(a) > 0 else -1

    def produit_racines(a: Racine, b: Racine) -> Fraction:
        return sum(
            (forme_racines[i][j] * a[i] * b[j] for i in range(l) for j in range(l)),
            Fraction(0),
        )

    crochets: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
    forme: dict[tuple[int, int], Fraction] = {}
    for i in range(l):
        for j in range(l):
            if forme_racines[i][j]:
                forme[(i, j)] = forme_racines[i][j]
        simple = tuple(int(r == i) for r in range(l))
        for a in racines:
            c = produit_racines(simple, a)
            if c:
                g = index_racine[a]
                crochets[(i, g)] = ((g, c),)
                crochets[(g, i)] = ((g, -c),)
    for a in racines:
        ga = index_racine[a]
        oppose = tuple(-c for c in a)
        forme[(ga, index_racine[oppose])] = Fraction(1)
        for b in racines:
            gb = index_racine[b]
            somme = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in somme):
                # [x_α, x_{-α}] = t_α = Σ a_i h_i
                crochets[(ga, gb)] = tuple((i, Fraction(c)) for i, c in enumerate(a) if c)
            elif somme in index_racine:
                coeff = signe(a) * signe(b) * signe(somme) * _epsilon(forme_racines, a, b)
                crochets[(ga, gb)] = ((index_racine[somme], Fraction(coeff)),)

    inverse = Matrix(l, l, lambda i, j: Rational(forme_racines[i][j])).inv()
    duale_cartan = tuple(
        tuple(
            (j, Fraction(int(inverse[i, j].p), int(inverse[i, j].q)))
            for j in range(l)
            if inverse[i, j] != 0
        )
        for i in range(l)
    )
    duale_racines = tuple(((index_racine[tuple(-c for c in a)], Fraction(1)),) for a in racines)
    return LieAlgebraData(
        rs=rs,
        noms=noms,
        poids=poids,
        crochets=crochets,
        forme=forme,
        duale=duale_cartan + duale_racines,
        index_racine=index_racine,
    )
