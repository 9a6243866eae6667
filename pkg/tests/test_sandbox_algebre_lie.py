"""Tests pour le module Sandbox/Algebre_Lie.py : base de Chevalley."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from paraferm.Algebre import AlgebraSpec, build_root_system
from paraferm.exceptions import AlgebreInvalideError
from paraferm.Sandbox import build_chevalley_basis


def algebre(famille: str, rang: int):
    return build_chevalley_basis(build_root_system(AlgebraSpec(famille, rang)))


def crochet_lineaire(alg, u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
    res: dict[int, Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for g, c in alg.crochet(a, b):
                res[g] = res.get(g, Fraction(0)) + ca * cb * c
    return {g: c for g, c in res.items() if c}


def forme_lineaire(alg, u: dict[int, Fraction], v: dict[int, Fraction]) -> Fraction:
    return sum((ca * cb * alg.produit(a, b) for a, ca in u.items() for b, cb in v.items()), Fraction(0))


class TestBaseDeChevalley:
    """Jacobi, antisymétrie et invariance de la forme."""

    @pytest.mark.parametrize("famille,rang", [("A", 1), ("A", 2), ("A", 3)])
    def test_antisymetrie(self, famille, rang):
        alg = algebre(famille, rang)
        for a, b in itertools.product(range(alg.dim), repeat=2):
            assert crochet_lineaire(alg, {a: 1}, {b: 1}) == {
                g: -c for g, c in crochet_lineaire(alg, {b: 1}, {a: 1}).items()
            }

    @pytest.mark.parametrize("famille,rang", [("A", 2), ("A", 3)])
    def test_jacobi(self, famille, rang):
        alg = algebre(famille, rang)
        for a, b, c in itertools.combinations(range(alg.dim), 3):
            x, y, z = {a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)}
            total: dict[int, Fraction] = {}
            for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                for g, coeff in crochet_lineaire(alg, u, crochet_lineaire(alg, v, w)).items():
                    total[g] = total.get(g, Fraction(0)) + coeff
            assert not any(total.values()), (alg.noms[a], alg.noms[b], alg.noms[c])

    @pytest.mark.parametrize("famille,rang", [("A", 2), ("D", 4)])
    def test_forme_invariante(self, famille, rang):
        """⟨[a,b],c⟩ = ⟨a,[b,c]⟩."""
        alg = algebre(famille, rang)
        generateurs = range(min(alg.dim, 16))
        for a, b, c in itertools.product(generateurs, repeat=3):
            gauche = forme_lineaire(alg, crochet_lineaire(alg, {a: 1}, {b: 1}), {c: 1})
            droite = forme_lineaire(alg, {a: 1}, crochet_lineaire(alg, {b: 1}, {c: 1}))
            assert gauche == droite

    def test_dimension_et_noms(self):
        alg = algebre("A", 2)
        assert alg.dim == 8
        assert alg.noms[:2] == ("h1", "h2")
        assert "x+11" in alg.noms and "x-11" in alg.noms

    def test_base_duale(self):
        """Σ_b g^{ab}⟨b,c⟩ = δ_ac."""
        alg = algebre("A", 3)
        for a in range(alg.dim):
            for c in range(alg.dim):
                valeur = sum((g * alg.produit(b, c) for b, g in alg.duale[a]), Fraction(0))
                assert valeur == (1 if a == c else 0)

    def test_crochet_racine_opposee(self):
        """[x_α, x_{-α}] = h_α = Σ a_i h_i."""
        alg = algebre("A", 2)
        plus = alg.generateur_racine((1, 1))
        moins = alg.generateur_racine((-1, -1))
        assert dict(alg.crochet(plus, moins)) == {0: 1, 1: 1}
        assert alg.produit(plus, moins) == 1

    @pytest.mark.parametrize("famille,rang", [("B", 2), ("C", 3), ("G", 2), ("F", 4)])
    def test_familles_non_simplement_lacees(self, famille, rang):
        with pytest.raises(AlgebreInvalideError):
            algebre(famille, rang)
