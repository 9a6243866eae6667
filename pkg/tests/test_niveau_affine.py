"""Tests pour le module Algebre/Niveau_Affine.py."""

from __future__ import annotations

from fractions import Fraction

import pytest

from paraferm.Algebre import (
    AlgebraSpec,
    affine_weight_multiplicities,
    build_root_system,
    central_charges,
    conformal_weight_n_Lambda,
    enumerate_level_k_dominants,
    inner_product,
    level_bound_ok,
    simple_reflection,
    weight_from_fw,
    weights_at_depth,
)
from paraferm.exceptions import PoidsInvalideError, TroncatureError
from paraferm.Series import graded_dimension_series


def niveau(famille: str, rang: int, k: int):
    return central_charges(build_root_system(AlgebraSpec(famille, rang)), k)


class TestChargesCentrales:
    """c_aff = k·dim g/(k+h∨) et c_para = c_aff - rang."""

    @pytest.mark.parametrize(
        "famille,rang,k,c_aff,c_para",
        [
            ("A", 1, 1, Fraction(1), Fraction(0)),
            ("A", 1, 2, Fraction(3, 2), Fraction(1, 2)),
            ("A", 1, 3, Fraction(9, 5), Fraction(4, 5)),
            ("A", 2, 1, Fraction(2), Fraction(0)),
            ("G", 2, 1, Fraction(14, 5), Fraction(4, 5)),
            ("E", 8, 2, Fraction(31, 2), Fraction(15, 2)),
        ],
    )
    def test_valeurs(self, famille, rang, k, c_aff, c_para):
        ld = niveau(famille, rang, k)
        assert ld.c_aff == c_aff
        assert ld.c_para == c_para
        assert ld.c_heis == rang

    def test_niveau_nul_refuse(self):
        with pytest.raises(PoidsInvalideError):
            niveau("A", 1, 0)


class TestPoidsDominantsDeNiveau:
    """Énumération de P₊ᵏ et poids conforme n_Λ."""

    @pytest.mark.parametrize(
        "famille,rang,k,nombre",
        [("A", 1, 2, 3), ("A", 1, 5, 6), ("A", 2, 2, 6), ("B", 2, 1, 3), ("G", 2, 1, 2), ("E", 8, 1, 1)],
    )
    def test_cardinal(self, famille, rang, k, nombre):
        ld = niveau(famille, rang, k)
        assert len(enumerate_level_k_dominants(ld.rs, k)) == nombre

    def test_ordre_canonique(self):
        rs = build_root_system(AlgebraSpec("A", 1))
        assert [w.fw_coords for w in enumerate_level_k_dominants(rs, 2)] == [(0,), (1,), (2,)]

    def test_n_lambda(self):
        ld = niveau("A", 1, 1)
        assert conformal_weight_n_Lambda(ld, weight_from_fw(ld.rs, [1])) == Fraction(1, 4)
        ld = niveau("A", 1, 2)
        assert conformal_weight_n_Lambda(ld, weight_from_fw(ld.rs, [1])) == Fraction(3, 16)
        assert conformal_weight_n_Lambda(ld, ld.rs.zero) == 0

    def test_hors_niveau(self):
        ld = niveau("A", 1, 1)
        with pytest.raises(PoidsInvalideError):
            conformal_weight_n_Lambda(ld, weight_from_fw(ld.rs, [2]))

    def test_borne_de_niveau(self):
        ld = niveau("A", 1, 1)
        assert level_bound_ok(ld, weight_from_fw(ld.rs, [1]))
        assert not level_bound_ok(ld, ld.rs.simple_roots[0])


class TestMultiplicitesAffines:
    """Récurrence de Freudenthal affine."""

    def test_profondeur_un_a1(self):
        ld = niveau("A", 1, 1)
        rs = ld.rs
        alpha = rs.simple_roots[0]
        table = affine_weight_multiplicities(ld, rs.zero, 1)
        assert weights_at_depth(table, 1) == {alpha: 1, rs.zero: 1, -alpha: 1}

    @pytest.mark.parametrize(
        "k,attendu",
        [(1, (1, 3, 4, 7, 13, 19)), (2, (1, 3, 9, 15, 30))],
    )
    def test_dimensions_graduees_vide(self, k, attendu):
        ld = niveau("A", 1, k)
        serie = graded_dimension_series(ld, ld.rs.zero, len(attendu) - 1)
        assert serie.coeffs == attendu
        assert serie.offset == 0

    def test_profondeur_zero_module_fini(self):
        """La profondeur 0 reproduit L_g(Λ)."""
        ld = niveau("A", 2, 2)
        Lambda = weight_from_fw(ld.rs, [1, 1])
        table = affine_weight_multiplicities(ld, Lambda, 0)
        assert sum(weights_at_depth(table, 0).values()) == 8

    def test_au_dela_de_la_troncature(self):
        ld = niveau("A", 1, 1)
        table = affine_weight_multiplicities(ld, ld.rs.zero, 2)
        with pytest.raises(TroncatureError):
            table.multiplicity(ld.rs.zero, 3)

    def test_poids_hors_niveau(self):
        ld = niveau("A", 1, 1)
        with pytest.raises(PoidsInvalideError):
            affine_weight_multiplicities(ld, weight_from_fw(ld.rs, [2]), 2)

    def test_profondeur_negative(self):
        ld = niveau("A", 1, 1)
        with pytest.raises(PoidsInvalideError):
            affine_weight_multiplicities(ld, ld.rs.zero, -1)


CAS_INVARIANTS = [
    ("A", 1, 2, 4),
    ("A", 2, 1, 3),
    ("B", 2, 1, 3),
    ("C", 3, 1, 2),
    ("G", 2, 1, 2),
]


class TestInvariantsAffines:
    """Propriétés de chaque entrée des tables de L_ĝ(k,Λ), pour tout Λ de P₊ᵏ."""

    @pytest.mark.parametrize("famille,rang,k,D", CAS_INVARIANTS)
    def test_invariance_de_weyl_par_profondeur(self, famille, rang, k, D):
        ld = niveau(famille, rang, k)
        rs = ld.rs
        for Lambda in enumerate_level_k_dominants(rs, k):
            table = affine_weight_multiplicities(ld, Lambda, D)
            for n in range(D + 1):
                tranche = weights_at_depth(table, n)
                for i in range(1, rs.rank + 1):
                    assert {simple_reflection(rs, i, mu): m for mu, m in tranche.items()} == tranche

    @pytest.mark.parametrize("famille,rang,k,D", CAS_INVARIANTS)
    def test_borne_de_niveau_en_tete(self, famille, rang, k, D):
        """À la profondeur 0, tous les poids respectent |⟨μ, α∨⟩| <= k·⟨θ,θ⟩/⟨α,α⟩."""
        ld = niveau(famille, rang, k)
        for Lambda in enumerate_level_k_dominants(ld.rs, k):
            table = affine_weight_multiplicities(ld, Lambda, D)
            assert all(level_bound_ok(ld, mu) for mu in weights_at_depth(table, 0))

    @pytest.mark.parametrize("famille,rang,k,D", CAS_INVARIANTS)
    def test_paraboloide_des_poids(self, famille, rang, k, D):
        """Tout poids (μ, n) vérifie ⟨μ,μ⟩ <= ⟨Λ,Λ⟩ + 2kn."""
        ld = niveau(famille, rang, k)
        rs = ld.rs
        for Lambda in enumerate_level_k_dominants(rs, k):
            norme = inner_product(rs, Lambda, Lambda)
            table = affine_weight_multiplicities(ld, Lambda, D)
            for mu, n in table.entries:
                assert inner_product(rs, mu, mu) <= norme + 2 * k * n

    def test_borne_de_niveau_depassee_en_profondeur(self):
        """Le vecteur e_α(-1)·1 de L(1,0) sort de la borne de niveau dès la profondeur 1."""
        ld = niveau("A", 1, 1)
        alpha = ld.rs.simple_roots[0]
        table = affine_weight_multiplicities(ld, ld.rs.zero, 1)
        assert table.multiplicity(alpha, 1) == 1
        assert not level_bound_ok(ld, alpha)
