"""Tests pour le module Series/Branchement.py : séries de branchement et reconstruction."""

from __future__ import annotations

from fractions import Fraction

import pytest

from paraferm.Algebre import (
    AlgebraSpec,
    build_root_system,
    central_charges,
    enumerate_level_k_dominants,
    weight_from_fw,
)
from paraferm.Classification import enumerate_labels
from paraferm.exceptions import IndetermineError, PoidsInvalideError
from paraferm.Series import (
    branching_series,
    heisenberg_character,
    lowest_conformal_weight,
    verify_reconstruction,
)


def niveau(famille: str, rang: int, k: int):
    return central_charges(build_root_system(AlgebraSpec(famille, rang)), k)


class TestSeriesDeBranchement:
    """K(sl₂, 2) est le modèle d'Ising : h ∈ {0, 1/16, 1/2}."""

    def test_vide_ising(self):
        ld = niveau("A", 1, 2)
        resultat = branching_series(ld, ld.rs.zero, ld.rs.zero, 8)
        assert resultat.series.offset == 0
        assert resultat.series.coeffs == (1, 0, 1, 1, 2, 2, 3, 3, 5)
        assert resultat.h_min == 0
        assert resultat.first_nonzero_depth == 0

    def test_module_un_demi(self):
        ld = niveau("A", 1, 2)
        alpha = ld.rs.simple_roots[0]
        resultat = branching_series(ld, ld.rs.zero, alpha, 8)
        assert resultat.series.offset == Fraction(-1, 2)
        assert resultat.series.coeffs == (0, 1, 1, 1, 1, 2, 2, 3, 4)
        assert resultat.h_min == Fraction(1, 2)
        assert resultat.first_nonzero_depth == 1

    def test_module_un_seizieme(self):
        ld = niveau("A", 1, 2)
        omega = weight_from_fw(ld.rs, [1])
        resultat = branching_series(ld, omega, omega, 4)
        assert resultat.series.offset == Fraction(1, 16)
        assert resultat.series.coeffs == (1, 1, 1, 2, 2)
        assert resultat.h_min == Fraction(1, 16)

    def test_niveau_un_trivial(self):
        """K(sl₂, 1) = C : la série du vide se réduit à 1."""
        ld = niveau("A", 1, 1)
        resultat = branching_series(ld, ld.rs.zero, ld.rs.zero, 6)
        assert resultat.series.coeffs == (1, 0, 0, 0, 0, 0, 0)

    def test_coefficients_positifs_a2(self):
        ld = niveau("A", 2, 2)
        Lambda = weight_from_fw(ld.rs, [1, 0])
        resultat = branching_series(ld, Lambda, Lambda, 4)
        assert all(c >= 0 for c in resultat.series.coeffs)
        assert resultat.determined

    def test_classe_incompatible(self):
        ld = niveau("A", 1, 2)
        with pytest.raises(PoidsInvalideError):
            branching_series(ld, ld.rs.zero, weight_from_fw(ld.rs, [1]), 2)


class TestPoidsConformeMinimal:
    """h_min et cas indéterminé."""

    def test_h_min(self):
        ld = niveau("A", 1, 2)
        assert lowest_conformal_weight(ld, ld.rs.zero, ld.rs.simple_roots[0], 3) == Fraction(1, 2)

    def test_serie_nulle_indeterminee(self):
        """À la profondeur 0, M^{0,α} n'a encore aucun vecteur."""
        ld = niveau("A", 1, 2)
        with pytest.raises(IndetermineError) as exc_info:
            lowest_conformal_weight(ld, ld.rs.zero, ld.rs.simple_roots[0], 0)
        assert exc_info.value.profondeur == 0
        assert not branching_series(ld, ld.rs.zero, ld.rs.simple_roots[0], 0).determined


class TestReconstruction:
    """ch L(k,Λ) = Σ θ_{Λ+β}/η^l · b_{Λ,Λ+β} sur Q/kQ_L."""

    @pytest.mark.parametrize(
        "famille,rang,k",
        [("A", 1, 2), ("A", 1, 3), ("A", 2, 1), ("A", 2, 2), ("B", 2, 1)],
    )
    def test_identite(self, famille, rang, k):
        """L'identité tient pour tout Λ de P₊ᵏ jusqu'à la profondeur 6."""
        ld = niveau(famille, rang, k)
        for Lambda in enumerate_level_k_dominants(ld.rs, k):
            serie = verify_reconstruction(ld, Lambda, 6)
            assert serie.cutoff == 6

    def test_caractere_heisenberg(self):
        ld = niveau("A", 1, 2)
        serie = heisenberg_character(ld, ld.rs.simple_roots[0], 3)
        assert serie.offset == Fraction(1, 2)
        assert serie.coeffs == (1, 1, 2, 3)


class TestCovarianceParTranslation:
    """M^{Λ,λ} et M^{Λ,λ+kβ}, β ∈ Q_L, ont la même série une fois les exposants alignés."""

    @pytest.mark.parametrize(
        "famille,rang,k,D",
        [("A", 1, 2, 6), ("A", 1, 3, 6), ("A", 2, 1, 5), ("B", 2, 1, 5)],
    )
    def test_series_identiques(self, famille, rang, k, D):
        ld = niveau(famille, rang, k)
        for label in enumerate_labels(ld):
            base = branching_series(ld, label.Lambda, label.lambda_class, D)
            for beta in ld.rs.long_root_basis:
                for signe in (1, -1):
                    translate = branching_series(ld, label.Lambda, label.lambda_class + beta * (signe * k), D)
                    assert base.series.agrees_with(translate.series)
                    if base.determined and translate.determined:
                        assert translate.h_min == base.h_min

    def test_vide_translate_a1(self):
        """M^{0,2α} de K(sl₂, 2) redonne le vide : h_min = 0, atteint à la profondeur 2."""
        ld = niveau("A", 1, 2)
        alpha = ld.rs.simple_roots[0]
        translate = branching_series(ld, ld.rs.zero, alpha * 2, 6)
        assert translate.first_nonzero_depth == 2
        assert translate.h_min == 0
        assert translate.series.normalized().coeffs[:3] == (1, 0, 1)
