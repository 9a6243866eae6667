"""Tests pour le module Algebre/Systeme_Racines.py et Algebre/Reseaux.py."""

from __future__ import annotations

from fractions import Fraction

import pytest

from paraferm.Algebre import (
    AlgebraSpec,
    build_root_system,
    dominant_conjugate,
    in_long_root_lattice,
    inner_product,
    is_dominant,
    is_root,
    k_alpha,
    lattice_group_structure,
    long_roots,
    q_mod_kql_representatives,
    simple_current_nodes,
    simple_reflection,
    to_document,
    weight_from_fw,
    weight_from_sr,
)
from paraferm.Algebre import Reseaux, Systeme_Racines
from paraferm.Algebre.constants import dimension_reference
from paraferm.exceptions import AlgebreInvalideError, IncoherenceError, PoidsInvalideError

CAS_NORMALISATION = [
    ("A", 1, {1}, 2),
    ("A", 2, {1, 2}, 3),
    ("A", 3, {1, 2, 3}, 4),
    ("B", 2, {1}, 3),
    ("B", 3, {1}, 5),
    ("C", 2, {2}, 3),
    ("C", 3, {3}, 4),
    ("C", 4, {4}, 5),
    ("D", 4, {1, 3, 4}, 6),
    ("G", 2, set(), 4),
    ("F", 4, set(), 9),
    ("E", 6, {1, 5}, 12),
]


def rs_de(famille: str, rang: int):
    return build_root_system(AlgebraSpec(famille, rang))


class TestAlgebraSpec:
    """Tests pour la validation de AlgebraSpec."""

    def test_famille_inconnue(self):
        """Une famille hors A..G est refusée."""
        with pytest.raises(AlgebreInvalideError):
            AlgebraSpec("H", 3)

    @pytest.mark.parametrize("famille,rang", [("A", 0), ("B", 1), ("D", 3), ("E", 9), ("G", 3), ("F", 5)])
    def test_rang_hors_domaine(self, famille, rang):
        """Les rangs hors du domaine de la famille sont refusés."""
        with pytest.raises(AlgebreInvalideError):
            AlgebraSpec(famille, rang)

    def test_representation_texte(self):
        assert str(AlgebraSpec("E", 6)) == "E6"


class TestNormalisation:
    """θ de longueur 2, nombre de racines, courants simples."""

    @pytest.mark.parametrize("famille,rang,noeuds,h_dual", CAS_NORMALISATION)
    def test_theta_longueur_deux(self, famille, rang, noeuds, h_dual):
        rs = rs_de(famille, rang)
        assert inner_product(rs, rs.theta, rs.theta) == 2

    @pytest.mark.parametrize("famille,rang,noeuds,h_dual", CAS_NORMALISATION)
    def test_nombre_de_racines(self, famille, rang, noeuds, h_dual):
        """|Δ| = dim g - l et dim g conforme aux formules classiques."""
        rs = rs_de(famille, rang)
        assert rs.dim_g == dimension_reference(famille, rang)
        assert len(rs.roots) == rs.dim_g - rang

    @pytest.mark.parametrize("famille,rang,noeuds,h_dual", CAS_NORMALISATION)
    def test_noeuds_courants_simples(self, famille, rang, noeuds, h_dual):
        rs = rs_de(famille, rang)
        assert simple_current_nodes(rs) == noeuds

    @pytest.mark.parametrize("famille,rang,noeuds,h_dual", CAS_NORMALISATION)
    def test_coxeter_dual(self, famille, rang, noeuds, h_dual):
        assert rs_de(famille, rang).dual_coxeter == h_dual

    def test_e7_noeud_six(self):
        assert simple_current_nodes(rs_de("E", 7)) == {6}

    def test_e8_sans_courant(self):
        assert simple_current_nodes(rs_de("E", 8)) == set()


class TestRacines:
    """Tests sur les racines, réflexions et niveaux k_α."""

    def test_theta_a2(self):
        rs = rs_de("A", 2)
        assert rs.theta.sr_coords == (1, 1)
        assert rs.theta.fw_coords == (1, 1)

    def test_racines_simples_dans_l_ordre(self):
        rs = rs_de("B", 3)
        for i, alpha in enumerate(rs.simple_roots):
            assert alpha.sr_coords == tuple(Fraction(int(i == j)) for j in range(3))

    def test_matrice_cartan_g2(self):
        assert rs_de("G", 2).cartan_matrix == ((2, -3), (-1, 2))

    def test_matrice_cartan_c3(self):
        """Ligne i : ⟨α_i∨, α_j⟩ ; α_3 est longue."""
        rs = rs_de("C", 3)
        assert rs.cartan_matrix == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
        assert rs.form_matrix[0][1] == Fraction(-1, 2)

    def test_matrice_cartan_f4(self):
        rs = rs_de("F", 4)
        assert rs.cartan_matrix == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
        assert rs.marks_a == (2, 3, 4, 2)

    def test_forme_non_definie_positive(self, monkeypatch):
        """Un diagramme affine (cycle de racines courtes) est refusé."""
        monkeypatch.setattr(
            Systeme_Racines,
            "_longueurs_et_aretes",
            lambda spec: ([Fraction(1)] * 3, [(0, 1), (1, 2), (0, 2)]),
        )
        with pytest.raises(AlgebreInvalideError):
            build_root_system.__wrapped__(AlgebraSpec("A", 3))

    @pytest.mark.parametrize("famille,rang", [("B", 3), ("C", 3), ("C", 4), ("F", 4), ("G", 2)])
    def test_racines_stables_par_reflexion(self, famille, rang):
        rs = rs_de(famille, rang)
        racines = set(rs.roots)
        for beta in rs.roots:
            for i in range(1, rang + 1):
                assert simple_reflection(rs, i, beta) in racines

    @pytest.mark.parametrize("famille,rang", [("B", 3), ("C", 3), ("F", 4), ("G", 2), ("E", 6)])
    def test_poids_fondamentaux_duaux(self, famille, rang):
        """⟨Λ_i, α_j∨⟩ = δ_ij."""
        rs = rs_de(famille, rang)
        for i, w in enumerate(rs.fundamental_weights):
            for j, alpha in enumerate(rs.simple_roots):
                assert 2 * inner_product(rs, w, alpha) / inner_product(rs, alpha, alpha) == int(i == j)

    @pytest.mark.parametrize("famille,rang", [("A", 3), ("B", 3), ("C", 3), ("D", 5), ("F", 4), ("G", 2), ("E", 7)])
    def test_somme_des_marques(self, famille, rang):
        """Σ a_i α_i = θ."""
        rs = rs_de(famille, rang)
        somme = rs.zero
        for a, alpha in zip(rs.marks_a, rs.simple_roots):
            somme = somme + alpha * a
        assert somme == rs.theta

    def test_is_root(self):
        rs = rs_de("A", 2)
        assert is_root(rs, weight_from_sr(rs, [1, 1]))
        assert is_root(rs, weight_from_sr(rs, [-1, 0]))
        assert not is_root(rs, weight_from_sr(rs, [2, 1]))

    def test_k_alpha_racine_courte(self):
        """k_α = 2k pour une racine courte de B_l, 3k pour G_2."""
        b2 = rs_de("B", 2)
        assert k_alpha(b2, b2.simple_roots[1], 3) == 6
        assert k_alpha(b2, b2.simple_roots[0], 3) == 3
        g2 = rs_de("G", 2)
        assert k_alpha(g2, g2.simple_roots[0], 1) == 3

    def test_k_alpha_refuse_un_non_racine(self):
        rs = rs_de("A", 1)
        with pytest.raises(PoidsInvalideError):
            k_alpha(rs, weight_from_sr(rs, [2]), 1)

    def test_reflexion_involutive(self):
        rs = rs_de("C", 3)
        w = weight_from_fw(rs, [2, -1, 1])
        for i in (1, 2, 3):
            assert simple_reflection(rs, i, simple_reflection(rs, i, w)) == w

    def test_reflexion_preserve_le_produit(self):
        rs = rs_de("F", 4)
        u = weight_from_fw(rs, [1, 0, 2, 1])
        v = weight_from_fw(rs, [0, 3, -1, 1])
        for i in range(1, 5):
            assert inner_product(rs, simple_reflection(rs, i, u), simple_reflection(rs, i, v)) == inner_product(rs, u, v)

    def test_noeud_de_reflexion_invalide(self):
        rs = rs_de("A", 2)
        with pytest.raises(PoidsInvalideError):
            simple_reflection(rs, 3, rs.rho)

    def test_conjugue_dominant(self):
        rs = rs_de("A", 2)
        w = dominant_conjugate(rs, weight_from_sr(rs, [-1, -1]))
        assert is_dominant(w)
        assert w == rs.theta

    def test_dimensions_incompatibles(self):
        rs = rs_de("A", 2)
        with pytest.raises(PoidsInvalideError):
            weight_from_fw(rs, [1])


class TestReseauRacinesLongues:
    """Q_L, Q/kQ_L et forme de Smith."""

    @pytest.mark.parametrize(
        "famille,rang,k,ordre",
        [("A", 1, 2, 2), ("A", 2, 1, 1), ("A", 2, 3, 9), ("B", 2, 1, 2), ("C", 3, 1, 4), ("G", 2, 1, 3), ("F", 4, 1, 4)],
    )
    def test_ordre_du_quotient(self, famille, rang, k, ordre):
        rs = rs_de(famille, rang)
        representants = q_mod_kql_representatives(rs, k)
        assert len(representants) == ordre
        assert len(set(representants)) == ordre

    def test_facteurs_invariants(self):
        assert lattice_group_structure(rs_de("A", 2), 3) == [3, 3]
        assert lattice_group_structure(rs_de("A", 2), 1) == []

    def test_racines_longues_b2(self):
        rs = rs_de("B", 2)
        assert len(long_roots(rs)) == 4
        assert in_long_root_lattice(rs, weight_from_sr(rs, [0, 2]))
        assert not in_long_root_lattice(rs, weight_from_sr(rs, [0, 1]))

    @pytest.mark.parametrize("rang", [2, 3, 4])
    def test_premier_poids_fondamental_hors_de_ql_pour_b(self, rang):
        rs = rs_de("B", rang)
        Lambda1 = rs.fundamental_weights[0]
        assert Lambda1.is_root_lattice
        assert not in_long_root_lattice(rs, Lambda1)
        assert in_long_root_lattice(rs, Lambda1 * 2)

    @pytest.mark.parametrize("rang", [2, 3, 4])
    def test_dernier_poids_fondamental_hors_de_ql_pour_c(self, rang):
        rs = rs_de("C", rang)
        assert not in_long_root_lattice(rs, rs.fundamental_weights[-1])
        assert all(in_long_root_lattice(rs, a) for a in long_roots(rs))

    def test_reduction_idempotente(self):
        base = Reseaux.base_hermite([(2, 0), (1, 3)])
        x = Reseaux.reduire_modulo((7, -5), base)
        assert Reseaux.reduire_modulo(x, base) == x
        assert Reseaux.appartient(tuple(a - b for a, b in zip((7, -5), x)), base)

    def test_base_de_rang_insuffisant(self):
        with pytest.raises(IncoherenceError):
            Reseaux.base_hermite([(1, 1), (2, 2)])


class TestToDocument:
    """Tests pour la sérialisation canonique."""

    def test_rationnels_en_texte(self):
        document = to_document(rs_de("G", 2))
        assert document["algebre"] == "G2"
        assert document["matrice_forme"][0][0] == "2/3"
        assert document["noeuds_courants_simples"] == []

    def test_noeuds_c3(self):
        assert to_document(rs_de("C", 3))["noeuds_courants_simples"] == [3]
