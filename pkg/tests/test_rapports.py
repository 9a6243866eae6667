"""Tests pour le package Rapports : documents JSON, CSV et affichage console."""

from __future__ import annotations

import json
from fractions import Fraction
from io import StringIO

import pandas as pd
import pytest

from paraferm.Algebre import AlgebraSpec, build_root_system, central_charges, weight_from_fw
from paraferm.Classification import emit_atlas
from paraferm.Rapports import (
    afficher_atlas,
    afficher_info,
    atlas_to_csv,
    atlas_to_document,
    branch_to_document,
    info_to_document,
    quotient_dims_to_document,
    vers_json,
)
from paraferm.Series import branching_series
from paraferm.utils.rationnels import formater_rationnel, formater_vecteur, lire_rationnel


def niveau(famille: str, rang: int, k: int):
    return central_charges(build_root_system(AlgebraSpec(famille, rang)), k)


class TestVersJson:
    """Sérialisation canonique."""

    def test_cles_triees_et_fin_de_ligne(self):
        texte = vers_json({"b": 1, "a": [1, 2], "c": "é"})
        assert texte.endswith("}\n")
        assert texte.index('"a"') < texte.index('"b"') < texte.index('"c"')
        assert "é" in texte

    def test_deterministe(self):
        ld = niveau("A", 2, 2)
        assert vers_json(info_to_document(ld.rs, ld)) == vers_json(info_to_document(ld.rs, ld))


class TestDocuments:
    """Contenu des documents info, branch, atlas et sandbox."""

    def test_info_avec_niveau(self):
        ld = niveau("A", 1, 2)
        document = info_to_document(ld.rs, ld)
        assert document["niveau"]["c_para"] == "1/2"
        assert document["niveau"]["q_modulo_kql"] == {"ordre": 2, "facteurs_invariants": [2]}
        assert [d["n_Lambda"] for d in document["niveau"]["dominants"]] == ["0", "3/16", "1/2"]

    def test_info_sans_niveau(self):
        document = info_to_document(build_root_system(AlgebraSpec("G", 2)))
        assert "niveau" not in document
        assert document["dim_g"] == 14

    def test_branch(self):
        ld = niveau("A", 1, 2)
        omega = weight_from_fw(ld.rs, [1])
        document = branch_to_document(ld, branching_series(ld, omega, omega, 3))
        assert document["h_min"] == "1/16"
        assert document["serie"] == {"offset": "1/16", "coeffs": [1, 1, 1, 2]}
        assert document["indetermine"] is False
        json.loads(vers_json(document))

    def test_atlas(self):
        ld = niveau("A", 1, 2)
        document = atlas_to_document(ld, emit_atlas(ld, 4), 4)
        assert document["nombre_entrees"] == 3
        assert [e["h_min"] for e in document["entrees"]] == ["0", "1/16", "1/2"]
        assert all(len(e["orbite"]) == e["taille_orbite"] for e in document["entrees"])

    def test_quotient(self):
        dims = {((0,), 0): 1, ((1,), 1): 1, ((0,), 1): 1, ((-1,), 1): 1}
        document = quotient_dims_to_document(("A1", 2), 1, dims, [1, 0])
        assert document["dimensions_par_degre"] == [1, 3]
        assert [d["poids_sr"] for d in document["dimensions"]] == [[0], [-1], [0], [1]]


class TestAtlasCsv:
    """Export CSV de l'atlas."""

    def test_colonnes(self):
        ld = niveau("A", 1, 2)
        texte = atlas_to_csv(emit_atlas(ld, 3), 3)
        df = pd.read_csv(StringIO(texte), dtype=str, keep_default_na=False)
        assert list(df.columns) == [
            "Lambda", "lambda_sr", "taille_orbite", "h_min", "c_para", "non_separe", "offset",
            "q0", "q1", "q2", "q3",
        ]
        assert len(df) == 3
        assert list(df["h_min"]) == ["0", "1/16", "1/2"]
        assert "\r" not in texte


class TestConsole:
    """Les tableaux rich vont sur stderr, jamais sur stdout."""

    def test_affichage_sur_stderr(self, capsys):
        ld = niveau("A", 1, 2)
        afficher_info(info_to_document(ld.rs, ld))
        afficher_atlas(atlas_to_document(ld, emit_atlas(ld, 2), 2))
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "A1" in captured.err


class TestRationnels:
    """Format "p/q" des documents."""

    def test_formatage(self):
        assert formater_rationnel(Fraction(-6, 4)) == "-3/2"
        assert formater_rationnel(Fraction(4, 2)) == "2"
        assert formater_vecteur([0, Fraction(1, 3)]) == ["0", "1/3"]

    def test_lecture(self):
        assert lire_rationnel(" 15/2 ") == Fraction(15, 2)
        assert lire_rationnel(formater_rationnel(Fraction(-1, 16))) == Fraction(-1, 16)

    @pytest.mark.parametrize("texte", ["1/0", "un demi", ""])
    def test_lecture_invalide(self, texte):
        with pytest.raises(ValueError):
            lire_rationnel(texte)
