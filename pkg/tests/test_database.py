"""Tests pour le package Database : cache SQLite des tables de multiplicités."""

from __future__ import annotations

import sqlite3

import pytest

from paraferm.Algebre import AlgebraSpec, build_root_system, central_charges
from paraferm.Algebre import Niveau_Affine
from paraferm.Database import (
    TABLE_MULTIPLICITES,
    charger_table_multiplicites,
    cle_table,
    enregistrer_table_multiplicites,
    integrite_db,
    verif_presence_db,
    verif_repertoire_db,
)

ENTREES = {((0,), 0): 1, ((1,), 1): 1, ((0,), 1): 1, ((-1,), 1): 1, ((0,), 2): 2}


class TestCreation:
    """Tests pour verif_presence_db() et integrite_db()."""

    def test_repertoire_cree_puis_reutilise(self, tmp_path):
        cible = tmp_path / "a" / "b" / "cache.sqlite"
        assert verif_repertoire_db(cible) == (tmp_path / "a" / "b").resolve()
        assert cible.parent.is_dir()
        assert verif_repertoire_db(str(cible)) == cible.parent.resolve()

    def test_creation_du_fichier(self, tmp_path):
        db_path = str(tmp_path / "sous" / "cache.sqlite")
        verif_presence_db(db_path)
        conn = sqlite3.connect(db_path)
        try:
            tables = [r[0] for r in conn.execute("SELECT name FROM sqlite_master WHERE type='table'")]
        finally:
            conn.close()
        assert TABLE_MULTIPLICITES in tables

    def test_integrite_recree_ce_qui_manque(self, tmp_path):
        db_path = str(tmp_path / "vide.sqlite")
        sqlite3.connect(db_path).close()
        recap = integrite_db(db_path)
        assert set(recap["crees"]) == {TABLE_MULTIPLICITES, "idx_multiplicites_recherche"}
        assert integrite_db(db_path)["crees"] == []


class TestTables:
    """Tests pour l'enregistrement et la lecture des tables."""

    def test_cle_deterministe(self):
        assert cle_table("A", 1, 2, [1], 4) == cle_table("A", 1, 2, (1,), 4)
        assert cle_table("A", 1, 2, [1], 4) != cle_table("A", 1, 2, [1], 5)

    def test_aller_retour(self, tmp_path):
        db_path = str(tmp_path / "cache.sqlite")
        enregistrer_table_multiplicites(db_path, "A", 1, 1, [0], 2, ENTREES)
        assert charger_table_multiplicites(db_path, "A", 1, 1, [0], 2) == ENTREES

    def test_troncature_d_une_table_plus_profonde(self, tmp_path):
        """Une table à D' >= D sert la requête à D, tronquée."""
        db_path = str(tmp_path / "cache.sqlite")
        enregistrer_table_multiplicites(db_path, "A", 1, 1, [0], 2, ENTREES)
        lues = charger_table_multiplicites(db_path, "A", 1, 1, [0], 1)
        assert lues == {cle: m for cle, m in ENTREES.items() if cle[1] <= 1}

    def test_table_absente(self, tmp_path):
        db_path = str(tmp_path / "cache.sqlite")
        assert charger_table_multiplicites(db_path, "A", 1, 1, [0], 2) is None
        enregistrer_table_multiplicites(db_path, "A", 1, 1, [0], 2, ENTREES)
        assert charger_table_multiplicites(db_path, "A", 1, 1, [0], 3) is None
        assert charger_table_multiplicites(db_path, "A", 1, 2, [0], 2) is None


class TestCacheAffine:
    """Le calcul affine passe par le cache disque quand il est activé."""

    @pytest.fixture
    def cache_actif(self, monkeypatch, tmp_path):
        monkeypatch.setenv("PARAFERM_CACHE_DISABLED", "0")
        monkeypatch.setenv("PARAFERM_CACHE_DIR", str(tmp_path / "cache"))
        monkeypatch.setattr(Niveau_Affine, "_CACHE_MEMOIRE", {})
        return tmp_path / "cache" / "multiplicites.sqlite"

    def test_ecriture_puis_relecture(self, cache_actif):
        ld = central_charges(build_root_system(AlgebraSpec("A", 1)), 1)
        calculees = Niveau_Affine.entrees_affines(ld, ld.rs.zero, 3)
        assert cache_actif.exists()
        lues = charger_table_multiplicites(str(cache_actif), "A", 1, 1, [0], 3)
        assert lues == calculees
