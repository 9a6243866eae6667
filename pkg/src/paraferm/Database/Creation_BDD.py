"""Création et vérification de l'intégrité du cache SQLite.

Ce module gère :
- La création de la table des tables de multiplicités affines
- La vérification de l'intégrité (table et index de recherche)
"""

import os
import sqlite3
from typing import Any, Dict

from loguru import logger

from .constants import INDEX_MULTIPLICITES, SCHEMA_MULTIPLICITES, TABLE_MULTIPLICITES
from .Verif_Prerequis_BDD import verif_repertoire_db

logger = logger.bind(type_log="BDD")


def verif_presence_db(db_path: str) -> None:
    """
    Crée le fichier de cache avec son schéma s'il n'existe pas encore.

    Args:
        db_path (str): Chemin vers le fichier SQLite.
    """
    if os.path.exists(db_path):
        return
    verif_repertoire_db(db_path)
    logger.info(f"Création du cache SQLite '{db_path}'...")
    conn = sqlite3.connect(db_path)
    try:
        cur = conn.cursor()
        cur.execute(SCHEMA_MULTIPLICITES)
        cur.execute(INDEX_MULTIPLICITES)
        conn.commit()
        logger.success(f"Table '{TABLE_MULTIPLICITES}' créée.")
    except sqlite3.Error as e:
        logger.error(f"Erreur lors de la création du cache : {e}")
        raise
    finally:
        conn.close()


def integrite_db(db_path: str) -> Dict[str, Any]:
    """
    Vérifie la présence de la table et de l'index, crée ce qui manque.

    Returns:
        Récapitulatif {"table": bool, "index": bool, "crees": [...]} après vérification.
    """
    verif_repertoire_db(db_path)
    crees = []
    conn = sqlite3.connect(db_path)
    try:
        cur = conn.cursor()
        cur.execute(
            "SELECT name FROM sqlite_master WHERE type='table' AND name=?;",
            (TABLE_MULTIPLICITES,),
        )
        if not cur.fetchone():
            logger.warning(f"Table '{TABLE_MULTIPLICITES}' manquante, création en cours.")
            cur.execute(SCHEMA_MULTIPLICITES)
            crees.append(TABLE_MULTIPLICITES)
        cur.execute(
            "SELECT name FROM sqlite_master WHERE type='index' AND name='idx_multiplicites_recherche';"
        )
        if not cur.fetchone():
            cur.execute(INDEX_MULTIPLICITES)
            crees.append("idx_multiplicites_recherche")
        conn.commit()
    except sqlite3.Error as e:
        logger.error(f"Erreur lors de la vérification d'intégrité : {e}")
        raise
    finally:
        conn.close()
    if crees:
        logger.success(f"Éléments créés : {', '.join(crees)}")
    return {"table": True, "index": True, "crees": crees}
