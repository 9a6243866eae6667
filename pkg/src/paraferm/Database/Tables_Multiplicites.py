"""Enregistrement et lecture des tables de multiplicités affines.

Une table est adressée par (famille, rang, niveau, Λ, profondeur) ; la clé
primaire est l'empreinte SHA-256 de ce tuple. Une table calculée à une
profondeur D' >= D sert toute requête à la profondeur D (troncature).
"""

import hashlib
import json
import os
import sqlite3
from typing import Optional, Sequence

from loguru import logger

from .constants import TABLE_MULTIPLICITES
from .Creation_BDD import integrite_db, verif_presence_db

logger = logger.bind(type_log="BDD")

# (décalage sr depuis Λ, profondeur) -> multiplicité
Entrees = dict[tuple[tuple[int, ...], int], int]


def cle_table(famille: str, rang: int, niveau: int, lambda_fw: Sequence[int], profondeur: int) -> str:
    texte = f"{famille}|{rang}|{niveau}|{','.join(str(x) for x in lambda_fw)}|{profondeur}"
    return hashlib.sha256(texte.encode("utf-8")).hexdigest()


def _lambda_texte(lambda_fw: Sequence[int]) -> str:
    return json.dumps([int(x) for x in lambda_fw])


def enregistrer_table_multiplicites(
    db_path: str,
    famille: str,
    rang: int,
    niveau: int,
    lambda_fw: Sequence[int],
    profondeur: int,
    entrees: Entrees,
) -> str:
    """
    Enregistre (INSERT OR REPLACE) une table de multiplicités.

    Returns:
        La clé SHA-256 de l'enregistrement.
    """
    verif_presence_db(db_path)
    integrite_db(db_path)
    cle = cle_table(famille, rang, niveau, lambda_fw, profondeur)
    donnees = json.dumps(
        sorted([list(decalage), n, m] for (decalage, n), m in entrees.items())
    )
    conn = sqlite3.connect(db_path)
    try:
        conn.execute(
            f"""INSERT OR REPLACE INTO {TABLE_MULTIPLICITES}
               (cle, famille, rang, niveau, lambda_fw, profondeur, donnees)
               VALUES (?, ?, ?, ?, ?, ?, ?)""",
            (cle, famille, rang, niveau, _lambda_texte(lambda_fw), profondeur, donnees),
        )
        conn.commit()
    except sqlite3.Error as e:
        logger.error(f"Erreur lors de l'enregistrement de la table {cle[:12]} : {e}")
        raise
    finally:
        conn.close()
    logger.debug(f"Table {famille}{rang} k={niveau} Λ={list(lambda_fw)} D={profondeur} enregistrée.")
    return cle


def charger_table_multiplicites(
    db_path: str,
    famille: str,
    rang: int,
    niveau: int,
    lambda_fw: Sequence[int],
    profondeur: int,
) -> Optional[Entrees]:
    """
    Charge la table la moins profonde couvrant `profondeur`, tronquée à `profondeur`.

    Returns:
        Les entrées, ou None si aucune table en cache ne couvre la requête.
    """
    if not os.path.exists(db_path):
        return None
    conn = sqlite3.connect(db_path)
    try:
        cur = conn.execute(
            f"""SELECT profondeur, donnees FROM {TABLE_MULTIPLICITES}
               WHERE famille = ? AND rang = ? AND niveau = ? AND lambda_fw = ? AND profondeur >= ?
               ORDER BY profondeur ASC LIMIT 1""",
            (famille, rang, niveau, _lambda_texte(lambda_fw), profondeur),
        )
        ligne = cur.fetchone()
    except sqlite3.Error as e:
        logger.warning(f"Lecture du cache impossible ({e}), recalcul.")
        return None
    finally:
        conn.close()
    if ligne is None:
        return None
    profondeur_stockee, donnees = ligne
    entrees = {
        (tuple(decalage), n): m for decalage, n, m in json.loads(donnees) if n <= profondeur
    }
    logger.debug(
        f"Table {famille}{rang} k={niveau} Λ={list(lambda_fw)} lue en cache "
        f"(profondeur stockée {profondeur_stockee}, demandée {profondeur})."
    )
    return entrees
