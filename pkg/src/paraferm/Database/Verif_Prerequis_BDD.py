"""Prérequis du cache SQLite : répertoire parent du fichier de tables."""

from pathlib import Path

from loguru import logger

logger = logger.bind(type_log="BDD")


def verif_repertoire_db(db_path: str | Path) -> Path:
    """
    Garantit l'existence du répertoire qui contiendra le cache.

    Args:
        db_path: chemin du fichier SQLite, relatif ou absolu.

    Returns:
        Le répertoire (absolu) du cache.

    Raises:
        OSError: si le répertoire ne peut pas être créé.
    """
    repertoire = Path(db_path).resolve().parent
    if repertoire.is_dir():
        logger.debug(f"Répertoire du cache présent : {repertoire}")
        return repertoire
    try:
        repertoire.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"Création du répertoire du cache '{repertoire}' impossible : {e}")
        raise
    logger.success(f"Répertoire du cache créé : {repertoire}")
    return repertoire
