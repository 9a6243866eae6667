"""Utilitaires pour gérer les chemins de fichiers de manière portable.

Les données persistantes (cache des tables de multiplicités, logs) sont
stockées sous le répertoire de données, surchargeable par variables
d'environnement (PARAFERM_CACHE_DIR, PARAFERM_LOG_FILE).
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from loguru import logger

logger = logger.bind(type_log="ENV")

# État de chargement du .env
_env_loaded = False

_DEFAULT_CACHE_NAME = "multiplicites.sqlite"
_DEFAULT_LOG_NAME = "paraferm.log"


def get_project_root_dir() -> Path:
    """Retourne la racine du dépôt (parent de src/)."""
    return Path(__file__).parent.parent.parent.parent


def get_app_dir() -> Path:
    """Retourne le répertoire du package (src/paraferm)."""
    return Path(__file__).parent.parent


def init_env() -> bool:
    """Charge le fichier .env une seule fois.

    Returns:
        True si le fichier .env a été chargé (maintenant ou auparavant), False sinon.
    """
    global _env_loaded
    if _env_loaded:
        return True

    env_path = get_env_file_path()
    if env_path is not None and env_path.exists():
        load_dotenv(env_path)
        logger.debug(f"Fichier .env chargé depuis {env_path}")
        _env_loaded = True
        return True

    logger.debug("Fichier .env non trouvé")
    return False


def get_data_dir() -> Path:
    """Retourne le répertoire des données persistantes, créé si besoin."""
    data_dir = get_app_dir() / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    return data_dir


def _creer_parent(path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"Impossible de créer le répertoire '{path.parent}': {e}")
        raise OSError(f"Impossible de créer le répertoire '{path.parent}': {e}") from e
    return path


def get_cache_db_path(db_name: str = _DEFAULT_CACHE_NAME) -> Path:
    """Retourne le chemin du fichier SQLite du cache des tables de multiplicités.

    Ordre de priorité : variable `PARAFERM_CACHE_DIR`, puis `<data>/cache`.

    Raises:
        OSError: si le répertoire ne peut pas être créé.
    """
    env_dir = os.getenv("PARAFERM_CACHE_DIR")
    if env_dir and env_dir.strip():
        cache_dir = Path(env_dir.strip()).resolve()
        logger.debug(f"Répertoire de cache depuis l'environnement : {cache_dir}")
    else:
        cache_dir = get_data_dir() / "cache"
    return _creer_parent(cache_dir / db_name)


def get_log_path(log_name: str = _DEFAULT_LOG_NAME) -> Path:
    """Retourne le chemin du fichier de log (`PARAFERM_LOG_FILE` ou `<data>/logs`).

    Raises:
        OSError: si le répertoire parent ne peut pas être créé.
    """
    env_path = os.getenv("PARAFERM_LOG_FILE")
    if env_path and env_path.strip():
        return _creer_parent(Path(env_path.strip()).resolve())
    return _creer_parent(get_data_dir() / "logs" / log_name)


def get_env_file_path() -> Optional[Path]:
    """Retourne le chemin vers le fichier .env s'il existe.

    Cherche dans l'ordre : racine du projet, répertoire du package, répertoire courant.
    """
    for candidat in (get_project_root_dir() / ".env", get_app_dir() / ".env", Path.cwd() / ".env"):
        if candidat.exists():
            return candidat
    return None
