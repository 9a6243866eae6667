"""
Lecture typée des variables d'environnement de paraferm.
Le fichier .env est chargé via utils.paths.init_env().
"""

import os
from dataclasses import dataclass

from loguru import logger

from paraferm.utils.paths import init_env

logger = logger.bind(type_log="ENV")

BUDGET_SANDBOX_DEFAUT = 48
PROFONDEUR_MAX_DEFAUT = 24


@dataclass(frozen=True)
class Settings:
    """Réglages issus de l'environnement (les options CLI les surchargent)."""

    sandbox_budget: int = BUDGET_SANDBOX_DEFAUT
    max_depth: int = PROFONDEUR_MAX_DEFAUT
    cache_disabled: bool = False


def get_int_env(name: str, default: int, minimum: int = 0) -> int:
    """
    Lit une variable d'environnement entière.

    Raises:
        ValueError: si la valeur n'est pas un entier >= minimum.
    """
    brut = os.getenv(name)
    if brut is None or not brut.strip():
        return default
    try:
        valeur = int(brut.strip())
    except ValueError as e:
        message = f"Variable {name} invalide : '{brut}' n'est pas un entier"
        logger.error(message)
        raise ValueError(message) from e
    if valeur < minimum:
        message = f"Variable {name} invalide : {valeur} < {minimum}"
        logger.error(message)
        raise ValueError(message)
    return valeur


def get_bool_env(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "oui", "yes")


def cache_disabled() -> bool:
    return get_bool_env("PARAFERM_CACHE_DISABLED")


def load_settings() -> Settings:
    """
    Charge le .env puis construit les réglages typés.

    Raises:
        ValueError: si une variable numérique est mal formée.
    """
    init_env()
    settings = Settings(
        sandbox_budget=get_int_env("PARAFERM_SANDBOX_BUDGET", BUDGET_SANDBOX_DEFAUT, minimum=1),
        max_depth=get_int_env("PARAFERM_MAX_DEPTH", PROFONDEUR_MAX_DEFAUT, minimum=1),
        cache_disabled=cache_disabled(),
    )
    logger.debug(f"Réglages chargés : {settings}")
    return settings
