"""Constantes partagées par les modules du cache SQLite."""

TABLE_MULTIPLICITES = "multiplicites_affines"

SCHEMA_MULTIPLICITES = f"""
    CREATE TABLE IF NOT EXISTS {TABLE_MULTIPLICITES} (
        cle TEXT PRIMARY KEY,
        famille TEXT NOT NULL,
        rang INTEGER NOT NULL,
        niveau INTEGER NOT NULL,
        lambda_fw TEXT NOT NULL,
        profondeur INTEGER NOT NULL,
        donnees TEXT NOT NULL
    )
"""

INDEX_MULTIPLICITES = f"""
    CREATE INDEX IF NOT EXISTS idx_multiplicites_recherche
    ON {TABLE_MULTIPLICITES}(famille, rang, niveau, lambda_fw, profondeur)
"""
