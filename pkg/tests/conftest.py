"""Fixtures communes : cache disque désactivé et logs dans un répertoire temporaire."""

from __future__ import annotations

import pytest


@pytest.fixture(autouse=True)
def environnement_isole(monkeypatch, tmp_path):
    """Aucun test n'écrit dans le répertoire de données du package."""
    monkeypatch.setenv("PARAFERM_CACHE_DISABLED", "1")
    monkeypatch.setenv("PARAFERM_LOG_FILE", str(tmp_path / "logs" / "paraferm.log"))
    monkeypatch.delenv("PARAFERM_CACHE_DIR", raising=False)
    monkeypatch.delenv("PARAFERM_SANDBOX_BUDGET", raising=False)
    monkeypatch.delenv("PARAFERM_MAX_DEPTH", raising=False)
