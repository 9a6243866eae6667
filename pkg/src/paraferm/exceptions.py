"""Exceptions du projet paraferm.

Toutes dérivent des exceptions natives (ValueError / RuntimeError) afin que
les appelants qui attrapent déjà ces classes continuent de fonctionner.
"""


class AlgebreInvalideError(ValueError):
    """Famille ou rang d'algèbre de Lie simple invalide."""


class PoidsInvalideError(ValueError):
    """Poids hors du domaine attendu (non dominant, hors P₊ᵏ, hors Λ+Q...)."""


class TroncatureError(ValueError):
    """Un calcul dépasserait le degré (ou la profondeur) de troncature."""


class IndetermineError(RuntimeError):
    """Série identiquement nulle jusqu'à la profondeur de coupure."""

    def __init__(self, message: str, profondeur: int | None = None):
        super().__init__(message)
        self.profondeur = profondeur


class IncoherenceError(RuntimeError):
    """Incohérence interne : une identité vérifiée a échoué."""


class CourantSimpleError(RuntimeError):
    """Aucune image de courant simple vérifiée sous le plafond de profondeur."""
