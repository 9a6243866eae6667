"""Conversions exactes entre rationnels et chaînes "p/q"."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def formater_rationnel(x: Fraction | int) -> str:
    """Formate un rationnel en "p/q" irréductible (q > 0), ou "n" s'il est entier."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def lire_rationnel(texte: str) -> Fraction:
    """Lit "p/q" ou "n" ; lève ValueError si la chaîne est mal formée."""
    try:
        return Fraction(texte.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Rationnel illisible : {texte!r}") from e


def formater_vecteur(coords: Iterable[Fraction | int]) -> list[str]:
    return [formater_rationnel(c) for c in coords]
