"""Séries formelles tronquées en q à coefficients entiers.

Une série q^offset · Σ_{n=0..D} c_n q^n porte un décalage rationnel exact.
Deux séries ne se combinent que si leurs décalages diffèrent d'un entier ;
les opérations conservent la fenêtre commune connue avec certitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from paraferm.utils.rationnels import formater_rationnel


def _ecart_entier(a: Fraction, b: Fraction) -> int:
    ecart = Fraction(a) - Fraction(b)
    if ecart.denominator != 1:
        raise ValueError(f"Décalages {a} et {b} incompatibles (écart non entier)")
    return int(ecart)


@dataclass(frozen=True)
class FormalQSeries:
    offset: Fraction
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", Fraction(self.offset))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("Une série doit avoir au moins un coefficient (profondeur >= 0)")

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    @property
    def top(self) -> Fraction:
        """Exposant absolu du dernier coefficient connu."""
        return self.offset + self.cutoff

    @classmethod
    def zero(cls, D: int, offset: Fraction | int = 0) -> FormalQSeries:
        return cls(Fraction(offset), (0,) * (D + 1))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], offset: Fraction | int = 0) -> FormalQSeries:
        return cls(Fraction(offset), tuple(coeffs))

    @classmethod
    def euler_product(cls, rank: int, D: int) -> FormalQSeries:
        """Π_{n>=1} (1 - q^n)^rank tronqué à l'ordre D."""
        c = [1] + [0] * D
        for n in range(1, D + 1):
            for _ in range(rank):
                for i in range(D, n - 1, -1):
                    c[i] -= c[i - n]
        return cls(Fraction(0), tuple(c))

    @classmethod
    def euler_product_inverse(cls, rank: int, D: int) -> FormalQSeries:
        """Π_{n>=1} (1 - q^n)^(-rank) : partitions en `rank` couleurs."""
        c = [1] + [0] * D
        for n in range(1, D + 1):
            for _ in range(rank):
                for i in range(n, D + 1):
                    c[i] += c[i - n]
        return cls(Fraction(0), tuple(c))

    def coefficient_at(self, exposant: Fraction | int) -> int:
        """Coefficient de q^exposant (0 hors support, erreur au-delà de la troncature)."""
        i = _ecart_entier(exposant, self.offset)
        if i > self.cutoff:
            raise ValueError(f"Exposant {exposant} au-delà de la troncature {self.top}")
        return self.coeffs[i] if i >= 0 else 0

    def truncate(self, D: int) -> FormalQSeries:
        if D > self.cutoff:
            raise ValueError(f"Troncature {D} au-delà de la profondeur connue {self.cutoff}")
        return FormalQSeries(self.offset, self.coeffs[: D + 1])

    def realign(self, offset: Fraction | int) -> FormalQSeries:
        """Même série exprimée avec un autre décalage (même exposant absolu maximal)."""
        ecart = _ecart_entier(self.offset, offset)
        if ecart >= 0:
            return FormalQSeries(Fraction(offset), (0,) * ecart + self.coeffs)
        if any(self.coeffs[: -ecart]):
            raise ValueError(f"Réalignement à {offset} perdrait des coefficients non nuls")
        if -ecart > self.cutoff:
            raise ValueError(f"Réalignement à {offset} au-delà de la troncature")
        return FormalQSeries(Fraction(offset), self.coeffs[-ecart:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def first_nonzero(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def normalized(self) -> FormalQSeries:
        """Série décalée pour commencer à son premier coefficient non nul."""
        premier = self.first_nonzero
        if premier is None:
            return self
        return FormalQSeries(self.offset + premier, self.coeffs[premier:])

    def __add__(self, other: FormalQSeries) -> FormalQSeries:
        offset = min(self.offset, other.offset)
        top = min(self.top, other.top)
        longueur = _ecart_entier(top, offset) + 1
        if longueur <= 0:
            raise ValueError("Fenêtres de troncature disjointes")
        a = self.realign(offset).coeffs
        b = other.realign(offset).coeffs
        return FormalQSeries(offset, tuple(a[i] + b[i] for i in range(longueur)))

    def __mul__(self, other: FormalQSeries | int) -> FormalQSeries:
        if isinstance(other, int):
            return FormalQSeries(self.offset, tuple(other * c for c in self.coeffs))
        D = min(self.cutoff, other.cutoff)
        c = [0] * (D + 1)
        for i in range(D + 1):
            if self.coeffs[i]:
                for j in range(D + 1 - i):
                    c[i + j] += self.coeffs[i] * other.coeffs[j]
        return FormalQSeries(self.offset + other.offset, tuple(c))

    __rmul__ = __mul__

    def agrees_with(self, other: FormalQSeries) -> bool:
        """Égalité des coefficients sur la fenêtre commune, décalages compris."""
        try:
            _ecart_entier(self.offset, other.offset)
            offset = min(self.offset, other.offset)
            top = min(self.top, other.top)
            ecart = _ecart_entier(top, offset)
        except ValueError:
            return False
        if ecart < 0:
            return True
        a = self.realign(offset).coeffs[: ecart + 1]
        b = other.realign(offset).coeffs[: ecart + 1]
        return a == b

    def to_document(self) -> dict:
        return {"offset": formater_rationnel(self.offset), "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        termes = [f"{c}q^{formater_rationnel(self.offset + i)}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(termes) if termes else "0"


def sommer(series: Iterable[FormalQSeries]) -> FormalQSeries:
    """Somme de séries réalignées sur le plus petit décalage, tronquée au plus petit sommet."""
    liste = list(series)
    if not liste:
        raise ValueError("Somme d'une liste vide de séries")
    offset = min(s.offset for s in liste)
    top = min(s.top for s in liste)
    longueur = _ecart_entier(top, offset) + 1
    total = [0] * longueur
    for s in liste:
        coeffs = s.realign(offset).coeffs
        for i in range(longueur):
            total[i] += coeffs[i]
    return FormalQSeries(offset, tuple(total))

