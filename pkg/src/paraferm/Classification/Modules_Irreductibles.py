"""Orbites des étiquettes sous les identifications et atlas des modules.

Deux identifications engendrent les orbites : la translation par kQ_L
(absorbée par la normalisation des étiquettes) et les courants simples.
Chaque orbite est contrôlée par son empreinte : la série de branchement du
représentant de norme minimale, normalisée pour commencer à h_min.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from loguru import logger

from paraferm.Algebre.Niveau_Affine import LevelData
from paraferm.Classification.Courants_Simples import (
    PLAFOND_PROFONDEUR,
    PROFONDEUR_INITIALE,
    ModuleLabel,
    SimpleCurrentMap,
    enumerate_labels,
    label_action,
    simple_current_maps,
)
from paraferm.exceptions import IncoherenceError
from paraferm.Series.Branchement import BranchingResult, branching_series
from paraferm.Series.Series_Q import FormalQSeries
from paraferm.Series.Theta_Reseau import minimal_norm_representative

logger = logger.bind(type_log="CLASSIFICATION")


@dataclass(frozen=True)
class AtlasEntry:
    orbit: tuple[ModuleLabel, ...]
    representative: ModuleLabel
    h_min: Optional[Fraction]
    c_para: Fraction
    series_prefix: FormalQSeries
    non_separe: bool = False

    @property
    def indetermine(self) -> bool:
        return self.h_min is None

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


def empreinte(ld: LevelData, label: ModuleLabel, D: int) -> BranchingResult:
    """Série de branchement du représentant de norme minimale de la classe de λ."""
    lam = minimal_norm_representative(ld.rs, ld.level, label.lambda_class)
    return branching_series(ld, label.Lambda, lam, D)


def _memes_empreintes(a: BranchingResult, b: BranchingResult) -> bool:
    if not (a.determined and b.determined):
        return True
    return a.series.normalized().agrees_with(b.series.normalized())


def compute_orbits(
    ld: LevelData,
    labels: Sequence[ModuleLabel],
    maps: Sequence[SimpleCurrentMap],
    D: int,
    D_init: int = PROFONDEUR_INITIALE,
    plafond: int = PLAFOND_PROFONDEUR,
) -> list[AtlasEntry]:
    """Partition des étiquettes en orbites, empreintes vérifiées, entrées triées.

    Raises:
        IncoherenceError: si deux membres d'une orbite ont des empreintes différentes.
    """
    ensemble = set(labels)
    restants = set(labels)
    noeuds = [m.node for m in maps]
    orbites: list[list[ModuleLabel]] = []
    for depart in sorted(labels, key=ModuleLabel.cle):
        if depart not in restants:
            continue
        orbite = [depart]
        restants.discard(depart)
        file = deque([depart])
        while file:
            courant = file.popleft()
            for i in noeuds:
                image = label_action(ld, courant, i, D_init, plafond)
                if image not in ensemble:
                    raise IncoherenceError(f"Image {image} hors de l'ensemble des étiquettes")
                if image in restants:
                    restants.discard(image)
                    orbite.append(image)
                    file.append(image)
        orbites.append(sorted(orbite, key=ModuleLabel.cle))

    entrees = []
    empreintes: list[Optional[BranchingResult]] = []
    for orbite in orbites:
        resultats = [empreinte(ld, label, D) for label in orbite]
        reference = next((r for r in resultats if r.determined), None)
        for label, r in zip(orbite, resultats):
            if reference is not None and not _memes_empreintes(reference, r):
                message = (
                    f"Empreintes différentes dans l'orbite de {orbite[0]} : {label} donne "
                    f"{r.series} contre {reference.series}"
                )
                logger.error(message)
                raise IncoherenceError(message)
        premier = resultats[0]
        prefixe = reference.series.normalized() if reference is not None else premier.series
        entrees.append(
            AtlasEntry(
                orbit=tuple(orbite),
                representative=orbite[0],
                h_min=None if reference is None else reference.h_min,
                c_para=ld.c_para,
                series_prefix=prefixe,
            )
        )
        empreintes.append(reference)

    # Orbites distinctes non séparées par leurs empreintes
    drapeaux = [False] * len(entrees)
    for a in range(len(entrees)):
        for b in range(a + 1, len(entrees)):
            ea, eb = empreintes[a], empreintes[b]
            if ea is not None and eb is not None and ea.h_min == eb.h_min and _memes_empreintes(ea, eb):
                drapeaux[a] = drapeaux[b] = True
    entrees = [
        AtlasEntry(e.orbit, e.representative, e.h_min, e.c_para, e.series_prefix, drapeau)
        for e, drapeau in zip(entrees, drapeaux)
    ]
    entrees.sort(key=lambda e: (e.h_min is None, e.h_min or 0, e.representative.cle()))
    logger.info(
        f"{len(labels)} étiquettes, {len(entrees)} orbites "
        f"({sum(drapeaux)} non séparées, {sum(e.indetermine for e in entrees)} indéterminées)"
    )
    return entrees


def emit_atlas(
    ld: LevelData,
    D: int,
    D_init: int = PROFONDEUR_INITIALE,
    plafond: int = PLAFOND_PROFONDEUR,
) -> list[AtlasEntry]:
    """Atlas complet des modules M^{Λ,λ} de K(g,k) modulo les identifications."""
    logger.info(f"Atlas {ld.rs.spec} k={ld.level} jusqu'à la profondeur {D}...")
    labels = enumerate_labels(ld)
    maps = simple_current_maps(ld, D_init, plafond)
    entrees = compute_orbits(ld, labels, maps, D, D_init, plafond)
    logger.success(f"Atlas {ld.rs.spec} k={ld.level} : {len(entrees)} entrées.")
    return entrees
