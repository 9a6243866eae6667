"""Documents JSON et CSV déterministes (clés triées, rationnels en "p/q")."""

from __future__ import annotations

import json
from typing import Sequence

import pandas as pd
from loguru import logger

from paraferm.Algebre.Niveau_Affine import LevelData, conformal_weight_n_Lambda, enumerate_level_k_dominants
from paraferm.Algebre.Systeme_Racines import (
    RootSystem,
    lattice_group_structure,
    q_mod_kql_representatives,
    to_document,
)
from paraferm.Classification.Courants_Simples import ModuleLabel
from paraferm.Classification.Modules_Irreductibles import AtlasEntry
from paraferm.Series.Branchement import BranchingResult
from paraferm.utils.rationnels import formater_rationnel, formater_vecteur

logger = logger.bind(type_log="RAPPORT")


def vers_json(document: dict | list) -> str:
    """Sérialisation canonique : clés triées, indentation 2, fin de ligne finale."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def label_to_document(label: ModuleLabel) -> dict:
    return {
        "Lambda": formater_vecteur(label.Lambda.fw_coords),
        "lambda_sr": formater_vecteur(label.lambda_class.sr_coords),
    }


def info_to_document(rs: RootSystem, ld: LevelData | None = None) -> dict:
    """Données du système de racines, complétées des données de niveau si k est fourni."""
    document = to_document(rs)
    if ld is not None:
        k = ld.level
        document["niveau"] = {
            "k": k,
            "c_aff": formater_rationnel(ld.c_aff),
            "c_heis": formater_rationnel(ld.c_heis),
            "c_para": formater_rationnel(ld.c_para),
            "dominants": [
                {
                    "Lambda": formater_vecteur(L.fw_coords),
                    "n_Lambda": formater_rationnel(conformal_weight_n_Lambda(ld, L)),
                }
                for L in enumerate_level_k_dominants(rs, k)
            ],
            "q_modulo_kql": {
                "ordre": len(q_mod_kql_representatives(rs, k)),
                "facteurs_invariants": lattice_group_structure(rs, k),
            },
        }
    return document


def branch_to_document(ld: LevelData, resultat: BranchingResult) -> dict:
    Lambda, lam = resultat.label
    return {
        "algebre": str(ld.rs.spec),
        "niveau": ld.level,
        "Lambda": formater_vecteur(Lambda.fw_coords),
        "lambda_sr": formater_vecteur(lam.sr_coords),
        "c_para": formater_rationnel(ld.c_para),
        "h_min": None if resultat.h_min is None else formater_rationnel(resultat.h_min),
        "profondeur_premier_terme": resultat.first_nonzero_depth,
        "indetermine": not resultat.determined,
        "serie": resultat.series.to_document(),
    }


def atlas_to_document(ld: LevelData, entrees: Sequence[AtlasEntry], D: int) -> dict:
    return {
        "algebre": str(ld.rs.spec),
        "niveau": ld.level,
        "profondeur": D,
        "c_para": formater_rationnel(ld.c_para),
        "nombre_entrees": len(entrees),
        "entrees": [
            {
                "representant": label_to_document(e.representative),
                "orbite": [label_to_document(m) for m in e.orbit],
                "taille_orbite": e.orbit_size,
                "h_min": None if e.h_min is None else formater_rationnel(e.h_min),
                "indetermine": e.indetermine,
                "non_separe": e.non_separe,
                "c_para": formater_rationnel(e.c_para),
                "serie": e.series_prefix.to_document(),
            }
            for e in entrees
        ],
    }


def atlas_to_csv(entrees: Sequence[AtlasEntry], D: int) -> str:
    """Une ligne par orbite ; la série occupe D+1 colonnes de coefficients."""
    lignes = []
    for e in entrees:
        coeffs = list(e.series_prefix.coeffs[: D + 1])
        coeffs += [""] * (D + 1 - len(coeffs))
        ligne = {
            "Lambda": " ".join(formater_vecteur(e.representative.Lambda.fw_coords)),
            "lambda_sr": " ".join(formater_vecteur(e.representative.lambda_class.sr_coords)),
            "taille_orbite": e.orbit_size,
            "h_min": "" if e.h_min is None else formater_rationnel(e.h_min),
            "c_para": formater_rationnel(e.c_para),
            "non_separe": int(e.non_separe),
            "offset": formater_rationnel(e.series_prefix.offset),
        }
        ligne.update({f"q{i}": c for i, c in enumerate(coeffs)})
        lignes.append(ligne)
    colonnes = ["Lambda", "lambda_sr", "taille_orbite", "h_min", "c_para", "non_separe", "offset"]
    colonnes += [f"q{i}" for i in range(D + 1)]
    df = pd.DataFrame(lignes, columns=colonnes)
    logger.debug(f"CSV de l'atlas : {len(df)} lignes")
    return df.to_csv(index=False, lineterminator="\n")


def quotient_dims_to_document(tm_spec: tuple[str, int], D: int, dims: dict, commutant: list[int]) -> dict:
    """Table (poids, degré) du quotient simple et dimensions du commutant K(g,k)."""
    algebre, k = tm_spec
    return {
        "algebre": algebre,
        "niveau": k,
        "degre_max": D,
        "dimensions": [
            {"poids_sr": list(mu), "degre": d, "dimension": dim}
            for (mu, d), dim in sorted(dims.items(), key=lambda item: (item[0][1], item[0][0]))
        ],
        "dimensions_par_degre": [
            sum(dim for (_, d), dim in dims.items() if d == degre) for degre in range(D + 1)
        ],
        "commutant": commutant,
    }
