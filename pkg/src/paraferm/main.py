"""Point d'entrée principal de paraferm.

Ce module orchestre :
- La lecture des options et la validation de la configuration (RunConfig)
- Les commandes info, atlas, branch et sandbox
- L'écriture déterministe du document JSON/CSV (stdout ou --output)

Usage:
    python -m paraferm.main <commande> FAMILLE RANG [OPTIONS]

Commandes:
    info                       Système de racines et données de niveau
    atlas                      Modules irréductibles de K(g,k) modulo identifications
    branch                     Série de branchement d'un module M^{Λ,λ}
    sandbox verify-generators  Vérification de ω_α, W³_α et du Virasoro du coset
    sandbox quotient-dims      Dimensions du quotient simple et du commutant
    sandbox generation         Génération du commutant par les ω_α, W³_α

Codes de sortie : 0 succès, 1 entrée invalide ou incohérence, 2 résultat indéterminé.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from loguru import logger

import paraferm.Rapports as rap
import paraferm.Sandbox as sbx
from paraferm.Algebre import AlgebraSpec, build_root_system, central_charges, weight_from_fw
from paraferm.Algebre.Niveau_Affine import verifier_niveau
from paraferm.Algebre.Systeme_Racines import weight_from_sr
from paraferm.Classification import emit_atlas
from paraferm.Classification.Courants_Simples import PROFONDEUR_INITIALE
from paraferm.Series import branching_series
from paraferm.utils.env_loader import load_settings
from paraferm.utils.paths import get_log_path

logger = logger.bind(type_log="MAIN")

CODE_SUCCES = 0
CODE_ERREUR = 1
CODE_INDETERMINE = 2

COMMANDES = ("info", "atlas", "branch", "sandbox")
ACTIONS_SANDBOX = ("verify-generators", "quotient-dims", "generation")
FORMATS = ("json", "csv")


def configurer_logs(verbose: bool = False) -> None:
    """Sink stderr colorisé (stdout reste réservé au document) et fichier tournant."""
    logger.remove()
    logger.configure(extra={"type_log": "-"})
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
        "<level>{level: <8}</level> | <cyan>{extra[type_log]}</cyan> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan>|  "
        "<level>{message}</level>",
        level="DEBUG" if verbose else "INFO",
        colorize=True,
    )
    logger.add(
        str(get_log_path()),
        format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level} | {extra[type_log]} |{name}: {function}: {line} |  {message}",
        level="DEBUG" if verbose else "INFO",
        rotation="10 MB",
        retention="1 month",
        compression="zip",
    )


def lire_entiers(texte: Optional[str]) -> Optional[tuple[int, ...]]:
    """ "1,0" ou "1 0" -> (1, 0)."""
    if texte is None:
        return None
    morceaux = texte.replace(",", " ").split()
    try:
        return tuple(int(m) for m in morceaux)
    except ValueError as e:
        raise ValueError(f"Liste d'entiers illisible : {texte!r}") from e


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str
    rank: int
    level: Optional[int] = None
    depth: int = 8
    max_degree: int = 4
    format: str = "json"
    output: Optional[Path] = None
    budget: int = 48
    max_depth: int = 24
    Lambda: Optional[tuple[int, ...]] = None
    lambda_sr: Optional[tuple[int, ...]] = None
    action: Optional[str] = None
    show_console: bool = False

    def valider(self) -> None:
        """
        Vérifie la configuration avant tout calcul.

        Raises:
            AlgebreInvalideError: famille ou rang invalide.
            ValueError: option manquante ou hors domaine.
        """
        AlgebraSpec(self.family, self.rank)
        if self.command not in COMMANDES:
            raise ValueError(f"Commande inconnue : {self.command}")
        if self.format not in FORMATS:
            raise ValueError(f"Format inconnu : {self.format}")
        if self.format == "csv" and self.command != "atlas":
            raise ValueError("Le format csv est réservé à la commande atlas")
        if self.level is not None and self.level < 1:
            raise ValueError(f"Niveau k={self.level} invalide (k >= 1 attendu)")
        if self.command != "info" and self.level is None:
            raise ValueError(f"La commande {self.command} demande --level")
        if self.depth < 0:
            raise ValueError(f"Profondeur {self.depth} négative")
        if self.max_degree < 0:
            raise ValueError(f"Degré maximal {self.max_degree} négatif")
        if self.command == "branch":
            if self.Lambda is None:
                raise ValueError("La commande branch demande --Lambda")
            for nom, valeurs in (("--Lambda", self.Lambda), ("--lambda-sr", self.lambda_sr)):
                if valeurs is not None and len(valeurs) != self.rank:
                    raise ValueError(f"{nom} attend {self.rank} entiers, reçu {list(valeurs)}")
        if self.command == "sandbox" and self.action not in ACTIONS_SANDBOX:
            raise ValueError(f"Action sandbox inconnue : {self.action}")


def cmd_info(cfg: RunConfig) -> tuple[dict, int]:
    rs = build_root_system(AlgebraSpec(cfg.family, cfg.rank))
    ld = central_charges(rs, cfg.level) if cfg.level is not None else None
    document = rap.info_to_document(rs, ld)
    if cfg.show_console:
        rap.afficher_info(document)
    return document, CODE_SUCCES


def cmd_atlas(cfg: RunConfig) -> tuple[dict | str, int]:
    rs = build_root_system(AlgebraSpec(cfg.family, cfg.rank))
    ld = central_charges(rs, cfg.level)
    entrees = emit_atlas(ld, cfg.depth, PROFONDEUR_INITIALE, cfg.max_depth)
    document = rap.atlas_to_document(ld, entrees, cfg.depth)
    if cfg.show_console:
        rap.afficher_atlas(document)
    code = CODE_INDETERMINE if any(e.indetermine for e in entrees) else CODE_SUCCES
    if cfg.format == "csv":
        return rap.atlas_to_csv(entrees, cfg.depth), code
    return document, code


def cmd_branch(cfg: RunConfig) -> tuple[dict, int]:
    rs = build_root_system(AlgebraSpec(cfg.family, cfg.rank))
    ld = central_charges(rs, cfg.level)
    Lambda = weight_from_fw(rs, cfg.Lambda)
    verifier_niveau(ld, Lambda)
    decalage = weight_from_sr(rs, cfg.lambda_sr or [0] * rs.rank)
    resultat = branching_series(ld, Lambda, Lambda + decalage, cfg.depth)
    code = CODE_SUCCES if resultat.determined else CODE_INDETERMINE
    return rap.branch_to_document(ld, resultat), code


def cmd_sandbox(cfg: RunConfig) -> tuple[dict, int]:
    rs = build_root_system(AlgebraSpec(cfg.family, cfg.rank))
    tm = sbx.TruncatedModule(rs, cfg.level, cfg.max_degree, cfg.budget)
    if cfg.action == "verify-generators":
        rapport = sbx.verify_generators(tm)
        return rapport, CODE_SUCCES if rapport["ok"] else CODE_ERREUR
    if cfg.action == "generation":
        rapport = sbx.generation_check(tm)
        return rapport, CODE_SUCCES if rapport["ok"] else CODE_ERREUR
    dims = sbx.simple_quotient_graded_dims(tm)
    commutant = sbx.commutant_graded_dims(tm, in_quotient=True)
    return rap.quotient_dims_to_document(tm.spec, cfg.max_degree, dims, commutant), CODE_SUCCES


COMMANDES_EXECUTEES = {
    "info": cmd_info,
    "atlas": cmd_atlas,
    "branch": cmd_branch,
    "sandbox": cmd_sandbox,
}


def construire_parser() -> argparse.ArgumentParser:
    commun = argparse.ArgumentParser(add_help=False)
    commun.add_argument("family", type=str, help="Famille : A, B, C, D, E, F ou G")
    commun.add_argument("rank", type=int, help="Rang de l'algèbre")
    commun.add_argument("--level", type=int, default=None, help="Niveau k >= 1")
    commun.add_argument("--format", choices=FORMATS, default="json", help="Format du document")
    commun.add_argument("--output", type=Path, default=None, help="Fichier de sortie (stdout sinon)")
    commun.add_argument("--no-cache", action="store_true", help="Désactiver le cache SQLite")
    commun.add_argument("--verbose", action="store_true", help="Logs de niveau DEBUG")
    commun.add_argument("--show-console", action="store_true", help="Afficher un tableau rich sur stderr")

    parser = argparse.ArgumentParser(
        prog="paraferm", description="Données de représentations des parafermions K(g,k)"
    )
    sous = parser.add_subparsers(dest="command", required=True)
    sous.add_parser("info", parents=[commun], help="Système de racines et données de niveau")

    atlas = sous.add_parser("atlas", parents=[commun], help="Atlas des modules irréductibles")
    atlas.add_argument("--depth", type=int, default=8, help="Profondeur des séries")
    atlas.add_argument("--max-depth", type=int, default=None, help="Plafond de recherche des courants simples")

    branch = sous.add_parser("branch", parents=[commun], help="Série de branchement de M^{Λ,λ}")
    branch.add_argument("--depth", type=int, default=8, help="Profondeur des séries")
    branch.add_argument("--Lambda", type=str, required=True, help="Labels de Dynkin de Λ, ex. '1,0'")
    branch.add_argument("--lambda-sr", type=str, default=None, help="λ - Λ en racines simples, ex. '1,0'")

    sandbox = sous.add_parser("sandbox", help="Module du vide tronqué (familles A, D, E)")
    actions = sandbox.add_subparsers(dest="action", required=True)
    for action in ACTIONS_SANDBOX:
        sp = actions.add_parser(action, parents=[commun])
        sp.add_argument("--max-degree", type=int, default=4, help="Degré de troncature D")
        sp.add_argument("--budget", type=int, default=None, help="Budget maximal de dim g · D")
    return parser


def _config_depuis_args(args: argparse.Namespace) -> RunConfig:
    settings = load_settings()
    return RunConfig(
        command=args.command,
        family=args.family.upper(),
        rank=args.rank,
        level=args.level,
        depth=getattr(args, "depth", 8),
        max_degree=getattr(args, "max_degree", 4),
        format=args.format,
        output=args.output,
        budget=getattr(args, "budget", None) or settings.sandbox_budget,
        max_depth=getattr(args, "max_depth", None) or settings.max_depth,
        Lambda=lire_entiers(getattr(args, "Lambda", None)),
        lambda_sr=lire_entiers(getattr(args, "lambda_sr", None)),
        action=getattr(args, "action", None),
        show_console=args.show_console,
    )


def _ecrire(contenu: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(contenu)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8", newline="\n") as f:
        f.write(contenu)
    logger.info(f"Document écrit dans {output}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Exécute une commande et retourne le code de sortie.

    Les erreurs attendues (ValueError, RuntimeError et leurs sous-classes du
    projet) deviennent un document {"erreur", "message"} et le code 1.
    """
    args = construire_parser().parse_args(argv)
    configurer_logs(args.verbose)
    if args.no_cache:
        os.environ["PARAFERM_CACHE_DISABLED"] = "1"
    logger.info(f"Commande {args.command} {args.family}{args.rank}")
    try:
        cfg = _config_depuis_args(args)
        cfg.valider()
        document, code = COMMANDES_EXECUTEES[cfg.command](cfg)
    except (ValueError, RuntimeError) as exc:
        logger.error(f"{type(exc).__name__} : {exc}")
        erreur = {"erreur": type(exc).__name__, "message": str(exc)}
        _ecrire(rap.vers_json(erreur), getattr(args, "output", None))
        return CODE_ERREUR
    contenu = document if isinstance(document, str) else rap.vers_json(document)
    _ecrire(contenu, cfg.output)
    if code == CODE_INDETERMINE:
        logger.warning("Résultat indéterminé à la profondeur demandée")
    else:
        logger.success(f"Commande {cfg.command} terminée (code {code})")
    return code


if __name__ == "__main__":
    sys.exit(main())
