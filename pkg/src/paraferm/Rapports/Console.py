"""Affichage console (rich) des documents info et atlas, sur stderr."""

from __future__ import annotations

from rich.console import Console
from rich.table import Table


def afficher_info(document: dict) -> None:
    consoleur = Console(stderr=True)
    tableau = Table(show_header=True, header_style="bold magenta", title=document["algebre"])
    tableau.add_column("Donnée")
    tableau.add_column("Valeur", overflow="fold")
    tableau.add_row("dim g", str(document["dim_g"]))
    tableau.add_row("h∨", str(document["coxeter_dual"]))
    tableau.add_row("θ (sr)", " ".join(document["theta"]))
    tableau.add_row("marques", " ".join(str(a) for a in document["marques"]))
    tableau.add_row("courants simples", ", ".join(str(i) for i in document["noeuds_courants_simples"]) or "-")
    niveau = document.get("niveau")
    if niveau:
        tableau.add_row("k", str(niveau["k"]))
        tableau.add_row("c_para", niveau["c_para"])
        tableau.add_row("|Q/kQ_L|", str(niveau["q_modulo_kql"]["ordre"]))
    consoleur.print(tableau)


def afficher_atlas(document: dict) -> None:
    """Une ligne par orbite : représentant, taille, h_min et début de série."""
    consoleur = Console(stderr=True)
    tableau = Table(
        show_header=True,
        header_style="bold magenta",
        title=f"{document['algebre']} k={document['niveau']} c={document['c_para']}",
    )
    tableau.add_column("Λ", justify="center")
    tableau.add_column("λ (sr)", justify="center")
    tableau.add_column("Orbite", justify="center")
    tableau.add_column("h_min", justify="center")
    tableau.add_column("Série", overflow="fold")
    for entree in document["entrees"]:
        representant = entree["representant"]
        h_min = entree["h_min"] if entree["h_min"] is not None else "[yellow]indéterminé[/yellow]"
        if entree["non_separe"]:
            h_min += " [red]*[/red]"
        tableau.add_row(
            " ".join(representant["Lambda"]),
            " ".join(representant["lambda_sr"]),
            str(entree["taille_orbite"]),
            h_min,
            " ".join(str(c) for c in entree["serie"]["coeffs"]),
        )
    consoleur.print(tableau)
    consoleur.print(f"[bold]{document['nombre_entrees']}[/bold] modules irréductibles trouvés.")
