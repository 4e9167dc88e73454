#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Mise en forme des rapports : tableaux pandas pour la sortie texte, JSON pour
la sortie machine et fichiers de rapport horodatés.
"""

import json
import os
from datetime import datetime

import pandas as pd

from src.algebra.exactlin import format_scalar, operator_to_dict
from src.utils.logger import get_logger

logger = get_logger(__name__)


def encode_vector(values):
    return [format_scalar(value) for value in values]


def encode_matrix(m):
    """Application linéaire {"rows", "cols", "entries"}, scalaires en "p/q"."""
    if m is None:
        return None
    return operator_to_dict(m)


def matrix_text(m):
    """Lignes de la matrice pour la sortie texte : [[1, 0], [0, 1/2]]."""
    return "[" + ", ".join(f"[{', '.join(encode_vector(row))}]" for row in m) + "]"


def dump_json(report):
    """Sérialisation stable : même entrée, mêmes octets."""
    return json.dumps(report, ensure_ascii=False, indent=4)


def summarize(statuses):
    """
    Compte les vérifications réussies et échouées.

    Args:
        statuses (dict): nom -> bool

    Returns:
        dict: total, success, failed, success_rate
    """
    total = len(statuses)
    success = sum(1 for status in statuses.values() if status)
    return {
        "total": total,
        "success": success,
        "failed": total - success,
        "success_rate": f"{success / total * 100:.1f}%" if total else "n/a",
    }


def write_report(report, directory, command):
    """
    Écrit le rapport JSON d'une commande dans `directory`.

    Returns:
        str: chemin du fichier <command>_<horodatage>.json
    """
    os.makedirs(directory, exist_ok=True)
    now = datetime.now()
    path = os.path.join(directory, f"{command}_{now.strftime('%Y%m%d_%H%M%S')}.json")
    content = {"timestamp": now.strftime("%Y-%m-%d %H:%M:%S"), "command": command, "details": report}
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_json(content))
    logger.info(f"Rapport sauvegardé : {path}")
    return path


# Tableaux

def render_table(df):
    if df.empty:
        return "(aucune ligne)"
    return df.to_string(index=False)


def validation_table(rows):
    """
    Une ligne par (structure, validateur).

    Args:
        rows (list): tuples (structure, validateur, ValidationReport)
    """
    records = [
        {
            "structure": structure,
            "validateur": name,
            "statut": "OK" if report else "ECHEC",
            "verifications": report.checked,
            "violations": len(report.violations),
        }
        for structure, name, report in rows
    ]
    return pd.DataFrame(records, columns=["structure", "validateur", "statut", "verifications", "violations"])


def violation_lines(report, indent="    "):
    """Une ligne par identité violée : étiquette, uplet d'indices et résidu."""
    return [
        f"{indent}{violation.label} {tuple(violation.indices)} : [{', '.join(encode_vector(violation.residual))}]"
        for violation in report.violations
    ]


def cohomology_table(reports):
    """Dimensions Z, B, H par degré à partir de CohomologyReport."""
    records = [
        {
            "degre": report.degree,
            "dim_Z": report.dim_cocycles,
            "dim_B": report.dim_coboundaries,
            "dim_H": report.dim_H,
        }
        for report in reports
    ]
    return pd.DataFrame(records, columns=["degre", "dim_Z", "dim_B", "dim_H"])


def survey_table(records):
    """
    Synthèse du balayage du corpus, une ligne par instance.

    Args:
        records (list): dictionnaires produits par le balayage
    """
    df = pd.DataFrame(records)
    if df.empty:
        return df
    columns = ["instance", "dim_L", "dim_V", "carres_nuls", "morphismes", "variante", "h2_rlieder"]
    return df[[column for column in columns if column in df.columns]]


def survey_summary(df):
    """Agrégats par famille d'algèbres."""
    if df.empty:
        return df
    families = df["instance"].str.split("#").str[0].str.split("/").str[0]
    grouped = df.assign(famille=families).groupby("famille", sort=True)
    return grouped.agg(
        instances=("instance", "count"),
        carres_nuls=("carres_nuls", "all"),
        morphismes=("morphismes", "all"),
        h2_max=("h2_rlieder", "max"),
    ).reset_index()
