#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Point d'entrée en ligne de commande du moteur de calcul exact pour les paires
LieDer de Reynolds.

Codes de sortie : 0 verdict positif, 1 échec mathématique (résidus affichés),
2 erreur d'entrée. Les rapports vont sur la sortie standard, les journaux sur
la sortie d'erreur.
"""

import os
import sys
import logging
import argparse
from dotenv import load_dotenv

# Ajouter le répertoire du projet au chemin Python
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

# Charger les variables d'environnement
load_dotenv()

from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError  # noqa: E402
from src.cli.commands import COMMANDS  # noqa: E402
from src.cohomology.complexes import ComplexKind  # noqa: E402
from src.utils.config import LOG_FILE, LOG_LEVEL  # noqa: E402
from src.utils.logger import LOG_FORMAT  # noqa: E402
from src.workspace.extraction import InputError  # noqa: E402
from src.workspace.reporting import dump_json, violation_lines, write_report  # noqa: E402

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2

handlers = [logging.StreamHandler()]
if LOG_FILE:
    handlers.append(logging.FileHandler(LOG_FILE))
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format=LOG_FORMAT,
    handlers=handlers,
)
logger = logging.getLogger(__name__)


def parse_arguments(argv=None):
    """Parse les arguments de ligne de commande."""
    parser = argparse.ArgumentParser(description='Calcul exact sur les paires LieDer de Reynolds')
    parser.add_argument('--json', action='store_true', help='Sortie JSON au lieu du texte')
    parser.add_argument('--report-dir', type=str, help='Écrit aussi le rapport JSON horodaté dans ce répertoire')
    subparsers = parser.add_subparsers(dest='command', required=True)

    validate = subparsers.add_parser('validate', help='Exécute tous les validateurs applicables')
    validate.add_argument('path', help='Fichier de définitions JSON')

    cohomology = subparsers.add_parser('cohomology', help='Dimensions de la cohomologie par degré')
    cohomology.add_argument('path', help='Fichier de définitions JSON')
    cohomology.add_argument('--complex', dest='complex_kind', choices=[kind.value for kind in ComplexKind],
                            default=ComplexKind.RLIEDER.value, help='Complexe de cochaînes')
    cohomology.add_argument('--degrees', type=str, help='Intervalle de degrés A..B')
    cohomology.add_argument('--basis', action='store_true', help='Affiche une base des cocycles')

    for name, text in (('deform', 'Déformation tronquée'),
                       ('extend', "Donnée d'extension abélienne"),
                       ('obstruction', 'Obstruction au relèvement de (d_V, d)')):
        sub = subparsers.add_parser(name, help=text)
        sub.add_argument('path', help='Fichier de définitions JSON')

    survey = subparsers.add_parser('survey', help='Balayage du corpus de référence')
    survey.add_argument('--max-dim', type=int, help='Dimension maximale de L')
    return parser.parse_args(argv)


def run_command(args):
    """Délègue à la commande choisie et renvoie son CommandResult."""
    if args.command == 'cohomology':
        return COMMANDS['cohomology'](args.path, args.complex_kind, args.degrees, args.basis)
    if args.command == 'survey':
        return COMMANDS['survey'](args.max_dim)
    return COMMANDS[args.command](args.path)


def emit(args, payload, text):
    print(dump_json(payload) if args.json else text)


def main(argv=None):
    """Fonction principale : renvoie le code de sortie."""
    args = parse_arguments(argv)
    logger.info(f"Commande : {args.command}")
    try:
        result = run_command(args)
    except InputError as e:
        position = {"line": e.line, "column": e.column} if e.line is not None else {}
        where = f" (ligne {e.line}, colonne {e.column})" if e.line is not None else ""
        logger.error(f"Erreur d'entrée : {e}{where}")
        emit(args, dict({"error": str(e)}, **position), f"Erreur d'entrée : {e}{where}")
        return EXIT_INPUT
    except ShapeError as e:
        logger.error(f"Dimensions incompatibles : {e}")
        emit(args, {"error": str(e)}, f"Erreur d'entrée : {e}")
        return EXIT_INPUT
    except (PreconditionError, PostconditionError) as e:
        logger.error(f"Commande {args.command} refusée : {e}")
        lines = [f"Refusé : {e}"]
        if e.report is not None:
            lines.extend(violation_lines(e.report))
        payload = {"error": str(e), "report": e.report.to_dict() if e.report is not None else None}
        emit(args, payload, "\n".join(lines))
        return EXIT_FAILURE

    emit(args, result.payload, result.text())
    if args.report_dir:
        write_report(result.payload, args.report_dir, result.command)
    logger.info(f"Commande {args.command} terminée : {'OK' if result.passed else 'ECHEC'}")
    return EXIT_OK if result.passed else EXIT_FAILURE


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
