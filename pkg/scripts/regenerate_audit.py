#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Régénère le rapport de référence de l'exemple affine
(reports/affine_example_audit.json) et le compare à la version existante.
"""

import os
import sys
from datetime import datetime

# Ajouter le répertoire du projet au chemin Python
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebra.search import affine_example_audit  # noqa: E402
from src.utils.config import REPORTS_DIR  # noqa: E402
from src.workspace.reporting import dump_json  # noqa: E402

AUDIT_FILE = os.path.join(REPORTS_DIR, "affine_example_audit.json")


def main():
    """Fonction principale"""
    print("\n" + "=" * 60)
    print(" AUDIT DE L'EXEMPLE AFFINE ".center(60, "="))
    print("=" * 60)
    print(f"Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")

    content = dump_json(affine_example_audit())
    previous = None
    if os.path.exists(AUDIT_FILE):
        with open(AUDIT_FILE, "r", encoding="utf-8") as f:
            previous = f.read()

    if previous == content:
        print(f"[OK] {AUDIT_FILE} est à jour")
        return 0

    os.makedirs(REPORTS_DIR, exist_ok=True)
    with open(AUDIT_FILE, "w", encoding="utf-8") as f:
        f.write(content)
    print(f"[OK] {AUDIT_FILE} {'créé' if previous is None else 'mis à jour'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
