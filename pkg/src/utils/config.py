import os
from dotenv import load_dotenv

# Charger les variables d'environnement (.env à la racine si présent)
load_dotenv()

# Chemin de base du projet (répertoire racine)
BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))

# Fichiers d'entrée et rapports
FIXTURES_DIR = os.path.join(BASE_DIR, 'data', 'fixtures')
REPORTS_DIR = os.path.join(BASE_DIR, 'reports')


def _env_flag(name, default=False):
    """Lit un booléen depuis l'environnement ("1", "true", "yes", "oui")."""
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "oui")


def _env_grid(name, default):
    """Lit une grille d'entiers séparés par des virgules."""
    value = os.getenv(name)
    if not value:
        return default
    return tuple(int(token) for token in value.split(",") if token.strip())


# Configuration du logging
LOG_LEVEL = os.getenv("REYNOLDS_LOG_LEVEL", "INFO")  # Possibles valeurs : "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"
LOG_FILE = os.getenv("REYNOLDS_LOG_FILE")

# Recherche exhaustive d'opérateurs de Reynolds (oracle de test)
SEARCH_GRID = _env_grid("REYNOLDS_SEARCH_GRID", (-2, -1, 0, 1, 2))
DENSE_SEARCH_GRID = (-1, 0, 1)
SEARCH_BATCH_SIZE = 20000

# Déformations tronquées
DEFAULT_DEFORMATION_ORDER = int(os.getenv("REYNOLDS_DEFORMATION_ORDER", "2"))

# Variantes littérales des identités (mode audit)
STRICT_LITERAL = _env_flag("REYNOLDS_STRICT_LITERAL")

# Barres de progression tqdm
SHOW_PROGRESS = _env_flag("REYNOLDS_SHOW_PROGRESS")

# Graine des tirages aléatoires (corpus, données d'extension)
RANDOM_SEED = int(os.getenv("REYNOLDS_RANDOM_SEED", "20240601"))
