# utils/logger.py
import logging
import sys

from src.utils.config import LOG_LEVEL, LOG_FILE

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _handlers(level):
    """stderr toujours, fichier si REYNOLDS_LOG_FILE est défini."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if LOG_FILE:
        handlers.append(logging.FileHandler(LOG_FILE, encoding="utf-8"))
    formatter = logging.Formatter(LOG_FORMAT)
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
    return handlers


def get_logger(name: str) -> logging.Logger:
    """
    Logger du module `name` au niveau REYNOLDS_LOG_LEVEL.

    Les journaux partent sur stderr : la sortie standard est réservée aux
    rapports, qui doivent rester identiques d'une exécution à l'autre.

    :param name: Nom du logger (en pratique __name__).
    :return: Instance de logging.Logger.
    """
    logger = logging.getLogger(name)

    # Un seul jeu de handlers par logger, même après plusieurs imports
    if not logger.handlers:
        level = getattr(logging, LOG_LEVEL.upper(), logging.INFO)
        logger.setLevel(level)
        for handler in _handlers(level):
            logger.addHandler(handler)
        # main.py configure aussi la racine
        logger.propagate = False

    return logger
