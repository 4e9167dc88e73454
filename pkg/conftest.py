#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration pytest commune : racine du projet dans le PYTHONPATH et corpus
d'instances partagé par toute la session.
"""

import os
import sys

import pytest

# Ajouter le chemin du projet au PYTHONPATH
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.algebra.search import build_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Instances avec dim L <= 3 : suffisant pour les identités coûteuses."""
    return tuple(instance for instance in corpus if instance.pair.dim <= 3)
