# -*- coding: utf-8 -*-

"""
Exceptions du moteur de calcul.

Les validateurs ne lèvent jamais d'exception pour un échec mathématique :
ils renvoient un ValidationReport. Les exceptions ci-dessous signalent
une violation de contrat (formes incompatibles), un refus de calcul sur
des entrées invalides, ou une post-condition non tenue.
"""


class ShapeError(ValueError):
    """Dimensions incompatibles entre deux objets."""


class PreconditionError(ValueError):
    """Refus de calcul : une vérification préalable a échoué."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PostconditionError(AssertionError):
    """Un objet construit ne satisfait pas la propriété garantie."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
