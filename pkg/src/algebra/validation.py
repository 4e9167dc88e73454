# -*- coding: utf-8 -*-

"""
Rapports de validation : chaque identité vérifiée produit, pour chaque
n-uplet de base où elle échoue, le vecteur résidu complet (membre de gauche
moins membre de droite).
"""

from dataclasses import dataclass, field

import numpy as np

from src.algebra.exactlin import format_scalar, freeze, is_zero


@dataclass(frozen=True)
class Violation:
    """Identité `label` non satisfaite sur le n-uplet d'indices `indices`."""

    label: str
    indices: tuple
    residual: np.ndarray

    def to_dict(self):
        return {
            "label": self.label,
            "indices": list(self.indices),
            "residual": [format_scalar(value) for value in self.residual],
        }


@dataclass
class ValidationReport:
    """
    Résultat d'un validateur.

    Un rapport est vrai (au sens booléen) si et seulement si aucune
    violation n'a été enregistrée.
    """

    name: str
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed

    def record(self, label, indices, residual):
        """Compte un test et n'enregistre le résidu que s'il est non nul."""
        self.checked += 1
        residual = np.asarray(residual, dtype=object)
        if not is_zero(residual):
            self.violations.append(Violation(label, tuple(indices), freeze(residual.copy())))

    def merge(self, other):
        self.violations.extend(other.violations)
        self.checked += other.checked
        return self

    def labels(self):
        return sorted({violation.label for violation in self.violations})

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": [violation.to_dict() for violation in self.violations],
        }

    def summary(self):
        if self.passed:
            return f"{self.name}: OK ({self.checked} vérifications)"
        return f"{self.name}: {len(self.violations)} violation(s) sur {self.checked} vérifications"
