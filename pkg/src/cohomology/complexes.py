#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Complexes de cochaînes et calcul de cohomologie par algèbre linéaire exacte.

Quatre complexes sont disponibles :
    - "ce"       : C^*(L; V), cobord δ_CE
    - "reynolds" : C^*(L_R; V), cobord δ_R
    - "r"        : C^*_R, cobord D_R
    - "rlieder"  : 𝔠^*, cobord 𝔇
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from src.algebra.exactlin import (
    freeze,
    is_zero,
    kernel_basis,
    matmul,
    rank,
    solve,
    unit_vector,
    zeros,
    zeros_vector,
)
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.rep import (
    Representation,
    ReynoldsRep,
    RLDRep,
    check_reynolds_rep,
    check_rep,
    check_rld_rep,
    induced_rep,
)
from src.algebra.validation import ValidationReport
from src.cohomology.cochain import (
    Cochain,
    PairCochain,
    QuadCochain,
    cochain_space_dim,
    d_r,
    d_rlieder,
    delta_ce,
    pair_space_dim,
    quad_space_dim,
    wedge_basis,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ComplexKind(str, Enum):
    CE = "ce"
    REYNOLDS = "reynolds"
    R = "r"
    RLIEDER = "rlieder"


NOTE_DEGREE_ZERO = "𝔠^0 := C^0_R, différentielle nulle vers 𝔠^1"

# degré maximal non nul = dim L + décalage
_DEGREE_SHIFT = {ComplexKind.CE: 0, ComplexKind.REYNOLDS: 0, ComplexKind.R: 1, ComplexKind.RLIEDER: 2}


@dataclass
class CohomologyReport:
    """Dimensions des cocycles, cobords et de la cohomologie en un degré."""

    kind: str
    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_H: int
    cocycle_basis: list = field(default_factory=list)
    note: str = ""

    def to_dict(self, basis=False):
        out = {
            "kind": self.kind,
            "degree": self.degree,
            "dim_cocycles": self.dim_cocycles,
            "dim_coboundaries": self.dim_coboundaries,
            "dim_H": self.dim_H,
            "note": self.note,
        }
        if basis:
            out["cocycle_basis"] = [cocycle.to_dict() for cocycle in self.cocycle_basis]
        return out


@dataclass
class CoboundaryWitness:
    """Antécédent c = D(b) ; en degré 0 l'antécédent vit dans l'espace nul (cochain=None)."""

    degree: int
    flat: np.ndarray
    cochain: object = None


class CochainComplex:
    """
    Complexe de cochaînes d'une structure validée.

    Les matrices des différentielles sont construites colonne par colonne
    (image de chaque cochaîne de base) et conservées par degré.
    """

    def __init__(self, kind, structure, literal=None):
        self.kind = ComplexKind(kind)
        self.structure = structure
        self.literal = literal
        self._matrices = {}
        self._induced = None

        if self.kind == ComplexKind.CE:
            rep = _underlying_rep(structure)
            report = check_rep(rep)
            if not report:
                raise PreconditionError("Complexe CE refusé : ρ n'est pas une représentation", report)
            self.rep = rep
        elif self.kind in (ComplexKind.REYNOLDS, ComplexKind.R):
            rrep = structure.base if isinstance(structure, RLDRep) else structure
            if not isinstance(rrep, ReynoldsRep):
                raise ShapeError(f"Complexe '{self.kind.value}' : ReynoldsRep attendue")
            report = check_reynolds_rep(rrep)
            if not report:
                raise PreconditionError("Complexe refusé : représentation de Reynolds invalide", report)
            self.rrep = rrep
            self._induced = induced_rep(rrep)
            self.rep = self._induced.rep if self.kind == ComplexKind.REYNOLDS else rrep.base
        else:
            if not isinstance(structure, RLDRep):
                raise ShapeError("Complexe 'rlieder' : RLDRep attendue")
            report = check_rld_rep(structure, literal=False)
            if not report:
                raise PreconditionError("Complexe refusé : représentation LieDer invalide", report)
            self.rld = structure
            self.rrep = structure.base
            self._induced = induced_rep(self.rrep)
            self.rep = structure.rep

        self.dim_l = self.rep.algebra.dim
        self.dim_v = self.rep.dim
        logger.debug(f"Complexe '{self.kind.value}' : L de dimension {self.dim_l}, V de dimension {self.dim_v}")

    @property
    def induced(self):
        return self._induced

    @property
    def top_degree(self):
        """Degré au-delà duquel tous les espaces sont nuls."""
        return self.dim_l + _DEGREE_SHIFT[self.kind]

    def space_dim(self, degree):
        if self.kind in (ComplexKind.CE, ComplexKind.REYNOLDS):
            return cochain_space_dim(self.dim_l, self.dim_v, degree)
        if self.kind == ComplexKind.R:
            return pair_space_dim(self.dim_l, self.dim_v, degree)
        return quad_space_dim(self.dim_l, self.dim_v, degree)

    def zero(self, degree):
        return self.from_flat(degree, zeros_vector(self.space_dim(degree)))

    def from_flat(self, degree, flat):
        if degree < 0:
            raise ShapeError("Pas de cochaîne de degré négatif")
        if self.kind in (ComplexKind.CE, ComplexKind.REYNOLDS):
            return Cochain.from_flat(self.dim_l, self.dim_v, degree, flat)
        if self.kind == ComplexKind.R:
            return PairCochain.from_flat(self.dim_l, self.dim_v, degree, flat)
        return QuadCochain.from_flat(self.dim_l, self.dim_v, degree, flat)

    def apply(self, cochain):
        """Image d'une cochaîne par la différentielle du complexe."""
        if self.kind == ComplexKind.CE:
            return delta_ce(self.rep, cochain)
        if self.kind == ComplexKind.REYNOLDS:
            return delta_ce(self._induced.rep, cochain)
        if self.kind == ComplexKind.R:
            return d_r(self.rrep, cochain, induced=self._induced, literal=self.literal)
        return d_rlieder(self.rld, cochain, induced=self._induced, literal=self.literal)

    def differential(self, degree):
        """Matrice de la différentielle du degré `degree` vers `degree + 1`."""
        if degree not in self._matrices:
            rows, cols = self.space_dim(degree + 1), self.space_dim(degree)
            out = zeros(rows, cols)
            for column in range(cols):
                image = self.apply(self.from_flat(degree, unit_vector(cols, column)))
                out[:, column] = image.flat()
            self._matrices[degree] = freeze(out)
        return self._matrices[degree]

    def cohomology(self, degree):
        """
        Dimension de H^degree : dim ker D_n - rang D_{n-1}.

        Returns:
            CohomologyReport: dimensions et base des cocycles
        """
        if degree < 0:
            raise ShapeError("Degré négatif")
        current = self.differential(degree)
        cocycles = kernel_basis(current)
        dim_boundaries = rank(self.differential(degree - 1)) if degree > 0 else 0
        dim_h = len(cocycles) - dim_boundaries
        if dim_h < 0:
            raise PostconditionError(
                f"dim B^{degree} > dim Z^{degree} : la différentielle n'est pas de carré nul"
            )
        note = NOTE_DEGREE_ZERO if self.kind == ComplexKind.RLIEDER and degree <= 1 else ""
        logger.debug(f"H^{degree} ({self.kind.value}) : Z={len(cocycles)}, B={dim_boundaries}, H={dim_h}")
        return CohomologyReport(
            self.kind.value,
            degree,
            len(cocycles),
            dim_boundaries,
            dim_h,
            [self.from_flat(degree, vec) for vec in cocycles],
            note,
        )

    def is_cocycle(self, cochain):
        return self.apply(cochain).is_zero()

    def is_coboundary(self, cochain):
        """
        Cherche b avec D(b) = cochain.

        Returns:
            CoboundaryWitness, ou None si cochain n'est pas un cobord
        """
        degree = cochain.degree
        flat = cochain.flat()
        if degree == 0:
            if is_zero(flat):
                return CoboundaryWitness(-1, freeze(zeros_vector(0)))
            return None
        preimage = solve(self.differential(degree - 1), flat)
        if preimage is None:
            return None
        return CoboundaryWitness(degree - 1, preimage, self.from_flat(degree - 1, preimage))

    def square_is_zero(self, degree):
        """D_{n+1} ∘ D_n = 0 (test de cohérence des conventions)."""
        return is_zero(matmul(self.differential(degree + 1), self.differential(degree)))


def _underlying_rep(structure):
    if isinstance(structure, RLDRep):
        return structure.rep
    if isinstance(structure, ReynoldsRep):
        return structure.base
    if isinstance(structure, Representation):
        return structure
    raise ShapeError(f"Structure non reconnue : {type(structure).__name__}")


def cohomology(kind, structure, degree, literal=None):
    """H^degree du complexe `kind` construit sur `structure`."""
    return CochainComplex(kind, structure, literal=literal).cohomology(degree)


def is_coboundary(kind, structure, cochain, literal=None):
    return CochainComplex(kind, structure, literal=literal).is_coboundary(cochain)


def quad_residual_report(name, image):
    """
    Rapport par équation d'une image 𝔇(c) de degré 3.

    Les quatre composantes sont étiquetées jacobi, reynolds, derivation et
    commutation, indexées par les uplets croissants de L.
    """
    if image.degree != 3:
        raise ShapeError("Image de degré 3 attendue")
    report = ValidationReport(name)
    components = (
        ("jacobi", image.main.first),
        ("reynolds", image.main.second),
        ("derivation", image.tail.first),
        ("commutation", image.tail.second),
    )
    for label, component in components:
        for position, indices in enumerate(wedge_basis(component.dim_l, component.degree)):
            report.record(label, indices, component.values[position])
    return report
