#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Représentations d'algèbres de Lie, d'algèbres de Reynolds et de paires
LieDer de Reynolds ; représentation adjointe, sommes directes et
représentation induite ρ_R de L_R.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from src.algebra.exactlin import block_diagonal, freeze, is_zero, matmul, zeros, zeros_vector
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.lie_core import (
    ReynoldsLieDerPair,
    induced_bracket,
    is_reylieder,
    is_reynolds,
)
from src.algebra.validation import ValidationReport
from src.utils.config import STRICT_LITERAL
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Formules candidates pour ρ_R, essayées dans cet ordre
VARIANT_PRIMARY = "primary"      # ρ(Rx)u + R_V(ρ(Rx)u - ρ(x)u)
VARIANT_ALTERNATE = "alternate"  # ρ(Rx)u + ρ(x)R_V u - ρ(Rx)R_V u
VARIANTS = (VARIANT_PRIMARY, VARIANT_ALTERNATE)


@dataclass(frozen=True, eq=False)
class Representation:
    """Action ρ(e_i) (matrices dimV x dimV) de L sur V."""

    algebra: object
    dim: int
    action: tuple

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise ShapeError(f"{len(self.action)} matrices pour une algèbre de dimension {self.algebra.dim}")
        for index, matrix in enumerate(self.action):
            if matrix.shape != (self.dim, self.dim):
                raise ShapeError(f"ρ(e{index}) de forme {matrix.shape}, attendu {(self.dim, self.dim)}")

    @classmethod
    def trivial(cls, algebra, dim):
        return cls(algebra, dim, tuple(freeze(zeros(dim, dim)) for _ in range(algebra.dim)))

    @property
    def is_trivial(self):
        return all(is_zero(matrix) for matrix in self.action)


@dataclass(frozen=True, eq=False)
class ReynoldsRep:
    base: Representation
    R: np.ndarray
    R_V: np.ndarray

    @property
    def algebra(self):
        return self.base.algebra

    @property
    def dim(self):
        return self.base.dim


@dataclass(frozen=True, eq=False)
class RLDRep:
    """Représentation d'une paire LieDer de Reynolds (L, R, d) sur (V, R_V, d_V)."""

    base: ReynoldsRep
    d: np.ndarray
    d_V: np.ndarray

    @property
    def algebra(self):
        return self.base.algebra

    @property
    def dim(self):
        return self.base.dim

    @property
    def rep(self):
        return self.base.base

    @property
    def R(self):
        return self.base.R

    @property
    def R_V(self):
        return self.base.R_V

    @property
    def pair(self):
        return ReynoldsLieDerPair(self.algebra, self.R, self.d)


@dataclass
class InducedRepresentation:
    """ρ_R retenue, avec le rapport de chaque formule candidate."""

    rep: Representation
    variant: str
    audit: dict = field(default_factory=dict)


def rho(r, x):
    """Matrice ρ(x) = Σ x_i ρ(e_i)."""
    out = zeros(r.dim, r.dim)
    for coefficient, matrix in zip(x, r.action):
        if coefficient != 0:
            out = out + coefficient * matrix
    return out


def act(r, x, u):
    """ρ(x)u."""
    out = zeros_vector(r.dim)
    for coefficient, matrix in zip(x, r.action):
        if coefficient != 0:
            out = out + coefficient * matmul(matrix, u)
    return out


def check_rep(r):
    """ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) - ρ(e_j)ρ(e_i) pour i < j, colonne par colonne."""
    L = r.algebra
    report = ValidationReport("representation")
    for i, j in combinations(range(L.dim), 2):
        difference = (
            rho(r, L.table[i, j])
            - (matmul(r.action[i], r.action[j]) - matmul(r.action[j], r.action[i]))
        )
        for v in range(r.dim):
            report.record("representation", (i, j, v), difference[:, v])
    return report


def _reynolds_rep_residuals(r):
    L, rep = r.algebra, r.base
    report = ValidationReport("reynolds_rep")
    for i in range(L.dim):
        rho_x = rep.action[i]
        rho_Rx = rho(rep, r.R[:, i])
        lhs = matmul(rho_Rx, r.R_V)
        rhs = matmul(r.R_V, rho_Rx + matmul(rho_x, r.R_V) - matmul(rho_Rx, r.R_V))
        difference = lhs - rhs
        for v in range(r.dim):
            report.record("reynolds_rep", (i, v), difference[:, v])
    return report


def check_reynolds_rep(r, strict=True):
    """
    Compatibilité ρ(Rx)R_V(u) = R_V(ρ(Rx)u + ρ(x)R_V(u) - ρ(Rx)R_V(u)).

    Args:
        r (ReynoldsRep): la représentation
        strict (bool): lève PreconditionError si ρ ou R sont invalides ;
            sinon leurs violations sont ajoutées au rapport

    Returns:
        ValidationReport: résidus par couple (e_i, v_j)
    """
    if r.R.shape != (r.algebra.dim, r.algebra.dim) or r.R_V.shape != (r.dim, r.dim):
        raise ShapeError("R ou R_V de forme incompatible")
    preconditions = check_rep(r.base)
    preconditions.merge(is_reynolds(r.algebra, r.R, literal=False))
    if strict and not preconditions:
        raise PreconditionError("Représentation de Reynolds : préconditions non satisfaites", preconditions)
    report = _reynolds_rep_residuals(r)
    if not strict:
        report.merge(preconditions)
    return report


def check_rld_rep(r, literal=None, strict=True):
    """
    Axiomes d'une représentation de paire LieDer de Reynolds.

    Compatibilité retenue : d_V ρ(x)u = ρ(dx)u + ρ(x)d_V u ; en mode littéral
    d_V ρ(x)u = ρ(dx)u + ρ(x)R_V u - ρ(Rx)R_V u. Dans les deux cas
    R_V∘d_V = d_V∘R_V est exigé.
    """
    if literal is None:
        literal = STRICT_LITERAL
    if r.d.shape != (r.algebra.dim, r.algebra.dim) or r.d_V.shape != (r.dim, r.dim):
        raise ShapeError("d ou d_V de forme incompatible")
    preconditions = check_reynolds_rep(r.base, strict=False)
    preconditions.merge(is_reylieder(r.pair, literal=False))
    if strict and not preconditions:
        raise PreconditionError("Représentation LieDer : préconditions non satisfaites", preconditions)

    rep = r.rep
    report = ValidationReport("rld_rep_literal" if literal else "rld_rep")
    for i in range(r.algebra.dim):
        rho_x = rep.action[i]
        rho_dx = rho(rep, r.d[:, i])
        if literal:
            rhs = rho_dx + matmul(rho_x, r.R_V) - matmul(rho(rep, r.R[:, i]), r.R_V)
        else:
            rhs = rho_dx + matmul(rho_x, r.d_V)
        difference = matmul(r.d_V, rho_x) - rhs
        for v in range(r.dim):
            report.record("lieder_compatibilite", (i, v), difference[:, v])
    commutator = matmul(r.R_V, r.d_V) - matmul(r.d_V, r.R_V)
    for v in range(r.dim):
        report.record("commutation_V", (v,), commutator[:, v])
    if not strict:
        report.merge(preconditions)
    return report


def _candidate(r, variant):
    rep = r.base
    action = []
    for i in range(r.algebra.dim):
        rho_x = rep.action[i]
        rho_Rx = rho(rep, r.R[:, i])
        if variant == VARIANT_PRIMARY:
            matrix = rho_Rx + matmul(r.R_V, rho_Rx - rho_x)
        else:
            matrix = rho_Rx + matmul(rho_x, r.R_V) - matmul(rho_Rx, r.R_V)
        action.append(freeze(matrix))
    return tuple(action)


def induced_rep(r):
    """
    Représentation induite ρ_R de L_R sur V.

    Les deux formules candidates sont évaluées contre le crochet induit ;
    la première qui satisfait l'axiome de représentation est retenue.

    Args:
        r (ReynoldsRep): représentation de Reynolds valide

    Returns:
        InducedRepresentation: ρ_R, la variante retenue et l'audit des deux

    Raises:
        PostconditionError: si aucune formule ne donne une représentation
    """
    check = check_reynolds_rep(r)
    if not check:
        raise PreconditionError("Représentation induite refusée : compatibilité de Reynolds violée", check)
    L_R = induced_bracket(r.algebra, r.R)
    audit = {}
    candidates = {}
    for variant in VARIANTS:
        candidate = Representation(L_R, r.dim, _candidate(r, variant))
        candidates[variant] = candidate
        audit[variant] = check_rep(candidate)
    for variant in VARIANTS:
        if audit[variant]:
            logger.info(f"Représentation induite : variante '{variant}' retenue")
            return InducedRepresentation(candidates[variant], variant, audit)
    failures = ValidationReport("representation_induite")
    for report in audit.values():
        failures.merge(report)
    logger.warning("Aucune formule candidate ne donne une représentation de L_R")
    raise PostconditionError("Aucune variante de ρ_R n'est une représentation", failures)


def adjoint_rep(pair):
    """
    Représentation adjointe (L; ad, R, d) d'une paire LieDer de Reynolds.

    Returns:
        RLDRep: V = L, ρ(e_i) = ad_{e_i}, R_V = R, d_V = d
    """
    check = is_reylieder(pair, literal=False)
    if not check:
        raise PreconditionError("Représentation adjointe refusée : paire invalide", check)
    L = pair.algebra
    action = []
    for i in range(L.dim):
        ad = zeros(L.dim, L.dim)
        for j in range(L.dim):
            ad[:, j] = L.table[i, j]
        action.append(freeze(ad))
    result = RLDRep(ReynoldsRep(Representation(L, L.dim, tuple(action)), pair.R, pair.R), pair.d, pair.d)
    post = check_rld_rep(result, literal=False)
    if not post:
        raise PostconditionError("La représentation adjointe viole ses axiomes", post)
    return result


def _same_base(reps):
    first = reps[0]
    for other in reps[1:]:
        same_algebra = other.algebra is first.algebra or other.algebra.same_structure(first.algebra)
        if not same_algebra or other.R.shape != first.R.shape or not (other.R == first.R).all():
            raise ShapeError("Sommes directes : toutes les représentations doivent partager (L, R)")


def direct_sum_rep(reps):
    """Somme directe par blocs de représentations de Reynolds de même (L, R)."""
    reps = list(reps)
    if not reps:
        raise ShapeError("Somme directe vide")
    _same_base(reps)
    for index, summand in enumerate(reps):
        report = check_reynolds_rep(summand)
        if not report:
            raise PreconditionError(f"Somme directe refusée : facteur {index} invalide", report)
    first = reps[0]
    L = first.algebra
    action = tuple(
        freeze(block_diagonal(*(summand.base.action[i] for summand in reps))) for i in range(L.dim)
    )
    dim = sum(summand.dim for summand in reps)
    result = ReynoldsRep(
        Representation(L, dim, action),
        first.R,
        freeze(block_diagonal(*(summand.R_V for summand in reps))),
    )
    post = check_reynolds_rep(result)
    if not post:
        raise PostconditionError("La somme directe viole la compatibilité de Reynolds", post)
    return result


def direct_sum_rld_rep(reps):
    """Somme directe par blocs de représentations de paires LieDer de même (L, R, d)."""
    reps = list(reps)
    if not reps:
        raise ShapeError("Somme directe vide")
    first = reps[0]
    for other in reps[1:]:
        if not (other.d == first.d).all():
            raise ShapeError("Sommes directes : toutes les représentations doivent partager d")
    base = direct_sum_rep([summand.base for summand in reps])
    result = RLDRep(base, first.d, freeze(block_diagonal(*(summand.d_V for summand in reps))))
    post = check_rld_rep(result, literal=False)
    if not post:
        raise PostconditionError("La somme directe viole les axiomes LieDer", post)
    return result


def trivial_rld_rep(pair, R_V, d_V):
    """Représentation triviale (ρ = 0) de dimension R_V.shape[0]."""
    dim = R_V.shape[0]
    return RLDRep(ReynoldsRep(Representation.trivial(pair.algebra, dim), pair.R, R_V), pair.d, d_V)

