#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Extensions centrales d'algèbres de Reynolds et extensibilité d'un couple de
dérivations (d_V, d).

Pour une extension centrale 0 -> V -> L̂ -> L -> 0 de section s, le couple
(d_V, d) se relève en une dérivation d̂ de L̂ commutant à R̂ si et seulement
si la classe de
    Ob²(a,b) = d_V ψ(a,b) - ψ(da,b) - ψ(a,db),    Ob¹(a) = d_V ξ(a) - ξ(da)
est nulle dans H²_R(L; V) (représentation triviale). Un relèvement est alors
    d̂(s(a) + u) = s(da) + γ(a) + d_V u    avec D_R(γ) = Ôb.
"""

from dataclasses import dataclass, field
from itertools import combinations

from src.algebra.exactlin import freeze, matmul, operator_to_dict, unit_vector, zeros
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.lie_core import (
    ReynoldsLieAlgebra,
    bracket,
    commutation_check,
    is_derivation,
    is_reynolds,
    jacobi_check,
)
from src.algebra.rep import Representation, ReynoldsRep
from src.algebra.search import solution_space, stack_residuals
from src.algebra.validation import ValidationReport
from src.cohomology.cochain import Cochain, PairCochain
from src.cohomology.complexes import CochainComplex
from src.extension.abelian import (
    ExtensionSequence,
    assemble_algebra,
    assemble_operator,
    canonical_sequence,
    check_exactness,
    section_cochains,
)
from src.utils.config import STRICT_LITERAL
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class CentralExtension(ExtensionSequence):
    """Extension centrale de (L, R) par (V, R_V) ; hat et base sont des ReynoldsLieAlgebra."""

    @property
    def R_V(self):
        return self.kernel_operator(self.hat.R)


def central_extension_from_cocycle(L, R, R_V, psi, xi):
    """
    L̂ = L ⊕ V, [a+u, b+v] = [a,b] + ψ(a,b), R̂(a+u) = Ra + R_V u + ξ(a).

    Raises:
        PreconditionError: si (ψ, ξ) n'est pas un 2-cocycle (L̂ viole Jacobi ou Reynolds)
    """
    m = R_V.shape[0]
    if (psi.degree, xi.degree) != (2, 1) or {psi.dim_l, xi.dim_l} != {L.dim} or {psi.dim_v, xi.dim_v} != {m}:
        raise ShapeError("ψ ∈ Hom(Λ²L, V) et ξ ∈ Hom(L, V) attendus")
    trivial = tuple(freeze(zeros(m, m)) for _ in range(L.dim))
    name = f"{L.name}^" if L.name else "L^"
    algebra = assemble_algebra(L, trivial, psi, name=name)
    R_hat = assemble_operator(R, R_V, xi)
    report = jacobi_check(algebra).merge(is_reynolds(algebra, R_hat, literal=False))
    if not report:
        raise PreconditionError("Extension centrale refusée : (ψ, ξ) n'est pas un 2-cocycle", report)
    base = ReynoldsLieAlgebra(L, R)
    sequence = canonical_sequence(ReynoldsLieAlgebra(algebra, R_hat), base, m)
    return CentralExtension(sequence.hat, base, sequence.inclusion, sequence.projection, sequence.section)


def check_central(ext):
    """[i(V), L̂] = 0 sur tous les couples (base de V, base de L̂)."""
    exact = check_exactness(ext)
    if not exact:
        raise PreconditionError("Centralité : la suite n'est pas exacte", exact)
    report = ValidationReport("centralite")
    L_hat = ext.hat.algebra
    for v in range(ext.dim_v):
        for k in range(L_hat.dim):
            report.record("centralite", (v, k), bracket(L_hat, ext.inclusion[:, v], unit_vector(L_hat.dim, k)))
    return report


@dataclass(frozen=True, eq=False)
class ObstructionCochain:
    """Ôb = (Ob², Ob¹) ∈ C²_R(L; V) et son verdict de cocycle."""

    ob2: Cochain
    ob1: Cochain
    cocycle: ValidationReport

    def as_pair(self):
        return PairCochain(2, self.ob2, self.ob1)

    def to_dict(self):
        return {
            "ob2": self.ob2.to_dict(),
            "ob1": self.ob1.to_dict(),
            "cocycle": self.cocycle.to_dict(),
        }


@dataclass
class LiftResult:
    """Relèvement d̂ avec son témoin γ, ou représentant de la classe d'obstruction."""

    extensible: bool
    obstruction: ObstructionCochain
    gamma: object = None
    d_hat: object = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        out = {"extensible": self.extensible, "obstruction": self.obstruction.to_dict()}
        if self.extensible:
            out["gamma"] = operator_to_dict(self.gamma)
            out["d_hat"] = operator_to_dict(self.d_hat)
        else:
            out["class_representative"] = self.obstruction.as_pair().to_dict()
        return out


def trivial_complex(ext):
    """Complexe C^*_R de (L, R) à coefficients dans (V, 0, R_V)."""
    L = ext.base.algebra
    rrep = ReynoldsRep(Representation.trivial(L, ext.dim_v), ext.base.R, ext.R_V)
    return CochainComplex("r", rrep, literal=False)


def _preconditions(ext, dV, d):
    m, n = ext.dim_v, ext.dim_l
    if dV.shape != (m, m) or d.shape != (n, n):
        raise ShapeError(f"d_V de forme {dV.shape} et d de forme {d.shape}, attendu {(m, m)} et {(n, n)}")
    report = check_central(ext)
    report.merge(is_derivation(ext.base.algebra, d))
    report.merge(commutation_check(ext.base.R, d))
    report.merge(commutation_check(ext.R_V, dV, label="commutation_V"))
    if not report:
        raise PreconditionError("Obstruction refusée : préconditions non satisfaites", report)


def obstruction(ext, dV, d, literal=None, complex_=None):
    """
    Cochaîne d'obstruction Ôb = (Ob², Ob¹) du couple (d_V, d).

    Le mode littéral applique d_V à la somme des trois termes de Ob² ; le
    verdict de cocycle est alors seulement rapporté.

    Returns:
        ObstructionCochain

    Raises:
        PreconditionError: d n'est pas une dérivation, commutations ou centralité violées
        PostconditionError: Ôb n'est pas un D_R-cocycle (mode par défaut)
    """
    if literal is None:
        literal = STRICT_LITERAL
    _preconditions(ext, dV, d)
    _, psi, xi, _ = section_cochains(ext)
    n, m = ext.dim_l, ext.dim_v

    def ob2(indices):
        a, b = indices
        terms = psi.evaluate([d[:, a], unit_vector(n, b)]) + psi.evaluate([unit_vector(n, a), d[:, b]])
        if literal:
            return matmul(dV, psi.value_at((a, b)) - terms)
        return matmul(dV, psi.value_at((a, b))) - terms

    second = Cochain.from_function(n, m, 2, ob2)
    first = Cochain.from_operator(matmul(dV, xi.as_operator()) - matmul(xi.as_operator(), d))
    if complex_ is None:
        complex_ = trivial_complex(ext)
    image = complex_.apply(PairCochain(2, second, first))
    cocycle = ValidationReport("cocycle_obstruction")
    for label, component in (("ob2", image.first), ("ob1", image.second)):
        for position in range(component.values.shape[0]):
            cocycle.record(label, (position,), component.values[position])
    if not cocycle and not literal:
        raise PostconditionError("Ôb n'est pas un D_R-cocycle", cocycle)
    return ObstructionCochain(second, first, cocycle)


def lift_matrix(ext, dV, d, gamma):
    """d̂ = s∘d∘p + i∘γ∘p + i∘d_V∘q."""
    q = ext.retraction()
    s, i, p = ext.section, ext.inclusion, ext.projection
    return freeze(
        matmul(matmul(s, d), p) + matmul(matmul(i, gamma), p) + matmul(matmul(i, dV), q)
    )


def lift_report(ext, dV, d, d_hat):
    """d̂ dérivation de L̂, d̂∘R̂ = R̂∘d̂, p∘d̂ = d∘p, d̂∘i = i∘d_V."""
    report = is_derivation(ext.hat.algebra, d_hat)
    report.merge(commutation_check(ext.hat.R, d_hat))
    difference = matmul(ext.projection, d_hat) - matmul(d, ext.projection)
    for k in range(difference.shape[1]):
        report.record("p∘d̂", (k,), difference[:, k])
    difference = matmul(d_hat, ext.inclusion) - matmul(ext.inclusion, dV)
    for v in range(difference.shape[1]):
        report.record("d̂∘i", (v,), difference[:, v])
    return report


def extensibility(ext, dV, d, complex_=None):
    """
    Relève (d_V, d) en d̂ ou renvoie le représentant de la classe d'obstruction.

    Returns:
        LiftResult

    Raises:
        PostconditionError: si le d̂ construit viole une des quatre conditions
    """
    if complex_ is None:
        complex_ = trivial_complex(ext)
    ob = obstruction(ext, dV, d, literal=False, complex_=complex_)
    witness = complex_.is_coboundary(ob.as_pair())
    if witness is None:
        logger.info("Couple (d_V, d) obstrué : classe [Ôb] non nulle")
        return LiftResult(False, ob)
    gamma = freeze(witness.cochain.first.as_operator())
    d_hat = lift_matrix(ext, dV, d, gamma)
    post = lift_report(ext, dV, d, d_hat)
    if not post:
        raise PostconditionError("Le relèvement d̂ construit est invalide", post)
    logger.info("Couple (d_V, d) extensible")
    return LiftResult(True, ob, gamma, d_hat)


def find_lift_directly(ext, dV, d):
    """
    Oracle : résout directement le système linéaire des quatre conditions sur d̂.

    Returns:
        np.ndarray: une solution d̂, ou None
    """
    size = ext.hat.dim
    L_hat = ext.hat.algebra

    def residual(candidate):
        blocks = [
            matmul(candidate, L_hat.table[i, j])
            - bracket(L_hat, candidate[:, i], unit_vector(size, j))
            - bracket(L_hat, unit_vector(size, i), candidate[:, j])
            for i, j in combinations(range(size), 2)
        ]
        blocks.append(matmul(candidate, ext.hat.R) - matmul(ext.hat.R, candidate))
        blocks.append(matmul(ext.projection, candidate) - matmul(d, ext.projection))
        blocks.append(matmul(candidate, ext.inclusion) - matmul(ext.inclusion, dV))
        return stack_residuals(blocks)

    particular, _ = solution_space((size, size), residual)
    return particular
