#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Extensions abéliennes de paires LieDer de Reynolds.

Une donnée (Θ, ξ, χ) sur une représentation (V, ρ, R_V, d_V) définit sur
L ⊕ V :
    [a+u, b+v] = [a,b] + Θ(a,b) + ρ(a)v - ρ(b)u
    R_ξ(a+u)   = Ra + R_V u + ξ(a)
    d_χ(a+u)   = da + d_V u + χ(a)
La structure obtenue est une paire LieDer de Reynolds si et seulement si
((Θ, ξ), (χ, 0)) est un 2-cocycle du complexe 𝔠^*.
"""

from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np

from src.algebra.exactlin import (
    freeze,
    identity,
    inverse,
    kernel_basis,
    matmul,
    rank,
    solve,
    unit_vector,
    zeros,
    zeros_vector,
)
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.lie_core import (
    LieAlgebra,
    ReynoldsLieDerPair,
    bracket,
    is_homomorphism,
    is_reylieder,
)
from src.algebra.rep import Representation, ReynoldsRep, RLDRep, check_rld_rep
from src.algebra.validation import ValidationReport
from src.cohomology.cochain import Cochain, PairCochain, QuadCochain, cochain_space_dim
from src.cohomology.complexes import CochainComplex, quad_residual_report
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ExtensionDatum:
    """(Θ, ξ, χ) : Θ ∈ Hom(Λ²L, V), ξ et χ ∈ Hom(L, V)."""

    Theta: Cochain
    xi: Cochain
    chi: Cochain

    def __post_init__(self):
        if (self.Theta.degree, self.xi.degree, self.chi.degree) != (2, 1, 1):
            raise ShapeError("Donnée d'extension : degrés (2, 1, 1) attendus")
        shapes = {(c.dim_l, c.dim_v) for c in (self.Theta, self.xi, self.chi)}
        if len(shapes) != 1:
            raise ShapeError(f"Donnée d'extension sur des espaces incompatibles : {sorted(shapes)}")

    @property
    def dim_l(self):
        return self.Theta.dim_l

    @property
    def dim_v(self):
        return self.Theta.dim_v

    @classmethod
    def zero(cls, dim_l, dim_v):
        return cls(Cochain.zero(dim_l, dim_v, 2), Cochain.zero(dim_l, dim_v, 1), Cochain.zero(dim_l, dim_v, 1))

    @classmethod
    def from_quad(cls, quad):
        if quad.degree != 2:
            raise ShapeError("Donnée d'extension : cochaîne de degré 2 attendue")
        if not quad.tail.second.is_zero():
            raise ShapeError("La composante C^0 de la queue doit être nulle")
        return cls(quad.main.first, quad.main.second, quad.tail.first)

    def as_quad(self):
        """((Θ, ξ), (χ, 0)) dans 𝔠^2."""
        main = PairCochain(2, self.Theta, self.xi)
        tail = PairCochain(1, self.chi, Cochain.zero(self.dim_l, self.dim_v, 0))
        return QuadCochain(2, main, tail)

    def __sub__(self, other):
        return ExtensionDatum(self.Theta - other.Theta, self.xi - other.xi, self.chi - other.chi)

    def equals(self, other):
        return self.Theta.equals(other.Theta) and self.xi.equals(other.xi) and self.chi.equals(other.chi)


@dataclass(frozen=True, eq=False)
class ExtensionSequence:
    """
    Suite 0 -> V -i-> L̂ -p-> L -> 0 munie d'une section linéaire s.

    `hat` et `base` sont des paires LieDer de Reynolds (extensions abéliennes)
    ou des algèbres de Reynolds (extensions centrales).
    """

    hat: object
    base: object
    inclusion: np.ndarray
    projection: np.ndarray
    section: np.ndarray

    @property
    def dim_l(self):
        return self.base.dim

    @property
    def dim_v(self):
        return self.inclusion.shape[1]

    @property
    def has_derivation(self):
        return hasattr(self.hat, "d") and hasattr(self.base, "d")

    def retraction(self):
        """q : L̂ -> V avec q∘i = Id et q∘s = 0, ou None si [s | i] n'est pas inversible."""
        frame = np.concatenate([self.section, self.inclusion], axis=1)
        if frame.shape[0] != frame.shape[1]:
            return None
        frame_inverse = inverse(frame)
        if frame_inverse is None:
            return None
        return freeze(frame_inverse[self.dim_l:, :])

    def with_section(self, section):
        return replace(self, section=freeze(section))

    def kernel_operator(self, op_hat):
        """Opérateur induit q∘op∘i sur V."""
        return freeze(matmul(matmul(self.retraction(), op_hat), self.inclusion))


@dataclass(frozen=True, eq=False)
class ExtensionTotal:
    """Structure assemblée sur L ⊕ V et ses deux verdicts."""

    base: ReynoldsLieDerPair
    rep: RLDRep
    datum: ExtensionDatum
    pair: ReynoldsLieDerPair
    direct: ValidationReport
    cocycle: ValidationReport

    @property
    def valid(self):
        return self.direct.passed

    def sequence(self):
        """Suite canonique : i(u) = (0, u), p(a, u) = a, s(a) = (a, 0)."""
        return canonical_sequence(self.pair, self.base, self.rep.dim)


def canonical_sequence(hat, base, dim_v):
    n = base.dim
    inclusion = zeros(n + dim_v, dim_v)
    inclusion[n:, :] = identity(dim_v)
    projection = zeros(n, n + dim_v)
    projection[:, :n] = identity(n)
    section = zeros(n + dim_v, n)
    section[:n, :] = identity(n)
    return ExtensionSequence(hat, base, freeze(inclusion), freeze(projection), freeze(section))


def assemble_algebra(L, action, Theta, name=""):
    """Crochet [a+u, b+v] = [a,b] + Θ(a,b) + ρ(a)v - ρ(b)u sur L ⊕ V."""
    n, m = L.dim, Theta.dim_v
    total = n + m
    constants = {}
    for i, j in combinations(range(n), 2):
        value = zeros_vector(total)
        value[:n] = L.table[i, j]
        value[n:] = Theta.value_at((i, j))
        constants[(i, j)] = value
    for i in range(n):
        for v in range(m):
            value = zeros_vector(total)
            value[n:] = action[i][:, v]
            constants[(i, n + v)] = value
    return LieAlgebra.from_brackets(total, constants, name=name)


def assemble_operator(op, op_V, cross):
    """Matrice par blocs de a+u ↦ op(a) + op_V(u) + cross(a)."""
    n, m = op.shape[0], op_V.shape[0]
    out = zeros(n + m, n + m)
    out[:n, :n] = op
    out[n:, n:] = op_V
    out[n:, :n] = cross.as_operator()
    return freeze(out)


def _check_compatible(base, rep, datum):
    if rep.algebra.dim != base.dim or not rep.algebra.same_structure(base.algebra):
        raise ShapeError("La représentation n'est pas définie sur l'algèbre de base")
    if not ((rep.R == base.R).all() and (rep.d == base.d).all()):
        raise ShapeError("La représentation ne porte pas les opérateurs R et d de la paire")
    if (datum.dim_l, datum.dim_v) != (base.dim, rep.dim):
        raise ShapeError(f"Donnée sur ({datum.dim_l}, {datum.dim_v}), attendu ({base.dim}, {rep.dim})")


def datum_cocycle_report(rep, datum, complex_=None):
    """Résidus de 𝔇((Θ, ξ), (χ, 0)) par équation."""
    if complex_ is None:
        complex_ = CochainComplex("rlieder", rep, literal=False)
    return quad_residual_report("cocycle_extension", complex_.apply(datum.as_quad()))


def build_extension(base, rep, datum, complex_=None):
    """
    Assemble (L ⊕ V, [-,-]_Θ, R_ξ, d_χ) et évalue sa validité de deux façons.

    Args:
        base (ReynoldsLieDerPair): paire (L, R, d)
        rep (RLDRep): représentation (V, ρ, R_V, d_V) de la paire
        datum (ExtensionDatum): (Θ, ξ, χ)
        complex_ (CochainComplex): complexe 'rlieder' de rep, déjà construit (optionnel)

    Returns:
        ExtensionTotal: structure assemblée, verdict direct et verdict cocycle

    Raises:
        PreconditionError: si la paire ou la représentation est invalide
        PostconditionError: si les deux verdicts divergent
    """
    report = is_reylieder(base, literal=False)
    if not report:
        raise PreconditionError("Extension refusée : paire de base invalide", report)
    report = check_rld_rep(rep, literal=False)
    if not report:
        raise PreconditionError("Extension refusée : représentation invalide", report)
    _check_compatible(base, rep, datum)

    name = f"{base.algebra.name}⊕V" if base.algebra.name else "L⊕V"
    algebra = assemble_algebra(base.algebra, rep.rep.action, datum.Theta, name=name)
    R = assemble_operator(base.R, rep.R_V, datum.xi)
    d = assemble_operator(base.d, rep.d_V, datum.chi)
    pair = ReynoldsLieDerPair(algebra, R, d, name=name)

    direct = is_reylieder(pair, literal=False)
    cocycle = datum_cocycle_report(rep, datum, complex_)
    if direct.passed != cocycle.passed:
        merged = ValidationReport("verdicts_extension").merge(direct).merge(cocycle)
        raise PostconditionError("Verdict direct et verdict cocycle divergent", merged)
    logger.debug(f"Extension {name} : {direct.summary()}")
    return ExtensionTotal(base, rep, datum, pair, direct, cocycle)


def check_exactness(seq):
    """
    Exactitude de 0 -> V -> L̂ -> L -> 0 et compatibilité des opérateurs.

    p∘i = 0, p∘s = Id, i injective, p surjective, dim L̂ = dim L + dim V,
    p morphisme, i(V) idéal abélien stable par R̂ (et d̂).
    """
    report = ValidationReport("exactitude")
    n, m = seq.dim_l, seq.dim_v
    big = seq.hat.dim
    if seq.inclusion.shape != (big, m) or seq.projection.shape != (n, big) or seq.section.shape != (big, n):
        raise ShapeError("Formes de i, p, s incompatibles avec L̂, L et V")
    report.record("dimension", (), [big - n - m])
    composite = matmul(seq.projection, seq.inclusion)
    for v in range(m):
        report.record("p∘i", (v,), composite[:, v])
    composite = matmul(seq.projection, seq.section) - identity(n)
    for a in range(n):
        report.record("p∘s", (a,), composite[:, a])
    report.record("injectivite_i", (), [m - rank(seq.inclusion)])
    report.record("surjectivite_p", (), [n - rank(seq.projection)])
    if not report:
        return report

    report.merge(is_homomorphism(seq.hat, seq.base, seq.projection))
    q = seq.retraction()
    complement = identity(big) - matmul(seq.inclusion, q)
    L_hat = seq.hat.algebra
    for u, v in combinations(range(m), 2):
        report.record("ideal_abelien", (u, v), bracket(L_hat, seq.inclusion[:, u], seq.inclusion[:, v]))
    for k in range(big):
        for v in range(m):
            image = bracket(L_hat, unit_vector(big, k), seq.inclusion[:, v])
            report.record("ideal", (k, v), matmul(complement, image))
    operators = [("reynolds_i", seq.hat.R)]
    if seq.has_derivation:
        operators.append(("derivation_i", seq.hat.d))
    for label, op in operators:
        stable = matmul(complement, matmul(op, seq.inclusion))
        for v in range(m):
            report.record(label, (v,), stable[:, v])
    return report


def section_cochains(seq):
    """
    Cochaînes lues sur la section :
        ρ(a)u = q[s(a), i(u)], Θ(a,b) = q([s(a),s(b)] - s([a,b])),
        ξ(a) = q(R̂ s(a) - s(R a)), χ(a) = q(d̂ s(a) - s(d a)).

    Returns:
        tuple: (actions ρ(e_a), Θ, ξ, χ ou None sans dérivation)
    """
    q = seq.retraction()
    n, m = seq.dim_l, seq.dim_v
    L_hat, L = seq.hat.algebra, seq.base.algebra
    s, i = seq.section, seq.inclusion

    action = []
    for a in range(n):
        columns = zeros(m, m)
        for u in range(m):
            columns[:, u] = matmul(q, bracket(L_hat, s[:, a], i[:, u]))
        action.append(freeze(columns))

    def theta(indices):
        a, b = indices
        return matmul(q, bracket(L_hat, s[:, a], s[:, b]) - matmul(s, L.table[a, b]))

    Theta = Cochain.from_function(n, m, 2, theta)

    def defect(op_hat, op):
        return Cochain.from_operator(matmul(q, matmul(op_hat, s) - matmul(s, op)))

    xi = defect(seq.hat.R, seq.base.R)
    chi = defect(seq.hat.d, seq.base.d) if seq.has_derivation else None
    return tuple(action), Theta, xi, chi


def extract_from_extension(seq, complex_=None):
    """
    Représentation et donnée (Θ, ξ, χ) d'une extension abélienne munie d'une section.

    Returns:
        tuple: (RLDRep, ExtensionDatum)

    Raises:
        PreconditionError: suite non exacte ou s n'est pas une section
        PostconditionError: représentation ou donnée extraite invalide
    """
    report = check_exactness(seq)
    if not report:
        raise PreconditionError("Extraction refusée : la suite n'est pas exacte", report)
    if not seq.has_derivation:
        raise ShapeError("Extraction abélienne : L̂ et L doivent porter une dérivation")

    action, Theta, xi, chi = section_cochains(seq)
    base = seq.base
    R_V = seq.kernel_operator(seq.hat.R)
    d_V = seq.kernel_operator(seq.hat.d)
    rep = RLDRep(ReynoldsRep(Representation(base.algebra, seq.dim_v, action), base.R, R_V), base.d, d_V)
    post = check_rld_rep(rep, literal=False)
    if not post:
        raise PostconditionError("La représentation extraite viole ses axiomes", post)
    datum = ExtensionDatum(Theta, xi, chi)
    cocycle = datum_cocycle_report(rep, datum, complex_)
    if not cocycle:
        raise PostconditionError("La donnée extraite n'est pas un 2-cocycle", cocycle)
    logger.info(f"Extraction : ρ de dimension {seq.dim_v}, donnée cocycle vérifiée")
    return rep, datum


@dataclass(frozen=True, eq=False)
class ExtensionEquivalence:
    """γ avec D2 - D1 = 𝔇(γ) et l'isomorphisme a+u ↦ a+u-γ(a) de L⊕V_{D1} vers L⊕V_{D2}."""

    gamma: np.ndarray
    isomorphism: np.ndarray


def equivalence_of_extensions(rep, first, second, complex_=None):
    """
    Compare deux données d'extension sur la même représentation.

    Returns:
        ExtensionEquivalence, ou None si les classes diffèrent

    Raises:
        PostconditionError: si l'isomorphisme construit n'est pas un morphisme de paires
    """
    if complex_ is None:
        complex_ = CochainComplex("rlieder", rep, literal=False)
    n, m = rep.algebra.dim, rep.dim
    difference = (second - first).as_quad()
    # antécédents (γ, 0) : seule la composante C^1 agit sur L ⊕ V
    restricted = complex_.differential(1)[:, :cochain_space_dim(n, m, 1)]
    solution = solve(restricted, difference.flat())
    if solution is None:
        return None
    gamma = freeze(Cochain.from_flat(n, m, 1, solution).as_operator())
    isomorphism = identity(n + m)
    isomorphism[n:, :n] = -gamma
    isomorphism = freeze(isomorphism)

    base = rep.pair
    source = build_extension(base, rep, first, complex_).pair
    target = build_extension(base, rep, second, complex_).pair
    check = is_homomorphism(source, target, isomorphism)
    if not check:
        raise PostconditionError("L'isomorphisme d'extensions n'est pas un morphisme", check)
    return ExtensionEquivalence(gamma, isomorphism)


def cocycle_data_basis(complex_):
    """Base des 2-cocycles ((Θ, ξ), (χ, 0)) du complexe 'rlieder'."""
    n, m = complex_.dim_l, complex_.dim_v
    columns = complex_.space_dim(2) - m
    data = []
    for vec in kernel_basis(complex_.differential(2)[:, :columns]):
        flat = np.concatenate([vec, zeros_vector(m)])
        data.append(ExtensionDatum.from_quad(complex_.from_flat(2, flat)))
    return data


def coboundary_datum(complex_, gamma):
    """Donnée 𝔇((γ, 0)) pour γ : L -> V."""
    n, m = complex_.dim_l, complex_.dim_v
    cochain = QuadCochain(1, PairCochain(1, Cochain.from_operator(gamma), Cochain.zero(n, m, 0)))
    return ExtensionDatum.from_quad(complex_.apply(cochain))
