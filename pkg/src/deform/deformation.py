#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Déformations formelles tronquées d'une paire LieDer de Reynolds.

Une troncature d'ordre N porte (μ_i, R_i, d_i) pour 1 <= i <= N ; l'ordre 0
est la structure de base. Les équations de déformation sont vérifiées ordre
par ordre en évaluant les convolutions sur les n-uplets de base.
"""

from dataclasses import dataclass, field
from itertools import combinations

from src.algebra.exactlin import freeze, identity, matmul, operator_to_dict, solve, unit_vector, zeros, zeros_vector
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.lie_core import is_reylieder
from src.algebra.rep import adjoint_rep
from src.algebra.validation import ValidationReport
from src.cohomology.cochain import Cochain, PairCochain, QuadCochain, cochain_space_dim
from src.cohomology.complexes import CochainComplex, quad_residual_report
from src.utils.config import DEFAULT_DEFORMATION_ORDER
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _compositions(total, parts):
    """Uplets d'entiers positifs ou nuls de longueur `parts` et de somme `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True, eq=False)
class DeformationTruncation:
    """(μ_t, R_t, d_t) tronqués à l'ordre N."""

    base: object
    order: int
    mu: tuple
    Rs: tuple
    ds: tuple

    def __post_init__(self):
        n = self.base.dim
        if self.order < 1:
            raise ShapeError("Ordre de troncature >= 1 attendu")
        if not len(self.mu) == len(self.Rs) == len(self.ds) == self.order:
            raise ShapeError(f"{self.order} termes attendus pour μ, R et d")
        for term in self.mu:
            if (term.degree, term.dim_l, term.dim_v) != (2, n, n):
                raise ShapeError("μ_i doit être une 2-cochaîne à valeurs dans L")
        for op in self.Rs + self.ds:
            if op.shape != (n, n):
                raise ShapeError(f"Opérateur de forme {op.shape}, attendu {(n, n)}")

    @classmethod
    def trivial(cls, base, order=DEFAULT_DEFORMATION_ORDER):
        n = base.dim
        return cls(
            base,
            order,
            tuple(Cochain.zero(n, n, 2) for _ in range(order)),
            tuple(freeze(zeros(n, n)) for _ in range(order)),
            tuple(freeze(zeros(n, n)) for _ in range(order)),
        )

    @classmethod
    def from_infinitesimal(cls, base, quad):
        """Troncature d'ordre 1 dont le terme infinitésimal est ((μ1, R1), (d1, 0))."""
        if quad.degree != 2:
            raise ShapeError("Infinitésimal de degré 2 attendu")
        if not quad.tail.second.is_zero():
            raise ShapeError("La composante C^0 de la queue doit être nulle")
        return cls(
            base,
            1,
            (quad.main.first,),
            (freeze(quad.main.second.as_operator()),),
            (freeze(quad.tail.first.as_operator()),),
        )

    def mu_at(self, index):
        return Cochain.from_bracket(self.base.algebra) if index == 0 else self.mu[index - 1]

    def R_at(self, index):
        return self.base.R if index == 0 else self.Rs[index - 1]

    def d_at(self, index):
        return self.base.d if index == 0 else self.ds[index - 1]

    def infinitesimal(self):
        """((μ1, R1), (d1, 0)) dans 𝔠^2 à coefficients adjoints."""
        n = self.base.dim
        main = PairCochain(2, self.mu[0], Cochain.from_operator(self.Rs[0]))
        tail = PairCochain(1, Cochain.from_operator(self.ds[0]), Cochain.zero(n, n, 0))
        return QuadCochain(2, main, tail)


@dataclass(frozen=True, eq=False)
class EquivalenceSeries:
    """ψ_t = Id + Σ ψ_i t^i tronquée à l'ordre N."""

    order: int
    psis: tuple

    def __post_init__(self):
        if len(self.psis) != self.order:
            raise ShapeError(f"{self.order} termes ψ_i attendus, reçu {len(self.psis)}")

    def psi_at(self, index, dim):
        return identity(dim) if index == 0 else self.psis[index - 1]

    def inverse(self):
        """Série inverse : φ_0 = Id, φ_m = -Σ_{i=1..m} ψ_i φ_{m-i}."""
        if not self.psis:
            return self
        dim = self.psis[0].shape[0]
        terms = [identity(dim)]
        for m in range(1, self.order + 1):
            total = zeros(dim, dim)
            for i in range(1, m + 1):
                total = total + matmul(self.psis[i - 1], terms[m - i])
            terms.append(-total)
        return EquivalenceSeries(self.order, tuple(freeze(term) for term in terms[1:]))


@dataclass
class RigidityReport:
    dims: dict
    h2: int
    rigid: bool
    witness: object = None
    class_is_zero: object = None
    verified: object = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        witness = None if self.witness is None else operator_to_dict(self.witness)
        return {
            "dims": self.dims,
            "h2": self.h2,
            "rigid": self.rigid,
            "witness": witness,
            "class_is_zero": self.class_is_zero,
            "verified": self.verified,
            "notes": self.notes,
        }


def _mu(t, index, x, y):
    return t.mu_at(index).evaluate([x, y])


def validate_truncation(t):
    """
    Équations de déformation ordre par ordre.

    Pour chaque 1 <= m <= N : Jacobi, Reynolds (avec la somme quadruple),
    dérivation et commutation, évaluées sur les n-uplets de base.

    Returns:
        ValidationReport: violations étiquetées "<équation>_<m>"

    Raises:
        PreconditionError: si la paire de base est invalide
    """
    base_report = is_reylieder(t.base, literal=False)
    if not base_report:
        raise PreconditionError("Troncature refusée : paire de base invalide", base_report)
    n = t.base.dim
    basis = [unit_vector(n, k) for k in range(n)]
    report = ValidationReport("deformation")

    for m in range(1, t.order + 1):
        for a, b, c in combinations(range(n), 3):
            residual = zeros_vector(n)
            for i, j in _compositions(m, 2):
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    residual = residual + _mu(t, i, _mu(t, j, basis[x], basis[y]), basis[z])
            report.record(f"jacobi_{m}", (a, b, c), residual)

        for a, b in combinations(range(n), 2):
            x, y = basis[a], basis[b]
            residual = zeros_vector(n)
            for i, j, k in _compositions(m, 3):
                residual = residual + _mu(t, i, matmul(t.R_at(j), x), matmul(t.R_at(k), y))
                inner = _mu(t, j, matmul(t.R_at(k), x), y) + _mu(t, j, x, matmul(t.R_at(k), y))
                residual = residual - matmul(t.R_at(i), inner)
            for i, j, k, p in _compositions(m, 4):
                inner = _mu(t, j, matmul(t.R_at(k), x), matmul(t.R_at(p), y))
                residual = residual + matmul(t.R_at(i), inner)
            report.record(f"reynolds_{m}", (a, b), residual)

            residual = zeros_vector(n)
            for i, j in _compositions(m, 2):
                residual = residual + matmul(t.d_at(i), _mu(t, j, x, y))
                residual = residual - _mu(t, i, matmul(t.d_at(j), x), y) - _mu(t, i, x, matmul(t.d_at(j), y))
            report.record(f"derivation_{m}", (a, b), residual)

        commutator = zeros(n, n)
        for i, j in _compositions(m, 2):
            commutator = commutator + matmul(t.R_at(i), t.d_at(j)) - matmul(t.d_at(i), t.R_at(j))
        for column in range(n):
            report.record(f"commutation_{m}", (column,), commutator[:, column])

    logger.debug(f"Troncature d'ordre {t.order} : {report.summary()}")
    return report


def adjoint_complex(pair):
    """Complexe 𝔠^* à coefficients dans la représentation adjointe."""
    return CochainComplex("rlieder", adjoint_rep(pair), literal=False)


def infinitesimal_is_cocycle(t, complex_=None):
    """
    𝔇((μ1, R1), (d1, 0)) = 0, résidus par équation.

    Les quatre composantes de l'image sont δ_CE μ1, -(δ_R R1 + φ μ1),
    δ_CE d1 + Δ μ1 et Δ R1 - φ d1.
    """
    if complex_ is None:
        complex_ = adjoint_complex(t.base)
    return quad_residual_report("cocycle_infinitesimal", complex_.apply(t.infinitesimal()))


def transport_equivalence(t, e, complex_=None):
    """
    Déformation transportée par ψ_t : μ' = ψ^{-1}∘μ∘(ψ⊗ψ), R' = ψ^{-1}Rψ, d' = ψ^{-1}dψ.

    Post-condition : (μ'_1, R'_1, d'_1) - (μ_1, R_1, d_1) = 𝔇(ψ_1).
    """
    if e.order != t.order:
        raise ShapeError(f"Série d'ordre {e.order} pour une troncature d'ordre {t.order}")
    n = t.base.dim
    for term in e.psis:
        if term.shape != (n, n):
            raise ShapeError(f"ψ_i de forme {term.shape}, attendu {(n, n)}")
    inverse = e.inverse()
    psi = [e.psi_at(index, n) for index in range(t.order + 1)]
    phi = [inverse.psi_at(index, n) for index in range(t.order + 1)]

    mu, Rs, ds = [], [], []
    for m in range(1, t.order + 1):

        def value(indices, m=m):
            a, b = indices
            out = zeros_vector(n)
            for i, j, k, p in _compositions(m, 4):
                out = out + matmul(phi[i], _mu(t, j, psi[k][:, a], psi[p][:, b]))
            return out

        mu.append(Cochain.from_function(n, n, 2, value))
        for target, getter in ((Rs, t.R_at), (ds, t.d_at)):
            total = zeros(n, n)
            for i, j, k in _compositions(m, 3):
                total = total + matmul(matmul(phi[i], getter(j)), psi[k])
            target.append(freeze(total))
    transported = DeformationTruncation(t.base, t.order, tuple(mu), tuple(Rs), tuple(ds))

    if complex_ is None:
        complex_ = adjoint_complex(t.base)
    difference = transported.infinitesimal() - t.infinitesimal()
    expected = complex_.apply(_equivalence_cochain(e.psis[0], n))
    if not difference.equals(expected):
        raise PostconditionError("Transport : la variation infinitésimale n'est pas 𝔇(ψ_1)")
    return transported


def _equivalence_cochain(psi, n):
    return QuadCochain(1, PairCochain(1, Cochain.from_operator(psi), Cochain.zero(n, n, 0)))


def rigidity_probe(pair, truncation=None):
    """
    H^2 du complexe adjoint et, pour une troncature fournie, témoin ψ_1 avec
    (μ1, R1, d1) = 𝔇(ψ_1) vérifié par transport.

    Returns:
        RigidityReport
    """
    report = is_reylieder(pair, literal=False)
    if not report:
        raise PreconditionError("Sonde de rigidité refusée : paire invalide", report)
    complex_ = adjoint_complex(pair)
    dims = {}
    for degree in range(4):
        dims[degree] = complex_.cohomology(degree).dim_H
    h2 = dims[2]
    result = RigidityReport(dims=dims, h2=h2, rigid=h2 == 0)
    logger.info(f"H^2 adjoint de dimension {h2} : {'rigide' if h2 == 0 else 'non rigide'}")
    if truncation is None:
        return result

    infinitesimal = truncation.infinitesimal()
    result.class_is_zero = complex_.is_coboundary(infinitesimal) is not None
    n = pair.dim
    # antécédents de la forme (ψ, 0) seulement
    columns = cochain_space_dim(n, n, 1)
    restricted = complex_.differential(1)[:, :columns]
    solution = solve(restricted, infinitesimal.flat())
    if solution is None:
        result.notes.append("Aucun ψ_1 : l'infinitésimal n'est pas un cobord d'équivalence")
        return result
    witness = Cochain.from_flat(n, n, 1, solution).as_operator()
    result.witness = freeze(witness)
    first_order = DeformationTruncation(
        pair, 1, (truncation.mu[0],), (truncation.Rs[0],), (truncation.ds[0],)
    )
    transported = transport_equivalence(first_order, EquivalenceSeries(1, (freeze(-witness),)), complex_)
    result.verified = transported.infinitesimal().is_zero()
    if not result.verified:
        raise PostconditionError("Le témoin ψ_1 ne trivialise pas l'ordre 1")
    return result
