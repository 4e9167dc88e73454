#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Algèbres de Lie données par constantes de structure, opérateurs de Reynolds
et dérivations.

Identité de Reynolds retenue :
    [Rx, Ry] = R([Rx, y] + [x, Ry] - [Rx, Ry])
Le mode littéral (literal=True) évalue la variante
    [Rx, Ry] = R([x, Ry] + [x, Ry] - [Rx, Ry])
sur tous les couples ordonnés, pour audit uniquement.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from src.algebra.exactlin import (
    block_diagonal,
    format_scalar,
    freeze,
    is_zero,
    matmul,
    to_scalar,
    vector,
    zeros_vector,
)
from src.algebra.exceptions import PostconditionError, PreconditionError, ShapeError
from src.algebra.validation import ValidationReport
from src.utils.config import STRICT_LITERAL
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """
    Algèbre de Lie de dimension finie.

    Seules les constantes [e_i, e_j] avec i < j sont stockées ; le crochet
    s'étend par antisymétrie.
    """

    dim: int
    constants: dict = field(default_factory=dict)
    name: str = ""

    @classmethod
    def from_brackets(cls, dim, brackets, name=""):
        """
        Construit l'algèbre à partir de ses crochets non nuls.

        Args:
            dim (int): dimension n
            brackets: dict {(i, j): valeurs} ou itérable de (i, j, valeurs), i < j
            name (str): nom affiché dans les rapports

        Returns:
            LieAlgebra: l'algèbre (le crochet n'est pas vérifié, voir jacobi_check)
        """
        items = brackets.items() if isinstance(brackets, dict) else [((i, j), v) for i, j, v in brackets]
        constants = {}
        for (i, j), values in items:
            i, j = int(i), int(j)
            if not 0 <= i < j < dim:
                raise ShapeError(f"Crochet [e{i}, e{j}] invalide : il faut 0 <= i < j < {dim}")
            if (i, j) in constants:
                raise ShapeError(f"Crochet [e{i}, e{j}] défini deux fois")
            value = vector(values)
            if len(value) != dim:
                raise ShapeError(f"[e{i}, e{j}] de longueur {len(value)}, attendu {dim}")
            if not is_zero(value):
                constants[(i, j)] = freeze(value)
        return cls(dim=dim, constants=constants, name=name)

    @classmethod
    def abelian(cls, dim, name=None):
        return cls(dim=dim, constants={}, name=name or f"abelienne_{dim}")

    @cached_property
    def table(self):
        """Tableau complet table[i, j] = [e_i, e_j], de forme (n, n, n)."""
        table = np.full((self.dim, self.dim, self.dim), to_scalar(0), dtype=object)
        for (i, j), value in self.constants.items():
            table[i, j] = value
            table[j, i] = -value
        return freeze(table)

    @cached_property
    def _support(self):
        """Couples (i, j) ordonnés de crochet non nul."""
        pairs = {}
        for (i, j) in self.constants:
            pairs.setdefault(i, []).append(j)
            pairs.setdefault(j, []).append(i)
        return pairs

    @property
    def is_abelian(self):
        return not self.constants

    def to_dict(self):
        """{"dim": n, "brackets": [{"i", "j", "value"}]} sur les crochets non nuls, i < j."""
        return {
            "dim": self.dim,
            "brackets": [
                {"i": i, "j": j, "value": [format_scalar(x) for x in self.constants[(i, j)]]}
                for i, j in sorted(self.constants)
            ],
        }

    def same_structure(self, other):
        if self.dim != other.dim or set(self.constants) != set(other.constants):
            return False
        return all(
            all(a == b for a, b in zip(value, other.constants[key]))
            for key, value in self.constants.items()
        )

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, name={self.name!r}, crochets={len(self.constants)})"


@dataclass(frozen=True, eq=False)
class ReynoldsLieAlgebra:
    algebra: LieAlgebra
    R: np.ndarray

    @property
    def dim(self):
        return self.algebra.dim


@dataclass(frozen=True, eq=False)
class ReynoldsLieDerPair:
    """Triplet (L, R, d) : R opérateur de Reynolds, d dérivation, R∘d = d∘R."""

    algebra: LieAlgebra
    R: np.ndarray
    d: np.ndarray
    name: str = ""

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def reynolds_algebra(self):
        return ReynoldsLieAlgebra(self.algebra, self.R)


def _check_vector(L, x):
    if len(x) != L.dim:
        raise ShapeError(f"Vecteur de longueur {len(x)} pour une algèbre de dimension {L.dim}")


def _check_endomorphism(L, op, label):
    if op.shape != (L.dim, L.dim):
        raise ShapeError(f"{label} de forme {op.shape}, attendu {(L.dim, L.dim)}")


def bracket(L, x, y):
    """Crochet [x, y] étendu par bilinéarité et antisymétrie."""
    _check_vector(L, x)
    _check_vector(L, y)
    out = zeros_vector(L.dim)
    support = L._support
    for i, xi in enumerate(x):
        if xi == 0 or i not in support:
            continue
        for j in support[i]:
            if y[j] != 0:
                out = out + (xi * y[j]) * L.table[i, j]
    return out


def basis_vector(L, index):
    out = zeros_vector(L.dim)
    out[index] = to_scalar(1)
    return out


def jacobi_check(L):
    """Identité de Jacobi sur tous les triplets i < j < k."""
    report = ValidationReport("jacobi")
    for i, j, k in combinations(range(L.dim), 3):
        ei, ej, ek = basis_vector(L, i), basis_vector(L, j), basis_vector(L, k)
        residual = (
            bracket(L, L.table[i, j], ek)
            + bracket(L, L.table[j, k], ei)
            + bracket(L, L.table[k, i], ej)
        )
        report.record("jacobi", (i, j, k), residual)
    return report


def is_derivation(L, d, label="derivation"):
    """Vérifie d[e_i, e_j] = [d e_i, e_j] + [e_i, d e_j] pour i < j."""
    _check_endomorphism(L, d, "d")
    report = ValidationReport(label)
    for i, j in combinations(range(L.dim), 2):
        residual = (
            matmul(d, L.table[i, j])
            - bracket(L, d[:, i], basis_vector(L, j))
            - bracket(L, basis_vector(L, i), d[:, j])
        )
        report.record(label, (i, j), residual)
    return report


def is_reynolds(L, R, literal=None):
    """
    Vérifie l'identité de Reynolds sur les vecteurs de base.

    Args:
        L (LieAlgebra): l'algèbre
        R (np.ndarray): opérateur n x n
        literal (bool): évalue la variante littérale [x,Ry]+[x,Ry] (couples ordonnés)

    Returns:
        ValidationReport: résidus [Rx,Ry] - R(...) par couple d'indices
    """
    _check_endomorphism(L, R, "R")
    if literal is None:
        literal = STRICT_LITERAL
    report = ValidationReport("reynolds_literal" if literal else "reynolds")
    if literal:
        couples = [(i, j) for i in range(L.dim) for j in range(L.dim)]
    else:
        couples = list(combinations(range(L.dim), 2))
    for i, j in couples:
        ei, ej = basis_vector(L, i), basis_vector(L, j)
        Rx, Ry = R[:, i], R[:, j]
        lhs = bracket(L, Rx, Ry)
        if literal:
            inner = bracket(L, ei, Ry) + bracket(L, ei, Ry) - lhs
        else:
            inner = bracket(L, Rx, ej) + bracket(L, ei, Ry) - lhs
        report.record(report.name, (i, j), lhs - matmul(R, inner))
    return report


def commutation_check(R, d, label="commutation"):
    """Résidus colonne par colonne de R∘d - d∘R."""
    report = ValidationReport(label)
    difference = matmul(R, d) - matmul(d, R)
    for j in range(difference.shape[1]):
        report.record(label, (j,), difference[:, j])
    return report


def is_reylieder(pair, literal=None):
    """Conjonction Jacobi, Reynolds, dérivation et commutation R∘d = d∘R."""
    L = pair.algebra
    report = ValidationReport("reynolds_lieder")
    report.merge(jacobi_check(L))
    report.merge(is_reynolds(L, pair.R, literal=literal))
    report.merge(is_derivation(L, pair.d))
    report.merge(commutation_check(pair.R, pair.d))
    return report


def induced_bracket(L, R):
    """
    Algèbre L_R de crochet [x,y]_R = [x,Ry] + [Rx,y] - [Rx,Ry].

    Args:
        L (LieAlgebra): l'algèbre
        R (np.ndarray): opérateur de Reynolds sur L

    Returns:
        LieAlgebra: L_R sur le même espace

    Raises:
        PreconditionError: si R n'est pas un opérateur de Reynolds
        PostconditionError: si L_R viole Jacobi ou si R n'est pas un morphisme L_R -> L
    """
    check = is_reynolds(L, R, literal=False)
    if not check:
        raise PreconditionError("Crochet induit refusé : R n'est pas un opérateur de Reynolds", check)

    constants = {}
    for i, j in combinations(range(L.dim), 2):
        ei, ej = basis_vector(L, i), basis_vector(L, j)
        Rx, Ry = R[:, i], R[:, j]
        constants[(i, j)] = bracket(L, ei, Ry) + bracket(L, Rx, ej) - bracket(L, Rx, Ry)
    induced = LieAlgebra.from_brackets(L.dim, constants, name=f"{L.name}_R" if L.name else "L_R")

    post = jacobi_check(induced)
    morphism = ValidationReport("morphisme_R")
    for i, j in combinations(range(L.dim), 2):
        morphism.record("morphisme_R", (i, j), matmul(R, induced.table[i, j]) - bracket(L, R[:, i], R[:, j]))
    post.merge(morphism)
    if not post:
        raise PostconditionError("Le crochet induit viole une propriété garantie", post)
    return induced


def direct_sum_algebras(*algebras, name=""):
    """Somme directe d'algèbres de Lie (crochets croisés nuls)."""
    dim = sum(L.dim for L in algebras)
    constants = {}
    offset = 0
    for L in algebras:
        for (i, j), value in L.constants.items():
            padded = zeros_vector(dim)
            padded[offset:offset + L.dim] = value
            constants[(offset + i, offset + j)] = padded
        offset += L.dim
    return LieAlgebra.from_brackets(dim, constants, name=name or "+".join(L.name for L in algebras))


def direct_sum_pairs(*pairs, name=""):
    """Somme directe de paires LieDer de Reynolds, opérateurs par blocs."""
    algebra = direct_sum_algebras(*(p.algebra for p in pairs), name=name)
    R = block_diagonal(*(p.R for p in pairs))
    d = block_diagonal(*(p.d for p in pairs))
    return ReynoldsLieDerPair(algebra, R, d, name=algebra.name)


def semidirect_product(L, rrep, check=True):
    """
    Produit semi-direct L ⋉ V d'une représentation de Reynolds.

    Crochet [x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u, opérateur R ⊕ R_V.
    Avec check=False aucune vérification n'est faite (contrôle négatif).
    """
    from src.algebra.rep import check_reynolds_rep

    if check:
        report = check_reynolds_rep(rrep)
        if not report:
            raise PreconditionError("Produit semi-direct refusé : représentation invalide", report)

    n, m = L.dim, rrep.base.dim
    total = n + m
    constants = {}
    for (i, j), value in L.constants.items():
        padded = zeros_vector(total)
        padded[:n] = value
        constants[(i, j)] = padded
    for i in range(n):
        action = rrep.base.action[i]
        for v in range(m):
            column = action[:, v]
            if not is_zero(column):
                padded = zeros_vector(total)
                padded[n:] = column
                constants[(i, n + v)] = padded
    product = LieAlgebra.from_brackets(total, constants, name=f"{L.name}⋉V" if L.name else "L⋉V")
    R = block_diagonal(rrep.R, rrep.R_V)

    if check:
        post = is_reynolds(product, R, literal=False)
        if not post:
            raise PostconditionError("Le produit semi-direct n'est pas de Reynolds", post)
    return ReynoldsLieAlgebra(product, R)


def check_matched_pair(L, G, rho_L, rho_G):
    """
    Compatibilités d'une paire assortie (L, G, ρ_L, ρ_G).

    ρ_L est une représentation de L sur G, ρ_G une représentation de G sur L.
    Le rapport inclut aussi les axiomes de représentation des deux actions.
    """
    from src.algebra.rep import act, check_rep

    if rho_L.algebra.dim != L.dim or rho_L.dim != G.dim:
        raise ShapeError("ρ_L doit être une représentation de L sur G")
    if rho_G.algebra.dim != G.dim or rho_G.dim != L.dim:
        raise ShapeError("ρ_G doit être une représentation de G sur L")

    report = ValidationReport("paire_assortie")
    report.merge(check_rep(rho_L))
    report.merge(check_rep(rho_G))
    for x in range(L.dim):
        ex = basis_vector(L, x)
        for a, b in combinations(range(G.dim), 2):
            ea, eb = basis_vector(G, a), basis_vector(G, b)
            residual = (
                act(rho_L, ex, G.table[a, b])
                - bracket(G, act(rho_L, ex, ea), eb)
                - bracket(G, ea, act(rho_L, ex, eb))
                + act(rho_L, act(rho_G, ea, ex), eb)
                - act(rho_L, act(rho_G, eb, ex), ea)
            )
            report.record("compatibilite_L", (x, a, b), residual)
    for a in range(G.dim):
        ea = basis_vector(G, a)
        for x, y in combinations(range(L.dim), 2):
            ex, ey = basis_vector(L, x), basis_vector(L, y)
            residual = (
                act(rho_G, ea, L.table[x, y])
                - bracket(L, act(rho_G, ea, ex), ey)
                - bracket(L, ex, act(rho_G, ea, ey))
                + act(rho_G, act(rho_L, ex, ea), ey)
                - act(rho_G, act(rho_L, ey, ea), ex)
            )
            report.record("compatibilite_G", (a, x, y), residual)
    return report


def bowtie(L, G, rho_L, rho_G, R_L, R_G, d_L=None, d_G=None):
    """
    Algèbre L ⋈ G d'une paire assortie d'algèbres de Reynolds.

    [x+a, y+b] = [x,y] + ρ_G(a)y - ρ_G(b)x + [a,b] + ρ_L(x)b - ρ_L(y)a,
    opérateur R_L + R_G, et d_L + d_G lorsque les dérivations sont fournies.

    Returns:
        ReynoldsLieAlgebra, ou ReynoldsLieDerPair si d_L et d_G sont donnés
    """
    from src.algebra.rep import RLDRep, ReynoldsRep, act, check_reynolds_rep, check_rld_rep

    n, m = L.dim, G.dim
    with_derivations = d_L is not None and d_G is not None

    diagnostics = ValidationReport("bowtie_preconditions")
    diagnostics.merge(check_matched_pair(L, G, rho_L, rho_G))
    cross_L = ReynoldsRep(rho_L, R_L, R_G)
    cross_G = ReynoldsRep(rho_G, R_G, R_L)
    if with_derivations:
        # Les deux actions doivent être compatibles avec d_L + d_G
        diagnostics.merge(check_rld_rep(RLDRep(cross_L, d_L, d_G), strict=False))
        diagnostics.merge(check_rld_rep(RLDRep(cross_G, d_G, d_L), strict=False))
    else:
        diagnostics.merge(check_reynolds_rep(cross_L, strict=False))
        diagnostics.merge(check_reynolds_rep(cross_G, strict=False))
    if not diagnostics:
        raise PreconditionError("L ⋈ G refusé : conditions de paire assortie non satisfaites", diagnostics)

    total = n + m
    constants = {}
    for (i, j), value in L.constants.items():
        padded = zeros_vector(total)
        padded[:n] = value
        constants[(i, j)] = padded
    for (p, q), value in G.constants.items():
        padded = zeros_vector(total)
        padded[n:] = value
        constants[(n + p, n + q)] = padded
    for x in range(n):
        ex = basis_vector(L, x)
        for a in range(m):
            ea = basis_vector(G, a)
            padded = zeros_vector(total)
            padded[:n] = -act(rho_G, ea, ex)
            padded[n:] = act(rho_L, ex, ea)
            if not is_zero(padded):
                constants[(x, n + a)] = padded
    algebra = LieAlgebra.from_brackets(total, constants, name=f"{L.name}⋈{G.name}")
    R = block_diagonal(R_L, R_G)

    post = jacobi_check(algebra)
    post.merge(is_reynolds(algebra, R, literal=False))
    if with_derivations:
        d = block_diagonal(d_L, d_G)
        result = ReynoldsLieDerPair(algebra, R, d, name=algebra.name)
        post = is_reylieder(result, literal=False)
    else:
        result = ReynoldsLieAlgebra(algebra, R)
    if not post:
        raise PostconditionError("L ⋈ G ne vérifie pas les axiomes attendus", post)
    logger.debug(f"Paire assortie construite en dimension {total}")
    return result


def is_homomorphism(src, dst, f):
    """
    Vérifie qu'une application f : src -> dst est un morphisme de paires.

    Accepte aussi des ReynoldsLieAlgebra (sans dérivation).
    """
    if f.shape != (dst.dim, src.dim):
        raise ShapeError(f"f de forme {f.shape}, attendu {(dst.dim, src.dim)}")
    report = ValidationReport("homomorphisme")
    Ls, Ld = src.algebra, dst.algebra
    for i, j in combinations(range(Ls.dim), 2):
        residual = matmul(f, Ls.table[i, j]) - bracket(Ld, f[:, i], f[:, j])
        report.record("crochet", (i, j), residual)
    report.merge(_intertwining(dst.R, src.R, f, "reynolds"))
    if hasattr(src, "d") and hasattr(dst, "d"):
        report.merge(_intertwining(dst.d, src.d, f, "derivation"))
    return report


def _intertwining(op_dst, op_src, f, label):
    report = ValidationReport(label)
    difference = matmul(op_dst, f) - matmul(f, op_src)
    for j in range(difference.shape[1]):
        report.record(label, (j,), difference[:, j])
    return report
