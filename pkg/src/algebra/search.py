#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Recherche exhaustive d'instances et corpus de test.

La recherche d'opérateurs de Reynolds énumère les matrices entières sur une
grille et filtre par l'identité exacte, évaluée par lots en entiers numpy.
Les espaces de dérivations (et de d_V compatibles) sont des noyaux exacts.
Le corpus sert d'oracle aux tests ; ce n'est pas une API stable.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, product

import numpy as np
from tqdm import tqdm

from src.algebra.exactlin import (
    ONE,
    as_exact,
    freeze,
    identity,
    kernel_basis,
    matmul,
    matrix,
    solve,
    unit_vector,
    zeros,
)
from src.algebra.lie_core import (
    LieAlgebra,
    ReynoldsLieDerPair,
    bracket,
    commutation_check,
    direct_sum_pairs,
    is_derivation,
    is_reylieder,
    is_reynolds,
    jacobi_check,
)
from src.algebra.rep import (
    adjoint_rep,
    direct_sum_rld_rep,
    rho,
    trivial_rld_rep,
)
from src.utils.config import (
    DENSE_SEARCH_GRID,
    RANDOM_SEED,
    SEARCH_BATCH_SIZE,
    SEARCH_GRID,
    SHOW_PROGRESS,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


# Familles d'algèbres de référence

def abelian(dim):
    return LieAlgebra.abelian(dim)


def affine():
    """Algèbre non abélienne de dimension 2 : [e0, e1] = e0."""
    return LieAlgebra.from_brackets(2, {(0, 1): (1, 0)}, name="affine")


def heisenberg():
    """[e0, e1] = e2."""
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}, name="heisenberg")


def sl2():
    """Base (h, e, f) : [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return LieAlgebra.from_brackets(
        3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}, name="sl2"
    )


FAMILIES = {
    "abelian1": lambda: abelian(1),
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "affine": affine,
    "heisenberg": heisenberg,
    "sl2": sl2,
}


def affine_example_pair(a, b, c):
    """
    Exemple à paramètres sur [e0, e1] = e0 : d = [[a, b], [0, a]], R = [[c, -c], [0, 0]].

    Aucune vérification n'est faite ; voir audit_pair.
    """
    L = affine()
    d = freeze(matrix([[a, b], [0, a]]))
    R = freeze(matrix([[c, -c], [0, 0]]))
    return ReynoldsLieDerPair(L, R, d, name=f"affine({a},{b},{c})")


def audit_pair(pair):
    """
    Rapports individuels de chaque identité d'une paire, y compris la
    lecture littérale de l'identité de Reynolds.

    Returns:
        dict: nom -> ValidationReport
    """
    L = pair.algebra
    return {
        "jacobi": jacobi_check(L),
        "reynolds": is_reynolds(L, pair.R, literal=False),
        "reynolds_literal": is_reynolds(L, pair.R, literal=True),
        "derivation": is_derivation(L, pair.d),
        "commutation": commutation_check(pair.R, pair.d),
    }


AFFINE_EXAMPLE_POINTS = ((1, 0, 1), (0, 1, 1), (0, 0, 2))


def affine_example_audit(points=AFFINE_EXAMPLE_POINTS):
    """Rapport complet de l'exemple à paramètres, sérialisable en JSON."""
    entries = []
    for a, b, c in points:
        pair = affine_example_pair(a, b, c)
        reports = audit_pair(pair)
        entries.append({
            "a": a,
            "b": b,
            "c": c,
            "pair": pair.name,
            "passed": is_reylieder(pair, literal=False).passed,
            "reports": {name: report.to_dict() for name, report in reports.items()},
        })
    return {"example": "[e0, e1] = e0 ; d = [[a, b], [0, a]] ; R = [[c, -c], [0, 0]]", "points": entries}


# Recherche exhaustive

def _integer_structure(L):
    """Constantes de structure en int64 ; C[i, j, k] = coordonnée k de [e_i, e_j]."""
    table = np.zeros((L.dim, L.dim, L.dim), dtype=np.int64)
    for index, value in np.ndenumerate(L.table):
        if value.denominator != 1:
            raise ValueError(f"{L.name} : constantes non entières, recherche entière impossible")
        table[index] = int(value.numerator)
    return table


def _reynolds_mask(structure, batch):
    """Masque des matrices du lot (forme (B, n, n)) vérifiant l'identité de Reynolds."""
    n = structure.shape[0]
    mask = np.ones(batch.shape[0], dtype=bool)
    for i, j in combinations(range(n), 2):
        Rx, Ry = batch[:, :, i], batch[:, :, j]
        lhs = np.einsum("ba,bc,ack->bk", Rx, Ry, structure)
        inner = Rx @ structure[:, j, :] + Ry @ structure[i, :, :] - lhs
        rhs = np.einsum("bkl,bl->bk", batch, inner)
        mask &= (lhs == rhs).all(axis=1)
    return mask


def _commuting_mask(batch, d):
    return (batch @ d == d @ batch).all(axis=(1, 2))


def reynolds_search(L, grid=None, commuting_with=None, limit=None):
    """
    Énumère les opérateurs de Reynolds à coefficients dans une grille entière.

    Args:
        L (LieAlgebra): algèbre à constantes entières
        grid (tuple): valeurs permises (défaut selon la dimension)
        commuting_with (np.ndarray): ne garder que les R qui commutent avec d
        limit (int): arrêt après `limit` solutions

    Returns:
        list: matrices exactes, dans l'ordre lexicographique de la grille
    """
    if grid is None:
        grid = SEARCH_GRID if L.dim <= 2 else DENSE_SEARCH_GRID
    structure = _integer_structure(L)
    values = np.asarray(sorted(set(grid)), dtype=np.int64)
    n = L.dim
    d = None if commuting_with is None else _integer_matrix(commuting_with)

    found = []
    candidates = product(range(len(values)), repeat=n * n)
    with tqdm(total=len(values) ** (n * n), desc=f"Reynolds {L.name}", disable=not SHOW_PROGRESS) as bar:
        while True:
            chunk = list(islice(candidates, SEARCH_BATCH_SIZE))
            if not chunk:
                break
            batch = values[np.asarray(chunk)].reshape(-1, n, n)
            mask = _reynolds_mask(structure, batch)
            if d is not None:
                mask &= _commuting_mask(batch, d)
            found.extend(freeze(as_exact(candidate)) for candidate in batch[mask])
            bar.update(len(chunk))
            if limit is not None and len(found) >= limit:
                break
    logger.debug(f"{len(found)} opérateur(s) de Reynolds trouvé(s) sur {L.name}")
    return found if limit is None else found[:limit]


def _integer_matrix(m):
    out = np.zeros(m.shape, dtype=np.int64)
    for index, value in np.ndenumerate(m):
        if value.denominator != 1:
            raise ValueError("Matrice non entière")
        out[index] = int(value.numerator)
    return out


# Espaces de solutions linéaires

def solution_space(shape, residual):
    """
    Solutions X (forme `shape`) de residual(X) = 0, residual étant affine.

    Returns:
        tuple: (solution particulière ou None, base des solutions homogènes)
    """
    size = shape[0] * shape[1]
    offset = residual(zeros(*shape))
    columns = []
    for k in range(size):
        unit = zeros(*shape)
        unit[k // shape[1], k % shape[1]] = ONE
        columns.append(residual(unit) - offset)
    system = zeros(len(offset), size)
    for k, column in enumerate(columns):
        system[:, k] = column
    homogeneous = [freeze(vec.reshape(shape).copy()) for vec in kernel_basis(system)]
    particular = solve(system, -offset)
    if particular is not None:
        particular = freeze(particular.reshape(shape).copy())
    return particular, homogeneous


def stack_residuals(vectors):
    vectors = [np.asarray(vec, dtype=object).reshape(-1) for vec in vectors]
    return np.concatenate(vectors) if vectors else np.zeros(0, dtype=object)


def _derivation_residual(L, d):
    return stack_residuals(
        matmul(d, L.table[i, j])
        - bracket(L, d[:, i], unit_vector(L.dim, j))
        - bracket(L, unit_vector(L.dim, i), d[:, j])
        for i, j in combinations(range(L.dim), 2)
    )


def derivation_basis(L):
    """Base de l'espace Der(L)."""
    _, basis = solution_space((L.dim, L.dim), lambda d: _derivation_residual(L, d))
    return basis


def commuting_derivation_basis(L, R):
    """Base des dérivations d telles que R∘d = d∘R."""

    def residual(d):
        return stack_residuals([_derivation_residual(L, d), matmul(R, d) - matmul(d, R)])

    _, basis = solution_space((L.dim, L.dim), residual)
    return basis


def compatible_dv(rrep, d):
    """
    Solutions d_V de d_V ρ(x) - ρ(x) d_V = ρ(dx) et R_V∘d_V = d_V∘R_V.

    Returns:
        tuple: (solution particulière ou None, base des solutions homogènes)
    """
    rep = rrep.base

    def residual(d_V):
        blocks = [
            matmul(d_V, rep.action[i]) - matmul(rep.action[i], d_V) - rho(rep, d[:, i])
            for i in range(rrep.algebra.dim)
        ]
        blocks.append(matmul(rrep.R_V, d_V) - matmul(d_V, rrep.R_V))
        return stack_residuals(blocks)

    return solution_space((rrep.dim, rrep.dim), residual)


# Corpus

@dataclass(frozen=True, eq=False)
class CorpusInstance:
    name: str
    pair: ReynoldsLieDerPair
    rld: object


def _combination(rng, basis, shape):
    out = zeros(*shape)
    for element in basis:
        out = out + rng.choice((-1, 0, 1)) * element
    return freeze(out)


def _pairs_for(L, rng, per_algebra):
    """Paires (L, R, d) : R tirés parmi les solutions de la grille, d dans le commutant."""
    solutions = reynolds_search(L)
    chosen = rng.sample(range(len(solutions)), min(per_algebra, len(solutions)))
    pairs = []
    for index in sorted(chosen):
        R = solutions[index]
        basis = commuting_derivation_basis(L, R)
        d = _combination(rng, basis, (L.dim, L.dim))
        pairs.append(ReynoldsLieDerPair(L, R, d, name=f"{L.name}#{index}"))
    return pairs


def _trivial_reps(pair, rng):
    """Représentations triviales de dimension 1 et 2 (R_V, d_V diagonales)."""
    out = []
    for dim in (1, 2):
        R_V = freeze(matrix([[rng.choice((-1, 0, 1, 2)) if i == j else 0 for j in range(dim)] for i in range(dim)]))
        d_V = freeze(matrix([[rng.choice((-1, 0, 1)) if i == j else 0 for j in range(dim)] for i in range(dim)]))
        out.append(trivial_rld_rep(pair, R_V, d_V))
    return out


@lru_cache(maxsize=None)
def build_corpus(seed=RANDOM_SEED, per_algebra=3):
    """
    Corpus déterministe d'instances valides (dim L <= 4, dim V <= 3).

    Chaque paire reçoit des représentations triviales, l'adjointe si
    dim L <= 3 et la somme adjointe ⊕ triviale si dim L <= 2. Des sommes
    directes de paires fournissent les instances de dimension 4.

    Returns:
        tuple: CorpusInstance
    """
    rng = random.Random(seed)
    pairs = []
    for family in ("abelian2", "affine", "heisenberg", "sl2", "abelian3"):
        pairs.extend(_pairs_for(FAMILIES[family](), rng, per_algebra))
    pairs.append(ReynoldsLieDerPair(abelian(1), freeze(identity(1)), freeze(identity(1)), name="abelienne_1#id"))
    pairs.append(direct_sum_pairs(pairs[per_algebra], pairs[per_algebra + 1], name="affine⊕affine"))
    pairs.append(direct_sum_pairs(pairs[per_algebra], pairs[0], name="affine⊕abelienne_2"))

    instances = []
    for pair in tqdm(pairs, desc="Corpus", disable=not SHOW_PROGRESS):
        report = is_reylieder(pair, literal=False)
        if not report:
            logger.warning(f"Paire {pair.name} écartée : {report.summary()}")
            continue
        trivial = _trivial_reps(pair, rng)
        candidates = [("triv1", trivial[0])]
        if pair.dim <= 3:
            candidates.append(("triv2", trivial[1]))
            candidates.append(("adjointe", adjoint_rep(pair)))
        if pair.dim <= 2:
            candidates.append(("adjointe+triv1", direct_sum_rld_rep([adjoint_rep(pair), trivial[0]])))
        for label, rld in candidates:
            instances.append(CorpusInstance(f"{pair.name}/{label}", pair, rld))
    logger.info(f"Corpus construit : {len(instances)} instances")
    return tuple(instances)
