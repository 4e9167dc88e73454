#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Audit des identités entre opérateurs de cobord sur une représentation
LieDer de Reynolds : carrés nuls des quatre différentielles et relations
de morphismes de complexes entre δ_CE, δ_R, φ, Δ et D_R.
"""

from src.algebra.exactlin import is_zero, matmul, unit_vector, zeros
from src.algebra.rep import induced_rep
from src.cohomology.cochain import (
    Cochain,
    PairCochain,
    cochain_space_dim,
    d_r,
    delta_ce,
    delta_map,
    delta_map_pair,
    delta_r,
    pair_space_dim,
    phi,
)
from src.cohomology.complexes import CochainComplex, ComplexKind
from src.utils.logger import get_logger

logger = get_logger(__name__)

CHAIN_MAP_IDENTITIES = (
    "δ_R∘φ = φ∘δ_CE",
    "φ∘Δ = Δ∘φ",
    "δ_CE∘Δ = Δ∘δ_CE",
    "δ_R∘Δ = Δ∘δ_R",
    "D_R∘Δ = Δ∘D_R",
)


def operator_matrix(function, size, builder):
    """Matrice d'un opérateur linéaire, colonne par élément de base."""
    columns = [function(builder(unit_vector(size, k))).flat() for k in range(size)]
    rows = len(columns[0]) if columns else 0
    out = zeros(rows, size)
    for k, column in enumerate(columns):
        out[:, k] = column
    return out


def cochain_operator(function, dim_l, dim_v, degree):
    size = cochain_space_dim(dim_l, dim_v, degree)
    return operator_matrix(function, size, lambda flat: Cochain.from_flat(dim_l, dim_v, degree, flat))


def pair_operator(function, dim_l, dim_v, degree):
    size = pair_space_dim(dim_l, dim_v, degree)
    return operator_matrix(function, size, lambda flat: PairCochain.from_flat(dim_l, dim_v, degree, flat))


def chain_map_audit(rld):
    """
    Vérifie les cinq relations de commutation en chaque degré 0 <= n <= dim L.

    En degré dim L les espaces d'arrivée de δ_CE et δ_R sont nuls ; D_R y
    garde sa seconde composante.

    Returns:
        list: dictionnaires {"degree", "identity", "passed"}
    """
    rrep = rld.base
    induced = induced_rep(rrep)
    dim_l, dim_v = rld.algebra.dim, rld.dim
    records = []
    for n in range(dim_l + 1):
        ce = cochain_operator(lambda f: delta_ce(rrep.base, f), dim_l, dim_v, n)
        reynolds = cochain_operator(lambda f: delta_r(rrep, f, induced=induced), dim_l, dim_v, n)
        phi_n = cochain_operator(lambda f: phi(rrep, f, literal=False), dim_l, dim_v, n)
        phi_next = cochain_operator(lambda f: phi(rrep, f, literal=False), dim_l, dim_v, n + 1)
        delta_n = cochain_operator(lambda f: delta_map(rld, f), dim_l, dim_v, n)
        delta_next = cochain_operator(lambda f: delta_map(rld, f), dim_l, dim_v, n + 1)
        differences = (
            matmul(reynolds, phi_n) - matmul(phi_next, ce),
            matmul(phi_n, delta_n) - matmul(delta_n, phi_n),
            matmul(ce, delta_n) - matmul(delta_next, ce),
            matmul(reynolds, delta_n) - matmul(delta_next, reynolds),
        )
        for label, difference in zip(CHAIN_MAP_IDENTITIES, differences):
            records.append({"degree": n, "identity": label, "passed": is_zero(difference)})

    for n in range(dim_l + 1):
        composite = pair_operator(lambda pc: d_r(rrep, pc, induced=induced, literal=False), dim_l, dim_v, n)
        delta_n = pair_operator(lambda pc: delta_map_pair(rld, pc), dim_l, dim_v, n)
        delta_next = pair_operator(lambda pc: delta_map_pair(rld, pc), dim_l, dim_v, n + 1)
        difference = matmul(composite, delta_n) - matmul(delta_next, composite)
        records.append({"degree": n, "identity": CHAIN_MAP_IDENTITIES[4], "passed": is_zero(difference)})
    return records


def square_audit(rld):
    """D∘D = 0 pour les quatre complexes, degré par degré."""
    structures = {
        ComplexKind.CE: rld.rep,
        ComplexKind.REYNOLDS: rld.base,
        ComplexKind.R: rld.base,
        ComplexKind.RLIEDER: rld,
    }
    records = []
    for kind, structure in structures.items():
        complex_ = CochainComplex(kind, structure, literal=False)
        for degree in range(complex_.top_degree):
            records.append({"complex": kind.value, "degree": degree, "passed": complex_.square_is_zero(degree)})
    logger.debug(f"Carrés des différentielles vérifiés : {len(records)} degrés")
    return records
