#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests des complexes : carré nul des différentielles, dimensions connues,
caractérisation de H^1 et appartenance aux cobords.
"""

from math import comb

import numpy as np
import pytest

from src.algebra.exactlin import identity, kernel_basis, matrix, unit_vector, vector, zeros
from src.algebra.exceptions import PreconditionError
from src.algebra.lie_core import LieAlgebra, ReynoldsLieDerPair
from src.algebra.rep import Representation, ReynoldsRep, adjoint_rep, trivial_rld_rep
from src.algebra.search import affine, sl2
from src.cohomology.cochain import Cochain, PairCochain, delta_map_pair
from src.cohomology.complexes import NOTE_DEGREE_ZERO, CochainComplex, ComplexKind, cohomology, is_coboundary
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _structure(kind, rld):
    if kind == ComplexKind.CE:
        return rld.rep
    if kind in (ComplexKind.REYNOLDS, ComplexKind.R):
        return rld.base
    return rld


def test_differentials_square_to_zero(corpus):
    failures = []
    for instance in corpus:
        for kind in ComplexKind:
            complex_ = CochainComplex(kind, _structure(kind, instance.rld), literal=False)
            for degree in range(complex_.top_degree):
                if not complex_.square_is_zero(degree):
                    failures.append((instance.name, kind.value, degree))
    assert failures == []


@pytest.mark.parametrize("dim_v", [1, 2])
@pytest.mark.parametrize("dim_l", [1, 2, 3, 4])
def test_abelian_trivial_binomial_dimensions(dim_l, dim_v):
    pair = ReynoldsLieDerPair(LieAlgebra.abelian(dim_l), zeros(dim_l, dim_l), zeros(dim_l, dim_l))
    rld = trivial_rld_rep(pair, zeros(dim_v, dim_v), zeros(dim_v, dim_v))
    for kind in (ComplexKind.CE, ComplexKind.REYNOLDS):
        complex_ = CochainComplex(kind, _structure(kind, rld))
        dims = [complex_.cohomology(n).dim_H for n in range(dim_l + 1)]
        assert dims == [comb(dim_l, n) * dim_v for n in range(dim_l + 1)]


def test_ce_degrees_report_for_abelian_plane():
    L = LieAlgebra.abelian(2)
    rep = Representation.trivial(L, 1)
    assert [cohomology("ce", rep, n).dim_H for n in range(3)] == [1, 2, 1]


def test_report_serialization_with_basis():
    rep = Representation.trivial(LieAlgebra.abelian(2), 1)
    report = cohomology("ce", rep, 1)
    assert "cocycle_basis" not in report.to_dict()
    out = report.to_dict(basis=True)
    assert (out["dim_cocycles"], out["dim_coboundaries"], out["dim_H"]) == (2, 0, 2)
    assert len(out["cocycle_basis"]) == 2
    assert all(cocycle["degree"] == 1 and set(cocycle["values"]) == {"[0]", "[1]"} for cocycle in out["cocycle_basis"])


def test_sl2_classical_dimensions():
    L = sl2()
    pair = ReynoldsLieDerPair(L, zeros(3, 3), zeros(3, 3))
    adjoint = adjoint_rep(pair).rep
    assert [cohomology("ce", adjoint, n).dim_H for n in range(4)] == [0, 0, 0, 0]
    trivial = Representation.trivial(L, 1)
    assert [cohomology("ce", trivial, n).dim_H for n in range(4)] == [1, 0, 0, 1]


def test_cohomology_report_consistency(small_corpus):
    for instance in small_corpus[::4]:
        complex_ = CochainComplex("r", instance.rld.base)
        for degree in range(complex_.top_degree + 1):
            report = complex_.cohomology(degree)
            assert report.dim_H == report.dim_cocycles - report.dim_coboundaries
            assert len(report.cocycle_basis) == report.dim_cocycles
            for cocycle in report.cocycle_basis:
                assert complex_.is_cocycle(cocycle)


def test_first_rlieder_cohomology(small_corpus):
    """H^1 = {f ∈ Z^1_R : Δf = 0}, calculé indépendamment par un noyau empilé."""
    for instance in small_corpus:
        rld = instance.rld
        complex_r = CochainComplex("r", rld.base)
        complex_rl = CochainComplex("rlieder", rld)
        report = complex_rl.cohomology(1)
        assert report.note == NOTE_DEGREE_ZERO

        size = complex_r.space_dim(1)
        d_r_matrix = complex_r.differential(1)
        columns = [
            delta_map_pair(rld, PairCochain.from_flat(rld.algebra.dim, rld.dim, 1, unit_vector(size, k))).flat()
            for k in range(size)
        ]
        delta_matrix = np.stack(columns, axis=1)
        stacked = np.concatenate([d_r_matrix, delta_matrix], axis=0)
        expected = kernel_basis(stacked)
        assert report.dim_H == len(expected), instance.name
        for cocycle in report.cocycle_basis:
            assert delta_map_pair(rld, cocycle.main).is_zero()
            assert complex_r.is_cocycle(cocycle.main)
        for vec in expected:
            candidate = complex_rl.from_flat(1, vec)
            assert complex_rl.is_cocycle(candidate)


def test_is_coboundary():
    pair = ReynoldsLieDerPair(affine(), identity(2), zeros(2, 2))
    rld = adjoint_rep(pair)
    complex_ = CochainComplex("ce", rld.rep)
    u = Cochain.constant(2, vector([1, 2]))
    boundary = complex_.apply(u)
    witness = complex_.is_coboundary(boundary)
    assert witness is not None and witness.degree == 0
    assert complex_.apply(witness.cochain).equals(boundary)

    abelian = Representation.trivial(LieAlgebra.abelian(2), 1)
    f = Cochain.from_operator(matrix([[1, 0]]))
    assert is_coboundary("ce", abelian, f) is None
    assert is_coboundary("ce", abelian, Cochain.constant(2, vector([1]))) is None
    zero_witness = is_coboundary("ce", abelian, Cochain.constant(2, vector([0])))
    assert zero_witness is not None and zero_witness.degree == -1


def test_complex_refuses_invalid_structure():
    L = affine()
    ad = adjoint_rep(ReynoldsLieDerPair(L, zeros(2, 2), zeros(2, 2))).rep
    broken = ReynoldsRep(ad, zeros(2, 2), identity(2))
    with pytest.raises(PreconditionError):
        CochainComplex("r", broken)
    with pytest.raises(ValueError):
        CochainComplex("inconnu", broken)
