#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests des validateurs et constructions sur les algèbres de Lie de Reynolds.
"""

import pytest

from src.algebra.exactlin import identity, is_zero, matrix, vector, zeros
from src.algebra.exceptions import PreconditionError
from src.algebra.lie_core import (
    LieAlgebra,
    ReynoldsLieDerPair,
    bowtie,
    bracket,
    check_matched_pair,
    direct_sum_algebras,
    induced_bracket,
    is_derivation,
    is_homomorphism,
    is_reylieder,
    is_reynolds,
    jacobi_check,
    semidirect_product,
)
from src.algebra.rep import Representation, ReynoldsRep, adjoint_rep
from src.algebra.search import affine, affine_example_pair, audit_pair, heisenberg, sl2


def residuals(report):
    return {(v.label, v.indices): [str(x) for x in v.residual] for v in report.violations}


def test_bracket_examples():
    L = affine()
    e0, e1 = vector([1, 0]), vector([0, 1])
    assert list(bracket(L, e0, e1)) == [1, 0]
    assert list(bracket(L, e1, e0)) == [-1, 0]
    x = vector([3, -2])
    assert is_zero(bracket(L, x, x))


def test_jacobi():
    assert jacobi_check(LieAlgebra.abelian(3))
    assert jacobi_check(affine())
    assert jacobi_check(sl2())
    broken = LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (1, 0, 0)})
    report = jacobi_check(broken)
    assert residuals(report) == {("jacobi", (0, 1, 2)): ["0", "0", "-1"]}


def test_from_brackets_rejects_bad_indices():
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(2, {(1, 0): (1, 0)})
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(2, [(0, 1, (1, 0)), (0, 1, (0, 1))])


def test_derivation_examples():
    L = affine()
    assert is_derivation(L, zeros(2, 2))
    assert is_derivation(L, matrix([[3, "-1/2"], [0, 0]]))
    report = is_derivation(L, identity(2))
    assert residuals(report) == {("derivation", (0, 1)): ["-1", "0"]}


def test_reynolds_examples():
    for L in (affine(), heisenberg(), sl2()):
        assert is_reynolds(L, zeros(L.dim, L.dim))
        assert is_reynolds(L, identity(L.dim))
    report = is_reynolds(affine(), matrix([[1, 0], [0, 0]]))
    assert residuals(report) == {("reynolds", (0, 1)): ["-1", "0"]}


def test_reylieder_abelian():
    pair = ReynoldsLieDerPair(LieAlgebra.abelian(2), matrix([[0, 1], [0, 0]]), identity(2))
    assert is_reylieder(pair)
    assert is_reylieder(ReynoldsLieDerPair(sl2(), zeros(3, 3), zeros(3, 3)))


@pytest.mark.parametrize(
    "params, expected",
    [
        ((1, 0, 1), {("reynolds", (0, 1)): ["-1", "0"], ("derivation", (0, 1)): ["-1", "0"]}),
        ((0, 1, 1), {("reynolds", (0, 1)): ["-1", "0"], ("commutation", (1,)): ["1", "0"]}),
        ((0, 0, 2), {("reynolds", (0, 1)): ["-4", "0"]}),
    ],
)
def test_affine_example_audit(params, expected):
    report = is_reylieder(affine_example_pair(*params), literal=False)
    assert residuals(report) == expected


def test_affine_example_literal_reading():
    for c, value in ((1, 2), (2, 8)):
        report = audit_pair(affine_example_pair(0, 0, c))["reynolds_literal"]
        assert residuals(report) == {
            ("reynolds_literal", (1, 0)): [str(value), "0"],
            ("reynolds_literal", (1, 1)): [str(-value), "0"],
        }


def test_induced_bracket_extremes():
    L = sl2()
    assert induced_bracket(L, zeros(3, 3)).is_abelian
    assert induced_bracket(L, identity(3)).same_structure(L)
    with pytest.raises(PreconditionError):
        induced_bracket(affine(), matrix([[1, 0], [0, 0]]))


def test_induced_structure_on_corpus(corpus):
    """L_R est de Lie, R : L_R -> L est un morphisme et (L_R, R) est de Reynolds."""
    seen = set()
    for instance in corpus:
        pair = instance.pair
        if id(pair) in seen:
            continue
        seen.add(id(pair))
        L_R = induced_bracket(pair.algebra, pair.R)
        assert jacobi_check(L_R)
        assert is_reynolds(L_R, pair.R, literal=False)


def test_semidirect_product():
    L = affine()
    trivial = ReynoldsRep(Representation.trivial(L, 2), identity(2), zeros(2, 2))
    product = semidirect_product(L, trivial)
    assert product.algebra.same_structure(direct_sum_algebras(L, LieAlgebra.abelian(2)))

    pair = ReynoldsLieDerPair(L, identity(2), zeros(2, 2))
    adjoint = adjoint_rep(pair).base
    assert is_reynolds(semidirect_product(L, adjoint).algebra, semidirect_product(L, adjoint).R)


def test_semidirect_product_negative_control():
    L = affine()
    broken = ReynoldsRep(adjoint_rep(ReynoldsLieDerPair(L, zeros(2, 2), zeros(2, 2))).rep, zeros(2, 2), identity(2))
    with pytest.raises(PreconditionError):
        semidirect_product(L, broken)
    unchecked = semidirect_product(L, broken, check=False)
    assert not is_reynolds(unchecked.algebra, unchecked.R, literal=False)


def _line_rep(L, values):
    return Representation(L, 1, tuple(matrix([[value]]) for value in values))


def test_matched_pair_examples():
    L, G = affine(), LieAlgebra.abelian(1)
    zero_L, zero_G = _line_rep(L, (0, 0)), Representation.trivial(G, 2)
    assert check_matched_pair(L, G, zero_L, zero_G)
    # G abélienne, ρ_G = 0 : cas semi-direct
    assert check_matched_pair(L, G, _line_rep(L, (0, 1)), zero_G)
    # ρ_L(e0) = 1 n'est pas une représentation de [e0, e1] = e0
    report = check_matched_pair(L, G, _line_rep(L, (1, 1)), zero_G)
    assert "representation" in report.labels()


def test_bowtie_reduces_to_semidirect():
    L, G = affine(), LieAlgebra.abelian(1)
    rho_L, rho_G = _line_rep(L, (0, 1)), Representation.trivial(G, 2)
    R_L, R_G = identity(2), matrix([[3]])
    result = bowtie(L, G, rho_L, rho_G, R_L, R_G)
    expected = semidirect_product(L, ReynoldsRep(rho_L, R_L, R_G))
    assert result.algebra.same_structure(expected.algebra)
    assert is_reynolds(result.algebra, result.R)


def test_bowtie_with_derivations():
    L, G = affine(), LieAlgebra.abelian(1)
    rho_L, rho_G = _line_rep(L, (0, 1)), Representation.trivial(G, 2)
    pair = bowtie(L, G, rho_L, rho_G, identity(2), matrix([[3]]), matrix([[1, 0], [0, 0]]), matrix([[5]]))
    assert isinstance(pair, ReynoldsLieDerPair)
    assert is_reylieder(pair, literal=False)


def test_bowtie_abelian():
    L, G = LieAlgebra.abelian(2), LieAlgebra.abelian(1)
    result = bowtie(L, G, Representation.trivial(L, 1), Representation.trivial(G, 2), zeros(2, 2), zeros(1, 1))
    assert result.algebra.is_abelian


def test_homomorphism_examples():
    pair = ReynoldsLieDerPair(affine(), zeros(2, 2), zeros(2, 2))
    assert is_homomorphism(pair, pair, identity(2))
    assert is_homomorphism(pair, pair, zeros(2, 2))
    report = is_homomorphism(pair, pair, matrix([[0, 1], [1, 0]]))
    assert residuals(report) == {("crochet", (0, 1)): ["1", "1"]}
