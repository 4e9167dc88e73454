#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests des représentations et de la représentation induite.
"""

from collections import Counter

import pytest

from src.algebra.exactlin import identity, matrix, zeros
from src.algebra.exceptions import ShapeError
from src.algebra.lie_core import LieAlgebra, ReynoldsLieDerPair, induced_bracket
from src.algebra.rep import (
    VARIANTS,
    Representation,
    ReynoldsRep,
    adjoint_rep,
    check_rep,
    check_reynolds_rep,
    check_rld_rep,
    direct_sum_rep,
    direct_sum_rld_rep,
    induced_rep,
    trivial_rld_rep,
)
from src.algebra.search import affine, heisenberg
from src.utils.logger import get_logger

logger = get_logger(__name__)


def test_check_rep_examples():
    L = heisenberg()
    assert check_rep(Representation.trivial(L, 2))
    adjoint = adjoint_rep(ReynoldsLieDerPair(L, zeros(3, 3), zeros(3, 3))).rep
    assert check_rep(adjoint)
    action = list(adjoint.action)
    perturbed = action[0].copy()
    perturbed[0, 0] = 1
    action[0] = perturbed
    assert not check_rep(Representation(L, 3, tuple(action)))


def test_representation_shape_checks():
    with pytest.raises(ShapeError):
        Representation(affine(), 2, (zeros(2, 2),))
    with pytest.raises(ShapeError):
        Representation(affine(), 2, (zeros(2, 2), zeros(3, 3)))


def test_reynolds_rep_examples(corpus):
    L = affine()
    assert check_reynolds_rep(ReynoldsRep(Representation.trivial(L, 2), identity(2), matrix([[1, 2], [3, 4]])))
    for instance in corpus:
        pair = instance.pair
        if pair.dim <= 3:
            assert check_reynolds_rep(adjoint_rep(pair).base)


def test_direct_sums():
    L = affine()
    pair = ReynoldsLieDerPair(L, identity(2), zeros(2, 2))
    single = adjoint_rep(pair).base
    same = direct_sum_rep([single])
    assert all((a == b).all() for a, b in zip(same.base.action, single.base.action))

    trivial = ReynoldsRep(Representation.trivial(L, 1), identity(2), matrix([[2]]))
    doubled = direct_sum_rep([trivial, trivial])
    assert doubled.dim == 2 and doubled.base.is_trivial

    mixed = direct_sum_rep([single, trivial])
    assert mixed.dim == 3 and check_reynolds_rep(mixed)

    other = ReynoldsRep(Representation.trivial(L, 1), zeros(2, 2), matrix([[2]]))
    with pytest.raises(ShapeError):
        direct_sum_rep([single, other])

    lieder = ReynoldsLieDerPair(L, identity(2), matrix([[1, 0], [0, 0]]))
    summed = direct_sum_rld_rep([adjoint_rep(lieder), trivial_rld_rep(lieder, matrix([[2]]), matrix([[5]]))])
    assert summed.dim == 3 and check_rld_rep(summed, literal=False)
    assert summed.d_V[2, 2] == 5
    with pytest.raises(ShapeError):
        direct_sum_rld_rep([adjoint_rep(lieder), adjoint_rep(pair)])


def test_rld_rep_examples(corpus):
    pair = ReynoldsLieDerPair(affine(), identity(2), matrix([[1, 0], [0, 0]]))
    assert check_rld_rep(trivial_rld_rep(pair, matrix([[2, 0], [0, 1]]), matrix([[1, 0], [0, 3]])))
    for instance in corpus:
        assert check_rld_rep(instance.rld, literal=False)
    report = check_rld_rep(trivial_rld_rep(pair, matrix([[0, 1], [0, 0]]), matrix([[1, 0], [0, 2]])))
    assert report.labels() == ["commutation_V"]


def test_adjoint_examples():
    abelian = ReynoldsLieDerPair(LieAlgebra.abelian(2), matrix([[0, 1], [0, 0]]), identity(2))
    assert adjoint_rep(abelian).rep.is_trivial
    assert adjoint_rep(ReynoldsLieDerPair(heisenberg(), identity(3), zeros(3, 3)))


def test_induced_rep_extremes():
    L = affine()
    trivial = ReynoldsRep(Representation.trivial(L, 2), identity(2), identity(2))
    assert induced_rep(trivial).rep.is_trivial

    adjoint = adjoint_rep(ReynoldsLieDerPair(L, identity(2), zeros(2, 2))).base
    induced = induced_rep(adjoint)
    assert all((a == b).all() for a, b in zip(induced.rep.action, adjoint.base.action))
    assert all(induced.audit[variant] for variant in VARIANTS)


def test_induced_rep_on_corpus(corpus):
    """ρ_R est une représentation de L_R sur tout le corpus ; la variante retenue est comptée."""
    winners = Counter()
    for instance in corpus:
        rrep = instance.rld.base
        induced = induced_rep(rrep)
        L_R = induced_bracket(rrep.algebra, rrep.R)
        assert induced.rep.algebra.same_structure(L_R)
        assert check_rep(induced.rep)
        winners[induced.variant] += 1
    logger.info(f"Variantes de ρ_R retenues : {dict(winners)}")
    assert sum(winners.values()) == len(corpus)


def test_rld_rep_literal_mode_differs():
    d = matrix([[1, 0], [0, 0]])
    rld = adjoint_rep(ReynoldsLieDerPair(affine(), identity(2), d))
    assert check_rld_rep(rld, literal=False)
    literal = check_rld_rep(rld, literal=True)
    assert literal.name == "rld_rep_literal"
    assert literal.labels() == ["lieder_compatibilite"]
