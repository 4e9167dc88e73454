#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests des extensions abéliennes : équivalence verdict direct / verdict
cocycle, extraction par section et changement de section.
"""

import random

import numpy as np
import pytest

from src.algebra.exactlin import freeze, identity, matmul, matrix, vector, zeros
from src.algebra.exceptions import PreconditionError, ShapeError
from src.algebra.lie_core import LieAlgebra, ReynoldsLieDerPair
from src.algebra.rep import adjoint_rep, trivial_rld_rep
from src.algebra.search import affine
from src.cohomology.cochain import Cochain, cochain_space_dim
from src.cohomology.complexes import CochainComplex
from src.extension.abelian import (
    ExtensionDatum,
    build_extension,
    check_exactness,
    coboundary_datum,
    cocycle_data_basis,
    equivalence_of_extensions,
    extract_from_extension,
)
from src.utils.config import RANDOM_SEED
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _random_cochain(rng, dim_l, dim_v, degree):
    size = cochain_space_dim(dim_l, dim_v, degree)
    return Cochain.from_flat(dim_l, dim_v, degree, vector(rng.choice((-1, 0, 1)) for _ in range(size)))


def _random_datum(rng, dim_l, dim_v):
    return ExtensionDatum(
        _random_cochain(rng, dim_l, dim_v, 2),
        _random_cochain(rng, dim_l, dim_v, 1),
        _random_cochain(rng, dim_l, dim_v, 1),
    )


def _random_gamma(rng, dim_l, dim_v):
    return freeze(matrix([[rng.choice((-1, 0, 1, 2)) for _ in range(dim_l)] for _ in range(dim_v)]))


def _random_cocycle(rng, complex_, basis):
    """Combinaison de 2-cocycles, ou cobord 𝔇(γ) si la base est vide."""
    if not basis:
        return coboundary_datum(complex_, _random_gamma(rng, complex_.dim_l, complex_.dim_v))
    datum = ExtensionDatum.zero(complex_.dim_l, complex_.dim_v)
    for element in basis:
        coefficient = rng.choice((-1, 0, 1, 2))
        datum = ExtensionDatum(
            datum.Theta + element.Theta.scale(coefficient),
            datum.xi + element.xi.scale(coefficient),
            datum.chi + element.chi.scale(coefficient),
        )
    return datum


def _keys(report, dim_l):
    """(label, uplet) des violations portant sur des indices de L uniquement."""
    return {(v.label, v.indices) for v in report.violations if all(index < dim_l for index in v.indices)}


def test_zero_datum_gives_direct_product():
    pair = ReynoldsLieDerPair(affine(), identity(2), matrix([[1, 0], [0, 0]]))
    rld = adjoint_rep(pair)
    total = build_extension(pair, rld, ExtensionDatum.zero(2, 2))
    assert total.valid and total.cocycle
    assert total.pair.dim == 4
    assert (total.pair.R[:2, :2] == pair.R).all() and (total.pair.R[2:, 2:] == rld.R_V).all()


def test_extension_verdicts_agree(small_corpus):
    """Verdict direct ⇔ verdict cocycle, avec les mêmes uplets en défaut."""
    rng = random.Random(RANDOM_SEED)
    counts = {"cocycle": 0, "libre": 0, "valides": 0}
    for instance in small_corpus:
        rld = instance.rld
        complex_ = CochainComplex("rlieder", rld, literal=False)
        basis = cocycle_data_basis(complex_)
        for draw in range(5):
            if draw % 2 == 0:
                datum = _random_cocycle(rng, complex_, basis)
                counts["cocycle"] += 1
            else:
                datum = _random_datum(rng, complex_.dim_l, complex_.dim_v)
                counts["libre"] += 1
            total = build_extension(instance.pair, rld, datum, complex_)
            if draw % 2 == 0:
                assert total.valid, instance.name
            counts["valides"] += total.valid
            assert _keys(total.direct, complex_.dim_l) == _keys(total.cocycle, complex_.dim_l), instance.name
            assert total.direct.passed == (_keys(total.direct, complex_.dim_l) == set())
    logger.info(f"Données d'extension : {counts}")
    assert counts["cocycle"] + counts["libre"] >= 200


def test_non_cocycle_negative_control():
    pair = ReynoldsLieDerPair(affine(), identity(2), matrix([[1, 0], [0, 0]]))
    rld = adjoint_rep(pair)
    Theta = Cochain.from_flat(2, 2, 2, vector([0, 1]))
    datum = ExtensionDatum(Theta, Cochain.zero(2, 2, 1), Cochain.zero(2, 2, 1))
    total = build_extension(pair, rld, datum)
    assert not total.valid and not total.cocycle
    assert {v.label for v in total.direct.violations} == {v.label for v in total.cocycle.violations} == {"derivation"}


def test_extract_round_trip(small_corpus):
    rng = random.Random(RANDOM_SEED + 1)
    for instance in small_corpus[::3]:
        rld = instance.rld
        complex_ = CochainComplex("rlieder", rld, literal=False)
        datum = _random_cocycle(rng, complex_, cocycle_data_basis(complex_))
        total = build_extension(instance.pair, rld, datum, complex_)
        sequence = total.sequence()
        assert check_exactness(sequence)
        rep, extracted = extract_from_extension(sequence, complex_)
        assert extracted.equals(datum), instance.name
        assert all((a == b).all() for a, b in zip(rep.rep.action, rld.rep.action))
        assert (rep.R_V == rld.R_V).all() and (rep.d_V == rld.d_V).all()


def test_section_change_shifts_by_coboundary(small_corpus):
    rng = random.Random(RANDOM_SEED + 2)
    for instance in small_corpus[1::3]:
        rld = instance.rld
        complex_ = CochainComplex("rlieder", rld, literal=False)
        datum = _random_cocycle(rng, complex_, cocycle_data_basis(complex_))
        sequence = build_extension(instance.pair, rld, datum, complex_).sequence()
        gamma = _random_gamma(rng, complex_.dim_l, complex_.dim_v)
        shifted = sequence.with_section(sequence.section + matmul(sequence.inclusion, gamma))
        _, moved = extract_from_extension(shifted, complex_)
        assert (moved - datum).equals(coboundary_datum(complex_, gamma)), instance.name
        witness = equivalence_of_extensions(rld, datum, moved, complex_)
        assert witness is not None


def test_equivalence_detects_distinct_classes():
    pair = ReynoldsLieDerPair(LieAlgebra.abelian(2), zeros(2, 2), zeros(2, 2))
    rld = trivial_rld_rep(pair, zeros(1, 1), zeros(1, 1))
    heisenberg_like = ExtensionDatum(
        Cochain.from_flat(2, 1, 2, vector([1])), Cochain.zero(2, 1, 1), Cochain.zero(2, 1, 1)
    )
    assert build_extension(pair, rld, heisenberg_like).valid
    assert equivalence_of_extensions(rld, ExtensionDatum.zero(2, 1), heisenberg_like) is None
    same = equivalence_of_extensions(rld, heisenberg_like, heisenberg_like)
    assert same is not None and (same.isomorphism == identity(3)).all()


def test_preconditions():
    pair = ReynoldsLieDerPair(affine(), identity(2), zeros(2, 2))
    rld = adjoint_rep(pair)
    with pytest.raises(ShapeError):
        build_extension(pair, rld, ExtensionDatum.zero(2, 1))
    broken = trivial_rld_rep(pair, matrix([[0, 1], [0, 0]]), matrix([[1, 0], [0, 2]]))
    with pytest.raises(PreconditionError):
        build_extension(pair, broken, ExtensionDatum.zero(2, 2))

    sequence = build_extension(pair, rld, ExtensionDatum.zero(2, 2)).sequence()
    not_a_section = np.concatenate([2 * identity(2), zeros(2, 2)], axis=0)
    with pytest.raises(PreconditionError):
        extract_from_extension(sequence.with_section(not_a_section))
    with pytest.raises(ShapeError):
        ExtensionDatum(Cochain.zero(2, 1, 2), Cochain.zero(3, 1, 1), Cochain.zero(2, 1, 1))
