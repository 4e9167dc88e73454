#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests des cochaînes et des identités entre opérateurs de cobord.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.exactlin import identity, is_zero, matrix, unit_vector, vector, zeros
from src.algebra.exceptions import ShapeError
from src.algebra.lie_core import ReynoldsLieDerPair
from src.algebra.rep import adjoint_rep, induced_rep, trivial_rld_rep
from src.algebra.search import affine
from src.cohomology.audit import CHAIN_MAP_IDENTITIES, chain_map_audit
from src.cohomology.cochain import (
    Cochain,
    PairCochain,
    cochain_space_dim,
    d_r,
    delta_ce,
    delta_map,
    delta_map_pair,
    phi,
    sort_with_sign,
)

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def cochains(draw):
    dim_l = draw(st.integers(min_value=2, max_value=4))
    degree = draw(st.integers(min_value=1, max_value=dim_l))
    size = cochain_space_dim(dim_l, 2, degree)
    flat = vector(draw(st.lists(small_fractions, min_size=size, max_size=size)))
    return Cochain.from_flat(dim_l, 2, degree, flat)


@settings(max_examples=50, deadline=None)
@given(cochains(), st.data())
def test_alternation(f, data):
    indices = data.draw(st.permutations(range(f.dim_l)))[: f.degree]
    ordered, sign = sort_with_sign(tuple(indices))
    expected = f.value_at(ordered)
    assert list(f.value_at(indices)) == list(expected if sign > 0 else -expected)
    if f.degree >= 2:
        repeated = (indices[0], indices[0]) + tuple(indices[2:])
        assert is_zero(f.value_at(repeated))


@settings(max_examples=30, deadline=None)
@given(cochains(), st.data())
def test_evaluate_is_multilinear(f, data):
    indices = tuple(data.draw(st.permutations(range(f.dim_l)))[: f.degree])
    basis = [unit_vector(f.dim_l, index) for index in indices]
    assert list(f.evaluate(basis)) == list(f.value_at(indices))
    factor = data.draw(small_fractions)
    scaled = [factor * basis[0]] + basis[1:]
    assert list(f.evaluate(scaled)) == list(factor * f.value_at(indices))


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == ((0, 1, 2), 1)
    assert sort_with_sign((1, 0)) == ((0, 1), -1)
    assert sort_with_sign((1, 1)) == (None, 0)


def test_shape_checks():
    with pytest.raises(ShapeError):
        Cochain.from_flat(2, 1, 1, vector([1, 2, 3]))
    with pytest.raises(ShapeError):
        PairCochain(1, Cochain.zero(2, 1, 1))


def test_cochain_to_dict():
    f = Cochain.from_function(3, 2, 2, lambda ij: vector([ij[0], "1/2"]))
    out = f.to_dict()
    assert out["degree"] == 2
    assert list(out["values"]) == ["[0,1]", "[0,2]", "[1,2]"]
    assert out["values"]["[1,2]"] == ["1", "1/2"]
    assert Cochain.zero(3, 1, 0).to_dict() == {"degree": 0, "values": {"[]": ["0"]}}
    pc = PairCochain(1, Cochain.zero(2, 1, 1), Cochain.zero(2, 1, 0))
    assert pc.to_dict()["second"] == {"degree": 0, "values": {"[]": ["0"]}}


def test_delta_ce_of_identity_on_affine():
    pair = ReynoldsLieDerPair(affine(), identity(2), zeros(2, 2))
    rld = adjoint_rep(pair)
    image = delta_ce(rld.rep, Cochain.from_operator(identity(2)))
    assert list(image.value_at((0, 1))) == [1, 0]


def test_degree_zero_conventions(monkeypatch):
    pair = ReynoldsLieDerPair(affine(), identity(2), zeros(2, 2))
    rld = trivial_rld_rep(pair, matrix([[2]]), matrix([[3]]))
    u = Cochain.constant(2, vector([1]))
    assert list(phi(rld.base, u, literal=False).as_vector()) == [-1]
    assert list(phi(rld.base, u, literal=True).as_vector()) == [1]
    assert list(delta_map(rld, u).as_vector()) == [-3]
    assert delta_ce(rld.rep, u).is_zero()
    monkeypatch.setattr("src.cohomology.cochain.STRICT_LITERAL", True)
    assert list(phi(rld.base, u).as_vector()) == [1]
    monkeypatch.setattr("src.cohomology.cochain.STRICT_LITERAL", False)
    assert list(phi(rld.base, u).as_vector()) == [-1]


def test_chain_map_identities(corpus):
    assert len(corpus) >= 50
    failures = []
    for instance in corpus:
        records = chain_map_audit(instance.rld)
        assert {record["identity"] for record in records} == set(CHAIN_MAP_IDENTITIES)
        top = instance.rld.algebra.dim
        for label in CHAIN_MAP_IDENTITIES:
            assert sorted(r["degree"] for r in records if r["identity"] == label) == list(range(top + 1))
        failures.extend((instance.name, r["degree"], r["identity"]) for r in records if not r["passed"])
    assert failures == []


def test_d_r_commutes_with_delta(small_corpus):
    for instance in small_corpus[::3]:
        rld = instance.rld
        rrep = rld.base
        induced = induced_rep(rrep)
        dim_l, dim_v = rld.algebra.dim, rld.dim
        for n in range(1, dim_l + 1):
            size = cochain_space_dim(dim_l, dim_v, n) + cochain_space_dim(dim_l, dim_v, n - 1)
            for k in range(size):
                pc = PairCochain.from_flat(dim_l, dim_v, n, unit_vector(size, k))
                left = d_r(rrep, delta_map_pair(rld, pc), induced=induced, literal=False)
                right = delta_map_pair(rld, d_r(rrep, pc, induced=induced, literal=False))
                assert left.equals(right), (instance.name, n, k)
