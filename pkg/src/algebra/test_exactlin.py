#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests de l'algèbre linéaire exacte.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.exactlin import (
    format_scalar,
    identity,
    inverse,
    is_zero,
    kernel_basis,
    matmul,
    matrix,
    rank,
    rref,
    solve,
    to_scalar,
    vector,
    zeros,
)
from src.algebra.exceptions import ShapeError

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.lists(small_fractions, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return matrix(entries)


def test_scalar_normalisation():
    assert to_scalar("6/4") == Fraction(3, 2)
    assert to_scalar(" -2 ") == Fraction(-2)
    assert format_scalar(Fraction(3, 1)) == "3"
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    assert format_scalar(0) == "0"


def test_floats_and_booleans_refused():
    with pytest.raises(TypeError):
        to_scalar(0.5)
    with pytest.raises(TypeError):
        to_scalar(True)


def test_rank_examples():
    assert rank(identity(2)) == 2
    assert rank(zeros(2, 2)) == 0
    assert rank(matrix([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(identity(3)) == []
    assert len(kernel_basis(zeros(2, 3))) == 3
    (v,) = kernel_basis(matrix([[1, 2], [2, 4]]))
    # proportionnel à (2, -1)
    assert v[0] * -1 == v[1] * 2


def test_solve_examples():
    x = solve(identity(2), vector([3, 5]))
    assert list(x) == [3, 5]
    assert solve(zeros(2, 2), vector([1, 0])) is None
    x = solve(matrix([[1, 2], [2, 4]]), vector([1, 2]))
    assert x[0] + 2 * x[1] == 1


def test_solve_dimension_mismatch():
    with pytest.raises(ShapeError):
        solve(identity(2), vector([1, 2, 3]))


def test_inverse():
    m = matrix([[2, 1], [1, 1]])
    inv = inverse(m)
    assert (matmul(m, inv) == identity(2)).all()
    assert inverse(matrix([[1, 2], [2, 4]])) is None
    assert inverse(zeros(0, 0)).shape == (0, 0)
    with pytest.raises(ShapeError):
        inverse(zeros(2, 3))


def test_rref_pivots():
    reduced, pivots = rref(matrix([[0, 2, 4], [0, 1, 3]]))
    assert pivots == (1, 2)
    assert list(reduced[0]) == [0, 1, 0]


def test_empty_matrices():
    assert rank(zeros(0, 3)) == 0
    assert len(kernel_basis(zeros(0, 3))) == 3
    assert kernel_basis(zeros(3, 0)) == []
    assert is_zero(matmul(zeros(2, 0), zeros(0, 2)))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.shape[1]
    for v in basis:
        assert is_zero(matmul(m, v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_is_exact(m, data):
    b = vector(data.draw(st.lists(small_fractions, min_size=m.shape[0], max_size=m.shape[0])))
    x = solve(m, b)
    if x is None:
        augmented = matrix([list(row) + [value] for row, value in zip(m, b)])
        assert rank(augmented) > rank(m)
    else:
        assert list(matmul(m, x)) == list(b)
