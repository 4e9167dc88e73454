#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Algèbre linéaire exacte sur les rationnels.

Les scalaires sont des fractions.Fraction ; vecteurs et matrices sont des
tableaux numpy de dtype=object contenant des Fraction. Le rang, la forme
échelonnée réduite et le noyau sont calculés par sympy (DomainMatrix sur QQ),
sans aucun arrondi.

Convention : une matrice représente une application linéaire, ses colonnes
sont les images des vecteurs de base de la source.
"""

from fractions import Fraction
from numbers import Integral, Rational

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.exceptions import ShapeError

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value):
    """
    Convertit une valeur en scalaire exact.

    Args:
        value: entier, Fraction, rationnel sympy ou chaîne "p/q" / "p"

    Returns:
        Fraction: le scalaire normalisé (dénominateur positif, fraction réduite)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Un booléen n'est pas un scalaire")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Valeur non exacte refusée: {value!r}")


def format_scalar(value):
    """Sérialise un scalaire en "p/q" (ou "p" si q=1)."""
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def operator_to_dict(m):
    """Application linéaire au format {"rows", "cols", "entries"}, entrées par lignes."""
    rows, cols = m.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[format_scalar(value) for value in row] for row in m],
    }


def freeze(array):
    """Rend un tableau non modifiable et le renvoie."""
    array.flags.writeable = False
    return array


def vector(values):
    """Construit un vecteur exact à partir d'un itérable de valeurs."""
    values = list(values)
    out = np.empty(len(values), dtype=object)
    for index, value in enumerate(values):
        out[index] = to_scalar(value)
    return out


def zeros_vector(size):
    return np.full(size, ZERO, dtype=object)


def unit_vector(size, index):
    out = zeros_vector(size)
    out[index] = ONE
    return out


def zeros(rows, cols):
    return np.full((rows, cols), ZERO, dtype=object)


def identity(size):
    out = zeros(size, size)
    for index in range(size):
        out[index, index] = ONE
    return out


def matrix(rows, shape=None):
    """
    Construit une matrice exacte à partir d'une liste de lignes.

    Args:
        rows (list): lignes de valeurs convertibles par to_scalar
        shape (tuple): forme attendue, utile pour les matrices vides

    Returns:
        np.ndarray: matrice dtype=object de Fraction
    """
    rows = [list(row) for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ShapeError(f"Entrées incompatibles avec la forme {shape}")
    out = zeros(*shape)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = to_scalar(value)
    return out


def as_exact(array):
    """Copie d'un tableau où chaque entrée est une Fraction."""
    array = np.asarray(array, dtype=object)
    out = np.empty(array.shape, dtype=object)
    for index, value in np.ndenumerate(array):
        out[index] = to_scalar(value)
    return out


def is_zero(array):
    return all(value == 0 for value in np.asarray(array, dtype=object).flat)


def block_diagonal(*blocks):
    """Somme directe de matrices carrées ou rectangulaires."""
    rows = sum(block.shape[0] for block in blocks)
    cols = sum(block.shape[1] for block in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for block in blocks:
        out[r:r + block.shape[0], c:c + block.shape[1]] = block
        r += block.shape[0]
        c += block.shape[1]
    return out


def matmul(left, right):
    """Produit exact ; gère les dimensions internes nulles."""
    if left.shape[-1] != right.shape[0]:
        raise ShapeError(f"Produit impossible: {left.shape} @ {right.shape}")
    if left.shape[-1] == 0:
        shape = left.shape[:-1] + right.shape[1:]
        return np.full(shape, ZERO, dtype=object)
    return left @ right


def _to_domain_matrix(m):
    rows, cols = m.shape
    entries = [
        [QQ(int(to_scalar(value).numerator), int(to_scalar(value).denominator)) for value in row]
        for row in m
    ]
    return DomainMatrix(entries, (rows, cols), QQ)


def _from_domain_matrix(dm):
    rows, cols = dm.shape
    sym = dm.to_Matrix()
    out = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = to_scalar(sym[i, j])
    return out


def _check_matrix(m):
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ShapeError(f"Matrice attendue, reçu un tableau de dimension {m.ndim}")
    return m


def rref(m):
    """
    Forme échelonnée réduite exacte.

    Args:
        m (np.ndarray): matrice exacte

    Returns:
        tuple: (matrice échelonnée réduite, tuple des colonnes pivots)
    """
    m = _check_matrix(m)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return as_exact(m), ()
    reduced, pivots = _to_domain_matrix(m).rref()
    return _from_domain_matrix(reduced), tuple(int(p) for p in pivots)


def rank(m):
    """Rang exact sur Q."""
    m = _check_matrix(m)
    if 0 in m.shape:
        return 0
    return int(_to_domain_matrix(m).rank())


def kernel_basis(m):
    """
    Base du noyau à droite de m.

    Args:
        m (np.ndarray): matrice exacte rows x cols

    Returns:
        list: vecteurs v de longueur cols avec m·v = 0, un par colonne libre
    """
    m = _check_matrix(m)
    cols = m.shape[1]
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = zeros_vector(cols)
        v[free] = ONE
        for row, pivot in enumerate(pivots):
            v[pivot] = -reduced[row, free]
        basis.append(freeze(v))
    return basis


def solve(m, b):
    """
    Résout m·x = b de façon exacte.

    Args:
        m (np.ndarray): matrice rows x cols
        b (np.ndarray): second membre de longueur rows

    Returns:
        np.ndarray: une solution particulière, ou None si b n'est pas dans l'image
    """
    m = _check_matrix(m)
    b = np.asarray(b, dtype=object)
    rows, cols = m.shape
    if b.shape != (rows,):
        raise ShapeError(f"Second membre de forme {b.shape}, attendu ({rows},)")
    if is_zero(b):
        return freeze(zeros_vector(cols))
    if rows == 0:
        return freeze(zeros_vector(cols))
    augmented = np.concatenate([as_exact(m), as_exact(b).reshape(rows, 1)], axis=1)
    reduced, pivots = rref(augmented)
    if cols in pivots:
        return None
    x = zeros_vector(cols)
    for row, pivot in enumerate(pivots):
        x[pivot] = reduced[row, cols]
    return freeze(x)


def inverse(m):
    """Inverse exacte d'une matrice carrée, ou None si elle est singulière."""
    m = _check_matrix(m)
    rows, cols = m.shape
    if rows != cols:
        raise ShapeError(f"Inverse d'une matrice non carrée {m.shape}")
    if rows == 0:
        return zeros(0, 0)
    dm = _to_domain_matrix(m)
    if dm.rank() < rows:
        return None
    return _from_domain_matrix(dm.inv())
