#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Cochaînes alternées Hom(Λ^k L, V) et opérateurs de cobord.

Une cochaîne de degré k est stockée sur les k-uplets strictement croissants
(ordre lexicographique) ; l'évaluation sur un n-uplet quelconque passe par
l'extension alternée (signe de la permutation, zéro si un indice se répète).

Conventions de signe des cobords (degré n vers n+1) :
    (δf)(x_1..x_{n+1}) = Σ_i (-1)^{i+n} ρ(x_i) f(.., x̂_i, ..)
                       + Σ_{i<j} (-1)^{i+j+n+1} f([x_i,x_j], .., x̂_i, .., x̂_j, ..)
Elles diffèrent de la convention classique par le signe global (-1)^{n+1}.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from src.algebra.exactlin import format_scalar, freeze, is_zero, matmul, to_scalar, unit_vector, zeros, zeros_vector
from src.algebra.exceptions import ShapeError
from src.algebra.rep import induced_rep
from src.utils.config import STRICT_LITERAL


@lru_cache(maxsize=None)
def wedge_basis(dim, degree):
    """k-uplets strictement croissants de {0..dim-1}, ordre lexicographique."""
    if degree < 0:
        return ()
    return tuple(combinations(range(dim), degree))


@lru_cache(maxsize=None)
def wedge_index(dim, degree):
    return {indices: position for position, indices in enumerate(wedge_basis(dim, degree))}


def cochain_space_dim(dim_l, dim_v, degree):
    if degree < 0 or degree > dim_l:
        return 0
    return comb(dim_l, degree) * dim_v


def index_key(indices):
    """Clé JSON d'un uplet d'indices : "[0,2]", "[]" en degré 0."""
    return "[" + ",".join(str(index) for index in indices) + "]"


def sort_with_sign(indices):
    """Trie un n-uplet ; renvoie (uplet trié, signe) ou (None, 0) si répétition."""
    if len(set(indices)) != len(indices):
        return None, 0
    items = list(indices)
    sign = 1
    # tri par insertion : chaque échange change le signe
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return tuple(items), sign


@dataclass(frozen=True, eq=False)
class Cochain:
    """Élément de Hom(Λ^k L, V)."""

    degree: int
    dim_l: int
    dim_v: int
    values: np.ndarray

    def __post_init__(self):
        expected = (len(wedge_basis(self.dim_l, self.degree)), self.dim_v)
        if self.degree < 0:
            raise ShapeError("Degré négatif")
        if self.values.shape != expected:
            raise ShapeError(f"Table de forme {self.values.shape}, attendu {expected}")

    # -- constructions -------------------------------------------------

    @classmethod
    def zero(cls, dim_l, dim_v, degree):
        size = len(wedge_basis(dim_l, degree))
        return cls(degree, dim_l, dim_v, freeze(zeros(size, dim_v)))

    @classmethod
    def from_function(cls, dim_l, dim_v, degree, function):
        """Cochaîne dont la valeur sur chaque uplet croissant est function(uplet)."""
        basis = wedge_basis(dim_l, degree)
        values = zeros(len(basis), dim_v)
        for position, indices in enumerate(basis):
            value = function(indices)
            if len(value) != dim_v:
                raise ShapeError(f"Valeur de longueur {len(value)} sur {indices}, attendu {dim_v}")
            values[position] = value
        return cls(degree, dim_l, dim_v, freeze(values))

    @classmethod
    def from_flat(cls, dim_l, dim_v, degree, flat):
        size = len(wedge_basis(dim_l, degree))
        flat = np.asarray(flat, dtype=object)
        if flat.shape != (size * dim_v,):
            raise ShapeError(f"Vecteur plat de forme {flat.shape}, attendu ({size * dim_v},)")
        return cls(degree, dim_l, dim_v, freeze(flat.reshape(size, dim_v).copy()))

    @classmethod
    def constant(cls, dim_l, u):
        """Cochaîne de degré 0 de valeur u."""
        u = np.asarray(u, dtype=object)
        return cls(0, dim_l, len(u), freeze(u.reshape(1, len(u)).copy()))

    @classmethod
    def from_operator(cls, op):
        """Cochaîne de degré 1 associée à une application linéaire L -> V."""
        dim_v, dim_l = op.shape
        return cls(1, dim_l, dim_v, freeze(np.asarray(op, dtype=object).T.copy()))

    @classmethod
    def from_bracket(cls, algebra):
        """Le crochet μ de L comme cochaîne de degré 2 à valeurs dans L."""
        return cls.from_function(algebra.dim, algebra.dim, 2, lambda ij: algebra.table[ij[0], ij[1]])

    # -- accès ---------------------------------------------------------

    def flat(self):
        return self.values.reshape(-1)

    def to_dict(self):
        """{"degree": k, "values": {"[i1,...,ik]": ["p/q", ...]}} sur les uplets croissants."""
        return {
            "degree": self.degree,
            "values": {
                index_key(indices): [format_scalar(value) for value in self.values[position]]
                for position, indices in enumerate(wedge_basis(self.dim_l, self.degree))
            },
        }

    def as_operator(self):
        """Matrice dim_v x dim_l d'une cochaîne de degré 1."""
        if self.degree != 1:
            raise ShapeError("as_operator n'a de sens qu'en degré 1")
        return self.values.T.copy()

    def as_vector(self):
        if self.degree != 0:
            raise ShapeError("as_vector n'a de sens qu'en degré 0")
        return self.values[0].copy()

    def value_at(self, indices):
        """Valeur sur un uplet d'indices quelconque (extension alternée)."""
        ordered, sign = sort_with_sign(tuple(indices))
        if ordered is None:
            return zeros_vector(self.dim_v)
        value = self.values[wedge_index(self.dim_l, self.degree)[ordered]]
        return value if sign > 0 else -value

    def evaluate(self, vectors):
        """Évaluation multilinéaire sur des vecteurs de L."""
        vectors = list(vectors)
        if len(vectors) != self.degree:
            raise ShapeError(f"{len(vectors)} arguments pour une cochaîne de degré {self.degree}")
        if self.degree == 0:
            return self.values[0].copy()
        supports = []
        for vec in vectors:
            if len(vec) != self.dim_l:
                raise ShapeError(f"Argument de longueur {len(vec)}, attendu {self.dim_l}")
            supports.append([(k, c) for k, c in enumerate(vec) if c != 0])
        out = zeros_vector(self.dim_v)
        for choice in product(*supports):
            indices = tuple(k for k, _ in choice)
            ordered, sign = sort_with_sign(indices)
            if ordered is None:
                continue
            coefficient = to_scalar(sign)
            for _, c in choice:
                coefficient *= c
            out = out + coefficient * self.values[wedge_index(self.dim_l, self.degree)[ordered]]
        return out

    def evaluate_slot(self, indices, slot, vec):
        """f(e_{i_1}, .., vec (en position slot), .., e_{i_k})."""
        out = zeros_vector(self.dim_v)
        for k, c in enumerate(vec):
            if c == 0:
                continue
            replaced = indices[:slot] + (k,) + indices[slot + 1:]
            out = out + c * self.value_at(replaced)
        return out

    # -- arithmétique --------------------------------------------------

    def _check_compatible(self, other):
        if (self.degree, self.dim_l, self.dim_v) != (other.degree, other.dim_l, other.dim_v):
            raise ShapeError("Cochaînes incompatibles")

    def __add__(self, other):
        self._check_compatible(other)
        return Cochain(self.degree, self.dim_l, self.dim_v, freeze(self.values + other.values))

    def __sub__(self, other):
        self._check_compatible(other)
        return Cochain(self.degree, self.dim_l, self.dim_v, freeze(self.values - other.values))

    def __neg__(self):
        return Cochain(self.degree, self.dim_l, self.dim_v, freeze(-self.values))

    def scale(self, factor):
        return Cochain(self.degree, self.dim_l, self.dim_v, freeze(to_scalar(factor) * self.values))

    def is_zero(self):
        return is_zero(self.values)

    def equals(self, other):
        return (
            (self.degree, self.dim_l, self.dim_v) == (other.degree, other.dim_l, other.dim_v)
            and bool((self.values == other.values).all())
        )


@dataclass(frozen=True, eq=False)
class PairCochain:
    """Élément (f, g) de C^n_R = C^n ⊕ C^{n-1} ; g absent en degré 0."""

    degree: int
    first: Cochain
    second: object = None

    def __post_init__(self):
        if self.first.degree != self.degree:
            raise ShapeError("Composante principale de mauvais degré")
        if self.degree == 0 and self.second is not None:
            raise ShapeError("Pas de seconde composante en degré 0")
        if self.degree > 0 and (self.second is None or self.second.degree != self.degree - 1):
            raise ShapeError("Seconde composante manquante ou de mauvais degré")

    @classmethod
    def zero(cls, dim_l, dim_v, degree):
        second = Cochain.zero(dim_l, dim_v, degree - 1) if degree > 0 else None
        return cls(degree, Cochain.zero(dim_l, dim_v, degree), second)

    @classmethod
    def from_flat(cls, dim_l, dim_v, degree, flat):
        size = cochain_space_dim(dim_l, dim_v, degree)
        first = Cochain.from_flat(dim_l, dim_v, degree, flat[:size])
        second = Cochain.from_flat(dim_l, dim_v, degree - 1, flat[size:]) if degree > 0 else None
        return cls(degree, first, second)

    @property
    def components(self):
        return (self.first,) if self.second is None else (self.first, self.second)

    def flat(self):
        return np.concatenate([component.flat() for component in self.components])

    def to_dict(self):
        second = None if self.second is None else self.second.to_dict()
        return {"degree": self.degree, "first": self.first.to_dict(), "second": second}

    def map(self, function):
        """Applique function à chaque composante."""
        second = None if self.second is None else function(self.second)
        return PairCochain(self.degree, function(self.first), second)

    def __add__(self, other):
        second = None if self.second is None else self.second + other.second
        return PairCochain(self.degree, self.first + other.first, second)

    def __sub__(self, other):
        second = None if self.second is None else self.second - other.second
        return PairCochain(self.degree, self.first - other.first, second)

    def __neg__(self):
        return self.map(lambda component: -component)

    def is_zero(self):
        return all(component.is_zero() for component in self.components)

    def equals(self, other):
        return self.degree == other.degree and all(
            a.equals(b) for a, b in zip(self.components, other.components)
        )


@dataclass(frozen=True, eq=False)
class QuadCochain:
    """
    Élément de 𝔠^n = C^n_R × C^{n-1}_R (n >= 2) ; 𝔠^1 = C^1_R et 𝔠^0 = C^0_R
    n'ont pas de composante de queue.
    """

    degree: int
    main: PairCochain
    tail: object = None

    def __post_init__(self):
        if self.main.degree != self.degree:
            raise ShapeError("Composante principale de mauvais degré")
        if self.degree <= 1 and self.tail is not None:
            raise ShapeError("Pas de queue en degré 0 ou 1")
        if self.degree >= 2 and (self.tail is None or self.tail.degree != self.degree - 1):
            raise ShapeError("Queue manquante ou de mauvais degré")

    @classmethod
    def zero(cls, dim_l, dim_v, degree):
        tail = PairCochain.zero(dim_l, dim_v, degree - 1) if degree >= 2 else None
        return cls(degree, PairCochain.zero(dim_l, dim_v, degree), tail)

    @classmethod
    def from_flat(cls, dim_l, dim_v, degree, flat):
        size = pair_space_dim(dim_l, dim_v, degree)
        main = PairCochain.from_flat(dim_l, dim_v, degree, flat[:size])
        tail = PairCochain.from_flat(dim_l, dim_v, degree - 1, flat[size:]) if degree >= 2 else None
        return cls(degree, main, tail)

    @property
    def components(self):
        return (self.main,) if self.tail is None else (self.main, self.tail)

    def flat(self):
        return np.concatenate([component.flat() for component in self.components])

    def to_dict(self):
        tail = None if self.tail is None else self.tail.to_dict()
        return {"degree": self.degree, "main": self.main.to_dict(), "tail": tail}

    def __add__(self, other):
        tail = None if self.tail is None else self.tail + other.tail
        return QuadCochain(self.degree, self.main + other.main, tail)

    def __sub__(self, other):
        tail = None if self.tail is None else self.tail - other.tail
        return QuadCochain(self.degree, self.main - other.main, tail)

    def __neg__(self):
        tail = None if self.tail is None else -self.tail
        return QuadCochain(self.degree, -self.main, tail)

    def is_zero(self):
        return all(component.is_zero() for component in self.components)

    def equals(self, other):
        return self.degree == other.degree and all(
            a.equals(b) for a, b in zip(self.components, other.components)
        )


def pair_space_dim(dim_l, dim_v, degree):
    return cochain_space_dim(dim_l, dim_v, degree) + cochain_space_dim(dim_l, dim_v, degree - 1)


def quad_space_dim(dim_l, dim_v, degree):
    if degree < 0:
        return 0
    if degree <= 1:
        return pair_space_dim(dim_l, dim_v, degree)
    return pair_space_dim(dim_l, dim_v, degree) + pair_space_dim(dim_l, dim_v, degree - 1)


def _check_cochain(rep, f):
    if f.dim_l != rep.algebra.dim or f.dim_v != rep.dim:
        raise ShapeError(
            f"Cochaîne sur ({f.dim_l}, {f.dim_v}) pour une représentation sur ({rep.algebra.dim}, {rep.dim})"
        )


def _chevalley_eilenberg(algebra, rep, f):
    """Cobord de la représentation rep de algebra, signes (-1)^{i+n} et (-1)^{i+j+n+1}."""
    _check_cochain(rep, f)
    n = f.degree
    dim_l, dim_v = f.dim_l, f.dim_v

    def value(indices):
        out = zeros_vector(dim_v)
        # termes d'action, positions p = 1..n+1
        for p in range(1, n + 2):
            rest = indices[:p - 1] + indices[p:]
            term = matmul(rep.action[indices[p - 1]], f.value_at(rest))
            out = out + term if (p + n) % 2 == 0 else out - term
        # termes de crochet, positions p < q
        for p, q in combinations(range(1, n + 2), 2):
            commutator = algebra.table[indices[p - 1], indices[q - 1]]
            if is_zero(commutator):
                continue
            rest = tuple(index for position, index in enumerate(indices, start=1) if position not in (p, q))
            term = f.evaluate_slot((0,) + rest, 0, commutator)
            out = out + term if (p + q + n + 1) % 2 == 0 else out - term
        return out

    return Cochain.from_function(dim_l, dim_v, n + 1, value)


def delta_ce(rep, f):
    """Cobord de Chevalley-Eilenberg δ_CE : C^n(L;V) -> C^{n+1}(L;V)."""
    return _chevalley_eilenberg(rep.algebra, rep, f)


def delta_r(rrep, g, induced=None):
    """
    Cobord δ_R de L_R à coefficients dans ρ_R.

    Args:
        rrep (ReynoldsRep): représentation de Reynolds
        g (Cochain): cochaîne de degré n
        induced (InducedRepresentation): ρ_R déjà calculée (optionnel)
    """
    if induced is None:
        induced = induced_rep(rrep)
    return _chevalley_eilenberg(induced.rep.algebra, induced.rep, g)


def phi(rrep, f, literal=None):
    """
    Morphisme de complexes φ : C^n(L;V) -> C^n(L_R;V).

    (φf)(x_1..x_n) = f(Rx_1..Rx_n) - R_V Σ_i f(Rx_1..x_i..Rx_n) + (n-1) R_V f(Rx_1..Rx_n)

    En degré 0 : φ_0 = Id_V - R_V par défaut, Id_V si literal=True (ou
    REYNOLDS_STRICT_LITERAL=1 quand literal vaut None).
    """
    _check_cochain(rrep.base, f)
    if literal is None:
        literal = STRICT_LITERAL
    n = f.degree
    R, R_V = rrep.R, rrep.R_V
    if n == 0:
        u = f.as_vector()
        return Cochain.constant(f.dim_l, u if literal else u - matmul(R_V, u))

    def value(indices):
        images = [R[:, index] for index in indices]
        full = f.evaluate(images)
        partial = zeros_vector(f.dim_v)
        for slot, index in enumerate(indices):
            arguments = list(images)
            arguments[slot] = unit_vector(f.dim_l, index)
            partial = partial + f.evaluate(arguments)
        return full - matmul(R_V, partial) + (n - 1) * matmul(R_V, full)

    return Cochain.from_function(f.dim_l, f.dim_v, n, value)


def delta_map(rld, f):
    """
    Action Δ de la dérivation sur les cochaînes (degré préservé).

    Δf = Σ_i f(.., d x_i, ..) - d_V∘f ; en degré 0, Δu = -d_V u.
    """
    _check_cochain(rld.rep, f)
    d, d_V = rld.d, rld.d_V
    if f.degree == 0:
        return Cochain.constant(f.dim_l, -matmul(d_V, f.as_vector()))

    def value(indices):
        out = -matmul(d_V, f.value_at(indices))
        for slot, index in enumerate(indices):
            out = out + f.evaluate_slot(indices, slot, d[:, index])
        return out

    return Cochain.from_function(f.dim_l, f.dim_v, f.degree, value)


def d_r(rrep, pc, induced=None, literal=None):
    """D_R(f, g) = (δ_CE f, -δ_R g - φ f) sur C^n_R."""
    if induced is None:
        induced = induced_rep(rrep)
    first = delta_ce(rrep.base, pc.first)
    second = -phi(rrep, pc.first, literal=literal)
    if pc.second is not None:
        second = second - delta_r(rrep, pc.second, induced=induced)
    return PairCochain(pc.degree + 1, first, second)


def delta_map_pair(rld, pc):
    """Δ(f, g) = (Δf, Δg)."""
    return pc.map(lambda component: delta_map(rld, component))


def d_rlieder(rld, qc, induced=None, literal=None):
    """
    Cobord 𝔇 du complexe des paires LieDer de Reynolds.

    Degré 0 : 𝔠^0 = C^0_R, différentielle nulle.
    Degré 1 : 𝔇(f) = (D_R f, -Δf).
    Degré n >= 2 : 𝔇((f,g),(f̃,g̃)) = (D_R(f,g), D_R(f̃,g̃) + (-1)^n Δ(f,g)).
    """
    rrep = rld.base
    if induced is None:
        induced = induced_rep(rrep)
    n = qc.degree
    dim_l, dim_v = rld.algebra.dim, rld.dim
    if n == 0:
        return QuadCochain.zero(dim_l, dim_v, 1)
    main = d_r(rrep, qc.main, induced=induced, literal=literal)
    if n == 1:
        return QuadCochain(2, main, -delta_map_pair(rld, qc.main))
    shifted = delta_map_pair(rld, qc.main)
    if n % 2:
        shifted = -shifted
    return QuadCochain(n + 1, main, d_r(rrep, qc.tail, induced=induced, literal=literal) + shifted)


__all__ = [
    "Cochain",
    "PairCochain",
    "QuadCochain",
    "cochain_space_dim",
    "pair_space_dim",
    "quad_space_dim",
    "wedge_basis",
    "wedge_index",
    "sort_with_sign",
    "delta_ce",
    "delta_r",
    "phi",
    "delta_map",
    "delta_map_pair",
    "d_r",
    "d_rlieder",
]
