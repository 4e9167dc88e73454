#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Lecture des fichiers de définitions JSON.

Chaque fichier contient une enveloppe {"kind": ..., "name": ..., "payload": ...},
une liste d'enveloppes, ou une enveloppe {"kind": "workspace", "payload": [...]}.
Les scalaires sont des entiers JSON ou des chaînes "p/q" ; les flottants sont
refusés. Les applications linéaires s'écrivent {"rows", "cols", "entries"} (entrées
par lignes), les crochets {"i", "j", "value"} et les cochaînes
{"degree", "values": {"[i1,...,ik]": [...]}}. Une structure peut en citer une
autre par son nom ou l'inclure directement.

Chaque structure chargée passe par son validateur ; celles qui échouent sont
mises en quarantaine avec leurs résidus.
"""

import json
from dataclasses import dataclass

from src.algebra.exactlin import freeze, matrix, to_scalar, vector, zeros, zeros_vector
from src.algebra.exceptions import PreconditionError, ShapeError
from src.algebra.lie_core import LieAlgebra, ReynoldsLieDerPair, is_reylieder, jacobi_check
from src.algebra.rep import Representation, ReynoldsRep, RLDRep, adjoint_rep, check_rld_rep, trivial_rld_rep
from src.algebra.validation import ValidationReport
from src.cohomology.cochain import Cochain
from src.deform.deformation import DeformationTruncation, EquivalenceSeries, validate_truncation
from src.extension.abelian import ExtensionDatum, build_extension
from src.extension.central import central_extension_from_cocycle
from src.utils.logger import get_logger

logger = get_logger(__name__)

KINDS = ("algebra", "pair", "rep", "truncation", "extension", "central")


class InputError(Exception):
    """Fichier illisible ou définition mal formée (code de sortie 2)."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


# Décodage des valeurs

def _field(payload, key, where):
    if not isinstance(payload, dict) or key not in payload:
        raise InputError(f"{where}: champ '{key}' manquant")
    return payload[key]


def decode_scalar(value, where=""):
    if isinstance(value, float):
        raise InputError(f"{where}: flottant {value!r} refusé, utiliser \"p/q\"")
    try:
        return to_scalar(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"{where}: scalaire invalide {value!r} ({e})")


def decode_vector(values, size, where=""):
    if not isinstance(values, list) or len(values) != size:
        raise InputError(f"{where}: vecteur de longueur {size} attendu")
    return vector(decode_scalar(value, where) for value in values)


def decode_matrix(payload, shape, where=""):
    """
    Application linéaire {"rows": m, "cols": n, "entries": [[...], ...]}, entrées par lignes.
    Les colonnes sont les images des vecteurs de base de la source.
    """
    if not isinstance(payload, dict):
        raise InputError(f"{where}: application linéaire {{\"rows\", \"cols\", \"entries\"}} attendue")
    rows, cols = _field(payload, "rows", where), _field(payload, "cols", where)
    if (rows, cols) != tuple(shape):
        raise InputError(f"{where}: forme ({rows!r}, {cols!r}), attendu {tuple(shape)}")
    entries = _field(payload, "entries", where)
    if not isinstance(entries, list) or len(entries) != rows:
        raise InputError(f"{where}: {rows} lignes attendues dans 'entries'")
    decoded = [list(decode_vector(row, cols, where)) for row in entries]
    return freeze(matrix(decoded, shape=shape))


def decode_brackets(entries, dim, where=""):
    """Liste d'objets {"i", "j", "value"} avec i < j ; renvoie un dict {(i, j): vecteur}."""
    if not isinstance(entries, list):
        raise InputError(f"{where}: liste de crochets {{\"i\", \"j\", \"value\"}} attendue")
    out = {}
    for entry in entries:
        if not isinstance(entry, dict):
            raise InputError(f"{where}: entrée {entry!r} invalide, attendu {{\"i\", \"j\", \"value\"}}")
        i, j = _field(entry, "i", where), _field(entry, "j", where)
        if not isinstance(i, int) or not isinstance(j, int) or not 0 <= i < j < dim:
            raise InputError(f"{where}: indices ({i!r}, {j!r}) invalides, il faut 0 <= i < j < {dim}")
        if (i, j) in out:
            raise InputError(f"{where}: [e{i}, e{j}] défini deux fois")
        out[(i, j)] = decode_vector(_field(entry, "value", where), dim, where)
    return out


def decode_index_key(key, degree, dim_l, where=""):
    """Clé "[i1,...,ik]" d'une table de cochaîne : uplet strictement croissant dans L."""
    try:
        indices = json.loads(key)
    except json.JSONDecodeError:
        raise InputError(f"{where}: clé {key!r} illisible, attendu \"[i1,...,ik]\"")
    if not isinstance(indices, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in indices):
        raise InputError(f"{where}: clé {key!r} invalide, attendu une liste d'entiers")
    if len(indices) != degree:
        raise InputError(f"{where}: clé {key!r} de longueur {len(indices)}, attendu {degree}")
    if any(i < 0 or i >= dim_l for i in indices):
        raise InputError(f"{where}: indice hors de L (dimension {dim_l}) dans {key!r}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise InputError(f"{where}: clé {key!r} non strictement croissante")
    return tuple(indices)


def decode_cochain(payload, dim_l, dim_v, degree, where=""):
    """
    Cochaîne {"degree": k, "values": {"[i1,...,ik]": [...]}} ; les uplets absents valent zéro.
    """
    if not isinstance(payload, dict):
        raise InputError(f"{where}: cochaîne {{\"degree\", \"values\"}} attendue")
    found = _field(payload, "degree", where)
    if found != degree:
        raise InputError(f"{where}: cochaîne de degré {found!r}, attendu {degree}")
    table = _field(payload, "values", where)
    if not isinstance(table, dict):
        raise InputError(f"{where}: 'values' doit être un objet indexé par \"[i1,...,ik]\"")
    values = {}
    for key, value in table.items():
        indices = decode_index_key(key, degree, dim_l, where)
        if indices in values:
            raise InputError(f"{where}: uplet {list(indices)} défini deux fois")
        values[indices] = decode_vector(value, dim_v, f"{where}{key}")
    return Cochain.from_function(dim_l, dim_v, degree, lambda indices: values.get(indices, zeros_vector(dim_v)))


def _optional_cochain(payload, key, dim_l, dim_v, degree, where):
    value = payload.get(key)
    if value is None:
        return Cochain.zero(dim_l, dim_v, degree)
    return decode_cochain(value, dim_l, dim_v, degree, f"{where}.{key}")


def _dimension(payload, key, where):
    value = _field(payload, key, where)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputError(f"{where}: '{key}' entier >= 1 attendu")
    return value


# Entrées composites

@dataclass(frozen=True, eq=False)
class TruncationInput:
    truncation: DeformationTruncation
    equivalence: object = None


@dataclass(frozen=True, eq=False)
class ExtensionInput:
    rep: RLDRep
    datum: ExtensionDatum


@dataclass(frozen=True, eq=False)
class CentralInput:
    pair: ReynoldsLieDerPair
    R_V: object
    psi: Cochain
    xi: Cochain
    d_V: object


@dataclass
class Entry:
    """Structure nommée, son rapport de validation et l'objet construit le cas échéant."""

    name: str
    kind: str
    value: object
    report: ValidationReport
    built: object = None

    @property
    def quarantined(self):
        return not self.report

    def to_dict(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "quarantined": self.quarantined,
            "report": self.report.to_dict(),
        }


class Workspace:
    """Structures nommées chargées depuis un fichier, dans l'ordre du fichier."""

    def __init__(self, source=""):
        self.source = source
        self.entries = {}

    @classmethod
    def from_file(cls, path):
        """
        Lit et valide un fichier de définitions.

        Raises:
            InputError: fichier absent, JSON invalide (ligne et colonne) ou définition mal formée
        """
        try:
            with open(path, "r", encoding="utf-8") as file:
                document = json.load(file)
        except json.JSONDecodeError as e:
            raise InputError(f"JSON invalide dans {path}: {e.msg}", line=e.lineno, column=e.colno)
        except OSError as e:
            raise InputError(f"Lecture impossible de {path}: {e}")
        logger.debug(f"Fichier lu avec succès: {path}")
        return cls.from_document(document, source=str(path))

    @classmethod
    def from_document(cls, document, source=""):
        workspace = cls(source)
        if isinstance(document, dict) and document.get("kind") == "workspace":
            document = _field(document, "payload", "workspace")
        envelopes = document if isinstance(document, list) else [document]
        for position, envelope in enumerate(envelopes):
            workspace.add(envelope, default_name=f"{_field(envelope, 'kind', 'enveloppe')}_{position}")
        logger.info(f"Espace de travail chargé : {len(workspace.entries)} structure(s) depuis {source or 'document'}")
        return workspace

    def add(self, envelope, default_name=""):
        kind = _field(envelope, "kind", "enveloppe")
        if kind not in KINDS:
            raise InputError(f"Type de structure inconnu : {kind!r} (attendu : {', '.join(KINDS)})")
        name = envelope.get("name") or default_name
        if name in self.entries:
            raise InputError(f"Nom {name!r} défini deux fois")
        payload = _field(envelope, "payload", name)
        try:
            value = _DECODERS[kind](self, payload, name)
            report, built = _VALIDATORS[kind](value)
        except ShapeError as e:
            raise InputError(f"{name}: {e}")
        entry = Entry(name, kind, value, report, built)
        if entry.quarantined:
            logger.warning(f"{name} ({kind}) mis en quarantaine : {report.summary()}")
        self.entries[name] = entry
        return entry

    def resolve(self, reference, kind, where=""):
        """Structure citée par son nom, ou décodée directement si elle est incluse."""
        if isinstance(reference, str):
            entry = self.entries.get(reference)
            if entry is None:
                raise InputError(f"{where}: référence inconnue {reference!r}")
            if entry.kind != kind:
                raise InputError(f"{where}: {reference!r} est de type {entry.kind}, attendu {kind}")
            return entry.value
        return _DECODERS[kind](self, reference, f"{where}.{kind}")

    def get(self, name):
        return self.entries[name]

    def of_kind(self, kind):
        return [entry for entry in self.entries.values() if entry.kind == kind]

    def first(self, *kinds):
        """Dernière structure du premier type présent : le fichier se lit de bas en haut."""
        for kind in kinds:
            entries = self.of_kind(kind)
            if entries:
                return entries[-1]
        raise InputError(f"Aucune structure de type {' ou '.join(kinds)} dans {self.source or 'le document'}")

    def quarantined(self):
        return [entry for entry in self.entries.values() if entry.quarantined]

    def to_dict(self):
        return {"source": self.source, "entries": [entry.to_dict() for entry in self.entries.values()]}


# Décodeurs par type

def _decode_algebra(workspace, payload, where):
    dim = _dimension(payload, "dim", where)
    brackets = decode_brackets(payload.get("brackets", []), dim, where)
    return LieAlgebra.from_brackets(dim, brackets, name=payload.get("name", where))


def _decode_pair(workspace, payload, where):
    L = workspace.resolve(_field(payload, "algebra", where), "algebra", where)
    n = L.dim
    R = decode_matrix(_field(payload, "R", where), (n, n), f"{where}.R")
    d = decode_matrix(_field(payload, "d", where), (n, n), f"{where}.d")
    return ReynoldsLieDerPair(L, R, d, name=payload.get("name", where))


def _rep_pair(workspace, payload, where):
    """Paire portée par la représentation : citée par "pair", ou bâtie sur "algebra" avec R et d."""
    if "pair" in payload:
        return workspace.resolve(payload["pair"], "pair", where)
    L = workspace.resolve(_field(payload, "algebra", where), "algebra", where)
    n = L.dim
    ops = {}
    for key in ("R", "d"):
        if key in payload:
            ops[key] = decode_matrix(payload[key], (n, n), f"{where}.{key}")
        else:
            ops[key] = freeze(zeros(n, n))
    if "R" not in payload or "d" not in payload:
        logger.info(f"{where}: R ou d absent, opérateur nul sur {L.name}")
    return ReynoldsLieDerPair(L, ops["R"], ops["d"], name=f"{where}.pair")


def _decode_rep(workspace, payload, where):
    pair = _rep_pair(workspace, payload, where)
    style = payload.get("type", "explicit")
    if style == "adjoint":
        # PreconditionError si la paire est invalide
        return adjoint_rep(pair)
    dim = _dimension(payload, "dimV", where)
    R_V = decode_matrix(_field(payload, "RV", where), (dim, dim), f"{where}.RV")
    d_V = decode_matrix(_field(payload, "dV", where), (dim, dim), f"{where}.dV")
    if style == "trivial":
        return trivial_rld_rep(pair, R_V, d_V)
    if style != "explicit":
        raise InputError(f"{where}: type de représentation inconnu {style!r}")
    rho = _field(payload, "rho", where)
    if not isinstance(rho, list) or len(rho) != pair.dim:
        raise InputError(f"{where}: {pair.dim} matrices ρ(e_i) attendues")
    matrices = tuple(decode_matrix(m, (dim, dim), f"{where}.rho[{i}]") for i, m in enumerate(rho))
    return RLDRep(ReynoldsRep(Representation(pair.algebra, dim, matrices), pair.R, R_V), pair.d, d_V)


def _decode_truncation(workspace, payload, where):
    pair = workspace.resolve(_field(payload, "pair", where), "pair", where)
    n = pair.dim
    order = _dimension(payload, "order", where)

    def terms(key, decode):
        values = payload.get(key)
        if values is None:
            return None
        if not isinstance(values, list) or len(values) != order:
            raise InputError(f"{where}.{key}: {order} termes attendus")
        return tuple(decode(value, f"{where}.{key}[{i}]") for i, value in enumerate(values))

    trivial = DeformationTruncation.trivial(pair, order)
    mu = terms("mu", lambda value, at: decode_cochain(value, n, n, 2, at)) or trivial.mu
    Rs = terms("R", lambda value, at: decode_matrix(value, (n, n), at)) or trivial.Rs
    ds = terms("d", lambda value, at: decode_matrix(value, (n, n), at)) or trivial.ds
    psis = terms("equivalence", lambda value, at: decode_matrix(value, (n, n), at))
    equivalence = EquivalenceSeries(order, psis) if psis else None
    return TruncationInput(DeformationTruncation(pair, order, mu, Rs, ds), equivalence)


def _decode_extension(workspace, payload, where):
    rep = workspace.resolve(_field(payload, "rep", where), "rep", where)
    n, m = rep.algebra.dim, rep.dim
    Theta = _optional_cochain(payload, "Theta", n, m, 2, where)
    xi = _optional_cochain(payload, "xi", n, m, 1, where)
    chi = _optional_cochain(payload, "chi", n, m, 1, where)
    return ExtensionInput(rep, ExtensionDatum(Theta, xi, chi))


def _decode_central(workspace, payload, where):
    pair = workspace.resolve(_field(payload, "pair", where), "pair", where)
    n = pair.dim
    m = _dimension(payload, "dimV", where)
    R_V = decode_matrix(_field(payload, "RV", where), (m, m), f"{where}.RV")
    d_V = decode_matrix(_field(payload, "dV", where), (m, m), f"{where}.dV")
    psi = _optional_cochain(payload, "psi", n, m, 2, where)
    xi = _optional_cochain(payload, "xi", n, m, 1, where)
    return CentralInput(pair, R_V, psi, xi, d_V)


_DECODERS = {
    "algebra": _decode_algebra,
    "pair": _decode_pair,
    "rep": _decode_rep,
    "truncation": _decode_truncation,
    "extension": _decode_extension,
    "central": _decode_central,
}


# Validateurs : (rapport, objet construit)

def _validate_truncation(value):
    pair_report = is_reylieder(value.truncation.base)
    if not pair_report:
        return pair_report, None
    return validate_truncation(value.truncation), None


def _validate_extension(value):
    rep_report = check_rld_rep(value.rep, literal=False, strict=False)
    if not rep_report:
        return rep_report, None
    total = build_extension(value.rep.pair, value.rep, value.datum)
    report = ValidationReport("extension")
    report.merge(total.direct)
    return report, total


def _validate_central(value):
    pair = value.pair
    try:
        ext = central_extension_from_cocycle(pair.algebra, pair.R, value.R_V, value.psi, value.xi)
    except PreconditionError as e:
        return e.report, None
    return ValidationReport("extension_centrale", checked=1), ext


_VALIDATORS = {
    "algebra": lambda value: (jacobi_check(value), None),
    "pair": lambda value: (is_reylieder(value), None),
    "rep": lambda value: (check_rld_rep(value, literal=False, strict=False), None),
    "truncation": _validate_truncation,
    "extension": _validate_extension,
    "central": _validate_central,
}
