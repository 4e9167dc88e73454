#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Commandes de la ligne de commande.

Chaque commande charge un espace de travail, délègue le calcul aux modules
de la bibliothèque et renvoie un CommandResult : verdict, rapport JSON et
lignes de texte. Aucune décision mathématique n'est prise ici.
"""

from dataclasses import dataclass, field

from tqdm import tqdm

from src.algebra.exceptions import PreconditionError
from src.algebra.lie_core import jacobi_check
from src.algebra.rep import adjoint_rep, check_rld_rep, induced_rep
from src.algebra.search import audit_pair, build_corpus
from src.cohomology.audit import chain_map_audit, square_audit
from src.cohomology.complexes import CochainComplex, ComplexKind
from src.deform.deformation import infinitesimal_is_cocycle, rigidity_probe, transport_equivalence, validate_truncation
from src.extension.abelian import ExtensionDatum, equivalence_of_extensions
from src.extension.central import check_central, extensibility
from src.utils.config import SHOW_PROGRESS, STRICT_LITERAL
from src.utils.logger import get_logger
from src.workspace.extraction import InputError, Workspace
from src.workspace.reporting import (
    cohomology_table,
    encode_matrix,
    encode_vector,
    matrix_text,
    render_table,
    summarize,
    survey_summary,
    survey_table,
    validation_table,
    violation_lines,
)

logger = get_logger(__name__)


@dataclass
class CommandResult:
    command: str
    passed: bool
    payload: dict
    lines: list = field(default_factory=list)

    def text(self):
        return "\n".join(self.lines)


def parse_degrees(text):
    """ "A..B" -> range(A, B + 1) ; "A" -> range(A, A + 1)."""
    try:
        if ".." in text:
            start, stop = (int(token) for token in text.split("..", 1))
        else:
            start = stop = int(text)
    except ValueError:
        raise InputError(f"Degrés invalides {text!r} : attendu A..B")
    if start < 0 or stop < start:
        raise InputError(f"Degrés invalides {text!r} : il faut 0 <= A <= B")
    return range(start, stop + 1)


def _refuse_if_quarantined(entry, action):
    if entry.quarantined:
        raise PreconditionError(f"{action} refusée : {entry.name} est en quarantaine", entry.report)


def _report_lines(structure, name, report):
    if report:
        return []
    return [f"{structure} / {name} :"] + violation_lines(report)


# validate

def _applicable_validators(entry):
    """(nom, rapport, bloquant) pour chaque validateur applicable à l'entrée."""
    value = entry.value
    if entry.kind == "algebra":
        return [("jacobi", jacobi_check(value), True)]
    if entry.kind == "pair":
        reynolds_in_use = "reynolds_literal" if STRICT_LITERAL else "reynolds"
        return [
            (name, report, not name.startswith("reynolds") or name == reynolds_in_use)
            for name, report in audit_pair(value).items()
        ]
    if entry.kind == "rep":
        return [("rld_rep", check_rld_rep(value, literal=False, strict=False), True)]
    if entry.kind == "truncation":
        return [("deformation", entry.report, True)]
    if entry.kind == "extension":
        out = [("extension", entry.report, True)]
        if entry.built is not None:
            out.append(("cocycle_extension", entry.built.cocycle, False))
        return out
    out = [("extension_centrale", entry.report, True)]
    if entry.built is not None:
        out.append(("centralite", check_central(entry.built), True))
    return out


def cmd_validate(path):
    """
    Exécute tous les validateurs applicables aux structures du fichier.

    Le verdict est positif si et seulement si tous les validateurs bloquants
    passent ; les autres (lecture littérale, verdict cocycle) sont rapportés.
    """
    workspace = Workspace.from_file(path)
    rows, structures, statuses = [], [], {}
    lines = [f"Validation de {path}"]
    failures = []
    for entry in workspace.entries.values():
        reports = []
        for name, report, blocking in _applicable_validators(entry):
            rows.append((entry.name, name, report))
            reports.append(dict(report.to_dict(), bloquant=blocking))
            if blocking:
                statuses[f"{entry.name}/{name}"] = report.passed
            failures.extend(_report_lines(entry.name, name, report))
        structures.append({"name": entry.name, "kind": entry.kind, "quarantined": entry.quarantined, "reports": reports})
    passed = all(statuses.values())
    lines.append(render_table(validation_table(rows)))
    lines.extend(failures)
    lines.append(f"Statut global : {'OK' if passed else 'ECHEC'}")
    logger.info(f"Validation de {path} : {summarize(statuses)['success_rate']} de validateurs satisfaits")
    payload = {"source": str(path), "passed": passed, "summary": summarize(statuses), "structures": structures}
    return CommandResult("validate", passed, payload, lines)


# cohomology

def cmd_cohomology(path, complex_kind="rlieder", degrees=None, basis=False):
    """
    Dimensions (Z, B, H) par degré du complexe demandé.

    La structure est la dernière représentation du fichier, ou à défaut la
    représentation adjointe de la dernière paire.
    """
    kind = ComplexKind(complex_kind)
    workspace = Workspace.from_file(path)
    entry = workspace.first("rep", "pair")
    _refuse_if_quarantined(entry, "Cohomologie")
    structure = entry.value if entry.kind == "rep" else adjoint_rep(entry.value)
    complex_ = CochainComplex(kind, structure)
    if degrees is None:
        degrees = range(complex_.top_degree + 1)
    elif isinstance(degrees, str):
        degrees = parse_degrees(degrees)
    reports = [complex_.cohomology(degree) for degree in degrees]

    lines = [f"Complexe {kind.value} de {entry.name} : dim L = {complex_.dim_l}, dim V = {complex_.dim_v}"]
    lines.append(render_table(cohomology_table(reports)))
    entries = []
    for report in reports:
        item = report.to_dict(basis=basis)
        if basis:
            lines.append(f"Base de Z^{report.degree} :")
            lines.extend(f"    [{', '.join(encode_vector(cocycle.flat()))}]" for cocycle in report.cocycle_basis)
        if report.note:
            lines.append(f"Note degré {report.degree} : {report.note}")
        entries.append(item)
    payload = {
        "structure": entry.name,
        "complex": kind.value,
        "dim_l": complex_.dim_l,
        "dim_v": complex_.dim_v,
        "degrees": entries,
    }
    return CommandResult("cohomology", True, payload, lines)


# deform

def cmd_deform(path):
    """Équations de déformation, condition de cocycle d'ordre 1, sonde de rigidité et transport éventuel."""
    workspace = Workspace.from_file(path)
    entry = workspace.first("truncation")
    truncation, equivalence = entry.value.truncation, entry.value.equivalence
    pair = truncation.base
    report = validate_truncation(truncation)
    cocycle = infinitesimal_is_cocycle(truncation)
    rigidity = rigidity_probe(pair, truncation)

    lines = [f"Troncature {entry.name} d'ordre {truncation.order} sur {pair.name or 'la paire'}", report.summary()]
    lines.extend(violation_lines(report))
    lines.append(cocycle.summary())
    lines.append(f"H^2 adjoint : {rigidity.h2} ({'rigide' if rigidity.rigid else 'non rigide'})")
    if rigidity.class_is_zero is not None:
        lines.append(f"Classe de l'infinitésimal nulle : {'oui' if rigidity.class_is_zero else 'non'}")
    if rigidity.witness is not None:
        lines.append(f"Témoin ψ_1 : {matrix_text(rigidity.witness)}")
    payload = {
        "structure": entry.name,
        "order": truncation.order,
        "passed": report.passed,
        "deformation": report.to_dict(),
        "cocycle_infinitesimal": cocycle.to_dict(),
        "rigidity": rigidity.to_dict(),
    }
    if equivalence is not None:
        transported = transport_equivalence(truncation, equivalence)
        transported_report = validate_truncation(transported)
        payload["transported"] = {
            "R": [encode_matrix(op) for op in transported.Rs],
            "d": [encode_matrix(op) for op in transported.ds],
            "mu": [term.to_dict() for term in transported.mu],
            "deformation": transported_report.to_dict(),
        }
        lines.append(f"Transport par la série d'équivalence : {transported_report.summary()}")
    lines.append(f"Statut global : {'OK' if report else 'ECHEC'}")
    return CommandResult("deform", report.passed, payload, lines)


# extend

def cmd_extend(path):
    """Verdicts direct et cocycle d'une donnée (Θ, ξ, χ) ; classe triviale le cas échéant."""
    workspace = Workspace.from_file(path)
    entry = workspace.first("extension")
    if entry.built is None:
        raise PreconditionError(f"Extension refusée : représentation de {entry.name} invalide", entry.report)
    total = entry.built
    lines = [f"Extension {entry.name} : L ⊕ V de dimension {total.pair.dim}", total.direct.summary()]
    lines.extend(violation_lines(total.direct))
    lines.append(total.cocycle.summary())
    payload = {
        "structure": entry.name,
        "valid": total.valid,
        "direct": total.direct.to_dict(),
        "cocycle": total.cocycle.to_dict(),
        "algebra_hat": total.pair.algebra.to_dict(),
        "R_hat": encode_matrix(total.pair.R),
        "d_hat": encode_matrix(total.pair.d),
    }
    if total.valid:
        zero = ExtensionDatum.zero(total.base.dim, total.rep.dim)
        witness = equivalence_of_extensions(total.rep, zero, total.datum)
        payload["trivial_class"] = witness is not None
        if witness is not None:
            payload["gamma"] = encode_matrix(witness.gamma)
        lines.append(f"Équivalente au produit semi-direct : {'oui' if witness is not None else 'non'}")
    lines.append(f"Statut global : {'OK' if total.valid else 'ECHEC'}")
    return CommandResult("extend", total.valid, payload, lines)


# obstruction

def cmd_obstruction(path):
    """Extensibilité de (d_V, d) à une extension centrale."""
    workspace = Workspace.from_file(path)
    entry = workspace.first("central")
    if entry.built is None:
        raise PreconditionError(f"Obstruction refusée : {entry.name} n'est pas une extension centrale", entry.report)
    ext = entry.built
    d, d_V = entry.value.pair.d, entry.value.d_V
    result = extensibility(ext, d_V, d)
    lines = [f"Extension centrale {entry.name} : dim L = {ext.dim_l}, dim V = {ext.dim_v}"]
    if result.extensible:
        lines.append("Classe d'obstruction nulle : (d_V, d) se relève")
        lines.append(f"γ = {matrix_text(result.gamma)}")
        lines.append(f"d̂ = {matrix_text(result.d_hat)}")
    else:
        representative = encode_vector(result.obstruction.as_pair().flat())
        lines.append(f"Obstrué : représentant de la classe [{', '.join(representative)}]")
    lines.append(f"Statut global : {'OK' if result.extensible else 'ECHEC'}")
    payload = dict(result.to_dict(), structure=entry.name)
    return CommandResult("obstruction", result.extensible, payload, lines)


# survey

def _survey_instance(instance):
    rld = instance.rld
    squares = square_audit(rld)
    chains = chain_map_audit(rld)
    failures = [f"{r['complex']}:{r['degree']}" for r in squares if not r["passed"]]
    failures += [f"{r['identity']}:{r['degree']}" for r in chains if not r["passed"]]
    return {
        "instance": instance.name,
        "dim_L": rld.algebra.dim,
        "dim_V": rld.dim,
        "carres_nuls": all(r["passed"] for r in squares),
        "morphismes": all(r["passed"] for r in chains),
        "variante": induced_rep(rld.base).variant,
        "h2_rlieder": CochainComplex("rlieder", rld, literal=False).cohomology(2).dim_H,
        "echecs": failures,
    }


def cmd_survey(max_dim=None):
    """Balaye le corpus : carrés nuls, morphismes de complexes et H^2 par instance."""
    corpus = [i for i in build_corpus() if max_dim is None or i.pair.dim <= max_dim]
    records = [_survey_instance(instance) for instance in tqdm(corpus, desc="Balayage", disable=not SHOW_PROGRESS)]
    statuses = {r["instance"]: r["carres_nuls"] and r["morphismes"] for r in records}
    passed = all(statuses.values())
    df = survey_table(records)
    lines = [f"Balayage de {len(records)} instance(s)", render_table(df), "", render_table(survey_summary(df))]
    lines.append(f"Statut global : {'OK' if passed else 'ECHEC'}")
    payload = {"summary": summarize(statuses), "instances": records}
    return CommandResult("survey", passed, payload, lines)


COMMANDS = {
    "validate": cmd_validate,
    "cohomology": cmd_cohomology,
    "deform": cmd_deform,
    "extend": cmd_extend,
    "obstruction": cmd_obstruction,
    "survey": cmd_survey,
}
