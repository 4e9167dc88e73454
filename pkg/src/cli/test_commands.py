#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests de bout en bout de la ligne de commande : codes de sortie, sortie JSON
et rapports écrits sur disque.
"""

import json
import os

import pytest

import main
from src.cli.commands import parse_degrees
from src.utils.config import FIXTURES_DIR
from src.workspace.extraction import InputError


def fixture(name):
    return os.path.join(FIXTURES_DIR, name)


def run_json(capsys, *argv):
    code = main.main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_validate_abelian_pair(capsys):
    code, payload = run_json(capsys, "validate", fixture("abelian_trivial.json"))
    assert code == 0
    assert payload["passed"] is True
    assert payload["summary"]["failed"] == 0


def test_validate_affine_example_prints_residuals(capsys):
    code = main.main(["validate", fixture("affine_example.json")])
    out = capsys.readouterr().out
    assert code == 1
    assert "reynolds (0, 1) : [-1, 0]" in out
    assert "commutation" in out
    assert "Statut global : ECHEC" in out


def test_validate_affine_example_json(capsys):
    code, payload = run_json(capsys, "validate", fixture("affine_example.json"))
    assert code == 1
    quarantined = {s["name"] for s in payload["structures"] if s["quarantined"]}
    assert quarantined == {"affine(1,0,1)", "affine(0,1,1)", "affine(0,0,2)"}


def test_malformed_input_exits_with_input_code(capsys):
    code, payload = run_json(capsys, "validate", fixture("malformed.json"))
    assert code == 2
    assert payload["line"] >= 4
    assert "column" in payload


def test_missing_file_exits_with_input_code(capsys, tmp_path):
    code, payload = run_json(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 2
    assert "error" in payload


def test_cohomology_of_abelian_plane(capsys):
    code, payload = run_json(capsys, "cohomology", fixture("abelian_trivial.json"), "--complex", "ce")
    assert code == 0
    assert payload["structure"] == "triviale"
    assert [degree["dim_H"] for degree in payload["degrees"]] == [1, 2, 1]


def test_cohomology_degree_range_and_basis(capsys):
    code, payload = run_json(
        capsys, "cohomology", fixture("abelian_trivial.json"), "--complex", "ce", "--degrees", "0..1", "--basis"
    )
    assert code == 0
    assert [degree["degree"] for degree in payload["degrees"]] == [0, 1]
    basis = payload["degrees"][1]["cocycle_basis"]
    assert len(basis) == 2
    assert all(cocycle["degree"] == 1 and set(cocycle["values"]) == {"[0]", "[1]"} for cocycle in basis)


def test_cohomology_refuses_quarantined_pair(capsys):
    code, payload = run_json(capsys, "cohomology", fixture("affine_example.json"))
    assert code == 1
    assert "quarantaine" in payload["error"]


def test_deform_trivial_truncation(capsys):
    code, payload = run_json(capsys, "deform", fixture("trivial_truncation.json"))
    assert code == 0
    assert payload["order"] == 2
    assert payload["cocycle_infinitesimal"]["passed"] is True
    assert "transported" in payload


def test_extend_zero_datum_is_trivial(capsys):
    code, payload = run_json(capsys, "extend", fixture("extension_zero.json"))
    assert code == 0
    assert payload["valid"] is True
    assert payload["trivial_class"] is True
    assert payload["gamma"] == {"rows": 2, "cols": 2, "entries": [["0", "0"], ["0", "0"]]}
    assert payload["algebra_hat"]["dim"] == 4


def test_obstruction_trivial_central_extension(capsys):
    code, payload = run_json(capsys, "obstruction", fixture("central_trivial.json"))
    assert code == 0
    assert payload["extensible"] is True
    assert payload["gamma"] == {"rows": 1, "cols": 2, "entries": [["0", "0"]]}
    assert payload["d_hat"]["entries"] == [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "3"]]


def test_obstruction_heisenberg_is_obstructed(capsys):
    code, payload = run_json(capsys, "obstruction", fixture("central_heisenberg.json"))
    assert code == 1
    assert payload["extensible"] is False
    representative = payload["class_representative"]
    assert representative["degree"] == 2
    assert representative["first"]["values"]["[0,1]"] == ["-2"]
    assert set(representative["second"]["values"]) == {"[0]", "[1]"}


def test_json_output_is_deterministic(capsys):
    first = run_json(capsys, "cohomology", fixture("affine_valid.json"))
    second = run_json(capsys, "cohomology", fixture("affine_valid.json"))
    assert first == second


def test_report_dir_writes_file(capsys, tmp_path):
    code = main.main(["--report-dir", str(tmp_path), "validate", fixture("abelian_trivial.json")])
    capsys.readouterr()
    assert code == 0
    written = os.listdir(tmp_path)
    assert len(written) == 1 and written[0].startswith("validate_")


def test_survey_small_dimensions(capsys):
    code, payload = run_json(capsys, "survey", "--max-dim", "2")
    assert code == 0
    assert payload["summary"]["total"] > 0
    assert all(instance["dim_L"] <= 2 for instance in payload["instances"])


def test_parse_degrees():
    assert list(parse_degrees("1..3")) == [1, 2, 3]
    assert list(parse_degrees("2")) == [2]
    for bad in ("a..b", "3..1", "-1..2"):
        with pytest.raises(InputError):
            parse_degrees(bad)
