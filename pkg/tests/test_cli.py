import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from diracgeom.cli import run

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


@pytest.mark.parametrize("argv,expected", [
    (("check", "map-dirac", "--input", str(DATA / "identity_map.json")), 0),
    (("map", "dirac", "--input", str(DATA / "identity_map.json")), 0),
    (("map", "dual-dirac", "--input", str(DATA / "identity_map.json")), 0),
    (("map", "dirac", "--input", str(DATA / "m2pp_counterexample.json")), 1),
    (("map", "dirac", "--predicate", "M2pp", "--input", str(DATA / "m2pp_counterexample.json")), 0),
    (("group", "dirac-datum", "--input", str(DATA / "h3_center.json")), 1),
    (("group", "dirac-datum", "--input", str(DATA / "axb_bialgebra.json")), 0),
    (("group", "dual-dirac-datum", "--input", str(DATA / "h3_dual.json")), 0),
    (("group", "gc-datum", "--input", str(DATA / "gc_abelian2.json")), 0),
    (("group", "twisted-datum", "--input", str(DATA / "twisted_h3.json")), 0),
    (("lie", "integrable", "--input", str(DATA / "lie_integrable.json")), 0),
    (("structure", "gc-endo", "--input", str(DATA / "complex_structure.json")), 0),
    (("structure", "btransform", "--input", str(DATA / "btransform.json")), 0),
])
def test_exit_codes(argv, expected):
    code, rep = report(*argv)
    assert code == expected
    assert rep["verdict"] == (expected == 0)


def test_h3_center_reports_witness():
    code, rep = report("group", "dirac-datum", "--input", str(DATA / "h3_center.json"))
    assert code == 1
    checks = {c["name"]: c for c in rep["result"]["checks"]}
    assert rep["result"]["failed"] == ["vanishing_on_k"]
    assert checks["vanishing_on_k"]["witness"] == [0]


def test_gc_datum_reports_J():
    _, rep = report("group", "gc-datum", "--input", str(DATA / "gc_abelian2.json"))
    assert rep["result"]["J"] == [[0, -1], [1, 0]]


def test_input_is_echoed():
    doc = json.loads((DATA / "identity_map.json").read_text())
    _, rep = report("map", "dirac", "--input", str(DATA / "identity_map.json"))
    assert rep["input"] == doc
    _, rep = report("map", "dirac", "--json", json.dumps(doc))
    assert rep["input"] == doc


@pytest.mark.parametrize("argv,field", [
    (("map", "dirac", "--json", '{"f": [[1]], "d1": {"n": 1}, "d2": {"kind": "tangent", "n": 1}}'), "d1/kind"),
    (("map", "dirac", "--json", '{"d1": {"kind": "tangent", "n": 1}, "d2": {"kind": "tangent", "n": 1}}'), "f"),
    (("map", "dirac", "--json", '{"f": [[1, 2]], "d1": {"kind": "tangent", "n": 1}, "d2": {"kind": "tangent", "n": 1}}'), "f/0"),
    (("map", "dirac", "--json", "{not json"), "<json>"),
    (("map", "dirac", "--input", "/nonexistent/file.json"), "--input"),
    (("suite", "equivalences", "--trials", "0"), "--trials"),
    (("suite", "equivalences", "--seed", "-1"), "--seed"),
])
def test_malformed_input_names_field(argv, field):
    code, out, err = call(*argv)
    assert code == 2
    assert json.loads(out)["error"]["field"] == field
    assert err.startswith("error:")


@pytest.mark.parametrize("argv", [("bogus",), ("map", "bogus"), ("map", "dirac"), ()])
def test_bad_command_line(argv):
    code, _, err = call(*argv)
    assert code == 2 and "error" in err


def test_text_format():
    code, out, _ = call("group", "dirac-datum", "--format", "text", "--input", str(DATA / "h3_center.json"))
    assert code == 1
    assert "verdict: false" in out and "vanishing_on_k" in out


def test_timing_only_on_request():
    _, rep = report("map", "dirac", "--input", str(DATA / "identity_map.json"))
    assert "elapsed_ms" not in rep
    _, rep = report("map", "dirac", "--timing", "--input", str(DATA / "identity_map.json"))
    assert rep["elapsed_ms"] >= 0


@pytest.mark.parametrize("suite", ["equivalences", "functoriality", "stability", "groups"])
def test_suites_are_deterministic(suite):
    argv = ("suite", suite, "--seed", "3", "--trials", "5", "--max-dim", "2")
    a, b = call(*argv), call(*argv)
    assert a == b
    rep = json.loads(a[1])
    assert rep["config"] == {"seed": 3, "trials": 5, "max_dim": 2}
    assert all(v > 0 for v in rep["trials"].values())
    # failures empty exactly when the exit code is 0
    assert (rep["failures"] == []) == (a[0] == 0) == rep["passed"]


def test_stdin_and_entry_point():
    text = (DATA / "identity_map.json").read_text()
    proc = subprocess.run(
        [sys.executable, "-m", "diracgeom.cli", "check", "map-dirac", "--input", "-"],
        input=text, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] is True


@pytest.mark.parametrize("d2", [
    {"tangent": 2},
    {"E_eps": {"E": [[1, 0], [0, 1]], "eps": [[0, 0], [0, 0]]}},
    {"basis": [[1, 0, 0, 0], [0, 1, 0, 0]]},
    {"kind": "tangent", "n": 2},
])
def test_keyed_structure_forms(d2):
    doc = {"f": [[1, 0], [0, 1]], "d1": {"poisson": [[0, 1], [-1, 0]]}, "d2": d2}
    code, rep = report("map", "dirac", "--json", json.dumps(doc))
    assert code == 0
    assert rep["input"] == doc


def test_keyed_form_without_dimension_names_field():
    code, out, _ = call("structure", "check", "--json", '{"structure": {"E_eps": {"E": [], "eps": []}}}')
    assert code == 2 and json.loads(out)["error"]["field"] == "structure/n"


def test_predicate_from_document():
    doc = json.loads((DATA / "m2pp_counterexample.json").read_text())
    code, rep = report("map", "dirac", "--json", json.dumps({**doc, "predicate": "M2pp"}))
    assert code == 0 and rep["result"]["predicate"] == "M2pp"
    code, rep = report("map", "dirac", "--predicate", "M", "--json", json.dumps({**doc, "predicate": "M2pp"}))
    assert code == 1 and rep["result"]["predicate"] == "M"
    code, out, _ = call("map", "dirac", "--json", json.dumps({**doc, "predicate": "dual"}))
    assert code == 2 and json.loads(out)["error"]["field"] == "predicate"
