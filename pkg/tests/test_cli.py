import csv
import io
import json
import subprocess
import sys

import pytest

from a3calogero.cli import dumps, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, _ = invoke(*argv)
    return code, json.loads(out)


def test_roots_enum():
    code, rep = invoke_json("roots", "enum", "--bound", "1", "--affine-only")
    assert code == 0 and rep["status"] == "ok"
    roots = rep["payload"]["roots"]
    assert roots == sorted(roots)
    assert rep["payload"]["count"] == 24
    assert rep["schema_version"] == "1.0"


def test_charpoly():
    code, rep = invoke_json("charpoly", "--element", "sigmahat")
    assert code == 0
    assert rep["payload"]["coefficients"] == [1, 0, -3, -3, 0, 1]


@pytest.mark.parametrize("method", ["closed", "matrix", "both"])
def test_orbit(method):
    code, rep = invoke_json("orbit", "--element", "sigma", "--k", "1", "--alpha", "0,1,0,0,0",
                            "--method", method)
    assert code == 0
    assert rep["payload"]["coefficients"] == [0, 1, 1, 2, 1]


def test_orbit_hyperbolic_and_guard():
    code, rep = invoke_json("orbit", "--element", "sigmahat", "--k", "-1", "--alpha", "0,0,1,0,0")
    assert code == 0 and rep["payload"]["coefficients"] == [0, 1, 1, 1, 2]
    code, rep = invoke_json("orbit", "--element", "sigmahat", "--k", "500", "--alpha", "0,0,1,0,0",
                            "--method", "closed")
    assert code == 3 and rep["status"] == "error"
    assert rep["error"]["type"] == "PrecisionError"


def test_strings_check_and_coverage():
    code, rep = invoke_json("strings", "check", "--kmin", "-2", "--kmax", "2")
    assert code == 0 and rep["payload"]["cases"] == 48 * 5 and rep["payload"]["ok"]
    code, rep = invoke_json("coverage", "--bound", "4")
    assert code == 0 and rep["payload"]["misses"] == [] and rep["payload"]["ok"]


def test_potential_eval_modes():
    q = "0.93,0.41,0.17,-0.38,0.1,2.3"
    code, rep = invoke_json("potential", "eval", "--q", q, "--mode", "all", "--trunc", "1000")
    assert code == 0
    vals = rep["payload"]["values"]
    assert set(vals) == {"closed", "direct", "enumerated"}
    assert abs(vals["direct"] - vals["closed"]) / vals["closed"] < 1e-2
    code, both = invoke_json("potential", "eval", "--q", q, "--both-signs")
    assert both["payload"]["values"]["closed"] == pytest.approx(2 * vals["closed"], rel=1e-15)


def test_potential_singular_exit_code():
    code, rep = invoke_json("potential", "eval", "--q", "0.5,0.5,0.2,-0.3,0,2")
    assert code == 3
    assert rep["error"]["type"] == "SingularityError"


def test_potential_invariance_exact_kinetic():
    code, rep = invoke_json("potential", "invariance", "--q", "1/3,1/5,-2/7,3/4,1/2,2",
                            "--p", "1,2,3,4,5,6")
    assert code == 0 and rep["payload"]["failures"] == []
    for t in rep["payload"]["transforms"].values():
        assert t["kinetic_residual"] == 0
    assert "s3" in rep["payload"]["table_mismatches"]


def test_potential_limit_csv():
    code, out, _ = invoke("potential", "limit", "--q", "0.9,0.5,0.2,-0.3,0,1", "--q6",
                          "10,100,1000", "--both-signs", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(r["q6"]) for r in rows] == [10, 100, 1000]
    assert abs(float(rows[-1]["ratio"]) - 2) < 1e-5


def test_global_format_flag():
    code, out, _ = invoke("--format", "csv", "charpoly", "--element", "sigma")
    assert code == 0
    assert out.splitlines()[0] == "power,coefficient"


@pytest.mark.parametrize("argv", [
    ["orbit", "--element", "bogus", "--k", "1", "--alpha", "0,1,0,0,0"],
    ["orbit", "--element", "sigma", "--k", "1", "--alpha", "0,1,0"],
    ["roots", "enum", "--bound", "0"],
    ["potential", "eval", "--q", "1,2,3"],
    [],
])
def test_usage_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    rep = json.loads(out)
    assert rep["status"] == "error" and rep["error"]["type"] == "usage"
    assert "usage error" in err


def test_usage_error_names_flag():
    _, rep = invoke_json("orbit", "--element", "sigma", "--k", "1", "--alpha", "0,1,0")
    assert "--alpha" in rep["error"]["message"]


def test_determinism():
    argv = ["potential", "eval", "--q", "0.93,0.41,0.17,-0.38,0.1,2.3", "--mode", "all",
            "--trunc", "2000"]
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_serialisation_format():
    text = dumps({"b": 0.1, "a": [1, 2.5], "c": None})
    assert text == '{"a": [1, 2.5], "b": 0.10000000000000001, "c": null}'
    json.loads(text)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "a3calogero.cli", "charpoly", "--element",
                           "sigma"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["coefficients"] == [1, -1, -2, 2, 1, -1]
