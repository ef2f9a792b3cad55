import io
import json
import subprocess
import sys

import pytest

from spreadideals.cli import run

SETS_JSON = '{"n":11,"generators":[[2,4],[1,5,7],[3,7,9,11]]}'

PASCAL_DIAGRAM = """\
      0 1 2 3
Tot : 1 3 3 1
-------------
  0 : 1 - - -
  1 : - - - -
  2 : - 2 - -
  3 : - 1 - -
  4 : - - 1 -
  5 : - - 2 -
  6 : - - - -
  7 : - - - 1
"""


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_betti_pascal_table():
    code, out, _ = call("betti", "--n", "10", "--pascal-t", "3", "--format", "table")
    assert code == 0
    assert out == PASCAL_DIAGRAM


def test_invariants_sets_example():
    code, out, _ = call("invariants", SETS_JSON)
    data = json.loads(out)
    assert code == 0
    assert (data["support_index"], data["pd"], data["reg"]) == (2, 2, 6)


def test_invariants_text_and_file(tmp_path):
    _, from_json, _ = call("invariants", SETS_JSON)
    _, from_text, _ = call("invariants", "x2*x4, x1*x5*x7, x3*x7*x9*x11")
    path = tmp_path / "ideal.json"
    path.write_text(SETS_JSON)
    _, from_file, _ = call("invariants", str(path))
    assert from_json == from_text == from_file


def test_json_is_sorted_and_stable():
    _, a, _ = call("pascal", "--n", "10", "--t", "3")
    _, b, _ = call("pascal", "--n", "10", "--t", "3")
    assert a == b
    assert a == json.dumps(json.loads(a), sort_keys=True, indent=2) + "\n"


@pytest.mark.parametrize("argv,token", [
    (["invariants", '{"n":11,'], "<end of input>"),
    (["invariants", "x1*x2, x3*q4"], "q4"),
    (["edge-ideal", "1-2,2+3"], "2+3"),
    (["invariants"], ""),
])
def test_parse_errors_exit_2(argv, token):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert repr(token) in err


@pytest.mark.parametrize("argv", [
    ["pascal", "--n", "3", "--t", "5"],
    ["bounds", "x1*x2", "--t", "2"],
    ["betti", '{"n": 15, "generators": [[1, 15]]}'],
    ["hilbert", "--pascal-t", "3"],
    ["edge-ideal", '{"n": 3, "edges": []}'],
])
def test_domain_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_force_lifts_guard():
    code, out, _ = call("betti", '{"n": 15, "generators": [[1, 15]]}', "--force")
    assert code == 0 and json.loads(out)["reg"] == 2


def test_unknown_subcommand():
    assert call("frobnicate")[0] == 2


def test_bounds_and_taylor():
    _, out, _ = call("bounds", "x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9")
    data = json.loads(out)
    assert (data["support_index"], data["pd_bound"], data["reg_bound"]) == (3, 3, 7)
    _, out, _ = call("taylor", "x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9")
    assert json.loads(out)["steps"] == [[2, 3, 3, 5], [4, 4, 6, 6, 6, 8], [6, 7, 8, 9], [9]]
    _, out, _ = call("taylor", "x1*x4, x2*x5", "--format", "table")
    assert out == "0: S(-2) + S(-2)\n1: S(-4)\n"
    _, out, _ = call("bounds", "--n", "10", "--pascal-t", "3", "--t", "3")
    data = json.loads(out)
    assert data["reg_bound_tspread"] == 8 and data["ci_invariants"] == [2, 8]


def test_pascal_and_tlex():
    _, out, _ = call("pascal", "--n", "10", "--t", "3")
    data = json.loads(out)
    assert data["generators"] == [[1, 4, 7, 10], [2, 5, 8], [3, 6, 9]]
    assert data["total_betti"] == [1, 3, 3, 1]
    assert data["ft_vector"] == [1, 10, 28, 18, 0]
    assert data["hilbert_numerator"] == [1, 3, 6, 8, 8, 6, 3, 1]
    assert data["tlex"]["generators"] == [[1, 4, 7], [1, 4, 8]]
    _, out, _ = call("tlex", "--n", "12", "--t", "5")
    data = json.loads(out)
    assert data == {"exists": False, "n": 12, "residue": 2, "shadow_size": 3, "t": 5}
    _, out, _ = call("tlex", "x2", "--n", "5", "--t", "1")
    assert json.loads(out)["generators"] == [[1]]


def test_ftvector_hilbert_dual_edge():
    _, out, _ = call("ftvector", "--n", "10", "--pascal-t", "3")
    assert json.loads(out)["ft_vector"] == [1, 10, 28, 18, 0]
    _, out, _ = call("ftvector", "x1", "--n", "2", "--t", "1")
    assert json.loads(out)["ft_vector"] == [1, 1, 0]
    _, out, _ = call("hilbert", "--n", "10", "--pascal-t", "3", "--format", "table")
    assert out.endswith("/ (1 - z)^7\n")
    _, out, _ = call("hilbert", "x1*x2, x2*x3")
    data = json.loads(out)
    assert data["reduced_numerator"] == [1, 1, -1] and data["reduced_denominator_exponent"] == 2
    _, out, _ = call("dual", "x1*x2, x2*x3")
    data = json.loads(out)
    assert data["dual"]["generators"] == [[2], [1, 3]]
    assert data["reg"] == data["pd_dual"] + 1
    _, out, _ = call("edge-ideal", "1-4,2-5,3-6")
    data = json.loads(out)
    assert data["forest"] and data["reg"] == data["forest_regularity"] == 4


def test_reproduce():
    code, out, _ = call("reproduce")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 30
    code, out, _ = call("reproduce", "--fuzz", "20", "--seed", "4", "--format", "json")
    assert code == 0 and json.loads(out)["all_pass"]


def test_reproduce_exit_code_reflects_failures(monkeypatch):
    from spreadideals import reproduce

    bad = reproduce.Example("nowhere", "always fails", lambda: (False, "forced"))
    monkeypatch.setattr(reproduce, "EXAMPLES", reproduce.EXAMPLES + [bad])
    code, out, _ = call("reproduce")
    assert code == 1
    assert "FAIL  [nowhere] always fails" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spreadideals.cli", "invariants", SETS_JSON, "--format", "table"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "support_index: 2" in proc.stdout and "reg: 6" in proc.stdout
