import json
import subprocess
import sys

import pytest

from quandlehom.cli import main
from quandlehom.quandle import dihedral


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:
        code = e.code
    out, err = capsys.readouterr()
    return code, out, err


def ok(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_documented_commands(capsys):
    assert ok(capsys, "cohomology", "--quandle", "@R3", "--degree", "2", "--sign", "+", "--coeff", "Z") == \
        {"rank": 0, "torsion": [3]}
    assert ok(capsys, "homology", "--quandle", "T3", "--degree", "1", "--sign", "+", "--theory", "Q",
              "--coeff", "Z") == {"rank": 1, "torsion": [2, 2]}
    assert ok(capsys, "verify-complex", "--quandle", "S4", "--max-degree", "3")["ok"] is True
    assert ok(capsys, "invariant", "--diagram", "trefoil.pd", "--quandle", "S4", "--cocycle", "@s4_six") == \
        {"modulus": 2, "counts": [4, 12]}
    assert ok(capsys, "refined", "--diagram", "borromean.pd")["polynomial"] == \
        "2 + 2t1^2t2^2 + 2t1^2t3^2 + 2t2^2t3^2"
    assert ok(capsys, "mod3", "--diagram", "7_4.pd")["predicts_trivial"] is True


def test_quandle_commands(capsys, tmp_path):
    made = ok(capsys, "quandle", "make", "--family", "dihedral", "--n", "3")
    assert made["table"] == [list(r) for r in dihedral(3).table]
    assert ok(capsys, "quandle", "orbits", "@R4") == {"orbits": [[0, 2], [1, 3]]}
    f = tmp_path / "r3.json"
    f.write_text(json.dumps(made))
    assert ok(capsys, "quandle", "check", str(f))["valid"] is True
    assert ok(capsys, "quandle", "make", "--family", "alexander", "--n", "5", "--t", "2")["order"] == 5


def test_bad_quandle_reports_axiom_witness(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"table": [[1, 0], [0, 1]]}))
    code, _, err = run(capsys, "quandle", "check", str(f))
    assert code == 2
    e = json.loads(err)
    assert e["error"] == "AxiomViolation" and e["axiom"] == 1 and e["witness"] == [0]


def test_error_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "refined", "--diagram", "@hopf")
    assert code == 3 and json.loads(err)["error"] == "WrongComponentCount"
    code, _, err = run(capsys, "invariant", "--diagram", "@trefoil", "--quandle", "R3", "--cocycle",
                       str(tmp_path / "missing.json"))
    assert code == 2 and json.loads(err)["error"] == "FileError"
    c = tmp_path / "c.json"
    c.write_text(json.dumps({"degree": 2, "modulus": 0, "entries": [{"tuple": [0, 1], "value": 1}]}))
    code, _, err = run(capsys, "invariant", "--diagram", "@trefoil", "--quandle", "R3", "--cocycle", str(c))
    assert code == 3 and json.loads(err)["error"] == "NotACocycle"
    code, _, err = run(capsys, "bogus")
    assert code == 2 and json.loads(err)["error"] == "UsageError"
    code, _, err = run(capsys, "diagram", "--diagram", "nowhere.pd")
    assert code == 2 and json.loads(err)["error"] == "ParseError"
    code, _, err = run(capsys, "homology", "--quandle", "R3", "--degree", "1", "--coeff", "Zx")
    assert code == 2


def test_diagram_commands(capsys, tmp_path):
    d = ok(capsys, "diagram", "--diagram", "@borromean")
    assert (d["crossings"], d["components"], d["faces"]) == (6, 3, 8)
    assert d["epsilon"] == [1] * 6
    pd = tmp_path / "k.pd"
    pd.write_text("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n")
    assert ok(capsys, "color-count", "--diagram", str(pd), "--quandle", "R3") == {"col": 9}
    assert ok(capsys, "trivial-crossings", "--diagram", "@trefoil", "--quandle", "R3")["crossings"] == []
    assert ok(capsys, "trivial-crossings", "--diagram", "@7_4", "--quandle", "R3")["crossings"]
    assert ok(capsys, "proper-link", "--diagram", "@hopf") == {"proper": False}
    assert ok(capsys, "proper-link", "--diagram", "@borromean") == {"proper": True}


def test_cocycles_command(capsys):
    r = ok(capsys, "cocycles", "--quandle", "R3", "--degree", "2")
    assert r["cohomology"] == {"rank": 0, "torsion": [3]}
    assert len(r["basis"]) == 2 and r["representatives"]


def test_output_file_and_pretty(capsys, tmp_path):
    out = tmp_path / "o.json"
    code, printed, _ = run(capsys, "-o", str(out), "homology", "--quandle", "R5", "--degree", "1")
    assert code == 0 and printed == ""
    assert json.loads(out.read_text()) == {"rank": 1, "torsion": [5]}
    code, printed, _ = run(capsys, "--pretty", "homology", "--quandle", "R5", "--degree", "1")
    assert printed.strip() == "Z + Z5"


ACCEPTANCE_RUNS = [
    ["refined", "--diagram", "@borromean"],
    ["invariant", "--diagram", "@figure8", "--quandle", "S4", "--cocycle", "@s4_six"],
    ["color-count", "--diagram", "@7_4", "--quandle", "R3"],
    ["cohomology", "--quandle", "T3", "--degree", "3"],
]


@pytest.mark.parametrize("argv", ACCEPTANCE_RUNS, ids=lambda a: a[0])
def test_repeated_runs_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "quandlehom.cli"] + argv
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]
