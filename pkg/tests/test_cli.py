import json

from edgeideals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti(capsys):
    code, out, _ = run(capsys, "betti", "--ideal", "(x1*x2, x2*x3, x3*x4)")
    assert code == 0
    assert out.splitlines()[:3] == ["(0, 0): 1", "(1, 2): 3", "(2, 3): 2"]


def test_invariants_family(capsys, tmp_path):
    target = tmp_path / "inv.json"
    code, out, _ = run(capsys, "invariants", "--family", "star", "--weights", "2,1", "--json", str(target))
    assert code == 0 and out.strip() == "reg=3, pd=2, depth=1"
    assert json.loads(target.read_text())["reg"] == 3


def test_predict(capsys):
    code, out, _ = run(capsys, "predict", "--family", "path", "--weights", "2,1,1,1", "--power", "2")
    data = json.loads(out)
    assert code == 0
    assert [p["quantity"] for p in data["predictions"]] == ["reg_quotient", "depth_lower_bound"]


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--family", "path", "--weights", "2,2,1", "--witness")
    assert code == 0
    assert "integrally closed: no" in out and "witness" in out and "not closed" in out


def test_polarize(capsys):
    code, out, _ = run(capsys, "polarize", "--ideal", "(x1^2*x2^2, x2*x3)")
    assert code == 0 and out.splitlines()[0] == "(x1_1*x1_2*x2_1*x2_2, x2_1*x3_1)"


def test_verify_exit_code(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "star", "--max-n", "3", "--max-weight", "2", "--max-power", "2",
                       "--json", str(target))
    assert code == 0 and "0 mismatch" in out
    assert json.loads(target.read_text())["suite"] == "star"


def test_errors_exit_2(capsys):
    code, _, err = run(capsys, "betti", "--ideal", "(x1^2, ")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "invariants", "--ideal", "(1)")
    assert code == 2
    code, _, _ = run(capsys, "betti")
    assert code == 2
