import json

import pytest
import sympy

from axialpc.cli import main

from oracles import load


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--alpha=1/4", "--beta=1/4", "--gamma=1/4", "--psi=5/32", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == ["a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)"]


def test_tau_three_by_three_symbolic(capsys):
    code, out, _ = run(capsys, "order", "--size", "3", "--alpha=-1/8", "--out", "json")
    assert code == 0 and json.loads(out)["order"] == load()["order_3x3"]["-1/8"]


def test_order_eight_by_eight(capsys):
    code, out, _ = run(capsys, "order", "--alpha=1/4", "--beta=1/4", "--gamma=1/4", "--psi=5/32", "--word", "ab")
    assert code == 0 and out.strip().isdigit()


def test_order_cutoff_exit(capsys):
    code, out, _ = run(capsys, "order", "--field", "Fp:7", "--alpha=1", "--beta=1", "--gamma=1", "--psi=1", "--cutoff", "1")
    assert code == 3 and "exceeded" in out


def test_minpoly_and_charpoly(capsys):
    common = ["--alpha=-1/8", "--beta=-1/8", "--gamma=-1/8", "--psi=0", "--word", "ab", "--out", "json"]
    code, out, _ = run(capsys, "charpoly", *common)
    assert code == 0
    char = json.loads(out)
    code, out, _ = run(capsys, "minpoly", *common)
    assert code == 0
    mini = json.loads(out)
    x = sympy.Symbol("x")
    as_poly = lambda cs: sympy.Poly([sympy.Rational(c) for c in cs["coefficients_high_first"]], x)
    char_p, min_p = as_poly(char), as_poly(mini)
    assert char_p.degree() == 8
    assert char_p.rem(min_p).is_zero
    assert min_p.eval(1) == 0


def test_group_f5(capsys):
    code, out, _ = run(capsys, "group", "--field", "Fp:5", "--alpha=3", "--beta=3", "--gamma=4", "--psi=4", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == load()["group_f5"]["PSL(2,7)"]
    assert data["catalog"] == ["PSL(2,7)"]


def test_ideal_with_seed(capsys):
    args = ["--alpha=1/4", "--beta=1", "--gamma=1/4", "--psi=1/4", "--defect", "2", "--out", "json"]
    code, out, _ = run(capsys, "ideal", *args)
    assert code == 0 and json.loads(out)["dim"] == 4
    code, out, _ = run(capsys, "ideal", *args, "--seed", "b-c")
    assert code == 0 and json.loads(out)["dim"] == 5


def test_config_merge_respects_explicit_flags(tmp_path, capsys):
    cfg = tmp_path / "point.cfg"
    cfg.write_text("# point\nfield = Fp:5\nalpha = 3\nbeta = 3\ngamma = 4\npsi = 4\nout = json\n")
    code, out, _ = run(capsys, "group", "--config", str(cfg))
    assert code == 0 and json.loads(out)["order"] == 168
    code, out, _ = run(capsys, "group", "--config", str(cfg), "--gamma=1", "--psi=1")
    assert code == 0 and json.loads(out)["order"] == load()["group_f5"]["A6"]


def test_config_rejects_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    code, _, err = run(capsys, "table", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_sweep_is_deterministic(capsys):
    argv = ["sweep", "--field", "Fp:5", "--alpha", "3", "--beta", "3", "--gamma", "1,4", "--psi", "0,1,4"]
    _, serial, _ = run(capsys, *argv)
    _, again, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == again == parallel
    lines = serial.strip().splitlines()
    assert len(lines) == 1 + 6


def test_sweep_two_generated_f7(capsys):
    code, out, _ = run(capsys, "sweep", "--field", "Fp:7", "--two-generated")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,alpha,ord_ab" and len(lines) == 8


@pytest.mark.parametrize("field", ["Fp:3", "Fp:2"])
def test_sweep_rejects_small_characteristic(capsys, field):
    code, _, err = run(capsys, "sweep", "--field", field)
    assert code == 2 and err


def test_unknown_repro_item(capsys):
    code, _, err = run(capsys, "repro", "no-such-item")
    assert code == 2 and "no-such-item" in err


def test_repro_pass_and_mismatch_codes(capsys):
    assert run(capsys, "repro", "prop1")[0] == 0
    code, out, _ = run(capsys, "repro", "prop2-charpoly")
    assert code == 1 and "FAIL" in out


def test_prop1_token(capsys):
    code, out, _ = run(capsys, "order", "--size", "3", "--alpha", "prop1:k=5:root=1", "--out", "json")
    assert code == 0 and json.loads(out)["order"] == 5


def test_usage_errors(capsys):
    assert run(capsys, "order", "--alpha", "x/")[0] == 2
    assert run(capsys, "bogus-verb")[0] == 2
