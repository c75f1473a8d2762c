import json

from tli.cli import main
from tli.fixtures import fixture_names


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_errors(capsys):
    assert run(capsys, )[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys, "moves")[0] == 64 or run(capsys, "moves")[0] == 1


def test_bad_input_is_exit_1(capsys):
    code, _, err = run(capsys, "info", "/nonexistent/diagram.json")
    assert code == 1
    assert "error" in err


def test_every_subcommand_runs(capsys):
    for argv in (
        ["validate", "trefoil"],
        ["info", "theta1"],
        ["wirtinger", "trefoil"],
        ["dehn", "theta1", "--simplify"],
        ["dehn", "theta1", "--no-base"],
        ["surface-relators", "theta1"],
        ["fox", "trefoil"],
        ["coloring", "trefoil", "--mod", "3"],
        ["tait", "theta1", "--dual"],
        ["laplacian", "theta1", "--poly"],
        ["moves", "trefoil"],
        ["moves", "trefoil", "--apply", "R1+", "--site", "0"],
        ["moves", "trefoil", "--fuzz", "3", "--seed", "1"],
        ["invariants", "hopf"],
        ["compare", "theta1", "theta2"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        assert out, argv


def test_json_output_is_valid(capsys):
    for name in fixture_names():
        code, out, _ = run(capsys, "invariants", name, "--json")
        assert code == 0
        doc = json.loads(out)
        assert "genus" in doc["invariants"]


def test_reports_are_deterministic(capsys):
    for argv in (["invariants", "theta1"], ["laplacian", "trefoil", "--poly"],
                 ["invariants", "curl_torus", "--json"]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_compare_distinguishes_theta_variants(capsys):
    code, out, _ = run(capsys, "compare", "theta1", "theta3")
    assert code == 0
    assert "differ" in out
    code, out, _ = run(capsys, "compare", "theta2", "theta2")
    assert code == 0
    assert "agree" in out
