import json
from fractions import Fraction

import pytest

from freealg.cli import (main, parse_complex_entry, parse_vector,
                         algebra_from_json, algebra_to_json)
from freealg import complex_algebra, quaternion_algebra


@pytest.fixture
def example_file(tmp_path):
    doc = {
        "algebra": "complex",
        "matrix": [["1", "2*I"], ["1", "-3"]],
        "rhs": [["1", "0"], ["0", "1"]],
    }
    path = tmp_path / "system.json"
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_example(example_file, capsys):
    code, out, _ = run(capsys, "solve", example_file)
    assert code == 0
    assert "x0 = 3/5 - 2*i" in out
    assert "x1 = 1/5 - i" in out
    assert "substitution check: ok" in out


def test_solve_machine_round_trip(example_file, capsys):
    code, out, _ = run(capsys, "solve", example_file, "--machine")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert parse_vector(values["solution.0"]) == [Fraction(3, 5), Fraction(-2)]
    assert parse_vector(values["solution.1"]) == [Fraction(1, 5), Fraction(-1)]
    assert values["substitution"] == "ok"


def test_solve_identity_echoes_rhs(tmp_path, capsys):
    doc = {
        "algebra": "complex",
        "matrix": [["1", "0"], ["0", "1"]],
        "rhs": [["7/3", "-1"], ["0", "5"]],
    }
    path = tmp_path / "ident.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "solve", str(path), "--machine")
    assert code == 0
    assert "solution.0=7/3 -1" in out
    assert "solution.1=0 5" in out


def test_solve_singular_exits_3(tmp_path, capsys):
    doc = {
        "algebra": "complex",
        "matrix": [["1", "2*I"], ["1", "2*I"]],
        "rhs": [["1", "0"], ["0", "1"]],
    }
    path = tmp_path / "singular.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "solve", str(path))
    assert code == 3
    assert "singular" in err


def test_solve_parse_error_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2
    assert err


def test_solve_matrix_entries(tmp_path, capsys):
    # general-algebra entries as coordinate grids; multiplication by i
    # over C is ((0, -1), (1, 0))
    doc = {
        "algebra": "complex",
        "matrix": [[[["0", "-1"], ["1", "0"]]]],
        "rhs": [["0", "1"]],
    }
    path = tmp_path / "general.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "solve", str(path), "--machine")
    assert code == 0
    assert "solution.0=1 0" in out


def test_solve_quaternion_system(tmp_path, capsys):
    # left multiplication by i over H as a coordinate grid; the solution
    # of (i x = 1) is -i
    left_mult_i = [["0", "-1", "0", "0"],
                   ["1", "0", "0", "0"],
                   ["0", "0", "0", "-1"],
                   ["0", "0", "1", "0"]]
    doc = {
        "algebra": "quaternion",
        "matrix": [[left_mult_i]],
        "rhs": [["1", "0", "0", "0"]],
    }
    path = tmp_path / "quat.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "solve", str(path), "--machine")
    assert code == 0
    assert "solution.0=0 -1 0 0" in out


def test_tables_quaternion(capsys):
    code, out, _ = run(capsys, "tables", "quaternion", "--machine")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert values["F.0"] == "1 -1 -1 -1"
    assert values["Finv.den"] == "4"
    assert values["Finv.1"] == "-1 -1 1 1"


def test_tables_octonion(capsys):
    code, out, _ = run(capsys, "tables", "octonion", "--machine")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert values["Finv.den"] == "12"
    assert values["Finv.0"] == "5 1 1 1 1 1 1 1"
    assert values["F.7"] == "1 1 1 1 1 1 1 -1"


def test_tables_complex(capsys):
    code, out, _ = run(capsys, "tables", "complex")
    assert code == 0
    assert "f^0_0 = +f^{00} -f^{11}" in out


@pytest.mark.parametrize("suite", ["tables", "quasidet", "teichmueller", "shifts"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert "result: PASS" in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    import freealg.cli as cli_mod

    def broken_suite():
        report = cli_mod.VerificationReport("broken")
        report.add("always.fails", "0", "1")
        return report

    monkeypatch.setitem(cli_mod._VERIFY_SUITES, "tables", broken_suite)
    code, out, err = run(capsys, "verify", "tables")
    assert code == 1
    assert "first failing check: always.fails" in err
    assert "result: FAIL" in out


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "quasidet", "--machine")
    _, out2, _ = run(capsys, "verify", "quasidet", "--machine")
    assert out1 == out2


def test_basis_counts(capsys):
    code, out, _ = run(capsys, "basis", "complex", "--machine")
    assert code == 0
    assert "generators=2" in out
    code, out, _ = run(capsys, "basis", "quaternion", "--machine")
    assert "generators=1" in out
    code, out, _ = run(capsys, "basis", "octonion", "--machine")
    assert "generators=1" in out


def test_basis_no_unit_exits_2(tmp_path, capsys):
    doc = {"dim": 2, "labels": ["x", "y"], "constants": [[0, 1, 0, "1"]]}
    path = tmp_path / "unitless.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "basis", str(path))
    assert code == 2
    assert "unit" in err


def test_algebra_builtin_round_trip(capsys):
    from freealg import QuaternionParams
    code, out, _ = run(capsys, "algebra", "builtin", "quaternion",
                       "--a", "1", "--b", "1")
    assert code == 0
    rebuilt = algebra_from_json(json.loads(out))
    expected = quaternion_algebra(QuaternionParams(1, 1))
    assert rebuilt.constants == expected.constants
    assert rebuilt.unit_index == 0


def test_algebra_json_round_trip():
    algebra = complex_algebra()
    doc = algebra_to_json(algebra)
    rebuilt = algebra_from_json(doc)
    assert rebuilt.constants == algebra.constants
    assert rebuilt.labels == algebra.labels


def test_map_convert(tmp_path, capsys):
    coords = tmp_path / "conj.txt"
    coords.write_text("1 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 -1\n")
    code, out, _ = run(capsys, "map", "convert", "--algebra", "quaternion",
                       "--coords", str(coords), "--machine")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert values["rank"] == "16"
    assert values["nullity"] == "0"
    assert values["particular.0"] == "-1/2 0 0 0"
    assert values["particular.3"] == "0 0 0 -1/2"


def test_map_convert_not_representable_exits_3(tmp_path, capsys):
    coords = tmp_path / "conj_c.txt"
    coords.write_text("1 0\n0 -1\n")
    code, _, err = run(capsys, "map", "convert", "--algebra", "complex",
                       "--coords", str(coords))
    assert code == 3
    assert "image" in err


def test_map_basis_alias(capsys):
    code, out, _ = run(capsys, "map", "basis", "--algebra", "complex",
                       "--machine")
    assert code == 0
    assert "generators=2" in out
    assert "generator.1.0=1 0" in out
    assert "generator.1.1=0 -1" in out


def test_complex_entry_grammar():
    C = complex_algebra()
    cases = {
        "1": [[1, 0], [0, 1]],
        "-3": [[-3, 0], [0, -3]],
        "2*I": [[2, 0], [0, -2]],
        "I": [[1, 0], [0, -1]],
        "-I": [[-1, 0], [0, 1]],
        "1/2 + 3/4*I": [[Fraction(5, 4), 0], [0, Fraction(-1, 4)]],
        "1 - I": [[0, 0], [0, 2]],
    }
    for text, expected in cases.items():
        got = parse_complex_entry(text, C)
        assert got.matrix() == [[Fraction(v) for v in row] for row in expected], text


def test_verify_machine_form(capsys):
    code, out, _ = run(capsys, "verify", "tables", "--machine")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "subject=tables"
    assert lines[-1] == "result=PASS"
    assert all("=" in line for line in lines)
