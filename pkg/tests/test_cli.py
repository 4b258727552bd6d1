"""Drive the installed CLI as a subprocess; covers exit codes, determinism,
and the invert round trip through files."""

import json
import subprocess
import sys

from resmat import ResMatrix, mat_mul
from resmat.fileio import dumps, load_matrix


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "resmat", *args],
                          capture_output=True, text=True, cwd=cwd)


def test_lattice_factor_square():
    res = run_cli("lattice", "factor", "builtin:square")
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "2 factors: chain2 x chain2; |Aut| = 2"


def test_lattice_aut_and_validate():
    res = run_cli("lattice", "aut", "builtin:m3")
    assert res.returncode == 0 and res.stdout.strip() == "|Aut| = 6"
    res = run_cli("lattice", "validate", "builtin:cube")
    assert res.returncode == 0 and res.stdout.startswith("ok:")


def test_matrix_count_m3():
    res = run_cli("matrix", "count", "builtin:m3", "--n", "2")
    assert res.returncode == 0
    assert res.stdout.strip() == "72"


def test_semiring_validate_reports_axiom(tmp_path):
    bad = {"labels": ["0", "1"], "add": [["0", "1"], ["1", "0"]],
           "mul": [["0", "0"], ["0", "1"]], "zero": "0", "one": "1"}
    path = tmp_path / "xor.json"
    path.write_text(dumps(bad))
    res = run_cli("semiring", "validate", str(path))
    assert res.returncode == 2
    assert "additive idempotence" in res.stderr


def test_matrix_check_permutation_over_bool(tmp_path):
    perm = {"base": "builtin:bool", "kind": "semiring", "n": 3,
            "entries": [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]}
    path = tmp_path / "perm3.json"
    path.write_text(dumps(perm))
    res = run_cli("matrix", "check", str(path))
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "invertible"
    assert any(line.startswith("sigma:") for line in res.stdout.splitlines())


def test_matrix_check_not_invertible_exit_code(tmp_path):
    bad = {"base": "builtin:bool", "kind": "semiring", "n": 2,
           "entries": [["1", "1"], ["0", "1"]]}
    path = tmp_path / "bad.json"
    path.write_text(dumps(bad))
    res = run_cli("matrix", "check", str(path))
    assert res.returncode == 1
    assert res.stdout.strip() == "not invertible"
    res = run_cli("matrix", "invert", str(path))
    assert res.returncode == 1


def test_bad_input_exit_code(tmp_path):
    res = run_cli("matrix", "check", str(tmp_path / "missing.json"))
    assert res.returncode == 2
    res = run_cli("lattice", "validate", "builtin:doesnotexist")
    assert res.returncode == 2


def test_gen_is_deterministic():
    args = ("gen", "random-invertible", "--lattice", "builtin:square",
            "--n", "2", "--seed", "123")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    other = run_cli("gen", "random-invertible", "--lattice", "builtin:square",
                    "--n", "2", "--seed", "124")
    assert other.stdout != first.stdout


def test_invert_round_trip_through_files(tmp_path):
    gen = run_cli("gen", "random-invertible", "--lattice", "builtin:m3",
                  "--n", "2", "--seed", "9")
    assert gen.returncode == 0
    mat_path = tmp_path / "m.json"
    mat_path.write_text(gen.stdout)
    inv_path = tmp_path / "minv.json"
    res = run_cli("matrix", "invert", str(mat_path), "--out", str(inv_path))
    assert res.returncode == 0
    matrix = load_matrix(str(mat_path))
    inverse = load_matrix(str(inv_path))
    assert mat_mul(matrix, inverse) == ResMatrix.identity(matrix.lattice, matrix.n)
    assert mat_mul(inverse, matrix) == ResMatrix.identity(matrix.lattice, matrix.n)


def test_oracle_compare_agrees(tmp_path):
    gen = run_cli("gen", "random-invertible", "--lattice", "builtin:square",
                  "--n", "2", "--seed", "4")
    mat_path = tmp_path / "m.json"
    mat_path.write_text(gen.stdout)
    res = run_cli("oracle", "check", str(mat_path), "--compare")
    assert res.returncode == 0
    assert "agree: yes" in res.stdout
    res = run_cli("oracle", "invert", str(mat_path), "--compare")
    assert res.returncode == 0
    assert "agree: yes" in res.stderr


def test_semiring_order_lattice_loadable(tmp_path):
    res = run_cli("semiring", "order-lattice", "builtin:simple3chain")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert len(data["labels"]) == 6
    path = tmp_path / "order.json"
    path.write_text(res.stdout)
    check = run_cli("lattice", "validate", str(path))
    assert check.returncode == 0


def test_semiring_embed_and_generate():
    res = run_cli("semiring", "embed", "builtin:bool")
    assert res.returncode == 0
    assert "T[0]" in res.stdout and "T[1]" in res.stdout
    res = run_cli("semiring", "generate", "--lattice", "builtin:chain3")
    assert res.returncode == 0
    assert "closure size: 6" in res.stdout
    assert "has one: yes" in res.stdout


def test_matrix_json_output(tmp_path):
    perm = {"base": "builtin:square", "kind": "res", "n": 1,
            "entries": [[["0", "b", "a", "1"]]]}
    path = tmp_path / "swap.json"
    path.write_text(dumps(perm))
    res = run_cli("matrix", "check", str(path), "--json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["invertible"] is True
    assert data["sigma"] == [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
