import json

import pytest

from resmat import (NotALattice, ResMatrix, SemiringMatrix, builtin_lattice,
                    identity_map, make_map)
from resmat.fileio import (FileFormatError, dumps, lattice_from_dict,
                           lattice_to_dict, load_lattice, load_matrix,
                           matrix_from_dict, matrix_to_dict,
                           semiring_from_dict, semiring_to_dict)


def test_lattice_round_trip(tmp_path, m3):
    data = lattice_to_dict(m3)
    again = lattice_from_dict(data)
    assert again.labels == m3.labels
    assert again.leq == m3.leq
    path = tmp_path / "m3.json"
    path.write_text(dumps(data))
    assert load_lattice(str(path)).join_table == m3.join_table


def test_lattice_label_order_is_element_order():
    data = {"labels": ["top", "bot"], "covers": [["bot", "top"]]}
    lat = lattice_from_dict(data)
    assert lat.labels == ("top", "bot")
    assert lat.bottom == 1 and lat.top == 0


def test_lattice_file_errors():
    with pytest.raises(FileFormatError):
        lattice_from_dict({"labels": ["a"]})
    with pytest.raises(NotALattice):
        lattice_from_dict({"labels": ["a", "b"], "covers": []})


def test_semiring_round_trip(maxplus3):
    data = semiring_to_dict(maxplus3)
    again = semiring_from_dict(data)
    assert again == maxplus3


def test_res_matrix_round_trip(tmp_path, square):
    swap = make_map(square, (0, 2, 1, 3))
    matrix = ResMatrix(square, [[swap, identity_map(square)],
                                [identity_map(square), swap]])
    lat_path = tmp_path / "square.json"
    lat_path.write_text(dumps(lattice_to_dict(square)))
    data = matrix_to_dict(matrix, "square.json")
    mat_path = tmp_path / "matrix.json"
    mat_path.write_text(dumps(data))
    again = load_matrix(str(mat_path))
    assert again == matrix


def test_res_matrix_builtin_base(m3):
    matrix = ResMatrix.identity(m3, 2)
    data = matrix_to_dict(matrix, "builtin:m3")
    again = matrix_from_dict(data)
    assert again == matrix


def test_semiring_matrix_round_trip(bool_sr):
    matrix = SemiringMatrix(bool_sr, [[1, 0], [1, 1]])
    data = matrix_to_dict(matrix, "builtin:bool")
    again = matrix_from_dict(data)
    assert again == matrix


def test_matrix_kind_mismatch():
    with pytest.raises(FileFormatError):
        matrix_from_dict({"base": "builtin:bool", "kind": "res", "n": 1,
                          "entries": [[["0"]]]})
    with pytest.raises(FileFormatError):
        matrix_from_dict({"base": "builtin:m3", "kind": "semiring", "n": 1,
                          "entries": [["0"]]})


def test_matrix_base_resolved_relative_to_file(tmp_path, square):
    sub = tmp_path / "sub"
    sub.mkdir()
    (sub / "base.json").write_text(dumps(lattice_to_dict(square)))
    matrix = ResMatrix.identity(square, 1)
    (sub / "m.json").write_text(dumps(matrix_to_dict(matrix, "base.json")))
    assert load_matrix(str(sub / "m.json")) == matrix


def test_dumps_is_stable(m3):
    a = dumps(lattice_to_dict(m3))
    b = dumps(lattice_to_dict(builtin_lattice("m3")))
    assert a == b
    json.loads(a)
