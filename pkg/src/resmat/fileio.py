"""JSON file formats for lattices, semirings, and matrices.

Lattice files: {"labels": [...], "covers": [[lower, upper], ...]}; element
enumeration order is exactly the label array order.  Semiring files carry the
Cayley tables as label arrays plus "zero" and "one".  Matrix files reference
their base structure by path (relative to the matrix file) or "builtin:name".
"""

import json
import os

from .catalog import builtin
from .lattice import build_lattice
from .matrix import ResMatrix, SemiringMatrix
from .resmap import make_map
from .semiring import validate_semiring


class FileFormatError(ValueError):
    pass


def lattice_from_dict(data):
    try:
        labels = list(data["labels"])
        covers = [tuple(c) for c in data["covers"]]
    except (KeyError, TypeError) as exc:
        raise FileFormatError("lattice file needs 'labels' and 'covers'") from exc
    return build_lattice(labels, covers)


def lattice_to_dict(lattice):
    return {
        "labels": [str(l) for l in lattice.labels],
        "covers": [[str(lattice.labels[a]), str(lattice.labels[b])]
                   for a, b in lattice.covers],
    }


def semiring_from_dict(data):
    try:
        labels = list(data["labels"])
        idx = {lbl: i for i, lbl in enumerate(labels)}
        add = [[idx[v] for v in row] for row in data["add"]]
        mul = [[idx[v] for v in row] for row in data["mul"]]
        zero = idx[data["zero"]]
        one = idx[data["one"]]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(
            "semiring file needs 'labels', 'add', 'mul', 'zero', 'one'") from exc
    return validate_semiring(labels, add, mul, zero, one)


def semiring_to_dict(semiring):
    lbl = [str(l) for l in semiring.labels]
    return {
        "labels": lbl,
        "add": [[lbl[v] for v in row] for row in semiring.add_table],
        "mul": [[lbl[v] for v in row] for row in semiring.mul_table],
        "zero": lbl[semiring.zero],
        "one": lbl[semiring.one],
    }


def resolve_base(ref, rel_dir="."):
    """A base reference is 'builtin:<name>' or a path to a lattice/semiring file."""
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:"):])
    path = ref if os.path.isabs(ref) else os.path.join(rel_dir, ref)
    with open(path) as fh:
        data = json.load(fh)
    if "covers" in data:
        return "lattice", lattice_from_dict(data)
    if "add" in data:
        return "semiring", semiring_from_dict(data)
    raise FileFormatError("%s is neither a lattice nor a semiring file" % path)


def matrix_from_dict(data, rel_dir="."):
    try:
        base_ref = data["base"]
        kind = data["kind"]
        n = int(data["n"])
        entries = data["entries"]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(
            "matrix file needs 'base', 'kind', 'n', 'entries'") from exc
    base_kind, base = resolve_base(base_ref, rel_dir)
    if len(entries) != n or any(len(row) != n for row in entries):
        raise FileFormatError("entries must form an %d x %d array" % (n, n))
    if kind == "res":
        if base_kind != "lattice":
            raise FileFormatError("'res' matrices need a lattice base")
        rows = [[make_map(base, [base.index(v) for v in cell]) for cell in row]
                for row in entries]
        return ResMatrix(base, rows)
    if kind == "semiring":
        if base_kind != "semiring":
            raise FileFormatError("'semiring' matrices need a semiring base")
        rows = [[base.index(v) for v in row] for row in entries]
        return SemiringMatrix(base, rows)
    raise FileFormatError("matrix kind must be 'res' or 'semiring'")


def matrix_to_dict(matrix, base_ref):
    if isinstance(matrix, ResMatrix):
        lbl = [str(l) for l in matrix.lattice.labels]
        entries = [[[lbl[v] for v in f.values] for f in row] for row in matrix.entries]
        kind = "res"
    else:
        lbl = [str(l) for l in matrix.semiring.labels]
        entries = [[lbl[x] for x in row] for row in matrix.entries]
        kind = "semiring"
    return {"base": base_ref, "kind": kind, "n": matrix.n, "entries": entries}


def load_matrix(path):
    with open(path) as fh:
        data = json.load(fh)
    return matrix_from_dict(data, os.path.dirname(os.path.abspath(path)))


def load_lattice(path):
    with open(path) as fh:
        return lattice_from_dict(json.load(fh))


def load_semiring(path):
    with open(path) as fh:
        return semiring_from_dict(json.load(fh))


def dumps(data):
    """Canonical JSON used for all file output: stable key order, 2-space indent."""
    return json.dumps(data, indent=2) + "\n"
