"""Named builtin lattices and semirings used by the CLI and the test suite."""

from functools import lru_cache

from .lattice import build_lattice
from .semiring import generate_simple_semiring, validate_semiring


class CatalogEntry:
    def __init__(self, name, kind, build):
        self.name = name
        self.kind = kind
        self.build = build

    def __repr__(self):
        return "CatalogEntry(%r, %r)" % (self.name, self.kind)


def _chain(k):
    labels = [str(i) for i in range(k)]
    return build_lattice(labels, [(str(i), str(i + 1)) for i in range(k - 1)])


def _square():
    return build_lattice(["0", "a", "b", "1"],
                         [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def _cube():
    labels = ["0", "a", "b", "c", "ab", "ac", "bc", "1"]
    covers = [("0", "a"), ("0", "b"), ("0", "c"),
              ("a", "ab"), ("a", "ac"), ("b", "ab"), ("b", "bc"),
              ("c", "ac"), ("c", "bc"),
              ("ab", "1"), ("ac", "1"), ("bc", "1")]
    return build_lattice(labels, covers)


def _m3():
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("0", "b"), ("0", "c"),
                          ("a", "1"), ("b", "1"), ("c", "1")])


def _n5():
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")])


def _bool():
    return validate_semiring(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)


def _maxplus3():
    # truncated max-plus: 0 plays minus-infinity, so 1 is the multiplicative one
    # and products of positive elements saturate at 2
    add = [[max(x, y) for y in range(3)] for x in range(3)]
    mul = [[0 if 0 in (x, y) else min(x + y - 1, 2) for y in range(3)] for x in range(3)]
    return validate_semiring(["0", "1", "2"], add, mul, 0, 1)


def _res3chain():
    from .oracle import oracle_enumerate_residuated
    from .semiring import GeneratedSemiring
    chain3 = builtin_lattice("chain3")
    return GeneratedSemiring(chain3, oracle_enumerate_residuated(chain3)).to_semiring()


def _simple3chain():
    return generate_simple_semiring(builtin_lattice("chain3")).to_semiring()


def _simpleb2():
    return generate_simple_semiring(builtin_lattice("square")).to_semiring()


CATALOG = {}
for _name, _kind, _build in [
    ("chain2", "lattice", lambda: _chain(2)),
    ("chain3", "lattice", lambda: _chain(3)),
    ("chain4", "lattice", lambda: _chain(4)),
    ("chain5", "lattice", lambda: _chain(5)),
    ("square", "lattice", _square),
    ("cube", "lattice", _cube),
    ("m3", "lattice", _m3),
    ("n5", "lattice", _n5),
    ("bool", "semiring", _bool),
    ("maxplus3", "semiring", _maxplus3),
    ("res3chain", "semiring", _res3chain),
    ("simple3chain", "semiring", _simple3chain),
    ("simpleb2", "semiring", _simpleb2),
]:
    CATALOG[_name] = CatalogEntry(_name, _kind, _build)


@lru_cache(maxsize=None)
def builtin(name):
    """The builtin of that name as a (kind, value) pair; every builtin is
    validated by its constructor."""
    if name not in CATALOG:
        raise KeyError("unknown builtin %r (have: %s)" % (name, ", ".join(sorted(CATALOG))))
    entry = CATALOG[name]
    return entry.kind, entry.build()


def builtin_lattice(name):
    kind, value = builtin(name)
    if kind != "lattice":
        raise KeyError("builtin %r is a %s, not a lattice" % (name, kind))
    return value


def builtin_semiring(name):
    kind, value = builtin(name)
    if kind != "semiring":
        raise KeyError("builtin %r is a %s, not a semiring" % (name, kind))
    return value


def lattice_names():
    return sorted(n for n, e in CATALOG.items() if e.kind == "lattice")


def semiring_names():
    return sorted(n for n, e in CATALOG.items() if e.kind == "semiring")
