"""Residuated self-maps of a finite lattice; the semiring (Res(L), join, compose)."""


class NotResiduated(ValueError):
    pass


class DomainMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class ResiduatedMap:
    """A join-preserving, bottom-preserving self-map stored as a dense value table."""

    __slots__ = ("domain", "values")

    def __init__(self, domain, values):
        self.domain = domain
        self.values = tuple(values)

    def __call__(self, x):
        return self.values[x]

    def __eq__(self, other):
        if not isinstance(other, ResiduatedMap):
            return NotImplemented
        return self.values == other.values and self.domain == other.domain

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        lbl = self.domain.labels
        return "ResiduatedMap(%s)" % (", ".join(
            "%s->%s" % (lbl[x], lbl[self.values[x]]) for x in range(self.domain.n)))


def _join_law_witness(lattice, values):
    """First violation of bottom- or join-preservation, or None if the table is valid."""
    if values[lattice.bottom] != lattice.bottom:
        return ("bottom",)
    join = lattice.join_table
    for x in range(lattice.n):
        for y in range(x + 1, lattice.n):
            if values[join[x][y]] != join[values[x]][values[y]]:
                return (x, y)
    return None


def make_map(lattice, value_table):
    """Validate a value table and wrap it as a ResiduatedMap.

    Raises NotResiduated with a witness: either the bottom violation or the
    first pair (x, y) whose join is not preserved.
    """
    values = tuple(value_table)
    if len(values) != lattice.n or any(not 0 <= v < lattice.n for v in values):
        raise NotResiduated("value table does not cover the lattice")
    w = _join_law_witness(lattice, values)
    if w is not None:
        if w == ("bottom",):
            raise NotResiduated("bottom must map to bottom")
        x, y = w
        raise NotResiduated(
            "join not preserved at (%r, %r)" % (lattice.labels[x], lattice.labels[y]))
    return ResiduatedMap(lattice, values)


def zero_map(lattice):
    """The constant-bottom map: the zero of Res(L)."""
    return ResiduatedMap(lattice, (lattice.bottom,) * lattice.n)


def identity_map(lattice):
    """The identity map: the one of Res(L)."""
    return ResiduatedMap(lattice, tuple(range(lattice.n)))


def e_map(lattice, a, b):
    """The step map x -> bottom if x <= a, else b (generator of simple semirings)."""
    leq = lattice.leq
    return ResiduatedMap(
        lattice, tuple(lattice.bottom if leq[x][a] else b for x in range(lattice.n)))


def compose(f, g):
    """f after g: x -> f(g(x))."""
    if f.domain != g.domain:
        raise DomainMismatch("maps live on different lattices")
    values = tuple(f.values[v] for v in g.values)
    assert _join_law_witness(f.domain, values) is None
    return ResiduatedMap(f.domain, values)


def pointwise_join(f, g):
    """x -> f(x) join g(x)."""
    if f.domain != g.domain:
        raise DomainMismatch("maps live on different lattices")
    join = f.domain.join_table
    values = tuple(join[a][b] for a, b in zip(f.values, g.values))
    assert _join_law_witness(f.domain, values) is None
    return ResiduatedMap(f.domain, values)


def is_lattice_automorphism(f):
    """True iff the value table is a bijection (bijective residuated = automorphism)."""
    return len(set(f.values)) == f.domain.n


def invert_map(f):
    """Inverse of an automorphism, found as f^(k-1) where f^k is the identity.

    Order finding by iterated composition keeps the inverse visibly inside the
    composition span of f; a debug assertion cross-checks plain table inversion.
    """
    if not is_lattice_automorphism(f):
        raise NotInvertible("map is not a bijection")
    ident = identity_map(f.domain)
    prev, cur = ident, f
    while cur != ident:
        prev, cur = cur, compose(cur, f)
    direct = [0] * f.domain.n
    for x, y in enumerate(f.values):
        direct[y] = x
    assert prev.values == tuple(direct)
    return prev
