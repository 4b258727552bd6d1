"""Finite additively idempotent semirings with zero and one.

Semirings enter the system only as explicit Cayley tables (validated
exhaustively) or through closure generation from the step-map generators;
exhaustive validation is the trust anchor for everything downstream.
"""

from .lattice import NotALattice, _tables_from_leq, FiniteLattice
from .resmap import (ResiduatedMap, compose, identity_map, pointwise_join,
                     zero_map)


class AxiomViolation(ValueError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__("%s fails at %r" % (axiom, witness))


class NotInImage(ValueError):
    pass


class ClosureTooLarge(RuntimeError):
    pass


class FiniteSemiring:
    """A validated finite additively idempotent semiring with zero and one."""

    def __init__(self, labels, add_table, mul_table, zero, one):
        self.n = len(labels)
        self.labels = tuple(labels)
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero = zero
        self.one = one
        self._label_index = {lbl: i for i, lbl in enumerate(self.labels)}

    def add(self, x, y):
        return self.add_table[x][y]

    def mul(self, x, y):
        return self.mul_table[x][y]

    def index(self, label):
        return self._label_index[label]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteSemiring):
            return NotImplemented
        return (self.labels == other.labels and self.add_table == other.add_table
                and self.mul_table == other.mul_table
                and (self.zero, self.one) == (other.zero, other.one))

    def __hash__(self):
        return hash((self.labels, self.add_table, self.mul_table))

    def __repr__(self):
        return "FiniteSemiring(%d elements, zero=%r, one=%r)" % (
            self.n, self.labels[self.zero], self.labels[self.one])


def validate_semiring(labels, add_table, mul_table, zero, one):
    """Check every semiring axiom exhaustively and return the validated value.

    Raises AxiomViolation naming the failing axiom and a witness tuple.
    """
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise AxiomViolation("distinct labels", labels)
    add = tuple(tuple(r) for r in add_table)
    mul = tuple(tuple(r) for r in mul_table)
    for name, tbl in (("addition", add), ("multiplication", mul)):
        if len(tbl) != n or any(len(r) != n for r in tbl):
            raise AxiomViolation("%s table is square" % name, (n,))
        for x in range(n):
            for y in range(n):
                if not 0 <= tbl[x][y] < n:
                    raise AxiomViolation("%s closed" % name, (x, y))
    if not 0 <= zero < n or not 0 <= one < n:
        raise AxiomViolation("zero and one are elements", (zero, one))
    for x in range(n):
        if add[x][x] != x:
            raise AxiomViolation("additive idempotence", (x,))
        if add[zero][x] != x or add[x][zero] != x:
            raise AxiomViolation("zero additively neutral", (x,))
        if mul[zero][x] != zero or mul[x][zero] != zero:
            raise AxiomViolation("zero absorbing", (x,))
        if mul[one][x] != x or mul[x][one] != x:
            raise AxiomViolation("one multiplicatively neutral", (x,))
        for y in range(n):
            if add[x][y] != add[y][x]:
                raise AxiomViolation("addition commutative", (x, y))
            for z in range(n):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise AxiomViolation("addition associative", (x, y, z))
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise AxiomViolation("multiplication associative", (x, y, z))
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    raise AxiomViolation("left distributivity", (x, y, z))
                if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]:
                    raise AxiomViolation("right distributivity", (x, y, z))
    return FiniteSemiring(labels, add, mul, zero, one)


def natural_order_lattice(semiring):
    """The lattice induced by x <= y iff x + y = y; join table equals add table."""
    n = semiring.n
    add = semiring.add_table
    leq = tuple(tuple(add[x][y] == y for y in range(n)) for x in range(n))
    try:
        join, meet, bottom, top = _tables_from_leq(semiring.labels, leq)
    except NotALattice:
        raise NotALattice("additive order of %r is not a lattice "
                          "(corrupted tables?)" % (semiring,))
    assert join == add, "join of the natural order must be the addition"
    assert bottom == semiring.zero
    return FiniteLattice(semiring.labels, leq, join, meet, bottom, top)


def embed(semiring, lattice=None):
    """The representation r -> (x -> r*x) into Res of the natural-order lattice.

    Returns one ResiduatedMap per element, indexed by element.  This is an
    injective semiring homomorphism: addition becomes pointwise join and
    multiplication becomes composition.
    """
    if lattice is None:
        lattice = natural_order_lattice(semiring)
    maps = tuple(ResiduatedMap(lattice, tuple(semiring.mul_table[r]))
                 for r in range(semiring.n))
    assert len(set(maps)) == semiring.n, "embedding must be injective"
    return maps


def pullback_element(res_map, semiring):
    """The unique semiring element whose embedding equals ``res_map``.

    The preimage of an embedded map is its value at the one element; raises
    NotInImage when the map is not an embedded element at all.
    """
    r = res_map.values[semiring.one]
    if tuple(semiring.mul_table[r]) != res_map.values:
        raise NotInImage("map is not the embedding of any element")
    return r


class GeneratedSemiring:
    """Closure of the step-map generators (plus extras) under join and compose.

    ``maps`` is the closure in a canonical order (sorted by value table);
    Cayley tables index into it.  ``one_index`` is None when the identity map
    is absent, in which case the closure is a semiring without one and
    ``to_semiring`` refuses to run.
    """

    def __init__(self, lattice, maps):
        self.lattice = lattice
        self.maps = tuple(sorted(maps, key=lambda f: f.values))
        index = {f.values: i for i, f in enumerate(self.maps)}
        n = len(self.maps)
        self.add_table = tuple(
            tuple(index[pointwise_join(f, g).values] for g in self.maps) for f in self.maps)
        self.mul_table = tuple(
            tuple(index[compose(f, g).values] for g in self.maps) for f in self.maps)
        self.zero_index = index[zero_map(lattice).values]
        self.one_index = index.get(identity_map(lattice).values)

    @property
    def has_one(self):
        return self.one_index is not None

    def __len__(self):
        return len(self.maps)

    def labels(self):
        lat = self.lattice
        return tuple("f" + "".join(str(lat.labels[v]) for v in f.values) for f in self.maps)

    def to_semiring(self, labels=None):
        if self.one_index is None:
            raise ValueError("closure has no multiplicative one")
        if labels is None:
            labels = self.labels()
        return validate_semiring(labels, self.add_table, self.mul_table,
                                 self.zero_index, self.one_index)


def generate_simple_semiring(lattice, extra_generators=(), cap=4096):
    """Smallest subset of Res(L) containing every step map e_{a,b} and the extras,
    closed under pointwise join and composition.

    Always contains the zero map (e_{top,b} is constantly bottom).  Raises
    ClosureTooLarge beyond ``cap`` elements.
    """
    from .resmap import e_map
    seen = {}
    frontier = []

    def push(f):
        if f.values not in seen:
            seen[f.values] = f
            frontier.append(f)

    push(zero_map(lattice))
    for a in range(lattice.n):
        for b in range(lattice.n):
            push(e_map(lattice, a, b))
    for f in extra_generators:
        assert f.domain == lattice
        push(f)
    done = []
    while frontier:
        if len(seen) > cap:
            raise ClosureTooLarge("closure exceeded %d elements" % cap)
        f = frontier.pop()
        for g in done:
            push(compose(f, g))
            push(compose(g, f))
            push(pointwise_join(f, g))
        push(compose(f, f))
        done.append(f)
    if len(seen) > cap:
        raise ClosureTooLarge("closure exceeded %d elements" % cap)
    return GeneratedSemiring(lattice, seen.values())
