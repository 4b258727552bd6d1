"""Finite lattices as immutable tables: construction, products, intervals, isomorphisms."""

from functools import cached_property
from itertools import product as iter_product


class LatticeError(ValueError):
    pass


class DuplicateLabel(LatticeError):
    pass


class CyclicCovers(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotComparable(LatticeError):
    pass


class FiniteLattice:
    """A finite lattice on elements 0..n-1 with precomputed order and join/meet tables.

    Elements are dense indices; ``labels`` carries the user-facing names in
    enumeration order.  Instances are immutable after construction and safe to
    share between threads.  Use :func:`build_lattice` or :func:`lattice_from_leq`
    instead of calling the constructor directly.
    """

    def __init__(self, labels, leq, join_table, meet_table, bottom, top):
        self.n = len(labels)
        self.labels = tuple(labels)
        self.leq = leq
        self.join_table = join_table
        self.meet_table = meet_table
        self.bottom = bottom
        self.top = top

    def le(self, x, y):
        return self.leq[x][y]

    def join(self, x, y):
        return self.join_table[x][y]

    def meet(self, x, y):
        return self.meet_table[x][y]

    def join_all(self, xs):
        out = self.bottom
        for x in xs:
            out = self.join_table[out][x]
        return out

    def index(self, label):
        return self._label_index[label]

    @cached_property
    def _label_index(self):
        return {lbl: i for i, lbl in enumerate(self.labels)}

    @cached_property
    def covers(self):
        """All pairs (x, y) with x < y and nothing strictly between, in index order."""
        n, leq = self.n, self.leq
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not leq[x][y]:
                    continue
                if not any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                    out.append((x, y))
        return tuple(out)

    @cached_property
    def join_irreducibles(self):
        """Elements with exactly one lower cover (excludes bottom)."""
        lower = [0] * self.n
        for _, y in self.covers:
            lower[y] += 1
        return tuple(x for x in range(self.n) if lower[x] == 1)

    @cached_property
    def _signatures(self):
        # cheap per-element isomorphism invariants used to prune searches
        n, leq, covers = self.n, self.leq, self.covers
        down = [sum(leq[z][x] for z in range(n)) for x in range(n)]
        up = [sum(leq[x][z] for z in range(n)) for x in range(n)]
        updeg = [0] * n
        dndeg = [0] * n
        for x, y in covers:
            updeg[x] += 1
            dndeg[y] += 1
        return tuple((down[x], up[x], dndeg[x], updeg[x]) for x in range(n))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.labels == other.labels and self.leq == other.leq

    def __hash__(self):
        return hash((self.labels, self.leq))

    def __repr__(self):
        return "FiniteLattice(%d elements, bottom=%r, top=%r)" % (
            self.n, self.labels[self.bottom], self.labels[self.top])


def _tables_from_leq(labels, leq):
    """Compute join/meet tables plus bottom/top from an order relation.

    Raises NotALattice naming the first pair without a unique least upper
    bound or greatest lower bound.
    """
    n = len(labels)
    up_mask = [0] * n
    dn_mask = [0] * n
    for x in range(n):
        for z in range(n):
            if leq[x][z]:
                up_mask[x] |= 1 << z
            if leq[z][x]:
                dn_mask[x] |= 1 << z
    # x is the least element of a common-upper-bound set U iff x in U and up(x) == U
    up_id = {up_mask[x]: x for x in range(n)}
    dn_id = {dn_mask[x]: x for x in range(n)}
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ub = up_mask[x] & up_mask[y]
            z = up_id.get(ub)
            if z is None:
                raise NotALattice(
                    "no least upper bound for (%r, %r)" % (labels[x], labels[y]))
            join[x][y] = z
            lb = dn_mask[x] & dn_mask[y]
            z = dn_id.get(lb)
            if z is None:
                raise NotALattice(
                    "no greatest lower bound for (%r, %r)" % (labels[x], labels[y]))
            meet[x][y] = z
    full = (1 << n) - 1
    bottom = up_id.get(full)
    top = dn_id.get(full)
    if bottom is None or top is None:
        raise NotALattice("order has no bottom or no top")
    return (tuple(tuple(r) for r in join), tuple(tuple(r) for r in meet), bottom, top)


def lattice_from_leq(labels, leq):
    """Build a validated lattice from labels and an order table (tuple of bool rows).

    The relation must already be reflexive, antisymmetric and transitive.
    """
    n = len(labels)
    if len(set(labels)) != n:
        raise DuplicateLabel("labels are not distinct")
    for x in range(n):
        if not leq[x][x]:
            raise NotALattice("order not reflexive at %r" % (labels[x],))
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise NotALattice("order not antisymmetric on (%r, %r)" % (labels[x], labels[y]))
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    raise NotALattice(
                        "order not transitive via (%r, %r, %r)" % (labels[x], labels[y], labels[z]))
    join, meet, bottom, top = _tables_from_leq(labels, leq)
    return FiniteLattice(tuple(labels), tuple(tuple(r) for r in leq), join, meet, bottom, top)


def build_lattice(labels, cover_pairs):
    """Build a lattice from labels and cover pairs (lower, upper).

    The order is the reflexive-transitive closure of the covers; element
    enumeration order equals label order.
    """
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise DuplicateLabel("labels are not distinct")
    idx = {lbl: i for i, lbl in enumerate(labels)}
    leq = [[x == y for y in range(n)] for x in range(n)]
    for lo, hi in cover_pairs:
        if lo not in idx or hi not in idx:
            raise LatticeError("cover (%r, %r) names an unknown label" % (lo, hi))
        leq[idx[lo]][idx[hi]] = True
    # Warshall closure
    for k in range(n):
        lk = leq[k]
        for x in range(n):
            if leq[x][k]:
                lx = leq[x]
                for y in range(n):
                    if lk[y]:
                        lx[y] = True
    for x in range(n):
        for y in range(x + 1, n):
            if leq[x][y] and leq[y][x]:
                raise CyclicCovers(
                    "covers form a cycle through (%r, %r)" % (labels[x], labels[y]))
    leq = tuple(tuple(r) for r in leq)
    join, meet, bottom, top = _tables_from_leq(labels, leq)
    return FiniteLattice(labels, leq, join, meet, bottom, top)


def relabel(lattice, perm, labels=None):
    """Copy of ``lattice`` with element x moved to index perm[x].

    New labels default to the old ones carried along with their elements.
    """
    n = lattice.n
    assert sorted(perm) == list(range(n)), "perm must be a permutation of 0..n-1"
    if labels is None:
        labels = [None] * n
        for x in range(n):
            labels[perm[x]] = lattice.labels[x]
    leq = [[False] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            leq[perm[x]][perm[y]] = lattice.leq[x][y]
            join[perm[x]][perm[y]] = perm[lattice.join_table[x][y]]
            meet[perm[x]][perm[y]] = perm[lattice.meet_table[x][y]]
    return FiniteLattice(
        tuple(labels),
        tuple(tuple(r) for r in leq),
        tuple(tuple(r) for r in join),
        tuple(tuple(r) for r in meet),
        perm[lattice.bottom],
        perm[lattice.top],
    )


class CoordinateMap:
    """A lattice isomorphism between ``source`` and the direct product of ``factors``.

    ``encode`` sends an element to its coordinate tuple, ``decode`` inverts it.
    ``inject(t, y)`` realizes the canonical injection of factor t: coordinate t
    is y, every other coordinate is that factor's bottom.
    """

    def __init__(self, source, factors, encode_table):
        self.source = source
        self.factors = tuple(factors)
        self._enc = tuple(tuple(c) for c in encode_table)
        self._dec = {c: x for x, c in enumerate(self._enc)}
        assert len(self._dec) == source.n, "encode table is not injective"

    def encode(self, x):
        return self._enc[x]

    def decode(self, coords):
        return self._dec[tuple(coords)]

    def project(self, x, t):
        return self._enc[x][t]

    def inject(self, t, y):
        coords = [f.bottom for f in self.factors]
        coords[t] = y
        return self._dec[tuple(coords)]

    def check(self):
        """Verify the isomorphism laws; used by tests, not by the hot path."""
        src = self.source
        for x in range(src.n):
            assert self.decode(self.encode(x)) == x
        for x in range(src.n):
            for y in range(src.n):
                jc = tuple(f.join_table[a][b] for f, a, b in
                           zip(self.factors, self._enc[x], self._enc[y]))
                mc = tuple(f.meet_table[a][b] for f, a, b in
                           zip(self.factors, self._enc[x], self._enc[y]))
                assert self._enc[src.join_table[x][y]] == jc
                assert self._enc[src.meet_table[x][y]] == mc
        return True


def product(factors):
    """Direct product of lattices, with lexicographic element enumeration.

    Returns the CoordinateMap from the freshly built product lattice onto the
    factor tuple space.
    """
    factors = tuple(factors)
    assert factors, "product of zero factors is not supported here"
    coords = list(iter_product(*(range(f.n) for f in factors)))
    pos = {c: i for i, c in enumerate(coords)}
    n = len(coords)
    labels = tuple(
        "(" + ",".join(str(f.labels[c]) for f, c in zip(factors, cs)) + ")"
        for cs in coords)
    leq = tuple(
        tuple(all(f.leq[a][b] for f, a, b in zip(factors, ca, cb)) for cb in coords)
        for ca in coords)
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i, ca in enumerate(coords):
        for j, cb in enumerate(coords):
            join[i][j] = pos[tuple(f.join_table[a][b] for f, a, b in zip(factors, ca, cb))]
            meet[i][j] = pos[tuple(f.meet_table[a][b] for f, a, b in zip(factors, ca, cb))]
    bottom = pos[tuple(f.bottom for f in factors)]
    top = pos[tuple(f.top for f in factors)]
    lattice = FiniteLattice(labels, leq,
                            tuple(tuple(r) for r in join),
                            tuple(tuple(r) for r in meet), bottom, top)
    return CoordinateMap(lattice, factors, coords)


class Interval:
    """Sublattice {x : lo <= x <= hi} plus the correspondence back to the parent.

    ``elements[k]`` is the parent index of interval element k.
    """

    def __init__(self, lattice, elements):
        self.lattice = lattice
        self.elements = tuple(elements)

    def position(self, parent_element):
        return self._pos[parent_element]

    @cached_property
    def _pos(self):
        return {e: k for k, e in enumerate(self.elements)}


def interval(lattice, lo, hi):
    """The interval sublattice [lo, hi] with induced operations."""
    if not lattice.leq[lo][hi]:
        raise NotComparable("%r is not below %r" % (lattice.labels[lo], lattice.labels[hi]))
    elems = [x for x in range(lattice.n) if lattice.leq[lo][x] and lattice.leq[x][hi]]
    pos = {e: k for k, e in enumerate(elems)}
    labels = tuple(lattice.labels[e] for e in elems)
    leq = tuple(tuple(lattice.leq[a][b] for b in elems) for a in elems)
    # joins and meets of interval elements stay inside the interval
    join = tuple(tuple(pos[lattice.join_table[a][b]] for b in elems) for a in elems)
    meet = tuple(tuple(pos[lattice.meet_table[a][b]] for b in elems) for a in elems)
    sub = FiniteLattice(labels, leq, join, meet, pos[lo], pos[hi])
    return Interval(sub, elems)


def _iso_search(L, K, find_all):
    """Backtracking order-isomorphism search, elements assigned in index order.

    Signature pruning (down-set/up-set sizes and cover degrees) keeps this fast
    for desk-scale lattices.  Deterministic: candidates tried in ascending index
    order, so for automorphisms the identity comes out first.
    """
    n = L.n
    if n != K.n:
        return
    sig_l, sig_k = L._signatures, K._signatures
    if sorted(sig_l) != sorted(sig_k):
        return
    lleq, kleq = L.leq, K.leq
    mapping = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            yield tuple(mapping)
            return
        sx = sig_l[x]
        for y in range(n):
            if used[y] or sig_k[y] != sx:
                continue
            ok = True
            for x2 in range(x):
                y2 = mapping[x2]
                if lleq[x][x2] != kleq[y][y2] or lleq[x2][x] != kleq[y2][y]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            yield from extend(x + 1)
            mapping[x] = -1
            used[y] = False

    if find_all:
        yield from extend(0)
    else:
        for m in extend(0):
            yield m
            return


def find_isomorphism(L, K):
    """A join-and-meet-preserving bijection L -> K as an index tuple, or None."""
    for m in _iso_search(L, K, find_all=False):
        return m
    return None


def automorphisms(lattice):
    """All order-automorphisms of the lattice, identity first, duplicate-free."""
    return list(_iso_search(lattice, lattice, find_all=True))
