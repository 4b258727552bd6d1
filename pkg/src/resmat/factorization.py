"""Direct-product factorization of finite lattices into irreducible factors.

The factor multiset is unique up to isomorphism, so grouping by isomorphism
class is well defined; the split search below finds complementary pairs
(u, v) whose meet is bottom and join is top and verifies x -> (x meet u,
x meet v) is an isomorphism onto the product of the two intervals.
"""

import math

from .lattice import CoordinateMap, automorphisms, find_isomorphism, interval


class DuplicateFactorClass(ValueError):
    pass


class NotACongruence(ValueError):
    pass


class Congruence:
    """A lattice congruence stored as a partition (block index per element)."""

    def __init__(self, lattice, blocks):
        self.lattice = lattice
        self.blocks = _normalize_blocks(blocks)
        self.num_blocks = max(self.blocks) + 1 if self.blocks else 0

    def related(self, x, y):
        return self.blocks[x] == self.blocks[y]

    def classes(self):
        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.blocks):
            out[b].append(x)
        return out

    def is_equality(self):
        return self.num_blocks == self.lattice.n

    def is_total(self):
        return self.num_blocks == 1

    def validate(self):
        """Check compatibility with join and meet; raises NotACongruence."""
        lat, blocks = self.lattice, self.blocks
        n = lat.n
        for x in range(n):
            for x2 in range(x + 1, n):
                if blocks[x] != blocks[x2]:
                    continue
                for y in range(n):
                    if blocks[lat.join_table[x][y]] != blocks[lat.join_table[x2][y]]:
                        raise NotACongruence(
                            "join incompatible on (%d, %d) with %d" % (x, x2, y))
                    if blocks[lat.meet_table[x][y]] != blocks[lat.meet_table[x2][y]]:
                        raise NotACongruence(
                            "meet incompatible on (%d, %d) with %d" % (x, x2, y))
        return self

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.lattice == other.lattice and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "Congruence(%d blocks on %d elements)" % (self.num_blocks, self.lattice.n)


def _normalize_blocks(blocks):
    # renumber block ids by first occurrence so equal partitions compare equal
    seen = {}
    out = []
    for b in blocks:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


def equality_congruence(lattice):
    return Congruence(lattice, tuple(range(lattice.n)))


def total_congruence(lattice):
    return Congruence(lattice, (0,) * lattice.n)


class Factorization:
    """Irreducible factors of a lattice together with the coordinate isomorphism.

    ``grouped`` lists one representative per isomorphism class with its
    multiplicity; ``group_of`` maps each factor index to its class index and
    ``iso_to_rep`` carries an isomorphism from each factor onto its class
    representative (identity tuple for the representative itself).
    """

    def __init__(self, source, factors, coordinates):
        self.source = source
        self.factors = tuple(factors)
        self.coordinates = coordinates
        grouped = []
        group_of = []
        iso_to_rep = []
        for f in self.factors:
            for gi, (rep, _) in enumerate(grouped):
                iso = find_isomorphism(f, rep)
                if iso is not None:
                    grouped[gi] = (rep, grouped[gi][1] + 1)
                    group_of.append(gi)
                    iso_to_rep.append(iso)
                    break
            else:
                grouped.append((f, 1))
                group_of.append(len(grouped) - 1)
                iso_to_rep.append(tuple(range(f.n)))
        self.grouped = tuple(grouped)
        self.group_of = tuple(group_of)
        self.iso_to_rep = tuple(iso_to_rep)

    def __repr__(self):
        sizes = "x".join(str(f.n) for f in self.factors) or "trivial"
        return "Factorization(%d elements = %s)" % (self.source.n, sizes)


def _find_split(lattice):
    """Least complementary pair (u, v) realizing a direct split, or None.

    Checks that x -> (x meet u, x meet v) is a bijection preserving order in
    both directions onto [bottom, u] x [bottom, v].
    """
    n = lattice.n
    leq, meet, join = lattice.leq, lattice.meet_table, lattice.join_table
    bottom, top = lattice.bottom, lattice.top
    for u in range(n):
        if u == bottom:
            continue
        for v in range(n):
            if v == bottom or meet[u][v] != bottom or join[u][v] != top:
                continue
            a = interval(lattice, bottom, u)
            b = interval(lattice, bottom, v)
            if a.lattice.n * b.lattice.n != n:
                continue
            pairs = [(a.position(meet[x][u]), b.position(meet[x][v])) for x in range(n)]
            if len(set(pairs)) != n:
                continue
            ok = True
            for x in range(n):
                xa, xb = pairs[x]
                for y in range(n):
                    ya, yb = pairs[y]
                    if leq[x][y] != (a.lattice.leq[xa][ya] and b.lattice.leq[xb][yb]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return a, b, pairs
    return None


def _irreducible_parts(lattice):
    """Recursive split into irreducible parts; returns (factors, encode tuples)."""
    split = _find_split(lattice)
    if split is None:
        return [lattice], [(x,) for x in range(lattice.n)]
    a, b, pairs = split
    fa, enc_a = _irreducible_parts(a.lattice)
    fb, enc_b = _irreducible_parts(b.lattice)
    encode = [enc_a[xa] + enc_b[xb] for xa, xb in pairs]
    return fa + fb, encode


def factorize(lattice):
    """Factor a lattice into irreducible direct factors with explicit coordinates.

    The trivial lattice yields an empty factor list.
    """
    if lattice.n == 1:
        coords = CoordinateMap(lattice, (), [()])
        return Factorization(lattice, (), coords)
    factors, encode = _irreducible_parts(lattice)
    coords = CoordinateMap(lattice, factors, encode)
    return Factorization(lattice, factors, coords)


def is_irreducible(lattice):
    """True iff the lattice is nontrivial and admits no nontrivial direct split."""
    return lattice.n >= 2 and len(factorize(lattice).factors) == 1


def factor_congruences(fact):
    """The kernel congruence of each coordinate projection.

    Block of x in the t-th congruence is determined by encode(x)[t]; the
    family intersects to the equality relation and induces a bijection onto
    the product of quotients (a maximal direct decomposition).
    """
    src = fact.source
    return [Congruence(src, tuple(fact.coordinates.project(x, t) for x in range(src.n)))
            for t in range(len(fact.factors))]


def congruence_product(theta_l, theta_k, product_map=None):
    """The congruence on L x K relating (a,b) to (c,d) iff a~c and b~d.

    ``product_map`` may supply a prebuilt product of the two lattices;
    otherwise one is constructed.  The result lives on product_map.source.
    """
    from .lattice import product as build_product
    if product_map is None:
        product_map = build_product([theta_l.lattice, theta_k.lattice])
    assert tuple(product_map.factors) == (theta_l.lattice, theta_k.lattice)
    src = product_map.source
    blocks = []
    for x in range(src.n):
        a, b = product_map.encode(x)
        blocks.append((theta_l.blocks[a], theta_k.blocks[b]))
    return Congruence(src, blocks)


def aut_count(grouped):
    """Automorphism count of a product from grouped factors: prod e_t! * |Aut(L_t)|^e_t."""
    reps = [rep for rep, _ in grouped]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if find_isomorphism(reps[i], reps[j]) is not None:
                raise DuplicateFactorClass(
                    "grouped entries %d and %d are isomorphic" % (i, j))
    total = 1
    for rep, e in grouped:
        total *= math.factorial(e) * len(automorphisms(rep)) ** e
    return total
