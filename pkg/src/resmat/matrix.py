"""Matrices over Res(L) and over abstract semirings: multiplication, the
structural invertibility criterion, inverse assembly, and counting.

The criterion never touches the exponential tuple space: every entry is a
residuated map, hence determined by its values on the canonical injections,
so it suffices to classify the component maps between factor pairs.  A matrix
is invertible exactly when those components form a permutation pattern of
factor isomorphisms with constant-bottom maps everywhere else.
"""

import math

from .factorization import factorize
from .lattice import automorphisms
from .resmap import (ResiduatedMap, compose, identity_map,
                     is_lattice_automorphism, pointwise_join, zero_map)
from .semiring import embed, natural_order_lattice, pullback_element


class ShapeMismatch(ValueError):
    pass


class FactorizationMismatch(ValueError):
    pass


class CertificateMismatch(ValueError):
    pass


class LatticeNotIrreducible(ValueError):
    pass


class ResMatrix:
    """A square matrix of residuated self-maps of one lattice."""

    def __init__(self, lattice, entries):
        self.lattice = lattice
        self.entries = tuple(tuple(row) for row in entries)
        self.n = len(self.entries)
        assert self.n >= 1
        for row in self.entries:
            assert len(row) == self.n, "matrix must be square"
            for f in row:
                assert isinstance(f, ResiduatedMap) and f.domain == lattice

    @classmethod
    def identity(cls, lattice, n):
        one, zero = identity_map(lattice), zero_map(lattice)
        return cls(lattice, [[one if i == j else zero for j in range(n)]
                             for i in range(n)])

    @classmethod
    def zeros(cls, lattice, n):
        zero = zero_map(lattice)
        return cls(lattice, [[zero] * n for _ in range(n)])

    def __eq__(self, other):
        if not isinstance(other, ResMatrix):
            return NotImplemented
        return (self.lattice == other.lattice and self.n == other.n
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "ResMatrix(%dx%d over %d-element lattice)" % (self.n, self.n, self.lattice.n)


class SemiringMatrix:
    """A square matrix with entries in a finite additively idempotent semiring."""

    def __init__(self, semiring, entries):
        self.semiring = semiring
        self.entries = tuple(tuple(row) for row in entries)
        self.n = len(self.entries)
        assert self.n >= 1
        for row in self.entries:
            assert len(row) == self.n, "matrix must be square"
            for x in row:
                assert 0 <= x < semiring.n

    @classmethod
    def identity(cls, semiring, n):
        z, o = semiring.zero, semiring.one
        return cls(semiring, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, SemiringMatrix):
            return NotImplemented
        return (self.semiring == other.semiring and self.n == other.n
                and self.entries == other.entries)

    def __repr__(self):
        return "SemiringMatrix(%dx%d over %r)" % (self.n, self.n, self.semiring)


def mat_mul(a, b):
    """Matrix product: entry (i,j) is the join over k of a[i,k] composed with b[k,j]."""
    if not (a.lattice == b.lattice and a.n == b.n):
        raise ShapeMismatch("operands do not share lattice and size")
    lat, n = a.lattice, a.n
    zero = zero_map(lat)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                acc = pointwise_join(acc, compose(a.entries[i][k], b.entries[k][j]))
            row.append(acc)
        rows.append(row)
    return ResMatrix(lat, rows)


def phi_of_matrix(matrix):
    """The residuated self-map of L^n represented by the matrix.

    Sends (x_j)_j to (join over j of m[i,j](x_j))_i; matrix product corresponds
    to composition of these maps.
    """
    join = matrix.lattice.join_table
    bottom = matrix.lattice.bottom
    entries = matrix.entries
    n = matrix.n

    def phi(xs):
        out = []
        for i in range(n):
            row = entries[i]
            v = bottom
            for j in range(n):
                v = join[v][row[j].values[xs[j]]]
            out.append(v)
        return tuple(out)

    return phi


class InvertibilityCertificate:
    """Witness of invertibility: a permutation of (factor, row) pairs plus one
    factor isomorphism per pair.

    ``sigma`` maps (t, i) to the (factor, row) coordinate the t-th component of
    row i reads from; ``iso_maps[(t, i)]`` is the isomorphism from factor t onto
    the factor coordinate of sigma_inverse(t, i), stored as a value table.
    """

    def __init__(self, factorization, sigma, iso_maps):
        self.factorization = factorization
        self.sigma = dict(sigma)
        self.iso_maps = dict(iso_maps)
        self.sigma_inverse = {q: p for p, q in self.sigma.items()}
        assert len(self.sigma_inverse) == len(self.sigma)

    def pairs(self):
        return sorted(self.sigma)

    def cycles(self):
        """Cycle decomposition of sigma over the (factor, row) pairs, fixed points dropped."""
        seen = set()
        out = []
        for start in self.pairs():
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            cur = self.sigma[start]
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.sigma[cur]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        return "InvertibilityCertificate(%d pairs, %d cycles)" % (
            len(self.sigma), len(self.cycles()))


def _component_map(matrix, coords, t, i, s, j):
    """The factor-component map of entry (i,j): inject into factor s, apply the
    entry, project to factor t."""
    entry = matrix.entries[i][j].values
    enc = coords.encode
    return tuple(enc(entry[coords.inject(s, y)])[t]
                 for y in range(coords.factors[s].n))


def _classify(table, src, dst):
    """'zero', 'iso', or 'other' for a value table from lattice src to dst."""
    if all(v == dst.bottom for v in table):
        return "zero"
    if src.n != dst.n or len(set(table)) != src.n:
        return "other"
    for x in range(src.n):
        for y in range(src.n):
            if src.leq[x][y] != dst.leq[table[x]][table[y]]:
                return "other"
    return "iso"


def check_invertible(matrix, fact):
    """Certificate of invertibility, or None.

    For every (factor, row) pair the component maps of the matrix must single
    out exactly one source coordinate carrying a factor isomorphism, with
    constant-bottom components everywhere else; the resulting assignment must
    be a permutation of the pairs.
    """
    if fact.source != matrix.lattice:
        raise FactorizationMismatch("factorization is not of the matrix lattice")
    coords = fact.coordinates
    factors = fact.factors
    nt, n = len(factors), matrix.n
    candidates = {}
    iso_tables = {}
    for t in range(nt):
        for i in range(n):
            found = None
            for s in range(nt):
                for j in range(n):
                    table = _component_map(matrix, coords, t, i, s, j)
                    kind = _classify(table, factors[s], factors[t])
                    if kind == "other":
                        return None
                    if kind == "iso":
                        if found is not None:
                            return None
                        found = (s, j)
                        iso_tables[(t, i), (s, j)] = table
            if found is None:
                return None
            candidates[(t, i)] = found
    if len(set(candidates.values())) != len(candidates):
        return None
    sigma = candidates
    iso_maps = {q: iso_tables[p, q] for p, q in sigma.items()}
    return InvertibilityCertificate(fact, sigma, iso_maps)


def assemble_from_certificate(cert, size):
    """The unique matrix whose component maps realize the certificate pattern."""
    fact = cert.factorization
    coords = fact.coordinates
    factors = fact.factors
    lat = fact.source
    nt = len(factors)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            values = []
            for x in range(lat.n):
                cx = coords.encode(x)
                out = []
                for t in range(nt):
                    s, j0 = cert.sigma[(t, i)]
                    if j0 == j:
                        out.append(cert.iso_maps[(s, j0)][cx[s]])
                    else:
                        out.append(factors[t].bottom)
                values.append(coords.decode(out))
            row.append(ResiduatedMap(lat, values))
        rows.append(row)
    return ResMatrix(lat, rows)


def invert(matrix, cert):
    """The inverse matrix assembled from the certificate.

    Entry (i,j) gets, at factor t, the inverse of the certified isomorphism
    when sigma_inverse(t, i) sits in row j, and the constant-bottom component
    otherwise.
    """
    if cert.factorization.source != matrix.lattice:
        raise CertificateMismatch("certificate is for a different lattice")
    if assemble_from_certificate(cert, matrix.n) != matrix:
        raise CertificateMismatch("certificate does not describe this matrix")
    fact = cert.factorization
    coords = fact.coordinates
    factors = fact.factors
    lat = fact.source
    nt, n = len(factors), matrix.n
    inverse_tables = {}
    for p, table in cert.iso_maps.items():
        inv = [0] * len(table)
        for x, y in enumerate(table):
            inv[y] = x
        inverse_tables[p] = inv
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            values = []
            for x in range(lat.n):
                cx = coords.encode(x)
                out = []
                for t in range(nt):
                    s, j0 = cert.sigma_inverse[(t, i)]
                    if j0 == j:
                        out.append(inverse_tables[(t, i)][cx[s]])
                    else:
                        out.append(factors[t].bottom)
                values.append(coords.decode(out))
            row.append(ResiduatedMap(lat, values))
        rows.append(row)
    return ResMatrix(lat, rows)


def is_generalized_permutation(matrix):
    """Exactly one non-zero entry per row and per column, each a lattice automorphism."""
    zero = (matrix.lattice.bottom,) * matrix.lattice.n
    col_nonzero = [0] * matrix.n
    for i in range(matrix.n):
        row_nonzero = 0
        for j in range(matrix.n):
            f = matrix.entries[i][j]
            if f.values == zero:
                continue
            row_nonzero += 1
            col_nonzero[j] += 1
            if not is_lattice_automorphism(f):
                return False
        if row_nonzero != 1:
            return False
    return all(c == 1 for c in col_nonzero)


def check_invertible_fast_irreducible(matrix, fact=None):
    """Invertibility over an irreducible base lattice: generalized permutation test."""
    if fact is None:
        fact = factorize(matrix.lattice)
    if fact.source != matrix.lattice:
        raise FactorizationMismatch("factorization is not of the matrix lattice")
    if len(fact.factors) != 1:
        raise LatticeNotIrreducible(
            "lattice splits into %d factors" % len(fact.factors))
    return is_generalized_permutation(matrix)


def count_invertible(fact, n):
    """Number of invertible n x n matrices over Res of the factored lattice:
    prod over factor classes of (e_t * n)! * |Aut(L_t)|^(e_t * n)."""
    assert n >= 1
    total = 1
    for rep, e in fact.grouped:
        total *= math.factorial(e * n) * len(automorphisms(rep)) ** (e * n)
    return total


def semiring_to_res(matrix):
    """Embed a semiring matrix entrywise into Res of the natural-order lattice."""
    semiring = matrix.semiring
    lattice = natural_order_lattice(semiring)
    maps = embed(semiring, lattice)
    return ResMatrix(lattice, [[maps[x] for x in row] for row in matrix.entries])


def semiring_matrix_invert(matrix):
    """Inverse of a semiring matrix through the residuated-map pipeline, or None.

    Embed, factorize the natural-order lattice, run the structural check,
    invert, and pull every entry back: the inverse of a matrix over the
    embedded subsemiring stays inside it.
    """
    res = semiring_to_res(matrix)
    fact = factorize(res.lattice)
    cert = check_invertible(res, fact)
    if cert is None:
        return None
    inv = invert(res, cert)
    semiring = matrix.semiring
    entries = [[pullback_element(f, semiring) for f in row] for row in inv.entries]
    return SemiringMatrix(semiring, entries)


def random_invertible_matrix(fact, n, rng):
    """A uniformly structured invertible matrix: sample the pair permutation
    within isomorphism classes and each factor isomorphism uniformly.

    Draw order is fixed (classes in order, pairs sorted), so one seed gives
    one matrix.
    """
    factors = fact.factors
    assert factors, "base lattice is trivial; every matrix is the identity"
    group_auts = [automorphisms(rep) for rep, _ in fact.grouped]
    sigma = {}
    for gi in range(len(fact.grouped)):
        members = [(t, i) for t in range(len(factors))
                   if fact.group_of[t] == gi for i in range(n)]
        targets = list(members)
        rng.shuffle(targets)
        sigma.update(zip(members, targets))
    iso_maps = {}
    for p in sorted(sigma):
        q = sigma[p]
        t, s = p[0], q[0]
        gi = fact.group_of[t]
        to_rep_s = fact.iso_to_rep[s]
        to_rep_t = fact.iso_to_rep[t]
        from_rep_t = [0] * len(to_rep_t)
        for x, y in enumerate(to_rep_t):
            from_rep_t[y] = x
        aut = group_auts[gi][rng.randrange(len(group_auts[gi]))]
        iso_maps[q] = tuple(from_rep_t[aut[to_rep_s[y]]]
                            for y in range(factors[s].n))
    cert = InvertibilityCertificate(fact, sigma, iso_maps)
    return assemble_from_certificate(cert, n)
