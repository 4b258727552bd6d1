"""Brute-force ground truth, kept deliberately separate from the structural path.

Matrix invertibility is decided here by scanning the whole tuple space for
bijectivity, and inverses are extracted from powers of the tuple-space
permutation; the structural algorithms never see this code.  Caps are hard
errors: a truncated oracle is worse than none.
"""

from itertools import product as iter_product

from .matrix import ResMatrix, phi_of_matrix
from .resmap import NotInvertible, ResiduatedMap, make_map


class SpaceTooLarge(RuntimeError):
    pass


class LatticeTooLarge(RuntimeError):
    pass


class SemiringTooLarge(RuntimeError):
    pass


class TupleSpace:
    """All |L|^n tuples over a lattice, enumerated lexicographically."""

    def __init__(self, lattice, arity):
        self.lattice = lattice
        self.arity = arity
        self.size = lattice.n ** arity

    def index(self, coords):
        i = 0
        for c in coords:
            i = i * self.lattice.n + c
        return i

    def tuple_at(self, i):
        base = self.lattice.n
        out = [0] * self.arity
        for k in range(self.arity - 1, -1, -1):
            i, out[k] = divmod(i, base)
        return tuple(out)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter_product(range(self.lattice.n), repeat=self.arity)


def _phi_permutation(matrix, cap):
    """Tuple-space image table of the matrix map, or None on a collision."""
    space = TupleSpace(matrix.lattice, matrix.n)
    if space.size > cap:
        raise SpaceTooLarge("tuple space has %d elements (cap %d)" % (space.size, cap))
    phi = phi_of_matrix(matrix)
    table = [0] * space.size
    seen = bytearray(space.size)
    for i, xs in enumerate(space):
        j = space.index(phi(xs))
        if seen[j]:
            return space, None
        seen[j] = 1
        table[i] = j
    return space, table


def oracle_is_invertible(matrix, cap=10 ** 6):
    """True iff the matrix map is a bijection of the whole tuple space."""
    _, table = _phi_permutation(matrix, cap)
    return table is not None


def oracle_inverse(matrix, cap=10 ** 6):
    """Inverse matrix recovered from the tuple-space permutation.

    Finds the least k with phi^k = id by iterated application, takes
    phi^(k-1), and reads matrix entries off the canonical injections.
    """
    space, table = _phi_permutation(matrix, cap)
    if table is None:
        raise NotInvertible("matrix map is not a bijection")
    ident = list(range(space.size))
    prev, cur = ident, table
    while cur != ident:
        prev, cur = cur, [table[i] for i in cur]
    lat, n = matrix.lattice, matrix.n
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            values = []
            for y in range(lat.n):
                xs = [lat.bottom] * n
                xs[j] = y
                values.append(space.tuple_at(prev[space.index(xs)])[i])
            row.append(make_map(lat, values))
        entries.append(row)
    return ResMatrix(lat, entries)


def oracle_enumerate_residuated(lattice, max_size=8):
    """Complete duplicate-free enumeration of Res(L).

    Walks monotone assignments on the join-irreducibles (in a linear-extension
    order), extends each by joins, and keeps the tables that really preserve
    all joins.  Every residuated map arises this way exactly once.
    """
    if lattice.n > max_size:
        raise LatticeTooLarge("lattice has %d elements (cap %d)" % (lattice.n, max_size))
    n = lattice.n
    leq, join = lattice.leq, lattice.join_table
    irr = sorted(lattice.join_irreducibles,
                 key=lambda x: (sum(leq[z][x] for z in range(n)), x))
    below = [[p for p in irr if leq[p][x]] for x in range(n)]
    out = []
    assignment = {}

    def extend_and_check():
        values = []
        for x in range(n):
            v = lattice.bottom
            for p in below[x]:
                v = join[v][assignment[p]]
            values.append(v)
        for x in range(n):
            for y in range(x + 1, n):
                if values[join[x][y]] != join[values[x]][values[y]]:
                    return
        out.append(ResiduatedMap(lattice, tuple(values)))

    def assign(k):
        if k == len(irr):
            extend_and_check()
            return
        p = irr[k]
        lower = lattice.bottom
        for q in irr[:k]:
            if leq[q][p]:
                lower = join[lower][assignment[q]]
        for v in range(n):
            if leq[lower][v]:
                assignment[p] = v
                assign(k + 1)
        assignment.pop(p, None)

    assign(0)
    return out


def _set_partitions(n):
    """All partitions of range(n) as block-index tuples, in restricted-growth order."""
    blocks = [0] * n

    def rec(i, used):
        if i == n:
            yield tuple(blocks)
            return
        for b in range(used + 1):
            blocks[i] = b
            yield from rec(i + 1, used + (b == used))

    if n == 0:
        yield ()
        return
    yield from rec(1, 1)


def oracle_semiring_congruences(semiring, max_size=10):
    """All partitions of the carrier compatible with both operations.

    The semiring is simple iff this returns exactly the equality and the
    total partition (just one partition when the carrier is a single element).
    """
    n = semiring.n
    if n > max_size:
        raise SemiringTooLarge("semiring has %d elements (cap %d)" % (n, max_size))
    add, mul = semiring.add_table, semiring.mul_table
    found = []
    for blocks in _set_partitions(n):
        ok = True
        for x in range(n):
            for x2 in range(x + 1, n):
                if blocks[x] != blocks[x2]:
                    continue
                for y in range(n):
                    if (blocks[add[x][y]] != blocks[add[x2][y]]
                            or blocks[mul[x][y]] != blocks[mul[x2][y]]
                            or blocks[mul[y][x]] != blocks[mul[y][x2]]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.append(blocks)
    return found
