"""Deciding matrix invertibility and building inverses, two independent ways."""

import random

from resmat import (ResMatrix, SemiringMatrix, builtin_lattice,
                    builtin_semiring, check_invertible, count_invertible,
                    factorize, identity_map, invert, make_map, mat_mul,
                    oracle_inverse, oracle_is_invertible, phi_of_matrix,
                    random_invertible_matrix, semiring_matrix_invert, zero_map)

chain2 = builtin_lattice("chain2")
one, zero = identity_map(chain2), zero_map(chain2)

# The matrix acts on tuples: row i joins the entrywise images.  This one
# collapses (1,0) and (1,1), so it cannot be invertible.
m = ResMatrix(chain2, [[one, one], [zero, one]])
phi = phi_of_matrix(m)
print("images:", {xs: phi(xs) for xs in [(0, 0), (0, 1), (1, 0), (1, 1)]})
fact2 = factorize(chain2)
print("structural check:", check_invertible(m, fact2))
print("oracle:", oracle_is_invertible(m))

# Over the square (which factors as chain2 x chain2) the coordinate swap is a
# 1x1 invertible matrix; its certificate transposes the two factor slots.
square = builtin_lattice("square")
swap = ResMatrix(square, [[make_map(square, (0, 2, 1, 3))]])
fact_sq = factorize(square)
cert = check_invertible(swap, fact_sq)
print("\nswap certificate sigma:", cert.sigma)
inverse = invert(swap, cert)
print("swap is an involution:", inverse == swap)
print("oracle inverse agrees:", oracle_inverse(swap) == inverse)

# Random structurally invertible matrices round-trip to the identity.
m3 = builtin_lattice("m3")
fact_m3 = factorize(m3)
rng = random.Random(0)
sample = random_invertible_matrix(fact_m3, 3, rng)
inv = invert(sample, check_invertible(sample, fact_m3))
print("\nrandom 3x3 over m3: M*M^-1 == I:",
      mat_mul(sample, inv) == ResMatrix.identity(m3, 3))
print("number of invertible 3x3 matrices over Res(m3):",
      count_invertible(fact_m3, 3))

# Abstract semirings ride the same machinery through the embedding.
maxplus = builtin_semiring("maxplus3")
p = SemiringMatrix(maxplus, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
print("\npermutation over truncated max-plus, inverse:")
for row in semiring_matrix_invert(p).entries:
    print("  ", [maxplus.labels[x] for x in row])
