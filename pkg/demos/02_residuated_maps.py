"""Residuated self-maps of a lattice form a semiring under join and composition."""

from resmat import (builtin_lattice, compose, e_map, identity_map, invert_map,
                    is_lattice_automorphism, make_map,
                    oracle_enumerate_residuated, pointwise_join, zero_map)

square = builtin_lattice("square")  # 0 < a, b < 1

# A residuated map preserves binary joins and the bottom; make_map validates.
swap = make_map(square, (0, 2, 1, 3))
print("swap:", swap)

# Step maps e_{a,b} send everything below the threshold a to bottom and the
# rest to b; they generate the simple subsemirings used later.
step = e_map(square, square.index("a"), square.top)
print("e_(a,1):", step)

# The semiring structure: pointwise join is addition, composition is
# multiplication, the constant-bottom map is zero and the identity is one.
print("\nswap o step:", compose(swap, step))
print("swap v step:", pointwise_join(swap, step))
print("zero + swap == swap:", pointwise_join(zero_map(square), swap) == swap)
print("id o step == step:", compose(identity_map(square), step) == step)

# A residuated map is a lattice automorphism exactly when its table is a
# bijection; the inverse of an automorphism is a power of the map itself.
print("\nswap bijective:", is_lattice_automorphism(swap))
print("swap^-1 == swap:", invert_map(swap) == swap)

m3 = builtin_lattice("m3")
cycle = make_map(m3, (0, 2, 3, 1, 4))   # rotate the three atoms
print("3-cycle inverse equals its square:",
      invert_map(cycle) == compose(cycle, cycle))

# How many residuated maps are there?  The enumeration walks assignments on
# the join-irreducible elements and extends them by joins.
for name in ("chain2", "chain3", "square", "m3"):
    lattice = builtin_lattice(name)
    print("|Res(%s)| = %d" % (name, len(oracle_enumerate_residuated(lattice))))
