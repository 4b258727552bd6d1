"""Build finite lattices, combine them, and look at their symmetries."""

from resmat import (automorphisms, build_lattice, builtin_lattice,
                    find_isomorphism, interval, product)

# A lattice is given by labels plus cover pairs (lower, upper); the library
# closes the covers into a full order and checks that every pair of elements
# has a least upper bound and a greatest lower bound.
diamond = build_lattice(
    ["0", "a", "b", "c", "1"],
    [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
print("M3:", diamond)
print("join(a, b) =", diamond.labels[diamond.join(1, 2)])
print("meet(a, b) =", diamond.labels[diamond.meet(1, 2)])

# Automorphisms permute the three atoms freely: the group has 3! elements.
auts = automorphisms(diamond)
print("automorphisms of M3:", len(auts))
for f in auts[:3]:
    print("  ", [diamond.labels[f[x]] for x in range(diamond.n)])

# Direct products enumerate elements lexicographically; the returned
# coordinate map encodes/decodes between the product and its factors.
chain2 = builtin_lattice("chain2")
cm = product([chain2, diamond])
print("\nchain2 x M3 has", cm.source.n, "elements")
x = cm.decode((1, 3))
print("element with coordinates (1, c):", cm.source.labels[x])
print("its coordinates again:", cm.encode(x))
print("automorphisms of the product:", len(automorphisms(cm.source)))

# Intervals [lo, hi] are sublattices with the induced operations.
upper = interval(diamond, diamond.index("a"), diamond.top)
print("\ninterval [a, 1] of M3 has", upper.lattice.n, "elements:",
      upper.lattice.labels)
print("is it a 2-chain?",
      find_isomorphism(upper.lattice, chain2) is not None)
