"""Finite additively idempotent semirings and their lattice representation."""

from resmat import (AxiomViolation, builtin_semiring, embed,
                    natural_order_lattice, pullback_element, validate_semiring)

# Cayley tables in, validated semiring out.  The Boolean semiring:
B = validate_semiring(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)
print("validated:", B)

# Validation is exhaustive and names the broken axiom with a witness.
try:
    validate_semiring(["0", "1"], [[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)
except AxiomViolation as exc:
    print("Z/2 rejected:", exc)

# Additive idempotence turns the carrier into a lattice via x <= y iff x+y=y;
# addition becomes the join.
maxplus = builtin_semiring("maxplus3")
order = natural_order_lattice(maxplus)
print("\ntruncated max-plus order:",
      " < ".join(str(order.labels[x]) for x in range(order.n)))
print("join table equals addition:", order.join_table == maxplus.add_table)

# Every element r embeds as the residuated map x -> r*x on that lattice, and
# the element is recovered by evaluating at one.
maps = embed(maxplus, order)
for r in range(maxplus.n):
    print("T[%s] = %s, pulls back to %s" % (
        maxplus.labels[r],
        [order.labels[v] for v in maps[r].values],
        maxplus.labels[pullback_element(maps[r], maxplus)]))
