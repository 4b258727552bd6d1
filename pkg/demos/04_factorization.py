"""Factoring lattices into irreducible direct factors, and what it buys."""

import random

from resmat import (aut_count, automorphisms, builtin_lattice, factorize,
                    factor_congruences, find_isomorphism, is_irreducible,
                    product, relabel)

# The square splits into two 2-chains; M3 does not split at all.
square = builtin_lattice("square")
fact = factorize(square)
print("square:", fact)
print("grouped:", [(rep.n, e) for rep, e in fact.grouped])
print("m3 irreducible:", is_irreducible(builtin_lattice("m3")))

# Each factor contributes a kernel congruence (elements with equal coordinate);
# together they cut the lattice down to single elements.
for theta in factor_congruences(fact):
    print("factor congruence blocks:", theta.classes())

# The factor multiset is unique up to isomorphism, so it survives relabeling.
chain3, m3 = builtin_lattice("chain3"), builtin_lattice("m3")
cm = product([chain3, m3])
perm = list(range(cm.source.n))
random.Random(1).shuffle(perm)
scrambled = relabel(cm.source, perm)
recovered = factorize(scrambled)
print("\nscrambled 15-element product recovers factors of sizes",
      sorted(f.n for f in recovered.factors))
print("one is chain3:", any(find_isomorphism(f, chain3) for f in recovered.factors))

# Knowing the grouped factors gives the automorphism count by formula:
# multiplicities may swap isomorphic factors, each factor twists independently.
chain2 = builtin_lattice("chain2")
grouped = [(chain2, 1), (m3, 2)]
big = product([chain2, m3, m3]).source
print("\n|Aut(chain2 x m3 x m3)| by formula:", aut_count(grouped))
print("|Aut| by brute force over 50 elements:", len(automorphisms(big)))
