"""Generating simple semirings from step maps and verifying simplicity."""

from resmat import (builtin_lattice, generate_simple_semiring,
                    oracle_enumerate_residuated, oracle_semiring_congruences)

# Closing the step maps e_{a,b} under join and composition yields a simple
# semiring with zero.  Over the 3-chain the closure is all of Res(chain3).
chain3 = builtin_lattice("chain3")
gen = generate_simple_semiring(chain3)
print("closure over chain3: %d maps, has one: %s" % (len(gen), gen.has_one))
print("equals Res(chain3):",
      set(gen.maps) == set(oracle_enumerate_residuated(chain3)))

semiring = gen.to_semiring()
congruences = oracle_semiring_congruences(semiring)
print("congruences found:", len(congruences), "(equality and total only)")

# Over the square the closure is all 16 residuated maps, identity included.
square = builtin_lattice("square")
gen_sq = generate_simple_semiring(square)
print("\nclosure over square: %d maps, has one: %s" % (len(gen_sq), gen_sq.has_one))

# Over M3 the closure never produces the identity: a simple semiring with
# zero but without one.  The matrix layer refuses such carriers.
m3 = builtin_lattice("m3")
gen_m3 = generate_simple_semiring(m3)
print("closure over m3: %d maps, has one: %s" % (len(gen_m3), gen_m3.has_one))
