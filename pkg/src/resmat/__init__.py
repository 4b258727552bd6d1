"""Matrices over finite additively idempotent semirings: invertibility,
inverses, and counting via residuated maps on finite lattices.

The library decides whether a matrix over such a semiring is invertible by
representing elements as residuated self-maps of the natural-order lattice,
factoring the lattice into irreducible direct factors, and matching component
maps against a permutation-of-isomorphisms pattern.  A brute-force oracle
(tuple-space bijectivity) ships alongside the structural path for
cross-validation.
"""

from .catalog import builtin, builtin_lattice, builtin_semiring
from .factorization import (Congruence, DuplicateFactorClass, Factorization,
                            aut_count, congruence_product, factor_congruences,
                            factorize, is_irreducible)
from .lattice import (CoordinateMap, CyclicCovers, DuplicateLabel,
                      FiniteLattice, Interval, LatticeError, NotALattice,
                      NotComparable, automorphisms, build_lattice,
                      find_isomorphism, interval, lattice_from_leq, product,
                      relabel)
from .matrix import (CertificateMismatch, FactorizationMismatch,
                     InvertibilityCertificate, LatticeNotIrreducible,
                     ResMatrix, SemiringMatrix, ShapeMismatch,
                     check_invertible, check_invertible_fast_irreducible,
                     count_invertible, invert, is_generalized_permutation,
                     mat_mul, phi_of_matrix, random_invertible_matrix,
                     semiring_matrix_invert, semiring_to_res)
from .oracle import (LatticeTooLarge, SemiringTooLarge, SpaceTooLarge,
                     TupleSpace, oracle_enumerate_residuated, oracle_inverse,
                     oracle_is_invertible, oracle_semiring_congruences)
from .resmap import (DomainMismatch, NotInvertible, NotResiduated,
                     ResiduatedMap, compose, e_map, identity_map, invert_map,
                     is_lattice_automorphism, make_map, pointwise_join,
                     zero_map)
from .semiring import (AxiomViolation, ClosureTooLarge, FiniteSemiring,
                       GeneratedSemiring, NotInImage, embed,
                       generate_simple_semiring, natural_order_lattice,
                       pullback_element, validate_semiring)

__version__ = "0.1.0"
