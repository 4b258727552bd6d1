import pytest

from resmat import (AxiomViolation, ClosureTooLarge, NotInImage,
                    builtin_lattice, builtin_semiring, compose, embed,
                    find_isomorphism, generate_simple_semiring, identity_map,
                    natural_order_lattice, oracle_enumerate_residuated,
                    oracle_semiring_congruences, pointwise_join,
                    pullback_element, validate_semiring, zero_map)
from resmat.catalog import semiring_names


def test_boolean_semiring_validates(bool_sr):
    assert bool_sr.n == 2
    assert bool_sr.add(1, 1) == 1 and bool_sr.mul(1, 1) == 1


def test_xor_ring_rejected():
    with pytest.raises(AxiomViolation) as exc:
        validate_semiring(["0", "1"], [[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)
    assert exc.value.axiom == "additive idempotence"
    assert exc.value.witness == (1,)


def test_swapped_mul_rejected():
    with pytest.raises(AxiomViolation) as exc:
        validate_semiring(["0", "1"], [[0, 1], [1, 1]], [[1, 1], [1, 0]], 0, 1)
    assert exc.value.axiom == "zero absorbing"


def test_natural_order_of_bool_is_two_chain(bool_sr, chain2):
    lat = natural_order_lattice(bool_sr)
    assert find_isomorphism(lat, chain2) is not None
    assert lat.bottom == bool_sr.zero


def test_natural_order_join_equals_add():
    for name in semiring_names():
        semiring = builtin_semiring(name)
        lat = natural_order_lattice(semiring)
        assert lat.join_table == semiring.add_table


def test_natural_order_of_res3chain_semiring(simple3chain):
    # pointwise order of the 6 maps on the 3-chain
    lat = natural_order_lattice(simple3chain)
    assert lat.n == 6
    assert lat.labels[lat.bottom] == "f000"
    assert lat.labels[lat.top] == "f022"


def test_embed_bool(bool_sr):
    maps = embed(bool_sr)
    assert maps[bool_sr.zero] == zero_map(maps[0].domain)
    assert maps[bool_sr.one] == identity_map(maps[0].domain)


def test_embed_is_homomorphism_everywhere():
    for name in semiring_names():
        semiring = builtin_semiring(name)
        lat = natural_order_lattice(semiring)
        maps = embed(semiring, lat)
        assert maps[semiring.one] == identity_map(lat)
        assert maps[semiring.zero] == zero_map(lat)
        for r in range(semiring.n):
            for s in range(semiring.n):
                assert maps[semiring.add(r, s)] == pointwise_join(maps[r], maps[s])
                assert maps[semiring.mul(r, s)] == compose(maps[r], maps[s])


def test_pullback_round_trip():
    for name in semiring_names():
        semiring = builtin_semiring(name)
        maps = embed(semiring)
        for r in range(semiring.n):
            assert pullback_element(maps[r], semiring) == r


def test_pullback_rejects_non_image(simple3chain):
    lat = natural_order_lattice(simple3chain)
    image = set(embed(simple3chain, lat))
    outside = [f for f in oracle_enumerate_residuated(lat) if f not in image]
    assert outside
    with pytest.raises(NotInImage):
        pullback_element(outside[0], simple3chain)


def test_generate_on_two_chain_is_bool(chain2, bool_sr):
    gen = generate_simple_semiring(chain2)
    assert len(gen) == 2 and gen.has_one
    semiring = gen.to_semiring(labels=["0", "1"])
    assert semiring == bool_sr


def test_generate_on_three_chain_is_all_of_res(chain3):
    gen = generate_simple_semiring(chain3)
    assert len(gen) == 6
    assert set(gen.maps) == set(oracle_enumerate_residuated(chain3))


def test_generate_with_extras_contains_them(m3):
    gen = generate_simple_semiring(m3, extra_generators=[identity_map(m3)])
    assert identity_map(m3) in set(gen.maps)


def test_generate_on_m3_has_no_one(m3):
    gen = generate_simple_semiring(m3)
    assert not gen.has_one
    with pytest.raises(ValueError):
        gen.to_semiring()


def test_generate_cap(square):
    with pytest.raises(ClosureTooLarge):
        generate_simple_semiring(square, cap=5)


def test_generated_closures_are_closed_and_simple():
    # forward construction: closed under both ops, zero present, and (at
    # oracle scale) only the two trivial congruences
    for name in ["chain2", "chain3", "chain4", "square"]:
        lat = builtin_lattice(name)
        gen = generate_simple_semiring(lat)
        maps = set(gen.maps)
        assert zero_map(lat) in maps
        for f in gen.maps:
            for g in gen.maps:
                assert compose(f, g) in maps
                assert pointwise_join(f, g) in maps
        if gen.has_one and len(gen) <= 10:
            congruences = oracle_semiring_congruences(gen.to_semiring())
            assert len(congruences) == 2


def test_res3chain_equals_simple3chain():
    # enumeration route and closure route build the same Cayley tables
    assert builtin_semiring("res3chain") == builtin_semiring("simple3chain")


def test_maxplus3_tables(maxplus3):
    assert maxplus3.add_table == ((0, 1, 2), (1, 1, 2), (2, 2, 2))
    assert maxplus3.mul_table == ((0, 0, 0), (0, 1, 2), (0, 2, 2))
    lat = natural_order_lattice(maxplus3)
    assert find_isomorphism(lat, builtin_lattice("chain3")) is not None


def test_every_builtin_semiring_revalidates():
    for name in semiring_names():
        semiring = builtin_semiring(name)
        again = validate_semiring(semiring.labels, semiring.add_table,
                                  semiring.mul_table, semiring.zero, semiring.one)
        assert again == semiring
