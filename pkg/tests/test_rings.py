import random

import pytest

from rootcensus.rings import (
    EXTENSION_FIELD,
    ExtensionFieldRing,
    RingSpec,
    ZnRing,
    field_make,
    ring_make,
    smallest_irreducible,
)


def all_rings_upto(card):
    """Representative rings with cardinality <= card."""
    out = []
    for n in range(2, card + 1):
        out.append(ring_make(RingSpec.zn(n)))
    for p, k in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3), (2, 5), (2, 6)]:
        if p**k <= card:
            out.append(ring_make(RingSpec.extension_field(p, k)))
    return out


def test_zn_cardinality_and_enumeration():
    r = ring_make(RingSpec.zn(8))
    assert r.cardinality == 8
    assert list(r.elements()) == list(range(8))
    r3 = ring_make(RingSpec.zn(3))
    assert list(r3.elements()) == [0, 1, 2]


def test_gf4_default_reduction_is_smallest():
    # the four monic quadratics mod 2 are x^2, x^2+1, x^2+x, x^2+x+1 and only
    # the last is irreducible, so the scan must land on (1, 1, 1)
    gf4 = ring_make(RingSpec.extension_field(2, 2))
    assert gf4.reduction == (1, 1, 1)
    assert gf4.cardinality == 4
    assert list(gf4.elements()) == [0, 1, 2, 3]


def test_gf4_multiplication_table():
    gf4 = field_make(4)
    # x * x = x + 1 under x^2 + x + 1
    assert gf4.mul(2, 2) == 3
    assert gf4.mul(2, 3) == 1
    assert gf4.mul(3, 3) == 2
    assert gf4.add(2, 3) == 1


def test_encoding_bijection():
    gf27 = ring_make(RingSpec.extension_field(3, 3))
    seen = set()
    for a in gf27.elements():
        vec = gf27.decode(a)
        assert len(vec) == 3 and all(0 <= c < 3 for c in vec)
        assert gf27.encode(vec) == a
        seen.add(tuple(vec))
    assert len(seen) == 27


def test_ring_make_errors():
    with pytest.raises(ValueError):
        ring_make(RingSpec.zn(1))
    with pytest.raises(ValueError):
        ring_make(RingSpec.prime_field(4))
    with pytest.raises(ValueError):
        ring_make(RingSpec.extension_field(4, 2))
    with pytest.raises(ValueError):
        ring_make(RingSpec.extension_field(2, 0))
    with pytest.raises(ValueError):
        # x^2 + 1 = (x+1)^2 over F_2 is reducible
        ring_make(RingSpec.extension_field(2, 2, reduction=(1, 0, 1)))
    with pytest.raises(ValueError):
        field_make(6)


def test_supplied_reduction_accepted():
    gf8 = ring_make(RingSpec.extension_field(2, 3, reduction=(1, 1, 0, 1)))
    assert gf8.cardinality == 8
    x = 2  # the residue class of x
    assert gf8.pow(x, 3) == gf8.add(x, 1)  # x^3 = x + 1 under x^3 + x + 1


def test_zn_inverse():
    z8 = ring_make(RingSpec.zn(8))
    assert z8.inv(3) == 3
    assert z8.mul(5, z8.inv(5)) == 1
    with pytest.raises(ZeroDivisionError):
        z8.inv(2)
    with pytest.raises(ZeroDivisionError):
        z8.inv(0)


def test_field_inverses_exhaustive_up_to_64():
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]:
        ring = field_make(q)
        for a in range(1, q):
            assert ring.mul(a, ring.inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            ring.inv(0)


def test_ring_axioms():
    rng = random.Random(20240809)
    for ring in all_rings_upto(64):
        q = ring.cardinality
        if q <= 16:
            triples = [(a, b, c) for a in range(q) for b in range(q) for c in range(q)]
        else:
            triples = [tuple(rng.randrange(q) for _ in range(3)) for _ in range(10_000)]
        for a, b, c in triples:
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
            assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
            assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
            assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        for a in range(q):
            assert ring.add(a, 0) == a
            assert ring.mul(a, 1) == a
            assert ring.add(a, ring.neg(a)) == 0


def test_pow_matches_repeated_multiplication():
    for ring in [field_make(7), field_make(8), ring_make(RingSpec.zn(12))]:
        for a in ring.elements():
            acc = 1
            for e in range(7):
                assert ring.pow(a, e) == acc
                acc = ring.mul(acc, a)


def test_from_int_embeds_prime_subfield():
    gf9 = field_make(9)
    assert gf9.from_int(5) == 2
    assert gf9.from_int(-1) == 2
    z6 = ring_make(RingSpec.zn(6))
    assert z6.from_int(-1) == 5


def test_smallest_irreducible_degrees():
    for p, k in [(2, 1), (2, 2), (2, 8), (3, 4), (5, 3), (7, 2)]:
        red = smallest_irreducible(p, k)
        assert len(red) == k + 1 and red[-1] == 1
        ring = ring_make(RingSpec.extension_field(p, k, reduction=red))
        assert ring.cardinality == p**k


def test_tables_match_scalar_ops():
    for q in [5, 8, 9]:
        ring = field_make(q)
        add_t, mul_t = ring.add_table(), ring.mul_table()
        for a in range(q):
            for b in range(q):
                assert add_t[a, b] == ring.add(a, b)
                assert mul_t[a, b] == ring.mul(a, b)


def test_ring_equality_by_spec():
    assert field_make(4) == ring_make(RingSpec.extension_field(2, 2))
    assert ring_make(RingSpec.zn(5)) != field_make(5)  # different kinds
    assert ring_make(RingSpec.zn(5)).is_field
