import itertools

import pytest

from constagalois import (embed, format_element, frobenius, make_field,
                          mult_order, parse_element, section)
from exhaustive import brute_monic_irreducibles


def test_make_field_rejects_bad_arguments():
    with pytest.raises(ValueError, match="not a prime"):
        make_field(6, 2)
    with pytest.raises(ValueError, match="degree must be positive"):
        make_field(2, 0)


def test_prime_field_modulus_is_x():
    assert make_field(2, 1).modulus == (0, 1)
    assert make_field(7, 1).modulus == (0, 1)


def test_gf4_modulus_is_unique_irreducible_quadratic():
    # there is exactly one monic irreducible quadratic over GF(2)
    irreducibles = brute_monic_irreducibles(2, 2)
    assert irreducibles == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_gf25_modulus_is_lex_smallest_irreducible():
    irreducibles = brute_monic_irreducibles(5, 2)
    assert make_field(5, 2).modulus == min(f[:-1] + (1,) for f in irreducibles)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (3, 3), (5, 2)])
def test_modulus_minimality_general(p, m):
    assert make_field(p, m).modulus == min(brute_monic_irreducibles(p, m))


def test_additive_identity():
    field = make_field(3, 2)
    for x in field.elements():
        assert x + field.zero == x


def test_gf4_product_of_generators():
    # theta * theta^2 = theta^3 = 1 for any primitive cube root theta
    field = make_field(2, 2)
    theta = field.generator
    assert theta * theta ** 2 == field.one


def test_gf9_inverse_law():
    field = make_field(3, 2)
    g = field.generator
    assert g * g.inverse() == field.one


def test_mixed_field_arithmetic_rejected():
    a = make_field(2, 2).one
    b = make_field(3, 2).one
    with pytest.raises(ValueError, match="mixed fields"):
        a + b
    with pytest.raises(ValueError, match="mixed fields"):
        a * b


def test_division_by_zero_rejected():
    field = make_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        field.one / field.zero


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, m):
    field = make_field(p, m)
    elems = list(field.elements())
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
    for a in elems:
        if a:
            assert a * a.inverse() == field.one


def test_frobenius_identity_power():
    for p, m in [(2, 2), (2, 3), (3, 2), (3, 4), (5, 2)]:
        field = make_field(p, m)
        for x in field.elements():
            assert frobenius(x, 0) == x
            assert frobenius(x, m) == x


def test_frobenius_squares_in_gf4():
    field = make_field(2, 2)
    theta = field.generator
    assert frobenius(theta, 1) == theta * theta
    assert frobenius(theta, 1) == theta + field.one  # theta^2 = theta + 1


def test_frobenius_composition():
    field = make_field(3, 4)
    for k in range(0, 30, 7):
        x = field.generator ** k
        for s in range(4):
            for t in range(4):
                assert frobenius(frobenius(x, s), t) == frobenius(x, s + t)


def test_mult_order_basics():
    field = make_field(2, 2)
    assert mult_order(field.one) == 1
    assert mult_order(field.generator ** 2) == 3
    with pytest.raises(ValueError, match="zero has no order"):
        mult_order(field.zero)


def test_mult_order_gf81_sixteenth_roots():
    field = make_field(3, 4)
    theta = field.generator ** 5          # a primitive 16th root of unity
    assert mult_order(theta) == 16
    assert mult_order(theta ** 12) == 4


def test_canonical_generator_is_primitive():
    for p, m in [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 2), (3, 4)]:
        field = make_field(p, m)
        assert mult_order(field.generator) == field.order - 1


def test_embed_identity_and_unit():
    f4 = make_field(2, 2)
    f16 = make_field(2, 4)
    assert embed(f4.one, f16) == f16.one


def test_embed_section_round_trip():
    f4 = make_field(2, 2)
    f16 = make_field(2, 4)
    for x in f4.elements():
        assert section(embed(x, f16), f4) == x


def test_embed_is_ring_homomorphism_exhaustive():
    f4 = make_field(2, 2)
    f16 = make_field(2, 4)
    for x in f4.elements():
        for y in f4.elements():
            assert embed(x, f16) * embed(y, f16) == embed(x * y, f16)
            assert embed(x, f16) + embed(y, f16) == embed(x + y, f16)
    images = {embed(x, f16) for x in f4.elements()}
    assert len(images) == 4  # injective


def test_embed_gf9_into_gf81():
    f9 = make_field(3, 2)
    f81 = make_field(3, 4)
    for x in f9.elements():
        for y in f9.elements():
            assert embed(x, f81) * embed(y, f81) == embed(x * y, f81)
            assert embed(x, f81) + embed(y, f81) == embed(x + y, f81)


def test_embed_incompatible_degrees_rejected():
    with pytest.raises(ValueError, match="incompatible"):
        embed(make_field(2, 2).one, make_field(2, 3))


def test_section_outside_subfield_rejected():
    f4 = make_field(2, 2)
    f16 = make_field(2, 4)
    outside = f16.generator  # order 15, not in the order-3 subgroup + {0,1}
    with pytest.raises(ValueError, match="not in subfield"):
        section(outside, f4)


def test_element_text_round_trip():
    field = make_field(5, 2)
    for x in field.elements():
        assert parse_element(format_element(x), field) == x
    assert parse_element("-1", field) == -field.one
    assert parse_element("[1,3]", field) == field.generator
