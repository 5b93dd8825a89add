#!/usr/bin/env python3
"""Canonical finite fields: construction, Frobenius, orders, embeddings.

Every field GF(p^m) is built the same way on every machine: the modulus
is the lexicographically smallest monic irreducible of degree m, and the
canonical generator "g" is the first primitive element in coefficient
order.  That determinism is what makes the "g^k" element notation stable
across runs.
"""

from constagalois import (embed, format_element, frobenius, make_field,
                          mult_order, section)

# -- the basic tower -------------------------------------------------------

for p, m in [(2, 1), (2, 2), (3, 2), (5, 2), (3, 4)]:
    field = make_field(p, m)
    print(f"{field!r}: modulus coeffs {field.modulus}, "
          f"generator {field.generator.coeffs}, "
          f"|F*| = {field.order - 1}")

# GF(4) in full: {0, 1, g, g^2} with g^2 + g + 1 = 0
f4 = make_field(2, 2)
g = f4.generator
print("\nGF(4) multiplication table (rows/cols 0,1,g,g^2):")
elems = [f4.zero, f4.one, g, g ** 2]
for a in elems:
    print("  ", [format_element(a * b) for b in elems])

# -- Frobenius and multiplicative orders -------------------------------------

print("\nFrobenius on GF(4): x -> x^2 swaps g and g^2:")
for x in elems:
    print(f"  {format_element(x)} -> {format_element(frobenius(x, 1))}")

f81 = make_field(3, 4)
theta = f81.generator ** 5          # a primitive 16th root of unity
print(f"\nIn GF(81): ord(g) = {mult_order(f81.generator)}, "
      f"ord(g^5) = {mult_order(theta)}, ord(g^60) = {mult_order(theta ** 12)}")

# -- subfield embeddings -------------------------------------------------------

f16 = make_field(2, 4)
print("\nEmbedding GF(4) into GF(16) (a genuine ring homomorphism):")
for x in [f4.one, g, g ** 2]:
    y = embed(x, f16)
    print(f"  {format_element(x)} -> coeffs {y.coeffs}, "
          f"back: {format_element(section(y, f4))}")
img = embed(g, f16)
assert img * img + img + f16.one == f16.zero  # satisfies the GF(4) modulus
print("the image of g still satisfies x^2 + x + 1 = 0, as it must")
