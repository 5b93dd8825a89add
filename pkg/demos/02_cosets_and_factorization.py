#!/usr/bin/env python3
"""From (p, e, n, lambda) to the factorization of X^n - lambda.

The residues mod n'r that are 1 mod r split into q-cosets; each coset Q
yields one irreducible factor prod_{i in Q} (X - theta^i) of X^(n') -
lambda', and X^n - lambda is the p^nu-th power of that product.  A
constacyclic code is nothing but a choice of multiplicity in [0, p^nu]
for every coset.
"""

from constagalois import coset_poly, derive_params, q_cosets, s_orbits
from constagalois.polyring import format_poly

# the length-26 negacyclic setting over GF(25)
params = derive_params(5, 2, 26, -1)
print(f"q = {params.q}, r = {params.r}, n' = {params.nprime}, "
      f"nu = {params.nu}, n'r = {params.period}, d = {params.d}")
print(f"splitting field {params.big_field!r}, theta = g^{params.theta_dlog}")

print("\nq-cosets on 1 + 2Z_52:")
for Q in q_cosets(params, 1):
    print(f"  Q_{Q.rep} = {set(Q.members)}")

print("\norbits of the multiplier -1 on the coset set:")
print("  ", [[Q.rep for Q in orbit] for orbit in s_orbits(params, -1)])
print("orbits of the multiplier -5:")
print("  ", [[Q.rep for Q in orbit] for orbit in s_orbits(params, -5)])

print("\nirreducible factors of X^26 + 1 over GF(25):")
product = None
for Q in q_cosets(params, 1):
    f = coset_poly(params, Q)
    product = f if product is None else product * f
    print(f"  Q_{Q.rep}: {format_poly(f)}")
assert product == params.modulus_poly(1)
print("product of all factors == X^26 + 1:", product == params.modulus_poly(1))

# a repeated-root example: nu > 0 makes multiplicities range over [0, p^nu]
params12 = derive_params(3, 4, 12, "g^20")
print(f"\nlength 12 over GF(81): n' = {params12.nprime}, nu = {params12.nu}, "
      f"so X^12 - lambda = (X^4 - lambda')^3 and multiplicities live in [0, 3]")
for Q in q_cosets(params12, 1):
    print(f"  Q_{Q.rep}: {format_poly(coset_poly(params12, Q))}")
