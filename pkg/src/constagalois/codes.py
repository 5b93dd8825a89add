"""Constacyclic codes built from coset functions.

A coset function phi determines the code with check polynomial
f_phi = prod_Q coset_poly(Q)^phi(Q) and generator polynomial f_phibar;
the two multiply back to X^n - lambda^residue.  Codewords are the
multiples of the generator, and at desk scale we can enumerate all of
them for membership spot checks and exact minimum weights.
"""

from __future__ import annotations

import itertools
import os
from typing import List, Optional

from .cosets import CodeParams, CosetFunction, QCoset
from .gf import FieldElement
from .polyring import Poly, QuotientElem, poly_to_json

DEFAULT_ENUM_CAP = 1 << 20


def _enum_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("CONSTAGALOIS_ENUM_CAP")
    return int(env) if env else DEFAULT_ENUM_CAP


def coset_poly(params: CodeParams, coset: QCoset) -> Poly:
    """prod_{i in coset} (X - theta^i), collapsed into F_q[X].

    The product is computed over the splitting field GF(q^d); because the
    coset is closed under k -> q*k its coefficients are fixed by the
    Galois group over F_q, so sectioning them into F_q must succeed.
    The result is monic and irreducible of degree |coset|.
    """
    key = (coset.residue, coset.rep)
    cached = params._coset_polys.get(key)
    if cached is not None:
        return cached
    big = params.big_field
    prod = Poly(big, [big.one])
    for i in coset.members:
        prod = prod * Poly(big, [-params.theta_pow(i), big.one])
    emb = params.field.embedding_into(big)
    try:
        coeffs = [emb.section(c) for c in prod.coeffs]
    except ValueError as exc:
        raise AssertionError("coset not Galois-stable") from exc
    result = Poly(params.field, coeffs)
    params._coset_polys[key] = result
    return result


def cf_poly(params: CodeParams, phi: CosetFunction) -> Poly:
    """prod_Q coset_poly(Q)^phi(Q) over the cosets of phi's class."""
    result = Poly(params.field, [params.field.one])
    for Q in params.cosets_on(phi.residue):
        mult = phi.assignment[Q.rep]
        if mult:
            result = result * coset_poly(params, Q) ** mult
    return result


class ConstaCode:
    """The lambda^residue-constacyclic code attached to a coset function.

    check = f_phi, generator = f_phibar, dim = deg f_phi; the generator
    and check polynomials are materialized lazily since much of the
    classification theory never needs them.
    """

    __slots__ = ("params", "phi", "dim", "_generator", "_check")

    def __init__(self, params: CodeParams, phi: CosetFunction):
        if phi.params is not params:
            raise ValueError("coset function belongs to different params")
        self.params = params
        self.phi = phi
        self.dim = phi.weight()
        self._generator: Optional[Poly] = None
        self._check: Optional[Poly] = None

    @property
    def residue(self) -> int:
        return self.phi.residue

    @property
    def unit(self) -> FieldElement:
        """The constant lambda^residue the ring is taken modulo."""
        return self.params.lam_power(self.residue)

    @property
    def check(self) -> Poly:
        if self._check is None:
            self._check = cf_poly(self.params, self.phi)
        return self._check

    @property
    def generator(self) -> Poly:
        if self._generator is None:
            self._generator = cf_poly(self.params, self.phi.complement())
        return self._generator

    def __eq__(self, other):
        return (isinstance(other, ConstaCode) and self.params is other.params
                and self.phi == other.phi)

    def __hash__(self):
        return hash((id(self.params), self.phi))

    def __repr__(self):
        return f"ConstaCode(dim={self.dim}, phi={self.phi!r})"

    # -- code operations ------------------------------------------------------

    def element(self, vec) -> QuotientElem:
        return QuotientElem.from_vector(self.params, self.residue, list(vec))

    def contains(self, elem: QuotientElem) -> bool:
        """Membership, checked through both characterizations.

        c is in the code iff the generator divides c, iff c * check = 0
        in the quotient ring; the two routes must agree.
        """
        if elem.params is not self.params or elem.s != self.residue:
            raise ValueError("element lives in a different ring")
        by_division = (elem.rep % self.generator).is_zero()
        check_elem = QuotientElem(self.params, self.residue, self.check)
        by_annihilation = not (elem * check_elem)
        assert by_division == by_annihilation, "membership routes disagree"
        return by_division

    def annihilator(self) -> "ConstaCode":
        """The code of everything multiplying this one to zero."""
        return ConstaCode(self.params, self.phi.complement())

    def codewords(self, cap: Optional[int] = None) -> List[tuple]:
        return enumerate_codewords(self, cap)

    def min_weight(self, cap: Optional[int] = None) -> Optional[int]:
        return min_weight(self, cap)

    def generator_rows(self) -> List[tuple]:
        """The dim shifted copies of the generator spanning the code."""
        n = self.params.n
        return [self.generator.shift(i).vector(n) for i in range(self.dim)]

    def to_json(self, cap: Optional[int] = None, with_weight: bool = False) -> dict:
        record = {
            "params": self.params.to_json(),
            "residue": self.residue,
            "phi": self.phi.to_json(),
            "generator": poly_to_json(self.generator),
            "check": poly_to_json(self.check),
            "dim": self.dim,
        }
        if with_weight:
            try:
                record["min_weight"] = self.min_weight(cap)
            except ValueError:
                record["min_weight"] = None
        return record


def build_code(params: CodeParams, phi: CosetFunction) -> ConstaCode:
    return ConstaCode(params, phi)


def code_from_generator(params: CodeParams, g: Poly) -> ConstaCode:
    """Recover the code generated by a monic divisor of X^n - lambda.

    The complement multiplicities are read off by repeated exact division
    of g by each coset polynomial; no general factorization is needed.
    """
    if not g.is_monic():
        raise ValueError("not a constacyclic generator")
    if not (params.modulus_poly(1) % g).is_zero():
        raise ValueError("not a constacyclic generator")
    rem = g
    comp = {}
    cap = params.p ** params.nu
    for Q in params.cosets_on(1):
        fq = coset_poly(params, Q)
        mult = 0
        while mult < cap:
            quo, r = divmod(rem, fq)
            if not r.is_zero():
                break
            rem = quo
            mult += 1
        comp[Q.rep] = mult
    if rem.degree != 0:
        raise ValueError("not a constacyclic generator")
    phibar = CosetFunction(params, comp, 1)
    return ConstaCode(params, phibar.complement())


def enumerate_codewords(code: ConstaCode, cap: Optional[int] = None) -> List[tuple]:
    """All q^dim codewords as length-n coefficient tuples."""
    cap = _enum_cap(cap)
    q, dim = code.params.q, code.dim
    if q ** dim > cap:
        raise ValueError("enumeration too large")
    field = code.params.field
    n = code.params.n
    rows = code.generator_rows()
    words = []
    for combo in itertools.product(list(field.elements()), repeat=dim):
        word = [field.zero] * n
        for c, row in zip(combo, rows):
            if c:
                for i, entry in enumerate(row):
                    if entry:
                        word[i] = word[i] + c * entry
        words.append(tuple(word))
    return words


def min_weight(code: ConstaCode, cap: Optional[int] = None) -> Optional[int]:
    """Exact minimum Hamming weight by exhaustion; None for the zero code."""
    if code.dim == 0:
        return None
    best = code.params.n + 1
    for word in enumerate_codewords(code, cap):
        w = sum(1 for c in word if c)
        if 0 < w < best:
            best = w
    return best
