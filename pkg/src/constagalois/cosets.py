"""Parameter derivation and the q-coset calculus.

Given (p, e, n, lambda) we derive: r = ord(lambda), the p-part nu and
coprime part n' of n, the period n'r, the extension degree d of the
splitting field, a canonical primitive n'r-th root theta with
theta^n = lambda, and lambda' with lambda'^(p^nu) = lambda.

Residues mod n'r that are congruent to a fixed class mod r split into
orbits of k -> q*k ("q-cosets").  A coset function assigns each coset a
multiplicity in [0, p^nu]; these functions classify the constacyclic
codes of length n, and the whole duality theory acts on them through
complement, the multiplier action s*phi, and pointwise meet.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .gf import Field, FieldElement, make_field, mult_order, format_element, parse_element
from .polyring import Poly


class QCoset:
    """One orbit of k -> q*k on the residues of a fixed class mod r."""

    __slots__ = ("residue", "members")

    def __init__(self, residue: int, members: Iterable[int]):
        self.residue = residue
        self.members = tuple(sorted(members))

    @property
    def rep(self) -> int:
        return self.members[0]

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (isinstance(other, QCoset) and self.residue == other.residue
                and self.members == other.members)

    def __hash__(self):
        return hash((self.residue, self.members))

    def __repr__(self):
        return f"Q{self.rep}{set(self.members)!r}" if len(self.members) > 1 else f"Q{self.rep}{{{self.rep}}}"


class CodeParams:
    """Everything derived from (p, e, n, lambda); see module docstring.

    The splitting field GF(q^d) and theta are built lazily: the coset
    calculus and all existence predicates are pure integer work, and many
    callers never need actual polynomial roots.
    """

    def __init__(self, p: int, e: int, n: int, lam: FieldElement):
        self.p = p
        self.e = e
        self.q = p ** e
        self.n = n
        self.lam = lam
        self.field = lam.field
        self.r = mult_order(lam)
        nu = 0
        nprime = n
        while nprime % p == 0:
            nprime //= p
            nu += 1
        self.nu = nu
        self.nprime = nprime
        self.period = nprime * self.r      # the modulus n'r for coset arithmetic
        d = 1
        if self.period > 1:
            acc = self.q % self.period
            while acc != 1:
                acc = (acc * self.q) % self.period
                d += 1
        self.d = d
        # lambda' is the unique p^nu-th root of lambda inside GF(q)
        self.lam_prime = lam.frobenius((-nu) % e)
        assert self.lam_prime ** (p ** nu) == lam

        self._big_field: Optional[Field] = None
        self._theta: Optional[FieldElement] = None
        self._theta_dlog: Optional[int] = None
        self._theta_pows: Dict[int, FieldElement] = {}
        self._lam_pows: Dict[int, FieldElement] = {}
        self._cosets: Dict[int, List[QCoset]] = {}
        self._coset_index: Dict[int, Dict[int, QCoset]] = {}
        self._coset_polys: Dict[Tuple[int, int], Poly] = {}

    # -- lazy splitting-field data -------------------------------------------

    @property
    def big_field(self) -> Field:
        if self._big_field is None:
            self._big_field = make_field(self.p, self.e * self.d)
        return self._big_field

    def _pick_theta(self):
        big = self.big_field
        emb = self.field.embedding_into(big)
        if self.period == 1:
            # only lambda = 1 reaches here; theta is the empty root of unity
            assert self.lam == self.field.one
            self._theta = big.one
            self._theta_dlog = 0
            return
        big_order = big.order - 1
        step = big_order // (self.q - 1)
        w = big.generator ** step
        img_gen = emb(self.field.generator)
        u = None
        acc = big.one
        for k in range(self.q - 1):
            if acc == img_gen:
                u = k
                break
            acc = acc * w
        assert u is not None, "embedded generator not in the order-(q-1) subgroup"
        lam_dlog = step * ((u * self.field.dlog(self.lam)) % (self.q - 1))
        m_step = big_order // self.period
        for j in range(1, self.period):
            if math.gcd(j, self.period) != 1:
                continue
            if (j * m_step * self.n - lam_dlog) % big_order == 0:
                self._theta = big.generator ** (j * m_step)
                self._theta_dlog = j * m_step
                assert self._theta ** self.n == emb(self.lam)
                return
        raise AssertionError("no primitive n'r-th root theta with theta^n = lambda")

    @property
    def theta(self) -> FieldElement:
        if self._theta is None:
            self._pick_theta()
        return self._theta

    @property
    def theta_dlog(self) -> int:
        """Discrete log of theta base the canonical generator of GF(q^d)."""
        if self._theta_dlog is None:
            self._pick_theta()
        return self._theta_dlog

    def theta_pow(self, k: int) -> FieldElement:
        k %= max(self.period, 1)
        cached = self._theta_pows.get(k)
        if cached is None:
            cached = self.theta ** k
            self._theta_pows[k] = cached
        return cached

    def lam_power(self, s: int) -> FieldElement:
        s %= self.r
        cached = self._lam_pows.get(s)
        if cached is None:
            cached = self.lam ** s
            self._lam_pows[s] = cached
        return cached

    def modulus_poly(self, s: int = 1) -> Poly:
        """X^n - lambda^s in F_q[X]."""
        field = self.field
        return (Poly.x_power(field, self.n)
                - Poly.constant(field, self.lam_power(s)))

    # -- coset structure ---------------------------------------------------------

    def cosets_on(self, residue: int) -> List[QCoset]:
        """q-cosets partitioning the class {residue + r*k} mod n'r, by rep."""
        c = residue % self.r if self.r > 0 else 0
        cached = self._cosets.get(c)
        if cached is not None:
            return cached
        period = self.period
        ambient = sorted({(c + self.r * k) % period for k in range(self.nprime)})
        seen = set()
        cosets = []
        for start in ambient:
            if start in seen:
                continue
            members = []
            k = start
            while k not in seen:
                seen.add(k)
                members.append(k)
                k = (k * self.q) % period
            cosets.append(QCoset(c, members))
        cosets.sort(key=lambda Q: Q.rep)
        self._cosets[c] = cosets
        self._coset_index[c] = {Q.rep: Q for Q in cosets}
        return cosets

    def coset_of(self, k: int, residue: Optional[int] = None) -> QCoset:
        """The q-coset containing k (residue defaults to k mod r)."""
        c = (k if residue is None else residue) % self.r if self.r else 0
        for Q in self.cosets_on(c):
            if k % self.period in Q.members:
                return Q
        raise ValueError(f"{k} is not in the class {c} mod {self.r}")

    # -- misc ----------------------------------------------------------------------

    def __repr__(self):
        return (f"CodeParams(p={self.p}, e={self.e}, n={self.n}, "
                f"lam={format_element(self.lam)})")

    def to_json(self) -> dict:
        return {
            "p": self.p, "e": self.e, "q": self.q, "n": self.n,
            "lambda": format_element(self.lam), "r": self.r,
            "nu": self.nu, "nprime": self.nprime, "period": self.period,
            "d": self.d, "lambda_prime": format_element(self.lam_prime),
        }


_PARAMS_CACHE: Dict[tuple, CodeParams] = {}


def derive_params(p: int, e: int, n: int, lam) -> CodeParams:
    """Canonical CodeParams for (p, e, n, lambda); interned per argument set.

    `lam` may be a FieldElement of the canonical GF(p^e), an integer
    (e.g. 1 or -1), or a string like "g^12" or "[1,2]".
    """
    field = make_field(p, e)
    if isinstance(lam, str):
        lam = parse_element(lam, field)
    elif isinstance(lam, int):
        lam = field.from_int(lam)
    elif lam.field is not field:
        raise ValueError("lambda must live in the canonical GF(p^e)")
    if not lam:
        raise ValueError("lambda must be a unit")
    if n < 1:
        raise ValueError("length must be positive")
    key = (p, e, n, lam.coeffs)
    params = _PARAMS_CACHE.get(key)
    if params is None:
        params = CodeParams(p, e, n, lam)
        _PARAMS_CACHE[key] = params
    return params


def q_cosets(params: CodeParams, s: int = 1) -> List[QCoset]:
    """The q-cosets partitioning s + r*Z mod n'r, sorted by rep."""
    if math.gcd(s, params.period) != 1:
        raise ValueError("s must be coprime to n'r")
    return params.cosets_on(s % params.r if params.r else 0)


def s_orbits(params: CodeParams, s: int,
             cosets: Optional[Sequence[QCoset]] = None) -> List[List[QCoset]]:
    """Orbits of Q -> sQ on the quotient set of the unit class.

    Requires s = 1 mod r (so the multiplier preserves the class) and
    gcd(s, n'r) = 1.  Each orbit is listed in action order starting from
    the coset with the smallest rep in that orbit; orbits are sorted by
    that rep.
    """
    period = params.period
    if math.gcd(s, period) != 1:
        raise ValueError("s must be coprime to n'r")
    if params.r and (s - 1) % params.r != 0:
        raise ValueError("mu_s does not preserve the class 1 + r*Z")
    if cosets is None:
        cosets = params.cosets_on(1)
    index = {Q.rep: Q for Q in cosets}

    def act(Q: QCoset) -> QCoset:
        return index[min((s * k) % period for k in Q.members)]

    assigned = set()
    orbits = []
    for Q in cosets:
        if Q.rep in assigned:
            continue
        orbit = [Q]
        assigned.add(Q.rep)
        nxt = act(Q)
        while nxt.rep != Q.rep:
            orbit.append(nxt)
            assigned.add(nxt.rep)
            nxt = act(nxt)
        # rotate so the orbit starts at its minimal rep, preserving action order
        start = min(range(len(orbit)), key=lambda i: orbit[i].rep)
        orbits.append(orbit[start:] + orbit[:start])
    orbits.sort(key=lambda orb: orb[0].rep)
    return orbits


class CosetFunction:
    """A map from the q-cosets of one residue class to [0, p^nu]."""

    __slots__ = ("params", "residue", "assignment", "_hash")

    def __init__(self, params: CodeParams, assignment: Dict[int, int],
                 residue: int = 1):
        self.params = params
        self.residue = residue % params.r if params.r else 0
        cosets = params.cosets_on(self.residue)
        reps = {Q.rep for Q in cosets}
        if set(assignment) != reps:
            raise ValueError("assignment domain must be exactly the coset reps")
        cap = params.p ** params.nu
        for v in assignment.values():
            if not 0 <= v <= cap:
                raise ValueError(f"multiplicity {v} outside [0, {cap}]")
        self.assignment = dict(sorted(assignment.items()))
        self._hash = None

    @classmethod
    def constant(cls, params: CodeParams, value: int, residue: int = 1) -> "CosetFunction":
        return cls(params, {Q.rep: value for Q in params.cosets_on(residue)}, residue)

    @classmethod
    def from_values(cls, params: CodeParams, values: Sequence[int],
                    residue: int = 1) -> "CosetFunction":
        """Values listed against the cosets in rep order."""
        cosets = params.cosets_on(residue)
        if len(values) != len(cosets):
            raise ValueError("one value per coset required")
        return cls(params, {Q.rep: v for Q, v in zip(cosets, values)}, residue)

    def __call__(self, k: int) -> int:
        """Value on the coset containing the residue k."""
        Q = self.params.coset_of(k % self.params.period, self.residue)
        return self.assignment[Q.rep]

    def values(self) -> Tuple[int, ...]:
        return tuple(self.assignment[Q.rep] for Q in self.params.cosets_on(self.residue))

    def __eq__(self, other):
        return (isinstance(other, CosetFunction)
                and self.params is other.params
                and self.residue == other.residue
                and self.assignment == other.assignment)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.params), self.residue,
                               tuple(self.assignment.items())))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in self.assignment.items())
        return f"CosetFunction({{{inner}}} on {self.residue}+rZ)"

    # -- the calculus -------------------------------------------------------------

    def complement(self) -> "CosetFunction":
        cap = self.params.p ** self.params.nu
        return CosetFunction(self.params,
                             {k: cap - v for k, v in self.assignment.items()},
                             self.residue)

    def act(self, s: int) -> "CosetFunction":
        """The multiplier action: (s*phi)(k) = phi(s^-1 k), moving the
        function to the class s*residue mod r."""
        period = self.params.period
        if math.gcd(s, period) != 1:
            raise ValueError("s must be coprime to n'r")
        new_assignment = {}
        for Q in self.params.cosets_on(self.residue):
            new_rep = min((s * k) % period for k in Q.members)
            new_assignment[new_rep] = self.assignment[Q.rep]
        return CosetFunction(self.params, new_assignment, s * self.residue)

    def meet(self, other: "CosetFunction") -> "CosetFunction":
        if (other.params is not self.params or other.residue != self.residue):
            raise ValueError("coset functions live on different domains")
        return CosetFunction(self.params,
                             {k: min(v, other.assignment[k])
                              for k, v in self.assignment.items()},
                             self.residue)

    def leq(self, other: "CosetFunction") -> bool:
        return self.meet(other) == self

    def weight(self) -> int:
        """Sum of value * coset size; the dimension of the attached code."""
        return sum(self.assignment[Q.rep] * len(Q)
                   for Q in self.params.cosets_on(self.residue))

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.assignment.items()}
