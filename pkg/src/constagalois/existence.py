"""Existence criteria for (isometrically) Galois self-dual codes.

All verdicts are decided by closed-form arithmetic on (p, e, n', r, h);
when a family is nonempty we also construct an explicit witness coset
function (constant p^nu/2 in characteristic 2, otherwise alternating
d and p^nu - d along even multiplier orbits with d = 0) and validate it
against the duality predicates before returning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cosets import CodeParams, CosetFunction, s_orbits
from .duality import iso_witness_for, selfdual_condition


def nu(p: int, k: int) -> int:
    """The p-adic valuation of a nonzero integer."""
    if k == 0:
        raise ValueError("valuation of zero is undefined")
    k = abs(k)
    t = 0
    while k % p == 0:
        k //= p
        t += 1
    return t


def nu2_power_pm1(k: int, d: int):
    """(nu_2(k^d - 1), nu_2(k^d + 1)) for odd |k| >= 3, without powering.

    Writing k = +-1 + 2^v * u with u odd and v >= 2, the 2-adic valuations
    of k^d -+ 1 follow a closed form split on k mod 4 and the parity of d.
    """
    if k % 2 == 0:
        raise ValueError("k must be odd")
    if abs(k) < 3:
        raise ValueError("|k| must be at least 3")
    if d < 1:
        raise ValueError("d must be positive")
    if k % 4 == 1:
        v = nu(2, k - 1)
        return v + nu(2, d), 1
    v = nu(2, k + 1)
    if d % 2 == 1:
        return 1, v
    return v + nu(2, d), 1


@dataclass
class ExistenceVerdict:
    exists: bool
    matched_condition: Optional[str] = None
    witness_phi: Optional[CosetFunction] = None

    def __bool__(self):
        return self.exists

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "matched_condition": self.matched_condition,
            "witness_phi": self.witness_phi.to_json() if self.witness_phi else None,
        }


# ---------------------------------------------------------------------------
# even-orbit criteria
# ---------------------------------------------------------------------------

def _nu2_or_neg_inf(k: int):
    # nu_2(0) is taken as -infinity, so |nu_2(0)| dominates every comparison
    return -math.inf if k == 0 else nu(2, k)


def orbits_even_by_valuations(params: CodeParams, h: int) -> Optional[str]:
    """Are all (-p^h)-orbits on the coset quotient set of even length?

    Decided through the four valuation inequalities (labels c1..c4); the
    closed-form case split in :func:`orbits_even_by_case` must agree.
    """
    p, e = params.p, params.e
    if params.nprime % 2 != 0 or params.r % 2 != 0:
        return None
    a = nu(2, p ** e - 1)
    b = nu(2, p ** h + 1)                     # = nu_2(-p^h - 1)
    c = abs(_nu2_or_neg_inf(1 - p ** h))      # = |nu_2(-p^h + 1)|
    d2 = nu(2, p ** e + 1)
    nr2 = nu(2, params.nprime * params.r)
    if a > b and nr2 > b:
        return "c1"
    if a == 1 and b > 1 and d2 + 1 > b and nr2 > b:
        return "c2"
    if a == 1 and b == 1 and c > d2 and nr2 > d2:
        return "c3"
    if a == 1 and b == 1 and c < d2 and c < nr2:
        return "c4"
    return None


def orbits_even_by_case(params: CodeParams, h: int) -> Optional[str]:
    """Same question as orbits_even_by_valuations, by the p mod 4 case split."""
    p, e = params.p, params.e
    if params.nprime % 2 != 0 or params.r % 2 != 0:
        return None
    if p % 4 == 1:
        return "(i)"
    if e % 2 == 0 and h % 2 == 0:
        return "(ii)"
    if nu(2, params.nprime * params.r) > nu(2, p + 1):
        return "(iii)"
    return None


def _even_orbit_multiplier(params: CodeParams) -> Optional[int]:
    """Smallest s = 1 mod r, coprime to n'r, whose coset orbits are all even."""
    for k in range(params.nprime):
        s = 1 + params.r * k
        if math.gcd(s, params.period) != 1:
            continue
        if all(len(orbit) % 2 == 0 for orbit in s_orbits(params, s)):
            return s
    return None


def _alternating_function(params: CodeParams, s: int, d: int = 0) -> CosetFunction:
    """phi taking d on even positions and p^nu - d on odd positions of
    every s-orbit; requires all orbits even."""
    cap = params.p ** params.nu
    assignment = {}
    for orbit in s_orbits(params, s):
        if len(orbit) % 2 != 0:
            raise AssertionError("alternating construction needs even orbits")
        for i, Q in enumerate(orbit):
            assignment[Q.rep] = d if i % 2 == 0 else cap - d
    return CosetFunction(params, assignment, 1)


# ---------------------------------------------------------------------------
# the existence predicates
# ---------------------------------------------------------------------------

def duadic_exists(params: CodeParams) -> ExistenceVerdict:
    """Do duadic lambda'-constacyclic codes of length n' exist?

    Equivalently: is there a multiplier s = 1 mod r, coprime to n'r, all of
    whose orbits on the coset quotient set have even length?
    """
    if params.q % 2 == 0:
        return ExistenceVerdict(False)
    nr = nu(2, params.r)
    if params.nprime % 2 == 0 and nu(2, params.q - 1) > nr >= 1:
        return ExistenceVerdict(True, "(iii.1)")
    if nr == 1 and min(nu(2, params.q + 1), nu(2, params.nprime)) >= 2:
        return ExistenceVerdict(True, "(iii.2)")
    return ExistenceVerdict(False)


def iso_selfdual_exists(params: CodeParams, h: int = 0) -> ExistenceVerdict:
    """Existence of isometrically p^h-self-dual codes (h-independent)."""
    if not 0 <= h <= params.e:
        raise ValueError("h must lie in [0, e]")
    p = params.p
    cap = p ** params.nu
    if p == 2 and params.nu >= 1:
        phi = CosetFunction.constant(params, cap // 2)
        label = "(i)"
    else:
        nr = nu(2, params.r)
        if params.nprime % 2 == 0 and nu(2, params.q - 1) > nr >= 1:
            label = "(ii)"
        elif nr == 1 and min(nu(2, params.q + 1), nu(2, params.nprime)) >= 2:
            label = "(iii)"
        else:
            return ExistenceVerdict(False)
        s = _even_orbit_multiplier(params)
        if s is None:
            raise AssertionError("even-orbit multiplier promised but not found")
        phi = _alternating_function(params, s)
    if iso_witness_for(params, phi) is None:
        raise AssertionError("existence witness fails the duality predicate")
    return ExistenceVerdict(True, label, phi)


def galois_selfdual_exists(params: CodeParams, h: int) -> ExistenceVerdict:
    """Existence of p^h-self-dual lambda-constacyclic codes of length n."""
    if not 0 <= h <= params.e:
        raise ValueError("h must lie in [0, e]")
    p = params.p
    if (p ** h + 1) % params.r != 0:
        return ExistenceVerdict(False)
    cap = p ** params.nu
    label = None
    if p == 2 and params.nu >= 1:
        label = "(i)"
        phi = CosetFunction.constant(params, cap // 2)
    else:
        even = params.nprime % 2 == 0 and params.r % 2 == 0
        if even and p % 4 == 1:
            label = "(ii)"
        elif even and p % 4 == 3 and params.e % 2 == 0 and h % 2 == 0:
            label = "(iii)"
        elif (even and p % 4 == 3 and (params.e % 2 == 1 or h % 2 == 1)
              and nu(2, params.nprime * params.r) > nu(2, p + 1)):
            label = "(iv)"
        else:
            return ExistenceVerdict(False)
        phi = _alternating_function(params, -(p ** h))
    ok, _ = selfdual_condition(params, phi, h)
    if not ok:
        raise AssertionError("existence witness fails the duality predicate")
    return ExistenceVerdict(True, label, phi)


def euclidean_selfdual_exists(params: CodeParams) -> ExistenceVerdict:
    """Existence of self-dual codes: the h = 0 specialization."""
    one = params.field.one
    label = None
    if params.p == 2 and params.lam == one and params.nu >= 1:
        label = "(i)"
    elif params.q % 4 == 1 and params.lam == -one and params.nprime % 2 == 0:
        label = "(ii)"
    elif (params.q % 4 == 3 and params.lam == -one
          and nu(2, params.nprime) + 1 > nu(2, params.q + 1)):
        label = "(iii)"
    if label is None:
        return ExistenceVerdict(False)
    witness = galois_selfdual_exists(params, 0).witness_phi
    return ExistenceVerdict(True, label, witness)


def hermitian_selfdual_exists(params: CodeParams) -> ExistenceVerdict:
    """Existence of Hermitian self-dual codes: the h = e/2 specialization."""
    if params.e % 2 != 0:
        return ExistenceVerdict(False)
    p = params.p
    ph = p ** (params.e // 2)
    if (ph + 1) % params.r != 0:
        return ExistenceVerdict(False)
    label = None
    if p == 2 and params.nu >= 1:
        label = "(i)"
    elif ph % 4 == 1 and params.nprime % 2 == 0 and params.r % 2 == 0:
        label = "(ii)"
    elif (ph % 4 == 3 and params.nprime % 2 == 0 and params.r % 2 == 0
          and nu(2, params.nprime * params.r) > nu(2, ph + 1)):
        label = "(iii)"
    if label is None:
        return ExistenceVerdict(False)
    witness = galois_selfdual_exists(params, params.e // 2).witness_phi
    return ExistenceVerdict(True, label, witness)
