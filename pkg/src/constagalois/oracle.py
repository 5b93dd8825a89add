"""Brute-force ground truth used to validate the closed-form machinery.

Nothing here goes through the coset calculus: duals are computed by
Gaussian elimination on generator matrices, code equality by comparing
codeword sets or row spans, and coset tables by literal orbit closure.
Exponential cost is fine; these run at desk scale only.
"""

from __future__ import annotations

import itertools
import math
from typing import List, Optional, Sequence, Set, Tuple

from .codes import ConstaCode, enumerate_codewords
from .cosets import CodeParams
from .gf import Field, FieldElement


class Matrix:
    """A dense matrix over a finite field; just enough linear algebra."""

    def __init__(self, field: Field, entries: Sequence[Sequence[FieldElement]]):
        self.field = field
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form and the pivot column list."""
        mat = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = None
            for i in range(r, len(mat)):
                if mat[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            mat[r], mat[pivot] = mat[pivot], mat[r]
            inv = mat[r][c].inverse()
            mat[r] = [x * inv for x in mat[r]]
            for i in range(len(mat)):
                if i != r and mat[i][c]:
                    factor = mat[i][c]
                    mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
            if r == len(mat):
                break
        return Matrix(self.field, mat), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[tuple]:
        """A basis of the right kernel {v : M v = 0}."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [self.field.zero] * self.cols
            vec[fc] = self.field.one
            for r, pc in enumerate(pivots):
                vec[pc] = -red.entries[r][fc]
            basis.append(tuple(vec))
        return basis


def span(field: Field, rows: Sequence[tuple], cap: int = 1 << 16) -> Set[tuple]:
    """All linear combinations of the given rows."""
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if field.order ** k > cap:
        raise ValueError("enumeration too large")
    out = set()
    for combo in itertools.product(list(field.elements()), repeat=k):
        vec = [field.zero] * n
        for c, row in zip(combo, rows):
            if c:
                vec = [v + c * x for v, x in zip(vec, row)]
        out.add(tuple(vec))
    if not rows:
        out.add(tuple())
    return out


def generator_matrix(code: ConstaCode) -> Matrix:
    n = code.params.n
    return Matrix(code.params.field,
                  [code.generator.shift(i).vector(n) for i in range(code.dim)])


def dual_basis_of_rows(field: Field, rows: Sequence[tuple], n: int,
                       h: int) -> List[tuple]:
    """Basis of the p^h-dual of the span of the given length-n rows.

    Solve G b = 0 for the twisted vector b (b_i = a_i^(p^h)), then untwist
    each basis vector through the inverse Frobenius.  The untwisted basis
    spans the dual because untwisting is a semilinear bijection.
    """
    if rows:
        kernel = Matrix(field, rows).kernel_basis()
    else:
        kernel = [tuple(field.one if j == i else field.zero for j in range(n))
                  for i in range(n)]
    back = (field.m - h) % field.m
    return [tuple(b.frobenius(back) for b in vec) for vec in kernel]


def dual_basis(code: ConstaCode, h: int) -> List[tuple]:
    """Basis of the p^h-dual of a constacyclic code, by the rank method."""
    n = code.params.n
    rows = [code.generator.shift(i).vector(n) for i in range(code.dim)]
    return dual_basis_of_rows(code.params.field, rows, n, h)


def brute_dual(code: ConstaCode, h: int, cap: int = 1 << 16) -> Set[tuple]:
    """Every vector pairing to zero with the whole code under <.,.>_h."""
    basis = dual_basis(code, h)
    return span(code.params.field, basis, cap) if basis else {
        tuple(code.params.field.zero for _ in range(code.params.n))}


def brute_equal_codes(words: Set[tuple], code: ConstaCode,
                      cap: int = 1 << 16) -> bool:
    return words == set(enumerate_codewords(code, cap))


def spans_equal(field: Field, rows_a: Sequence[tuple],
                rows_b: Sequence[tuple]) -> bool:
    """Row-space equality by three rank computations."""
    if not rows_a and not rows_b:
        return True
    if not rows_a or not rows_b:
        return False
    ra = Matrix(field, rows_a).rank()
    rb = Matrix(field, rows_b).rank()
    rab = Matrix(field, list(rows_a) + list(rows_b)).rank()
    return ra == rb == rab


def naive_cosets(params: CodeParams, s: int = 1) -> List[tuple]:
    """The q-coset partition of s + r*Z mod n'r by literal orbit closure."""
    if math.gcd(s, params.period) != 1:
        raise ValueError("s must be coprime to n'r")
    period = params.period
    ambient = sorted({(s + params.r * k) % period for k in range(params.nprime)})
    cosets = []
    done = set()
    for a in ambient:
        if a in done:
            continue
        orbit = set()
        k = a
        while k not in orbit:
            orbit.add(k)
            done.add(k)
            k = (k * params.q) % period
        cosets.append(tuple(sorted(orbit)))
    cosets.sort()
    return cosets
