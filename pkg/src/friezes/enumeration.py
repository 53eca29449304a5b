"""Exhaustive enumeration of arithmetic patterns in finite type.

A pattern is identified with its column-0 vector; translates count as
distinct patterns.  The search walks initial vectors in [1, cap]^r
depth-first in lexicographic order, computing grid cells in the knitting
order as soon as their dependencies are chosen and pruning a branch at the
first failed exact division or non-positive value.  Accepted vectors knit
one full period h+2 with column h+2 equal to column 0.

The theorem-derived entry bound is rigorous but astronomically loose beyond
rank 2 type A, so reports carry both the cap used and the bound, and the
`complete` flag is true only when the cap covers the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (CartanMatrix, classify, coxeter_companion,
                     coxeter_identity_holds, is_indecomposable,
                     mat_inverse_frac, NotFiniteType)
from .frieze import _norm_kind


@dataclass(frozen=True)
class EnumerationReport:
    cartan: CartanMatrix
    kind: str
    cap: int
    bound: tuple
    patterns: tuple     # sorted column-0 vectors
    complete: bool

    @property
    def count(self):
        return len(self.patterns)


def _require_finite(A):
    info = classify(A)
    if info is None or not is_indecomposable(A):
        raise NotFiniteType("enumeration needs an indecomposable finite-type matrix")
    return info


def _iroot(n, k):
    """floor(n ** (1/k)) for nonnegative integers."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def theorem_bound(A):
    """Componentwise upper bound on the entries of every arithmetic Y-frieze
    pattern: with p = h+2 and b_j = prod_{k != j} 2^{-a_{k,j}}, the period
    products K satisfy K^A <= (b_1^p, ..., b_r^p), so K <= (b^p)^(A^{-1}),
    evaluated exactly over rationals and rounded down."""
    info = _require_finite(A)
    r = A.rank
    p = info.coxeter_number + 2
    # b_j is a power of two: collect exponents
    s = [sum(-A.entries[k][j] for k in range(r) if k != j) for j in range(r)]
    ainv = mat_inverse_frac(A.entries)
    out = []
    for i in range(r):
        e = sum(Fraction(p) * s[j] * ainv[j][i] for j in range(r))
        out.append(_iroot(2 ** e.numerator, e.denominator))
    return tuple(out)


def _knit_rest(A, kind, col0, col1, period):
    """Finish knitting columns 2..period over the positive integers; return
    the full list of columns, or None on any failure."""
    r = A.rank
    cols = [list(col0), list(col1)]
    for m in range(1, period):
        prev = cols[m]
        new = []
        for i in range(r):
            rhs = 1
            for j in range(i + 1, r):
                e = -A.entries[j][i]
                if e:
                    rhs *= ((1 + prev[j]) if kind == "yfrieze" else prev[j]) ** e
            for j in range(i):
                e = -A.entries[j][i]
                if e:
                    rhs *= ((1 + new[j]) if kind == "yfrieze" else new[j]) ** e
            if kind == "frieze":
                rhs += 1
            q, rem = divmod(rhs, prev[i])
            if rem or q < 1:
                return None
            new.append(q)
        cols.append(new)
    return cols


def enumerate_patterns(A, kind, cap):
    """Depth-first enumeration of all patterns whose column-0 vector lies in
    [1, cap]^r, with immediate divisibility pruning."""
    kind = _norm_kind(kind)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    info = _require_finite(A)
    period = info.coxeter_number + 2
    r = A.rank
    ent = A.entries
    # the column-1 cell in row i needs rows > i of column 0 up to this index
    upmax = [max([j for j in range(i + 1, r) if ent[j][i] != 0], default=i)
             for i in range(r)]
    found = []
    col0 = []
    col1 = []

    def try_cells():
        """Extend column 1 as far as the chosen prefix of column 0 allows;
        None signals a dead branch, else the new fill level."""
        i = len(col1)
        while i < r and upmax[i] < len(col0):
            rhs = 1
            for j in range(i + 1, r):
                e = -ent[j][i]
                if e:
                    rhs *= ((1 + col0[j]) if kind == "yfrieze" else col0[j]) ** e
            for j in range(i):
                e = -ent[j][i]
                if e:
                    rhs *= ((1 + col1[j]) if kind == "yfrieze" else col1[j]) ** e
            if kind == "frieze":
                rhs += 1
            q, rem = divmod(rhs, col0[i])
            if rem or q < 1:
                return None
            col1.append(q)
            i += 1
        return i

    def dfs():
        depth = len(col0)
        if depth == r:
            if len(col1) == r:
                cols = _knit_rest(A, kind, col0, col1, period)
                if cols is not None and cols[period] == cols[0]:
                    found.append(tuple(col0))
            return
        mark = len(col1)
        for v in range(1, cap + 1):
            col0.append(v)
            level = try_cells()
            if level is not None:
                dfs()
            del col1[mark:]
            col0.pop()

    dfs()
    bound = theorem_bound(A) if kind == "yfrieze" else None
    complete = bound is not None and cap >= max(bound)
    return EnumerationReport(A, kind, cap, bound, tuple(found), complete)


def tropical_y_friezes(A):
    """All nonnegative-integer Y-frieze patterns in the max-plus semiring,
    via the linear recursion f_{m+1} = C f_m: the orbit sum telescopes to
    (I + C + ... + C^{h-1}) f_0 = 0, so finite type admits only the zero
    pattern.  The identity is checked exactly as the certificate."""
    info = _require_finite(A)
    h = info.coxeter_number
    if not coxeter_identity_holds(A, h):
        raise NotFiniteType("Coxeter identity failed; matrix is not finite type")
    r = A.rank
    zero = (0,) * r
    # certificate: the orbit of the zero vector is zero and sums to zero
    C = coxeter_companion(A).companion
    orbit = [zero]
    for _ in range(h - 1):
        prev = orbit[-1]
        orbit.append(tuple(sum(C[i][j] * prev[j] for j in range(r)) for i in range(r)))
    if any(v != 0 for f in orbit for v in f):
        raise NotFiniteType("zero orbit is not fixed; inconsistent input")
    return [zero]


def orbit_sum(A, f0):
    """sum_{m=0}^{h-1} C^m f0, exactly; zero for every tropical solution."""
    info = _require_finite(A)
    C = coxeter_companion(A).companion
    r = A.rank
    total = list(f0)
    cur = list(f0)
    for _ in range(info.coxeter_number - 1):
        cur = [sum(C[i][j] * cur[j] for j in range(r)) for i in range(r)]
        total = [a + b for a, b in zip(total, cur)]
    return tuple(total)
