"""Matrix, A-seed and Y-seed mutation, and the belt walk.

The belt is the 2-regular subtree

    ... t(r,-1) -r- t(1,0) -1- t(2,0) -2- ... -(r-1)- t(r,0) -r- t(1,1) ...

rooted at t(1,0), along which the distinguished variables x(i,m) and y(i,m)
live: the variable of index i in the seed at vertex t(i,m), expressed as an
exact rational function in the root cluster.  Walking right mutates in
directions 1..r cyclically; walking left in directions r..1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanMatrix, classify, exchange_matrix
from .frieze import PatternWindow, verify
from .semiring import PositiveIntegers
from .symbolic import RationalFn

FLAVORS = ("a", "y")


class InvariantViolation(RuntimeError):
    """A property guaranteed by the theory failed; indicates a bug, not
    user error."""


def is_skew_symmetrizable(B):
    """A positive integer diagonal D with D*B skew-symmetric, or None."""
    from .cartan import symmetrizer, NotSymmetrizable
    r = len(B)
    if any(B[i][i] != 0 for i in range(r)):
        return None
    if any((B[i][j] == 0) != (B[j][i] == 0) for i in range(r) for j in range(r)):
        return None
    if any(B[i][j] * B[j][i] > 0 for i in range(r) for j in range(r) if i != j):
        return None
    # D*B skew-symmetric iff D symmetrizes the Cartan companion 2I - |B|
    comp = [[2 if i == j else -abs(B[i][j]) for j in range(r)] for i in range(r)]
    try:
        return symmetrizer(comp)
    except NotSymmetrizable:
        return None


def mutate_matrix(B, k):
    """Matrix mutation in direction k (1-based); involutive."""
    k = k - 1
    r = len(B)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                row.append(B[i][j]
                           + max(B[i][k], 0) * max(B[k][j], 0)
                           - max(-B[i][k], 0) * max(-B[k][j], 0))
        out.append(tuple(row))
    return tuple(out)


def matrix_mutation_class(B, max_size=10000):
    """All matrices reachable from B by single mutations (breadth-first)."""
    B = tuple(tuple(row) for row in B)
    seen = {B}
    frontier = [B]
    while frontier:
        nxt = []
        for X in frontier:
            for k in range(1, len(B) + 1):
                Y = mutate_matrix(X, k)
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
                    if len(seen) > max_size:
                        raise RuntimeError("mutation class exceeded max_size")
        frontier = nxt
    return seen


@dataclass(frozen=True)
class Seed:
    """An ordered tuple of rational functions together with a mutation
    matrix; flavor 'a' mutates clusters, 'y' mutates Y-variables."""

    vars: tuple
    matrix: tuple
    flavor: str

    @property
    def rank(self):
        return len(self.vars)


def initial_seed(B, flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    r = len(B)
    gens = tuple(RationalFn.gen(i, r) for i in range(r))
    return Seed(gens, tuple(tuple(row) for row in B), flavor)


def mutate_seed(seed, k):
    """Seed mutation in direction k (1-based); involutive."""
    r = seed.rank
    B = seed.matrix
    k0 = k - 1
    xs = seed.vars
    if seed.flavor == "a":
        m_plus = RationalFn.one(r)
        m_minus = RationalFn.one(r)
        for j in range(r):
            b = B[j][k0]
            if b > 0:
                m_plus = m_plus * xs[j] ** b
            elif b < 0:
                m_minus = m_minus * xs[j] ** (-b)
        new = list(xs)
        new[k0] = (m_plus + m_minus) / xs[k0]
    else:
        yk = xs[k0]
        one_plus = RationalFn.one(r) + yk
        new = []
        for j in range(r):
            if j == k0:
                new.append(yk ** (-1))
            else:
                b = B[k0][j]
                v = xs[j]
                if b > 0:
                    v = v * yk ** b
                v = v * one_plus ** (-b)
                new.append(v)
    return Seed(tuple(new), mutate_matrix(B, k), seed.flavor)


@dataclass(frozen=True)
class BeltTable:
    """Belt variables (and the seeds they came from) over a column range."""

    cartan: CartanMatrix
    flavor: str
    m_lo: int
    m_hi: int
    variables: dict      # (i, m) -> RationalFn
    clusters: dict       # (i, m) -> tuple of RationalFn (seed at t(i,m))
    matrices: dict       # (i, m) -> mutation matrix at t(i,m)

    def var(self, i, m):
        return self.variables[(i, m)]

    def points(self):
        return sorted(self.variables, key=lambda p: (p[1], p[0]))


def belt(A, flavor, mrange):
    """Walk the belt over the inclusive column range and collect x(i,m) or
    y(i,m) together with the full seeds at each visited vertex."""
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    lo, hi = mrange
    if not lo <= 0 <= hi:
        raise ValueError("column range must contain 0")
    B = exchange_matrix(A)
    r = A.rank
    root = initial_seed(B, flavor)
    variables, clusters, matrices = {}, {}, {}

    def record(i, m, seed):
        variables[(i, m)] = seed.vars[i - 1]
        clusters[(i, m)] = seed.vars
        matrices[(i, m)] = seed.matrix

    # rightward: t(1,0) -1- t(2,0) ... -(r-1)- t(r,0) -r- t(1,1) ...
    seed = root
    i, m = 1, 0
    record(i, m, seed)
    while m < hi or (m == hi and i < r):
        seed = mutate_seed(seed, i)
        if i < r:
            i += 1
        else:
            i, m = 1, m + 1
        record(i, m, seed)
    # leftward: t(1,0) -r- t(r,-1) -(r-1)- t(r-1,-1) ... -1- t(1,-1) -r- ...
    seed = root
    i, m = 1, 0
    while m > lo or (m == lo and i > 1):
        seed = mutate_seed(seed, i - 1 if i > 1 else r)
        if i > 1:
            i -= 1
        else:
            i, m = r, m - 1
        record(i, m, seed)
    return BeltTable(A, flavor, lo, hi, variables, clusters, matrices)


def check_relations(A, flavor, mrange, table=None):
    """Verify the belt relations symbolically over the range; for Y-flavor
    additionally require every y(i,m) to be a Laurent polynomial with
    nonnegative coefficients (raising InvariantViolation otherwise)."""
    if table is None:
        table = belt(A, flavor, mrange)
    lo, hi = mrange
    r = A.rank
    one = RationalFn.one(r)
    for m in range(lo, hi):
        for i in range(1, r + 1):
            lhs = table.var(i, m) * table.var(i, m + 1)
            rhs = one
            for j in range(i + 1, r + 1):
                e = -A.entries[j - 1][i - 1]
                if e:
                    base = table.var(j, m)
                    if flavor == "y":
                        base = one + base
                    rhs = rhs * base ** e
            for j in range(1, i):
                e = -A.entries[j - 1][i - 1]
                if e:
                    base = table.var(j, m + 1)
                    if flavor == "y":
                        base = one + base
                    rhs = rhs * base ** e
            if flavor == "a":
                rhs = one + rhs
            if lhs != rhs:
                return False
    if flavor == "y":
        for point in table.points():
            lp = table.var(*point).is_laurent()
            if lp is None or not lp.has_nonneg_coeffs():
                raise InvariantViolation(
                    f"y{point} is not Laurent with nonnegative coefficients")
    return True


def ensemble_pullback(A, i, m, table=None):
    """The monomial in belt variables pulling back y(i,m) along the ensemble
    map: x(j,m+1)^(-a_{j,i}) over j < i times x(j,m)^(-a_{j,i}) over j > i,
    returned as a rational function in the root cluster."""
    if table is None:
        table = belt(A, "a", (min(0, m), max(0, m + 1)))
    r = A.rank
    acc = RationalFn.one(r)
    for j in range(1, i):
        e = -A.entries[j - 1][i - 1]
        if e:
            acc = acc * table.var(j, m + 1) ** e
    for j in range(i + 1, r + 1):
        e = -A.entries[j - 1][i - 1]
        if e:
            acc = acc * table.var(j, m) ** e
    return acc


def pullback_to_root(A, value):
    """Apply the ensemble map on the root seed: substitute for each Y-variable
    the cluster monomial with exponent vector the corresponding column of the
    exchange matrix."""
    B = exchange_matrix(A)
    r = A.rank
    images = []
    for j in range(r):
        mono = RationalFn.one(r)
        for i in range(r):
            if B[i][j]:
                mono = mono * RationalFn.gen(i, r) ** B[i][j]
        images.append(mono)
    return value.substitute(images)


def unitary_pattern(A, flavor, mrange=None):
    """Evaluate every belt variable at the all-ones point of the root
    cluster; returns a verified positive-integer pattern window."""
    if mrange is None:
        info = classify(A)
        if info is None:
            raise ValueError("explicit mrange required outside finite type")
        mrange = (0, info.coxeter_number + 2)
    table = belt(A, flavor, mrange)
    r = A.rank
    ones = [Fraction(1)] * r
    lo, hi = mrange
    rows = []
    for i in range(1, r + 1):
        row = []
        for m in range(lo, hi + 1):
            v = table.var(i, m).evaluate(ones)
            if v.denominator != 1 or v <= 0:
                raise InvariantViolation(
                    f"unitary value at ({i},{m}) is {v}, not a positive integer")
            row.append(int(v))
        rows.append(tuple(row))
    info = classify(A)
    window = PatternWindow("frieze" if flavor == "a" else "yfrieze",
                           A, PositiveIntegers(), lo, hi, tuple(rows),
                           info.coxeter_number + 2 if info else None)
    if not verify(window):
        raise InvariantViolation("unitary evaluation failed verification")
    return window
