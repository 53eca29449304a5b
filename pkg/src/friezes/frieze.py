"""Pattern windows and the knitting algorithm over arbitrary semirings.

A window holds a finite rectangular slice of a map [1,r] x Z -> S for one of
the two pattern kinds.  Knitting fills a window from its column-0 values by
solving the defining relation forward and backward in the total order on the
grid; each step divides in S and may fail, which is the expected pruning
mechanism for enumeration rather than an invariant violation.

Grid relations (exponents e_{j,i} = -a_{j,i} >= 0):

  frieze:   f(i,m) f(i,m+1) = 1 + prod_{j>i} f(j,m)^e * prod_{j<i} f(j,m+1)^e
  yfrieze:  k(i,m) k(i,m+1) = prod_{j>i} (1+k(j,m))^e * prod_{j<i} (1+k(j,m+1))^e
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanMatrix, classify, glide_data, NotFiniteType
from .semiring import Semiring

KINDS = ("frieze", "yfrieze")


class KnitFailure(Exception):
    """No value in S extends the pattern at `point`; carries the direction
    in which knitting was proceeding."""

    def __init__(self, point, direction):
        self.point = point
        self.direction = direction
        super().__init__(f"knitting failed at {point} ({direction})")


class WindowTooNarrow(ValueError):
    """The window does not contain the columns the operation needs."""


def grid_le(p, q):
    """Total order on [1,r] x Z: (i,m) <= (j,n) iff m < n, or m = n, i <= j."""
    (i, m), (j, n) = p, q
    return (m, i) <= (n, j)


@dataclass(frozen=True)
class PatternWindow:
    kind: str
    cartan: CartanMatrix
    semiring: Semiring
    m_lo: int
    m_hi: int
    values: tuple      # values[i-1][m - m_lo]
    period: int = None

    def value(self, i, m):
        return self.values[i - 1][m - self.m_lo]

    def column(self, m):
        return tuple(self.values[i][m - self.m_lo] for i in range(self.cartan.rank))

    @property
    def cols(self):
        return (self.m_lo, self.m_hi)

    def cells(self):
        for i in range(1, self.cartan.rank + 1):
            for m in range(self.m_lo, self.m_hi + 1):
                yield i, m

    def with_values(self, values):
        return PatternWindow(self.kind, self.cartan, self.semiring,
                             self.m_lo, self.m_hi, values, self.period)


def _norm_kind(kind):
    aliases = {"f": "frieze", "frieze": "frieze",
               "y": "yfrieze", "yfrieze": "yfrieze", "y-frieze": "yfrieze"}
    try:
        return aliases[kind]
    except KeyError:
        raise ValueError(f"unknown pattern kind {kind!r}") from None


def _rhs(A, S, kind, i, col_m, col_m1):
    """Right-hand side of the relation at (i, m) given columns m and m+1.
    Entries of col_m1 below row i may be None (not yet computed)."""
    r = A.rank
    acc = S.one
    for j in range(i + 1, r):
        e = -A.entries[j][i]
        if e:
            base = S.plus_one(col_m[j]) if kind == "yfrieze" else col_m[j]
            acc = S.mul(acc, S.pow(base, e))
    for j in range(i):
        e = -A.entries[j][i]
        if e:
            base = S.plus_one(col_m1[j]) if kind == "yfrieze" else col_m1[j]
            acc = S.mul(acc, S.pow(base, e))
    if kind == "frieze":
        acc = S.plus_one(acc)
    return acc


def knit(A, S, kind, initial, cols):
    """Knit a pattern window from its column-0 values.

    `cols` is an inclusive (lo, hi) range containing 0.  Raises KnitFailure
    at the first grid point with no exact solution in S.
    """
    kind = _norm_kind(kind)
    r = A.rank
    lo, hi = cols
    if not lo <= 0 <= hi:
        raise ValueError("column range must contain 0")
    if len(initial) != r:
        raise ValueError(f"need {r} initial values")
    column = {0: [S.coerce(v) for v in initial]}
    # forward: solve for column m+1, rows in increasing order
    for m in range(0, hi):
        prev, new = column[m], [None] * r
        for i in range(r):
            rhs = _rhs(A, S, kind, i, prev, new)
            v = S.try_div(rhs, prev[i])
            if v is None:
                raise KnitFailure((i + 1, m + 1), "forward")
            new[i] = v
        column[m + 1] = new
    # backward: solve for column m-1, rows in decreasing order
    for m in range(0, lo, -1):
        nxt, new = column[m], [None] * r
        for i in reversed(range(r)):
            rhs = _rhs(A, S, kind, i, new, nxt)
            v = S.try_div(rhs, nxt[i])
            if v is None:
                raise KnitFailure((i + 1, m - 1), "backward")
            new[i] = v
        column[m - 1] = new
    values = tuple(tuple(column[m][i] for m in range(lo, hi + 1)) for i in range(r))
    info = classify(A)
    period = info.coxeter_number + 2 if info else None
    return PatternWindow(kind, A, S, lo, hi, values, period)


def verify(window):
    """Re-check every relation fully contained in the window (and the
    declared period, if any) without dividing."""
    A, S = window.cartan, window.semiring
    kind = window.kind
    r = A.rank
    for m in range(window.m_lo, window.m_hi):
        col_m = list(window.column(m))
        col_m1 = list(window.column(m + 1))
        for i in range(r):
            lhs = S.mul(col_m[i], col_m1[i])
            if not S.eq(lhs, _rhs(A, S, kind, i, col_m, col_m1)):
                return False
    if window.period:
        p = window.period
        for i in range(1, r + 1):
            for m in range(window.m_lo, window.m_hi + 1 - p):
                if not S.eq(window.value(i, m), window.value(i, m + p)):
                    return False
    return True


def ensemble_image(window):
    """The Y-frieze pattern image of a frieze window: image(i, m) multiplies
    f(j,m)^(-a_{j,i}) over j > i and f(j,m+1)^(-a_{j,i}) over j < i.  The
    image window is one column narrower on the right."""
    if window.kind != "frieze":
        raise ValueError("ensemble image maps frieze patterns")
    if window.m_hi <= window.m_lo:
        raise WindowTooNarrow("need at least two columns")
    A, S = window.cartan, window.semiring
    r = A.rank
    rows = [[] for _ in range(r)]
    for m in range(window.m_lo, window.m_hi):
        col_m = window.column(m)
        col_m1 = window.column(m + 1)
        for i in range(r):
            acc = S.one
            for j in range(i + 1, r):
                e = -A.entries[j][i]
                if e:
                    acc = S.mul(acc, S.pow(col_m[j], e))
            for j in range(i):
                e = -A.entries[j][i]
                if e:
                    acc = S.mul(acc, S.pow(col_m1[j], e))
            rows[i].append(acc)
    return PatternWindow("yfrieze", A, S, window.m_lo, window.m_hi - 1,
                         tuple(tuple(row) for row in rows), window.period)


def check_glide(window):
    """True iff the window is invariant under the glide map, checking every
    pair it contains.  Requires finite type; the window must contain at
    least one glide pair for every row."""
    A, S = window.cartan, window.semiring
    glide = glide_data(A)     # raises NotFiniteType / UnrecognizedLabelling
    checked = [0] * A.rank
    ok = True
    for i in range(1, A.rank + 1):
        for m in range(window.m_lo, window.m_hi + 1):
            j, n = glide.map(i, m)
            if window.m_lo <= n <= window.m_hi:
                checked[i - 1] += 1
                if not S.eq(window.value(i, m), window.value(j, n)):
                    ok = False
    if any(c == 0 for c in checked):
        raise WindowTooNarrow("window contains no glide pair for some row")
    return ok


def default_cols(A):
    """One full period plus one column for finite type."""
    info = classify(A)
    if info is None:
        raise NotFiniteType("no default window outside finite type; pass cols")
    return (0, info.coxeter_number + 2)
