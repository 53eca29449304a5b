"""Rank-2 generalized cluster algebras with exchange polynomials (1+t)^n.

Variables x_k (k in Z) in Q(x1, x2) satisfy x_k x_{k+2} = (1+x_{k+1})^c for
odd k and (1+x_{k+1})^b for even k.  The module computes the variables
exactly, detects periodicity by canonical-form equality, tests membership in
the superunitary region, rasterizes that region, and checks the renaming
y(i,m) -> x_{2m+i} against the rank-2 belt.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import validate_cartan
from .mutation import belt
from .symbolic import RationalFn, PoleAtPoint


@dataclass(frozen=True)
class GcaParams:
    b: int
    c: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise ValueError("exchange exponents must be positive integers")

    def cartan(self):
        return validate_cartan([[2, -self.b], [-self.c, 2]])

    def exponent(self, k):
        """Exponent n in x_k x_{k+2} = (1 + x_{k+1})^n."""
        return self.c if k % 2 != 0 else self.b


@dataclass(frozen=True)
class GcaVariableTable:
    params: GcaParams
    k_lo: int
    k_hi: int
    variables: dict     # k -> RationalFn in (x1, x2)

    def var(self, k):
        return self.variables[k]


def gca_variables(params, krange):
    """Exact generalized cluster variables over an inclusive index range
    containing {1, 2}."""
    lo, hi = krange
    if not (lo <= 1 and hi >= 2):
        raise ValueError("index range must contain 1 and 2")
    one = RationalFn.one(2)
    xs = {1: RationalFn.gen(0, 2), 2: RationalFn.gen(1, 2)}
    for k in range(1, hi - 1):
        xs[k + 2] = (one + xs[k + 1]) ** params.exponent(k) / xs[k]
    for k in range(0, lo - 1, -1):
        xs[k] = (one + xs[k + 1]) ** params.exponent(k) / xs[k + 2]
    return GcaVariableTable(params, lo, hi, {k: xs[k] for k in range(lo, hi + 1)})


def _point_orbit(params, point, kmax):
    xs = {1: Fraction(*point[0]), 2: Fraction(*point[1])}
    for k in range(1, kmax - 1):
        xs[k + 2] = (1 + xs[k + 1]) ** params.exponent(k) / xs[k]
    return xs

# generic probe points: a rational point separates distinct variables unless
# it happens to lie on their difference locus, hence two independent probes
_PROBES = (((3, 2), (5, 3)), ((7, 5), (2, 7)))


@lru_cache(maxsize=None)
def gca_period(params, maxk):
    """Least d <= maxk with x_{k+d} = x_k for k = 1, 2; None if no period
    up to maxk.  Candidate periods are screened by exact evaluation at
    fixed rational points (an inequality there is a proof of inequality);
    a surviving candidate is confirmed by canonical-form equality."""
    orbits = [_point_orbit(params, pt, maxk + 2) for pt in _PROBES]
    for d in range(1, maxk + 1):
        if all(o[1 + d] == o[1] and o[2 + d] == o[2] for o in orbits):
            table = gca_variables(params, (1, d + 2))
            if table.var(1 + d) == table.var(1) and table.var(2 + d) == table.var(2):
                return d
    return None


_PERIOD_SEARCH = 12   # covers the finite-type periods 5, 6, 8


@dataclass(frozen=True)
class RegionResult:
    inside: bool
    truncated: bool
    checked: int


def superunitary_contains(params, point, maxk=None):
    """Whether every generalized cluster variable evaluates to >= 1 at a
    positive point.  For bc <= 3 the detected period makes the answer exact;
    otherwise the test truncates at maxk and says so."""
    u, v = Fraction(point[0]), Fraction(point[1])
    if u <= 0 or v <= 0:
        raise PoleAtPoint("superunitary region lives over positive points")
    period = gca_period(params, _PERIOD_SEARCH) if params.b * params.c <= 3 else None
    if period is not None:
        k_hi, truncated = period + 1, False
    else:
        if maxk is None:
            raise ValueError("maxk required when bc >= 4")
        k_hi, truncated = maxk, True
    xs = {1: u, 2: v}
    inside = u >= 1 and v >= 1
    if inside:
        for k in range(1, k_hi - 1):
            nxt = (1 + xs[k + 1]) ** params.exponent(k) / xs[k]
            xs[k + 2] = nxt
            if nxt < 1:
                inside = False
                break
    return RegionResult(inside, truncated, k_hi)


def region_grid(params, extent=8, resolution=40, maxk=24):
    """Sample the superunitary region over (0, extent]^2 at midpoints of a
    resolution x resolution rational grid; yields (x, y, inside)."""
    step = Fraction(extent, resolution)
    for iy in range(resolution):
        y = step * iy + step / 2
        for ix in range(resolution):
            x = step * ix + step / 2
            res = superunitary_contains(params, (x, y), maxk=maxk)
            yield x, y, 1 if res.inside else 0


def phi_check(A, mrange):
    """Check that renaming y(i,0) -> x_i identifies the rank-2 Y-belt with
    the generalized cluster variables: y(i,m) = x_{2m+i} symbolically."""
    if A.rank != 2:
        raise ValueError("phi_check applies to rank-2 Cartan matrices")
    b, c = -A.entries[0][1], -A.entries[1][0]
    params = GcaParams(b, c)
    lo, hi = mrange
    table = belt(A, "y", mrange)
    gca = gca_variables(params, (min(2 * lo + 1, 1), 2 * hi + 2))
    subs = [table.var(1, 0), table.var(2, 0)]
    for m in range(lo, hi + 1):
        for i in (1, 2):
            expected = gca.var(2 * m + i).substitute(subs)
            if table.var(i, m) != expected:
                return False
    return True
