"""Shared helpers: independent oracles the tests check the library against."""

import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def oracle_knit(entries, kind, initial, ncols):
    """Plain-loop knitting over the positive integers, written directly from
    the defining relations; independent of the library's knitting path.
    Returns rows (list of tuples) or None on any failed division."""
    r = len(entries)
    cols = [list(initial)]
    if any(v < 1 for v in initial):
        return None
    for m in range(ncols):
        prev, new = cols[m], []
        for i in range(r):
            rhs = 1
            for j in range(i + 1, r):
                e = -entries[j][i]
                if e:
                    rhs *= ((1 + prev[j]) if kind == "y" else prev[j]) ** e
            for j in range(i):
                e = -entries[j][i]
                if e:
                    rhs *= ((1 + new[j]) if kind == "y" else new[j]) ** e
            if kind == "f":
                rhs += 1
            q, rem = divmod(rhs, prev[i])
            if rem or q < 1:
                return None
            new.append(q)
        cols.append(new)
    return [tuple(cols[m][i] for m in range(ncols + 1)) for i in range(r)]


def oracle_enumerate(entries, kind, cap, period):
    """Brute-force enumeration over the full box [1,cap]^r."""
    r = len(entries)
    out = []
    for s in product(range(1, cap + 1), repeat=r):
        rows = oracle_knit(entries, kind, s, period)
        if rows is not None and all(row[period] == row[0] for row in rows):
            out.append(s)
    return out


def oracle_knit_frac(entries, kind, initial, ncols):
    """Exact rational knitting (never fails over a semifield)."""
    r = len(entries)
    cols = [[Fraction(v) for v in initial]]
    for m in range(ncols):
        prev, new = cols[m], []
        for i in range(r):
            rhs = Fraction(1)
            for j in range(i + 1, r):
                e = -entries[j][i]
                if e:
                    rhs *= ((1 + prev[j]) if kind == "y" else prev[j]) ** e
            for j in range(i):
                e = -entries[j][i]
                if e:
                    rhs *= ((1 + new[j]) if kind == "y" else new[j]) ** e
            if kind == "f":
                rhs += 1
            new.append(rhs / prev[i])
        cols.append(new)
    return [tuple(cols[m][i] for m in range(ncols + 1)) for i in range(r)]


@pytest.fixture(scope="session")
def a3_belt_y():
    import friezes as F
    A3 = F.cartan_type("A3")
    return F.belt(A3, "y", (-3, 6))


@pytest.fixture(scope="session")
def a3_belt_a():
    import friezes as F
    A3 = F.cartan_type("A3")
    return F.belt(A3, "a", (-3, 6))
