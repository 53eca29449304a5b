"""Semirings with exact arithmetic and exact-division queries.

Five instances ship: positive integers, positive rationals, the nonnegative
tropical semiring, the tropical semifield, and the universal semifield of
subtraction-free expressions.  All have a 1 and no 0; values are plain
Python objects (int, Fraction, RationalFn) and the semiring object supplies
the operations.  ``try_div`` returns None when no exact quotient exists in
the instance, which is the signal pattern knitting uses to prune.
"""

from __future__ import annotations

from fractions import Fraction

from .symbolic import RationalFn, parse_rational, render_rational


class MixedSemirings(TypeError):
    """Two values from different semirings were combined."""


def ensure_same(a, b):
    if a != b:
        raise MixedSemirings(f"cannot mix {a.id} with {b.id}")


class Semiring:
    """Common behaviour; concrete instances define add/mul/try_div/one."""

    id = "?"
    is_semifield = False

    def pow(self, a, n):
        if n < 0:
            if not self.is_semifield:
                raise ValueError(f"negative power in non-semifield {self.id}")
            inv = self.try_div(self.one, a)
            return self.pow(inv, -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def plus_one(self, a):
        return self.add(self.one, a)

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, Semiring) and self.id == other.id

    def __hash__(self):
        return hash(self.id)

    def __repr__(self):
        return f"<semiring {self.id}>"


class PositiveIntegers(Semiring):
    id = "zpos"
    one = 1

    def check(self, v):
        return isinstance(v, int) and v > 0

    def coerce(self, v):
        v = int(v)
        if v <= 0:
            raise ValueError(f"{v} is not a positive integer")
        return v

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        q, r = divmod(a, b)
        return q if r == 0 and q > 0 else None

    def parse(self, text):
        return self.coerce(int(text))

    def render(self, v):
        return str(v)

    to_json = staticmethod(lambda v: v)

    def from_json(self, v):
        return self.coerce(v)


class PositiveRationals(Semiring):
    id = "qpos"
    one = Fraction(1)
    is_semifield = True

    def check(self, v):
        return isinstance(v, Fraction) and v > 0

    def coerce(self, v):
        v = Fraction(v)
        if v <= 0:
            raise ValueError(f"{v} is not a positive rational")
        return v

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        return a / b

    def parse(self, text):
        return self.coerce(Fraction(text))

    def render(self, v):
        return str(v)

    def to_json(self, v):
        return str(v)

    def from_json(self, v):
        return self.coerce(Fraction(v))


class TropicalNonneg(Semiring):
    """Z^max restricted to nonnegative integers: a semiring, not a semifield.
    Semiring addition is max, multiplication is integer addition, 1 is 0."""

    id = "tropn"
    one = 0

    def check(self, v):
        return isinstance(v, int) and v >= 0

    def coerce(self, v):
        v = int(v)
        if v < 0:
            raise ValueError(f"{v} is negative")
        return v

    def add(self, a, b):
        return max(a, b)

    def mul(self, a, b):
        return a + b

    def try_div(self, a, b):
        d = a - b
        return d if d >= 0 else None

    def parse(self, text):
        return self.coerce(int(text))

    def render(self, v):
        return str(v)

    to_json = staticmethod(lambda v: v)

    def from_json(self, v):
        return self.coerce(v)


class TropicalSemifield(Semiring):
    """Z^max on all integers; division always exists."""

    id = "trop"
    one = 0
    is_semifield = True

    def check(self, v):
        return isinstance(v, int)

    def coerce(self, v):
        return int(v)

    def add(self, a, b):
        return max(a, b)

    def mul(self, a, b):
        return a + b

    def try_div(self, a, b):
        return a - b

    def parse(self, text):
        return int(text)

    def render(self, v):
        return str(v)

    to_json = staticmethod(lambda v: v)
    from_json = staticmethod(lambda v: int(v))


class Universal(Semiring):
    """Universal semifield of rank r: nonzero subtraction-free expressions,
    stored as ratios of polynomials with nonnegative integer coefficients."""

    is_semifield = True

    def __init__(self, nvars):
        self.nvars = nvars
        self.id = f"universal:{nvars}"
        self.one = RationalFn.one(nvars)

    def check(self, v):
        return (isinstance(v, RationalFn) and v.nvars == self.nvars
                and not v.is_zero()
                and v.num.has_nonneg_coeffs() and v.den.has_nonneg_coeffs())

    def coerce(self, v):
        if isinstance(v, int):
            v = RationalFn.const(v, self.nvars)
        if not self.check(v):
            raise ValueError(f"{v} is not a subtraction-free expression")
        return v

    def _norm(self, num, den):
        # prefer the exactly-reduced form, but fall back to the raw ratio
        # when reduction introduces signs: subtraction-free numerator and
        # denominator are part of the value's contract
        v = RationalFn(num, den)
        if v.num.has_nonneg_coeffs() and v.den.has_nonneg_coeffs():
            return v
        return RationalFn(num, den, reduce=False)

    def add(self, a, b):
        return self._norm(a.num * b.den + b.num * a.den, a.den * b.den)

    def mul(self, a, b):
        return self._norm(a.num * b.num, a.den * b.den)

    def try_div(self, a, b):
        return self._norm(a.num * b.den, a.den * b.num)

    def generators(self):
        return [RationalFn.gen(i, self.nvars) for i in range(self.nvars)]

    def parse(self, text):
        return self.coerce(parse_rational(text, self.nvars))

    def render(self, v):
        return render_rational(v)

    def to_json(self, v):
        return render_rational(v)

    def from_json(self, v):
        return self.parse(v)


_FIXED = {
    "zpos": PositiveIntegers,
    "qpos": PositiveRationals,
    "tropn": TropicalNonneg,
    "trop": TropicalSemifield,
}


def get_semiring(name, nvars=None):
    """Look up a semiring by id; universal instances need their rank."""
    if name in _FIXED:
        return _FIXED[name]()
    if name == "universal":
        if nvars is None:
            raise ValueError("universal semiring needs a variable count")
        return Universal(nvars)
    if name.startswith("universal:"):
        return Universal(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown semiring {name!r}")


SEMIRING_NAMES = ("zpos", "qpos", "tropn", "trop", "universal")
