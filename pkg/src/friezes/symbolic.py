"""Exact multivariate Laurent polynomials and rational functions.

Coefficients are arbitrary-precision integers.  Rational functions are kept
as numerator/denominator pairs; no polynomial gcd is ever computed.  Instead,
canonical forms clear integer and monomial content and attempt exact
multivariate division, and equality is decided by cross-multiplication.
Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class PoleAtPoint(ZeroDivisionError):
    """Evaluation point lies on a pole (zero denominator or 0^negative)."""


def _require_same_nvars(a, b):
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")


class LaurentPoly:
    """A Laurent polynomial: map from integer exponent vectors to nonzero
    integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    t = tuple(exps)
                    if len(t) != nvars:
                        raise ValueError("exponent vector of wrong length")
                    clean[t] = clean.get(t, 0) + coeff
                    if clean[t] == 0:
                        del clean[t]
        self.terms = clean

    # ---- constructors ----
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def const(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: int(c)})

    @classmethod
    def one(cls, nvars):
        return cls.const(1, nvars)

    @classmethod
    def gen(cls, i, nvars):
        """The i-th variable, 0-based."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    # ---- predicates ----
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def has_nonneg_coeffs(self):
        return all(c > 0 for c in self.terms.values())

    # ---- arithmetic ----
    def __add__(self, other):
        _require_same_nvars(self, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            elif e in terms:
                del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _require_same_nvars(self, other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                elif e in terms:
                    del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # ---- structure ----
    def min_exponents(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return tuple(min(e[v] for e in self.terms) for v in range(self.nvars))

    def max_exponents(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return tuple(max(e[v] for e in self.terms) for v in range(self.nvars))

    def content(self):
        """gcd of the coefficients (positive), 0 for the zero polynomial."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        return g

    def shift(self, exps):
        """Multiply by the monomial with exponent vector `exps`."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {tuple(a + b for a, b in zip(e, exps)): c
                     for e, c in self.terms.items()}
        return out

    def leading(self):
        """Lex-leading (exponents, coefficient)."""
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self):
        """Terms sorted by total degree, then earlier variables first."""
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), tuple(reversed(t[0]))))

    # ---- evaluation / substitution ----
    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("point of wrong dimension")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(pt, e):
                if k == 0:
                    continue
                if x == 0 and k < 0:
                    raise PoleAtPoint("0 raised to a negative exponent")
                v *= x ** k
            total += v
        return total

    def substitute(self, values):
        """Substitute RationalFn values for the variables."""
        if len(values) != self.nvars:
            raise ValueError("substitution of wrong dimension")
        nv = values[0].nvars if values else 0
        total = RationalFn.const(0, nv)
        for e, c in self.terms.items():
            term = RationalFn.const(c, nv)
            for val, k in zip(values, e):
                if k:
                    term = term * (val ** k)
            total = total + term
        return total

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self})"


def divide_exact(f, g):
    """Return q with f == q * g as Laurent polynomials over Z, else None."""
    _require_same_nvars(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.nvars)
    alpha = f.min_exponents()
    beta = g.min_exponents()
    f0 = f.shift(tuple(-a for a in alpha))
    g0 = g.shift(tuple(-b for b in beta))
    # the quotient of f0/g0 has exponents >= -deg(g0); shift into poly range
    dshift = g0.max_exponents()
    dividend = {e: Fraction(c) for e, c in f0.shift(dshift).terms.items()}
    glead_e, glead_c = g0.leading()
    gc = Fraction(glead_c)
    q = {}
    while dividend:
        lead = max(dividend)
        diff = tuple(a - b for a, b in zip(lead, glead_e))
        if any(d < 0 for d in diff):
            return None
        coeff = dividend[lead] / gc
        q[diff] = coeff
        for e, c in g0.terms.items():
            tgt = tuple(a + b for a, b in zip(diff, e))
            v = dividend.get(tgt, Fraction(0)) - coeff * c
            if v:
                dividend[tgt] = v
            elif tgt in dividend:
                del dividend[tgt]
    back = tuple(a - b - d for a, b, d in zip(alpha, beta, dshift))
    out = {}
    for e, c in q.items():
        if c.denominator != 1:
            return None
        out[tuple(a + b for a, b in zip(e, back))] = int(c)
    return LaurentPoly(f.nvars, out)


class RationalFn:
    """Quotient of two Laurent polynomials in canonical form.

    Canonical form: common integer and monomial content cleared (so both
    parts are true polynomials), exact division applied when possible, and
    the denominator's lex-leading coefficient is positive.  Equality is
    decided by cross-multiplication; instances are not hashable.
    """

    __slots__ = ("num", "den", "nvars")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = LaurentPoly.one(num.nvars)
        _require_same_nvars(num, den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.nvars = num.nvars
        if num.is_zero():
            self.num = num
            self.den = LaurentPoly.one(num.nvars)
            return
        if reduce:
            q = divide_exact(num, den)
            if q is not None:
                num, den = q, LaurentPoly.one(self.nvars)
            else:
                p = divide_exact(den, num)
                if p is not None:
                    num, den = LaurentPoly.one(self.nvars), p
        # clear common integer content
        g = gcd(num.content(), den.content())
        if g > 1:
            num = LaurentPoly(self.nvars, {e: c // g for e, c in num.terms.items()})
            den = LaurentPoly(self.nvars, {e: c // g for e, c in den.terms.items()})
        # clear common monomial content: shift so joint min exponent is 0
        mn = num.min_exponents()
        md = den.min_exponents()
        joint = tuple(-min(a, b) for a, b in zip(mn, md))
        if any(joint):
            num = num.shift(joint)
            den = den.shift(joint)
        if den.leading()[1] < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    # ---- constructors ----
    @classmethod
    def const(cls, c, nvars):
        return cls(LaurentPoly.const(c, nvars), reduce=False)

    @classmethod
    def one(cls, nvars):
        return cls.const(1, nvars)

    @classmethod
    def gen(cls, i, nvars):
        return cls(LaurentPoly.gen(i, nvars), reduce=False)

    @classmethod
    def from_fraction(cls, q, nvars):
        q = Fraction(q)
        return cls(LaurentPoly.const(q.numerator, nvars),
                   LaurentPoly.const(q.denominator, nvars), reduce=False)

    # ---- predicates ----
    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    # ---- arithmetic ----
    def __add__(self, other):
        other = self._coerce(other)
        num = self.num * other.den + other.num * self.den
        return RationalFn(num, self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        num = self.num * other.den - other.num * self.den
        return RationalFn(num, self.den * other.den)

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        other = self._coerce(other)
        a_num, a_den = self.num, self.den
        b_num, b_den = other.num, other.den
        # cross-cancel exactly where possible to limit growth
        if not b_den.is_one():
            q = divide_exact(a_num, b_den)
            if q is not None:
                a_num, b_den = q, LaurentPoly.one(self.nvars)
        if not a_den.is_one():
            q = divide_exact(b_num, a_den)
            if q is not None:
                b_num, a_den = q, LaurentPoly.one(self.nvars)
        return RationalFn(a_num * b_num, a_den * b_den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFn(other.den, other.num, reduce=False)

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFn(self.den, self.num, reduce=False) ** (-n)
        result = RationalFn.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            _require_same_nvars(self, other)
            return other
        if isinstance(other, int):
            return RationalFn.const(other, self.nvars)
        raise TypeError(f"cannot combine RationalFn with {type(other)!r}")

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFn.const(other, self.nvars)
        if not isinstance(other, RationalFn):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # ---- queries ----
    def is_laurent(self):
        """The equal Laurent polynomial with integer coefficients, or None."""
        return divide_exact(self.num, self.den)

    def evaluate(self, point):
        dv = self.den.evaluate(point)
        if dv == 0:
            raise PoleAtPoint("denominator vanishes at the point")
        return self.num.evaluate(point) / dv

    def substitute(self, values):
        return self.num.substitute(values) / self.den.substitute(values)

    def __str__(self):
        return render_rational(self)

    def __repr__(self):
        return f"RationalFn({self})"


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------

def default_names(nvars, prefix="y"):
    return [f"{prefix}{i+1}" for i in range(nvars)]


def render_poly(p, names=None):
    if p.is_zero():
        return "0"
    names = names or default_names(p.nvars)
    parts = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append("*".join(factors))
        elif coeff == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(f"{coeff}*" + "*".join(factors))
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def render_rational(f, names=None):
    num = render_poly(f.num, names)
    if f.den.is_one():
        return num
    den = render_poly(f.den, names)
    num_s = num if len(f.num.terms) == 1 else f"({num})"
    den_s = den if len(f.den.terms) == 1 and "*" not in den else f"({den})"
    return f"{num_s}/{den_s}"


def poly_to_json(p):
    return {"nvars": p.nvars,
            "terms": [[list(e), c] for e, c in p.sorted_terms()]}


def poly_from_json(d):
    return LaurentPoly(d["nvars"], {tuple(e): c for e, c in d["terms"]})


class ExprError(ValueError):
    """Malformed expression text."""


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ExprError(f"unexpected character {ch!r}")
    return tokens


def parse_rational(text, nvars, names=None):
    """Parse an expression over +, -, *, /, ^, parentheses, integers and
    variables into a RationalFn.  Default variable names are y1..yn."""
    names = names or default_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    # also accept underscored forms like y_1
    for i, n in enumerate(names):
        head = n.rstrip("0123456789")
        tail = n[len(head):]
        if tail:
            index.setdefault(f"{head}_{tail}", i)
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_sum():
        node = parse_product()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_product()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_product():
        ops = {"+", "-", "*", "/", "^", "(", ")"}
        node = parse_power()
        while True:
            tok = peek()
            if tok == "*":
                take()
                node = node * parse_power()
            elif tok == "/":
                take()
                node = node / parse_power()
            elif tok == "(" or isinstance(tok, int) or (
                    isinstance(tok, str) and tok not in ops):
                # implicit multiplication, e.g. "2y1" or "(1+y1)y2"
                node = node * parse_power()
            else:
                return node

    def parse_power():
        if peek() == "-":
            take()
            return -parse_power()
        if peek() == "+":
            take()
            return parse_power()
        node = parse_atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            tok = take()
            if not isinstance(tok, int):
                raise ExprError("exponent must be an integer")
            node = node ** (sign * tok)
        return node

    def parse_atom():
        tok = peek()
        if tok == "(":
            take()
            node = parse_sum()
            if take() != ")":
                raise ExprError("missing closing parenthesis")
            return node
        tok = take()
        if isinstance(tok, int):
            return RationalFn.const(tok, nvars)
        if isinstance(tok, str):
            if tok not in index:
                raise ExprError(f"unknown variable {tok!r}")
            return RationalFn.gen(index[tok], nvars)
        raise ExprError("unexpected end of expression")

    if not tokens:
        raise ExprError("empty expression")
    node = parse_sum()
    if pos != len(tokens):
        raise ExprError(f"trailing input at token {pos}")
    return node
