"""Symmetrizable generalized Cartan matrices and their derived data.

Covers validation, the finite-type test (all principal minors positive,
computed exactly over the integers), classification against the standard
labellings, exchange matrices, the Coxeter companion matrix C with the
identity I + C + ... + C^(h-1) = 0, and glide-symmetry data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm


class NotCartan(ValueError):
    """Matrix violates the generalized Cartan conditions."""


class NotSymmetrizable(NotCartan):
    """No positive integer diagonal D makes D*A symmetric."""


class NotFiniteType(ValueError):
    """Operation requires a Cartan matrix of finite type."""


class UnrecognizedLabelling(ValueError):
    """Valid matrix, but no match to a built-in standard labelling."""


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple
    rank: int
    label: str = None

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class GlideData:
    """Glide reflection data: the involution i -> i* (1-based values), the
    shift m_i of each row, the Coxeter number and the translation period."""

    involution: tuple
    shifts: tuple
    coxeter_number: int
    period: int

    def __post_init__(self):
        r = len(self.involution)
        for i in range(r):
            if self.involution[self.involution[i] - 1] != i + 1:
                raise ValueError("involution is not self-inverse")
            if self.shifts[i] < 1:
                raise ValueError("shifts must be positive")
            ms = self.shifts[self.involution[i] - 1]
            if self.shifts[i] + ms + 2 != self.period:
                raise ValueError("m_i + m_{i*} + 2 != period")

    def map(self, i, m):
        """The glide image of grid point (i, m), rows 1-based."""
        istar = self.involution[i - 1]
        return istar, m + self.shifts[istar - 1] + 1


@dataclass(frozen=True)
class CoxeterCompanion:
    lower: tuple
    upper: tuple
    companion: tuple


# ---------------------------------------------------------------------------
# integer matrix helpers
# ---------------------------------------------------------------------------

def mat_mul(X, Y):
    n, k, m = len(X), len(Y), len(Y[0])
    return tuple(tuple(sum(X[i][t] * Y[t][j] for t in range(k)) for j in range(m))
                 for i in range(n))

def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

def mat_is_zero(X):
    return all(all(x == 0 for x in row) for row in X)

def mat_add(X, Y):
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))

def det_int(rows):
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]

def mat_inverse_frac(rows):
    """Exact inverse over Fractions."""
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)]
         + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return tuple(tuple(m[i][n + j] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def components(entries):
    """Connected components of the underlying diagram (0-based indices)."""
    r = len(entries)
    seen = [False] * r
    comps = []
    for start in range(r):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(r):
                if v != u and not seen[v] and entries[u][v] != 0:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def symmetrizer(A):
    """Positive integer diagonal D with D*A symmetric; NotSymmetrizable if
    none exists.  Computed constructively by propagating ratios along the
    diagram and verifying consistency."""
    entries = A.entries if isinstance(A, CartanMatrix) else A
    r = len(entries)
    d = [None] * r
    for comp in components(entries):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            u = stack.pop()
            for v in range(r):
                if v == u or entries[u][v] == 0:
                    continue
                # need d_u * a_{u,v} == d_v * a_{v,u}
                want = d[u] * entries[u][v] / entries[v][u]
                if d[v] is None:
                    d[v] = want
                    stack.append(v)
                elif d[v] != want:
                    raise NotSymmetrizable("inconsistent ratio cycle")
        scale = lcm(*(x.denominator for x in (d[i] for i in comp)))
        for i in comp:
            d[i] = d[i] * scale
    out = tuple(int(x) for x in d)
    for i in range(r):
        for j in range(r):
            if out[i] * entries[i][j] != out[j] * entries[j][i]:
                raise NotSymmetrizable("D*A not symmetric")
    return out


def validate_cartan(entries, label=None):
    """Validate a square integer matrix as a symmetrizable generalized
    Cartan matrix; attaches the recognized type label when there is one."""
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    r = len(rows)
    if r == 0 or any(len(row) != r for row in rows):
        raise NotCartan("matrix is not square")
    for i in range(r):
        if rows[i][i] != 2:
            raise NotCartan(f"diagonal entry a[{i+1},{i+1}] != 2")
        for j in range(r):
            if i != j:
                if rows[i][j] > 0:
                    raise NotCartan(f"positive off-diagonal entry a[{i+1},{j+1}]")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise NotCartan(f"zero pattern asymmetric at ({i+1},{j+1})")
    A = CartanMatrix(rows, r, label)
    symmetrizer(A)
    if label is None:
        info = classify(A)
        if info is not None:
            A = CartanMatrix(rows, r, info.name)
    return A


def is_indecomposable(A):
    return len(components(A.entries)) == 1


def is_finite_type(A):
    """True iff all principal minors are positive (exact integer check)."""
    r = A.rank
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            sub = [[A.entries[i][j] for j in subset] for i in subset]
            if det_int(sub) <= 0:
                return False
    return True


# ---------------------------------------------------------------------------
# builders and classification
# ---------------------------------------------------------------------------

def _chain(r):
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        m[i][i] = 2
    for i in range(r - 1):
        m[i][i + 1] = m[i + 1][i] = -1
    return m

def _build_A(r):
    if r < 1:
        raise ValueError("A_r needs r >= 1")
    return _chain(r)

def _build_B(r):
    if r < 2:
        raise ValueError("B_r needs r >= 2")
    m = _chain(r)
    m[r - 1][r - 2] = -2
    return m

def _build_C(r):
    if r < 2:
        raise ValueError("C_r needs r >= 2")
    m = _chain(r)
    m[r - 2][r - 1] = -2
    return m

def _build_D(r):
    if r < 4:
        raise ValueError("D_r needs r >= 4")
    m = _chain(r - 1)
    for row in m:
        row.append(0)
    m.append([0] * r)
    m[r - 1][r - 1] = 2
    m[r - 2][r - 1] = m[r - 1][r - 2] = 0
    m[r - 3][r - 1] = m[r - 1][r - 3] = -1
    return m

def _build_E(r):
    att = {6: 3, 7: 4, 8: 5}[r]
    m = _chain(r - 1)
    for row in m:
        row.append(0)
    m.append([0] * r)
    m[r - 1][r - 1] = 2
    m[att - 1][r - 1] = m[r - 1][att - 1] = -1
    return m

def _build_F4():
    m = _chain(4)
    m[2][1] = -2
    return m

def _build_G2():
    # orientation pinned so the constant arithmetic Y-frieze has rows (3, 8)
    return [[2, -3], [-1, 2]]

COXETER_NUMBERS = {"A": lambda r: r + 1, "B": lambda r: 2 * r, "C": lambda r: 2 * r,
                   "D": lambda r: 2 * r - 2, "E": {6: 12, 7: 18, 8: 30},
                   "F": {4: 12}, "G": {2: 6}}


def standard_matrix(name):
    """The built-in matrix for a type name such as A3, C2, G2 or A1~."""
    name = name.strip()
    if name in ("A1~", "A1^(1)"):
        return [[2, -2], [-2, 2]], "A1~"
    if len(name) < 2 or name[0] not in "ABCDEFG":
        raise ValueError(f"unknown type name {name!r}")
    family, r = name[0], int(name[1:])
    builders = {"A": _build_A, "B": _build_B, "C": _build_C, "D": _build_D}
    if family in builders:
        return builders[family](r), f"{family}{r}"
    if family == "E":
        if r not in (6, 7, 8):
            raise ValueError("E type exists for ranks 6, 7, 8")
        return _build_E(r), f"E{r}"
    if family == "F":
        if r != 4:
            raise ValueError("F type exists for rank 4")
        return _build_F4(), "F4"
    if family == "G":
        if r != 2:
            raise ValueError("G type exists for rank 2")
        return _build_G2(), "G2"
    raise ValueError(f"unknown type name {name!r}")


def cartan_type(name):
    entries, label = standard_matrix(name)
    return validate_cartan(entries, label)


def coxeter_number(name):
    family = name[0]
    r = int(name[1:])
    entry = COXETER_NUMBERS[family]
    return entry[r] if isinstance(entry, dict) else entry(r)


def _find_relabelling(entries, target):
    """Permutation p (0-based) with entries[i][j] == target[p[i]][p[j]], or
    None.  Backtracking on the diagram adjacency."""
    r = len(entries)
    if len(target) != r:
        return None
    rowsig = lambda M, i: sorted(M[i][j] for j in range(r) if j != i and M[i][j] != 0)
    sig_e = [rowsig(entries, i) for i in range(r)]
    sig_t = [rowsig(target, i) for i in range(r)]
    colsig = lambda M, i: sorted(M[j][i] for j in range(r) if j != i and M[j][i] != 0)
    csig_e = [colsig(entries, i) for i in range(r)]
    csig_t = [colsig(target, i) for i in range(r)]
    assign = [None] * r
    used = [False] * r

    def ok(i, t):
        if sig_e[i] != sig_t[t] or csig_e[i] != csig_t[t]:
            return False
        for j in range(i):
            tj = assign[j]
            if entries[i][j] != target[t][tj] or entries[j][i] != target[tj][t]:
                return False
        return True

    def bt(i):
        if i == r:
            return True
        for t in range(r):
            if not used[t] and ok(i, t):
                assign[i] = t
                used[t] = True
                if bt(i + 1):
                    return True
                used[t] = False
                assign[i] = None
        return False

    return tuple(assign) if bt(0) else None


@dataclass(frozen=True)
class TypeInfo:
    name: str
    coxeter_number: int
    relabelling: tuple   # 0-based p with A[i][j] == standard[p[i]][p[j]]
    exact: bool          # True when A is the standard labelling itself


@lru_cache(maxsize=None)
def classify(A):
    """Identify an indecomposable finite-type matrix against the built-in
    standard labellings (up to relabelling); None if not finite type or
    decomposable."""
    if not is_indecomposable(A) or not is_finite_type(A):
        return None
    r = A.rank
    candidates = [f"A{r}"]
    if r >= 2:
        candidates += [f"B{r}", f"C{r}"]
    if r >= 4:
        candidates.append(f"D{r}")
    if r in (6, 7, 8):
        candidates.append(f"E{r}")
    if r == 4:
        candidates.append("F4")
    if r == 2:
        candidates.append("G2")
    for name in candidates:
        target, _ = standard_matrix(name)
        target = tuple(tuple(row) for row in target)
        if A.entries == target:
            return TypeInfo(name, coxeter_number(name), tuple(range(r)), True)
    for name in candidates:
        target, _ = standard_matrix(name)
        p = _find_relabelling(A.entries, [tuple(row) for row in target])
        if p is not None:
            return TypeInfo(name, coxeter_number(name), p, False)
    return None


# ---------------------------------------------------------------------------
# derived matrices
# ---------------------------------------------------------------------------

def exchange_matrix(A):
    """The acyclic mutation matrix attached to A: zero diagonal, a_{i,j}
    above it and -a_{i,j} below."""
    r = A.rank
    return tuple(tuple(0 if i == j else (A.entries[i][j] if i < j else -A.entries[i][j])
                       for j in range(r)) for i in range(r))


def coxeter_companion(A):
    """L, U and C = (-L U^{-1})^T, exactly over the integers."""
    r = A.rank
    L = tuple(tuple(1 if i == j else (A.entries[i][j] if i > j else 0)
                    for j in range(r)) for i in range(r))
    U = tuple(tuple(1 if i == j else (A.entries[i][j] if i < j else 0)
                    for j in range(r)) for i in range(r))
    Uinv = mat_inverse_frac(U)
    LU = mat_mul(L, Uinv)
    C = tuple(tuple(int(-LU[j][i]) for j in range(r)) for i in range(r))
    return CoxeterCompanion(L, U, C)


def coxeter_identity_holds(A, h=None):
    """Check I + C + ... + C^(h-1) == 0 and that C has order h."""
    if h is None:
        info = classify(A)
        if info is None:
            raise NotFiniteType("no Coxeter number available")
        h = info.coxeter_number
    C = coxeter_companion(A).companion
    r = A.rank
    total = mat_identity(r)
    power = C
    for _ in range(h - 1):
        total = mat_add(total, power)
        power = mat_mul(power, C)
    return mat_is_zero(total) and power == mat_identity(r)


# ---------------------------------------------------------------------------
# glide data
# ---------------------------------------------------------------------------

_CASE2_FAMILIES = ("A", "D", "E")


def _is_case_two(name):
    family, r = name[0], int(name[1:])
    if family == "A":
        return r >= 2
    if family == "D":
        return r % 2 == 1
    return name == "E6"


def _nontrivial_automorphism(entries):
    r = len(entries)
    perms = []

    assign = [None] * r
    used = [False] * r

    def ok(i, t):
        for j in range(i):
            if entries[i][j] != entries[t][assign[j]] or entries[j][i] != entries[assign[j]][t]:
                return False
        return True

    def bt(i):
        if i == r:
            p = tuple(assign)
            if p != tuple(range(r)):
                perms.append(p)
            return
        for t in range(r):
            if not used[t] and entries[t][t] == 2 and ok(i, t):
                assign[i] = t
                used[t] = True
                bt(i + 1)
                used[t] = False
        return

    bt(0)
    if len(perms) != 1:
        raise UnrecognizedLabelling(f"expected a unique nontrivial diagram "
                                    f"automorphism, found {len(perms)}")
    return perms[0]


def glide_data(A):
    """Glide-symmetry data of an indecomposable finite-type Cartan matrix,
    computed on the matrix's own labelling."""
    info = classify(A)
    if info is None:
        if not is_finite_type(A):
            raise NotFiniteType("glide data exists only in finite type")
        raise UnrecognizedLabelling("matrix does not match a standard type")
    h = info.coxeter_number
    r = A.rank
    if not _is_case_two(info.name):
        return GlideData(tuple(range(1, r + 1)), (h // 2,) * r, h, h + 2)
    star0 = _nontrivial_automorphism(A.entries)
    adj = {i: [j for j in range(r) if j != i and A.entries[i][j] != 0] for i in range(r)}

    def diagram_path(u, v):
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        return path[::-1]

    shifts = [0] * r
    for i in range(r):
        if star0[i] == i:
            shifts[i] = h // 2
            continue
        a = b = 0
        path = diagram_path(i, star0[i])
        for u, v in zip(path, path[1:]):
            # quiver arrow u->v iff u<v and a_{u,v} = -1 (simply laced here)
            if u < v and A.entries[u][v] == -1:
                a += 1      # points along the path, towards i*
            else:
                b += 1      # points against the path, towards i
        shifts[i] = (h + a - b) // 2
    return GlideData(tuple(s + 1 for s in star0), tuple(shifts), h, h + 2)


# ---------------------------------------------------------------------------
# text input
# ---------------------------------------------------------------------------

def parse_cartan(text):
    """Accept a type name ('A3', 'G2', 'A1~') or a matrix literal like
    '2,-1;-1,2'."""
    text = text.strip()
    if ";" in text or "," in text:
        rows = [[int(x) for x in row.split(",") if x.strip() != ""]
                for row in text.split(";") if row.strip() != ""]
        return validate_cartan(rows)
    return cartan_type(text)
