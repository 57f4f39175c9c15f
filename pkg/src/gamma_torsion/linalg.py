"""Exact matrices over Q[t, t^-1] and Q(t).

Determinants use fraction-free Bareiss elimination; Smith normal form runs
the Euclidean algorithm in Q[t, t^-1] with total degree as the norm, so
powers of t are treated as the units they are.
"""

from dataclasses import dataclass

from .errors import NotSquareError, ShapeMismatchError
from .laurent import ONE, ZERO, LaurentPoly, RationalFn, gcd, lcm


def _coerce_entry(x):
    if isinstance(x, (LaurentPoly, RationalFn)):
        return x
    if isinstance(x, str):
        from .parser import parse_poly_or_ratfn

        return parse_poly_or_ratfn(x)
    return LaurentPoly.coerce(x)


class Matrix:
    """Immutable rows x cols matrix of LaurentPoly or RationalFn entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(_coerce_entry(e) for e in entries)
        if len(entries) != rows * cols:
            raise ShapeMismatchError(f"{rows}x{cols} matrix needs {rows * cols} entries")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatchError("ragged matrix rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(c) for c in columns]
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None):
        n = len(diag)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        out = [[ZERO] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = _coerce_entry(d)
        return cls.from_rows(out, cols)

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return Matrix.from_columns(self.to_rows(), self.cols) if self.rows else Matrix(self.cols, 0, [])

    def is_polynomial(self):
        return all(isinstance(e, LaurentPoly) or e.is_polynomial() for e in self.entries)

    def to_poly(self):
        return Matrix(
            self.rows,
            self.cols,
            [e if isinstance(e, LaurentPoly) else e.to_poly() for e in self.entries],
        )

    def to_ratfn(self):
        return Matrix(self.rows, self.cols, [RationalFn.coerce(e) for e in self.entries])

    def is_zero(self):
        return all(not e for e in self.entries)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        other_cols = [other.col(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in other_cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = a * b + acc
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ShapeMismatchError("vector length does not match matrix")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, b in zip(self.row(i), vec):
                if a and b:
                    acc = a * b + acc
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            RationalFn.coerce(a) == RationalFn.coerce(b) for a, b in zip(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(RationalFn.coerce(e) for e in self.entries)))

    def submatrix(self, row_idx, col_idx):
        return Matrix(len(row_idx), len(col_idx), [self[i, j] for i in row_idx for j in col_idx])

    def map(self, fn):
        return Matrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def __repr__(self):
        return f"Matrix({[[str(e) for e in r] for r in self.to_rows()]})"


PolyMatrix = Matrix
RatFnMatrix = Matrix


# -- determinants -------------------------------------------------------
def _bareiss(rows):
    """Determinant of a square list-of-lists of LaurentPoly (consumed)."""
    n = len(rows)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri, rk = rows[i], rows[k]
            for j in range(k + 1, n):
                val = ri[j] * pivot
                if rik and rk[j]:
                    val = val - rik * rk[j]
                ri[j] = val.exact_div(prev) if not prev.is_one() else val
            ri[k] = ZERO
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def _poly_determinant(m):
    rows = m.to_rows()
    shift = 0
    for r in rows:
        lows = [e.low for e in r if e]
        if not lows:
            return ZERO
        k = min(lows)
        if k:
            for j, e in enumerate(r):
                r[j] = e.shift(-k)
            shift += k
    return _bareiss(rows).shift(shift)


def determinant(m):
    """Exact determinant; a LaurentPoly for polynomial input, else a RationalFn."""
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    if all(isinstance(e, LaurentPoly) for e in m.entries):
        return _poly_determinant(m)
    # clear denominators row by row
    rows = []
    scale = ONE
    for r in m.to_rows():
        r = [RationalFn.coerce(e) for e in r]
        den = ONE
        for e in r:
            if not e.den.is_one():
                den = lcm(den, e.den)
        rows.append([(e.num * den.exact_div(e.den)) if e else ZERO for e in r])
        scale = scale * den
    det = _poly_determinant(Matrix.from_rows(rows, m.cols))
    return RationalFn(det, scale)


# -- Smith normal form --------------------------------------------------
@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with unimodular U, V over Q[t, t^-1]."""

    U: Matrix
    V: Matrix
    D: Matrix
    invariant_factors: tuple

    @property
    def rank(self):
        return sum(1 for f in self.invariant_factors if f)

    def nonunit_factors(self):
        return [f for f in self.invariant_factors if f and not f.is_unit()]


def _pivot_position(D, s, m, n):
    best = None
    for i in range(s, m):
        row = D[i]
        for j in range(s, n):
            e = row[j]
            if e:
                key = (e.total_degree(), i, j)
                if best is None or key < best:
                    best = key
    return best


def smith_normal_form(A):
    """Smith normal form of a matrix over Q[t, t^-1].

    Invariant factors are unit-normalized (lowest exponent 0, monic), each
    divides the next, and zeros come last.  The list has min(rows, cols)
    entries.
    """
    A = A.to_poly()
    m, n = A.shape
    D = A.to_rows()
    U = Matrix.identity(m).to_rows()
    V = Matrix.identity(n).to_rows()  # column ops act on columns of V

    def row_axpy(dst, src, q):
        # row_dst -= q * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for k, e in enumerate(rs):
                if e:
                    rd[k] = rd[k] - q * e

    def col_axpy(dst, src, q):
        for M in (D, V):
            for r in M:
                e = r[src]
                if e:
                    r[dst] = r[dst] - q * e

    def swap_rows(i, j):
        if i != j:
            for M in (D, U):
                M[i], M[j] = M[j], M[i]

    def swap_cols(i, j):
        if i != j:
            for M in (D, V):
                for r in M:
                    r[i], r[j] = r[j], r[i]

    r = min(m, n)
    for s in range(r):
        while True:
            pos = _pivot_position(D, s, m, n)
            if pos is None:
                break
            _, pi, pj = pos
            swap_rows(s, pi)
            swap_cols(s, pj)
            p = D[s][s]
            clean = True
            for i in range(s + 1, m):
                if D[i][s]:
                    q, rem = D[i][s].divmod_gamma(p)
                    row_axpy(i, s, q)
                    clean = clean and rem.is_zero()
            for j in range(s + 1, n):
                if D[s][j]:
                    q, rem = D[s][j].divmod_gamma(p)
                    col_axpy(j, s, q)
                    clean = clean and rem.is_zero()
            if not clean:
                continue
            bad = next(
                (i for i in range(s + 1, m) for j in range(s + 1, n) if D[i][j] and not p.divides(D[i][j])),
                None,
            )
            if bad is None:
                break
            # row_s += row_bad, then re-reduce
            row_axpy(s, bad, -ONE)
        if pos is None:
            break

    factors = []
    for s in range(r):
        d = D[s][s]
        if d:
            (c, k), normed = d.unit_normalize()
            if c != 1 or k:
                inv = LaurentPoly.monomial(1 / c, -k)
                D[s] = [e * inv if e else e for e in D[s]]
                U[s] = [e * inv if e else e for e in U[s]]
            factors.append(normed)
        else:
            factors.append(ZERO)
    return SmithForm(
        U=Matrix.from_rows(U, m),
        V=Matrix.from_rows(V, n),
        D=Matrix.from_rows(D, n),
        invariant_factors=tuple(factors),
    )


# -- column spaces over Q(t) -------------------------------------------
def _clear_denominators(vec):
    """Scale a Q(t) vector to a Q[t, t^-1] vector spanning the same line."""
    den = ONE
    for e in vec:
        if isinstance(e, RationalFn) and not e.den.is_one():
            den = lcm(den, e.den)
    out = []
    for e in vec:
        if isinstance(e, RationalFn):
            out.append(e.num * den.exact_div(e.den) if e else ZERO)
        else:
            out.append(e * den if not den.is_one() else e)
    return out


def _primitive(vec):
    g = None
    for e in vec:
        if e:
            g = e.normalized() if g is None else gcd(g, e)
            if g.is_one():
                break
    if g is None or g.is_one():
        return vec
    return [e.exact_div(g) if e else e for e in vec]


class _Echelon:
    """Incremental fraction-free row echelon set of vectors over Q(t)."""

    def __init__(self):
        self.vectors = []  # (pivot index, vector)

    def reduce(self, vec):
        v = list(vec)
        for p, w in self.vectors:
            if v[p]:
                a, b = w[p], v[p]
                v = [x * a - y * b if (x or y) else x for x, y in zip(v, w)]
        return v

    def add(self, vec):
        """Insert ``vec``; return True if it was independent."""
        v = _primitive(self.reduce(_clear_denominators(vec)))
        for p, e in enumerate(v):
            if e:
                self.vectors.append((p, v))
                return True
        return False


@dataclass(frozen=True)
class ColumnBasis:
    """Basis of the column space of M plus domain vectors mapping onto it."""

    indices: tuple
    columns: tuple
    preimages: tuple

    def __len__(self):
        return len(self.indices)


def column_space_basis(M, order=None):
    """Greedy basis of the image of M over Q(t).

    Columns are scanned in ``order`` (default left to right) and kept when
    independent of those already kept.  Each kept column is the image of a
    standard basis vector, which is returned as its preimage.
    """
    order = range(M.cols) if order is None else order
    ech = _Echelon()
    kept = []
    for j in order:
        col = M.col(j)
        if any(col) and ech.add(col):
            kept.append(j)
            if len(kept) == M.rows:
                break
    columns = tuple(tuple(M.col(j)) for j in kept)
    preimages = tuple(tuple(ONE if k == j else ZERO for k in range(M.cols)) for j in kept)
    return ColumnBasis(tuple(kept), columns, preimages)


def rank(M):
    """Rank over Q(t)."""
    ech = _Echelon()
    r = 0
    for j in range(M.cols):
        col = M.col(j)
        if any(col) and ech.add(col):
            r += 1
            if r == M.rows:
                break
    return r


def solve(A, B):
    """Solve ``A @ X == B`` over Q(t) for A of full column rank.

    Returns X as a Matrix of RationalFn; raises ValueError when some column
    of B is outside the column space of A.
    """
    if A.rows != B.rows:
        raise ShapeMismatchError("solve: row counts differ")
    n, k, w = A.rows, A.cols, B.cols
    aug = [[RationalFn.coerce(e) for e in A.row(i) + B.row(i)] for i in range(n)]
    pivots = []
    row = 0
    for c in range(k):
        piv = next((i for i in range(row, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("solve: matrix does not have full column rank")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][c].inverse()
        aug[row] = [e * inv if e else e for e in aug[row]]
        for i in range(n):
            if i != row and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y if y else x for x, y in zip(aug[i], aug[row])]
        pivots.append(c)
        row += 1
    for i in range(row, n):
        if any(aug[i][k:]):
            raise ValueError("solve: right-hand side not in the column space")
    return Matrix.from_rows([aug[i][k:] for i in range(k)], w)
