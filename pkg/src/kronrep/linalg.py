"""Exact dense linear algebra over Q, with a prime-field mode for oracles.

Every entry is either an exact rational (gmpy2.mpq when available,
fractions.Fraction otherwise) or, in prime-field mode, an integer in
[0, p).  There is no floating point anywhere in this module; all ranks,
kernels and solutions are exact.  Kernel bases follow a fixed
normalization (free variable set to 1, remaining free variables 0, in
ascending column order) so that everything built on top of them is
reproducible byte for byte.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = None


def ratio(num, den=1):
    """Exact rational scalar, always in lowest terms with positive denominator."""
    if _mpq is not None:
        return _mpq(num, den)
    return Fraction(num, den)


QQ_ZERO = ratio(0)
QQ_ONE = ratio(1)


def parse_scalar(text):
    """Parse "p" or "p/q" into an exact rational."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return ratio(int(num), int(den))
    return ratio(int(s))


def format_scalar(x):
    """Inverse of parse_scalar; emits "p" or "p/q" in lowest terms."""
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else "%d/%d" % (n, d)


class Matrix:
    """Dense exact matrix.

    ``p is None`` means rational entries; ``p`` a prime means entries are
    ints in [0, p) with arithmetic mod p.  The prime mode exists only for
    the brute-force subrepresentation oracle and is never mixed with the
    rational mode in one computation.
    """

    __slots__ = ("rows", "cols", "data", "p")

    def __init__(self, rows, cols, data, p=None):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix shape mismatch: expected %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.data = data
        self.p = p

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows_of_entries, p=None):
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        if p is None:
            data = [[e if not isinstance(e, int) else ratio(e) for e in row]
                    for row in rows_of_entries]
        else:
            data = [[int(e) % p for e in row] for row in rows_of_entries]
        return cls(rows, cols, data, p)

    @classmethod
    def zeros(cls, rows, cols, p=None):
        z = 0 if p is not None else QQ_ZERO
        return cls(rows, cols, [[z] * cols for _ in range(rows)], p)

    @classmethod
    def identity(cls, n, p=None):
        m = cls.zeros(n, n, p)
        one = 1 if p is not None else QQ_ONE
        for i in range(n):
            m.data[i][i] = one
        return m

    def copy(self):
        return Matrix(self.rows, self.cols, [row[:] for row in self.data], self.p)

    # -- elementary queries ------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.p == other.p and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.p,
                     tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)

    def is_zero(self):
        return all(not e for row in self.data for e in row)

    def column(self, j):
        return [row[j] for row in self.data]

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other):
        if self.p != other.p:
            raise ValueError("mixed field modes")

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        if self.p is None:
            data = [[a + b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)]
        else:
            p = self.p
            data = [[(a + b) % p for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)]
        return Matrix(self.rows, self.cols, data, self.p)

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        if self.p is None:
            data = [[a - b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)]
        else:
            p = self.p
            data = [[(a - b) % p for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)]
        return Matrix(self.rows, self.cols, data, self.p)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if self.p is None:
            c = c if not isinstance(c, int) else ratio(c)
            data = [[c * e for e in row] for row in self.data]
        else:
            p = self.p
            c = int(c) % p
            data = [[(c * e) % p for e in row] for row in self.data]
        return Matrix(self.rows, self.cols, data, self.p)

    def __mul__(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in multiplication: %s * %s"
                             % (self.shape, other.shape))
        bt = list(zip(*other.data)) if other.rows else [()] * other.cols
        if self.p is None:
            data = [[sum((a * b for a, b in zip(row, col) if a and b), QQ_ZERO)
                     for col in bt] for row in self.data]
        else:
            p = self.p
            data = [[sum(a * b for a, b in zip(row, col)) % p for col in bt]
                    for row in self.data]
        return Matrix(self.rows, other.cols, data, self.p)

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [list(r) for r in zip(*self.data)] if self.rows else
                      [[] for _ in range(self.cols)], self.p)

    # -- stacking ----------------------------------------------------------

    def hstack(self, other):
        self._check_field(other)
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols,
                      [ra + rb for ra, rb in zip(self.data, other.data)], self.p)

    def vstack(self, other):
        self._check_field(other)
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.rows + other.rows, self.cols,
                      [r[:] for r in self.data] + [r[:] for r in other.data], self.p)

    def submatrix(self, row_idx, col_idx):
        data = [[self.data[i][j] for j in col_idx] for i in row_idx]
        return Matrix(len(row_idx), len(col_idx), data, self.p)

    # -- field helpers -----------------------------------------------------

    def _inv_scalar(self, a):
        if self.p is None:
            return QQ_ONE / a
        return pow(a, self.p - 2, self.p)

    def _one(self):
        return 1 if self.p is not None else QQ_ONE


def block_matrix(blocks, p=None):
    """Assemble a matrix from a grid of blocks (Matrix or None for zero).

    Row heights and column widths are inferred; every grid row must carry at
    least one non-None block, as must every grid column.
    """
    nbr = len(blocks)
    nbc = len(blocks[0])
    heights = [None] * nbr
    widths = [None] * nbc
    for i in range(nbr):
        for j in range(nbc):
            b = blocks[i][j]
            if b is None:
                continue
            if heights[i] is None:
                heights[i] = b.rows
            elif heights[i] != b.rows:
                raise ValueError("inconsistent block heights in row %d" % i)
            if widths[j] is None:
                widths[j] = b.cols
            elif widths[j] != b.cols:
                raise ValueError("inconsistent block widths in column %d" % j)
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise ValueError("a block grid row or column is entirely None")
    z = 0 if p is not None else QQ_ZERO
    data = []
    for i in range(nbr):
        for r in range(heights[i]):
            row = []
            for j in range(nbc):
                b = blocks[i][j]
                if b is None:
                    row.extend([z] * widths[j])
                else:
                    row.extend(b.data[r])
            data.append(row)
    return Matrix(sum(heights), sum(widths), data, p)


def rref(m):
    """Reduced row-echelon form.

    Returns ``(reduced, pivot_columns, rank)`` where ``reduced`` is the
    unique RREF of ``m``.  The input is not modified.
    """
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    piv_r = 0
    for c in range(cols):
        pr = None
        for r in range(piv_r, rows):
            if a[r][c]:
                pr = r
                break
        if pr is None:
            continue
        if pr != piv_r:
            a[piv_r], a[pr] = a[pr], a[piv_r]
        inv = m._inv_scalar(a[piv_r][c])
        row = a[piv_r]
        if m.p is None:
            if inv != 1:
                a[piv_r] = row = [e * inv for e in row]
        else:
            p = m.p
            if inv != 1:
                a[piv_r] = row = [(e * inv) % p for e in row]
        if m.p is None:
            for r in range(rows):
                if r != piv_r and a[r][c]:
                    f = a[r][c]
                    ar = a[r]
                    a[r] = [x - f * y for x, y in zip(ar, row)]
        else:
            p = m.p
            for r in range(rows):
                if r != piv_r and a[r][c]:
                    f = a[r][c]
                    ar = a[r]
                    a[r] = [(x - f * y) % p for x, y in zip(ar, row)]
        pivots.append(c)
        piv_r += 1
        if piv_r == rows:
            break
    return Matrix(rows, cols, a, m.p), pivots, len(pivots)


def rank(m):
    return rref(m)[2]


def kernel_basis(m):
    """Basis of ker(m) as columns of a cols x nullity matrix.

    Derived from the RREF free-variable parametrization: for each non-pivot
    column (ascending) the corresponding basis vector has a 1 there, 0 at the
    other free columns, and back-substituted values at the pivots.
    """
    red, pivots, rk = rref(m)
    cols = m.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    basis_cols = []
    one = m._one()
    z = 0 if m.p is not None else QQ_ZERO
    for fc in free:
        v = [z] * cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            coeff = red.data[i][fc]
            if coeff:
                v[pc] = (-coeff) % m.p if m.p is not None else -coeff
        basis_cols.append(v)
    data = [[basis_cols[j][i] for j in range(len(free))] for i in range(cols)]
    return Matrix(cols, len(free), data, m.p)


def solve(a, b):
    """Deterministic particular solution of a*x = b, or None if inconsistent.

    ``b`` may have several columns; free variables are set to 0.
    """
    if a.p != b.p:
        raise ValueError("mixed field modes")
    if a.rows != b.rows:
        raise ValueError("row count mismatch: %d vs %d" % (a.rows, b.rows))
    red, pivots, rk = rref(a.hstack(b))
    # a pivot inside the augmented block means inconsistency
    for c in pivots:
        if c >= a.cols:
            return None
    z = 0 if a.p is not None else QQ_ZERO
    data = [[z] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            val = red.data[i][a.cols + j]
            data[pc][j] = val
    return Matrix(a.cols, b.cols, data, a.p)


def det(m):
    """Determinant by fraction-free-ish elimination (rational mode)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [row[:] for row in m.data]
    n = m.rows
    sign = 1
    d = m._one()
    p = m.p
    for c in range(n):
        pr = None
        for r in range(c, n):
            if a[r][c]:
                pr = r
                break
        if pr is None:
            return 0 if p is not None else QQ_ZERO
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            sign = -sign
        piv = a[c][c]
        d = (d * piv) % p if p is not None else d * piv
        inv = m._inv_scalar(piv)
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                if p is not None:
                    f %= p
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
                else:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    if p is not None:
        return (sign * d) % p
    return d if sign == 1 else -d


def inverse(m):
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    x = solve(m, Matrix.identity(m.rows, m.p))
    if x is None or rank(m) != m.rows:
        raise ValueError("matrix is singular")
    return x
