"""Representations of the generalized Kronecker quiver K_r.

A representation is a pair of exact vector spaces with r linear maps,
stored as r matrices of shape dim.y x dim.x.  This module holds the data
model (dimension vectors, representations, subspace maps, group elements,
morphisms) and the elementary operations: validation, direct sums,
duality, restriction along an injection of arrow spaces, inflation, the
GL(A_r) action, Euler/Tits forms and rank-at-subspace tests.

Conventions: maps act on column vectors from the left; the arrow space
basis is fixed globally; a point of the Grassmannian is represented
canonically by the column-reduced echelon form of any spanning matrix, so
subspace equality is matrix equality.
"""

from typing import NamedTuple

from .linalg import Matrix, block_matrix, det, rank, ratio, rref


class DimVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return DimVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return DimVector(self.x - other.x, self.y - other.y)

    def scaled(self, c):
        return DimVector(c * self.x, c * self.y)

    def delta(self, d=1):
        """y - d*x, the rank of the associated bundle for d = 1."""
        return self.y - d * self.x

    def twist(self):
        return DimVector(self.y, self.x)


def euler_form(a, b, r):
    """Euler-Ringel form <a, b>_r = a.x b.x + a.y b.y - r a.x b.y."""
    return a.x * b.x + a.y * b.y - r * a.x * b.y


def tits_form(a, r):
    """Quadratic Tits form q_r(a) = <a, a>_r."""
    return euler_form(a, a, r)


def is_schur_root_candidate(a, r):
    """Necessary and sufficient numerical test for existence of a brick."""
    return tits_form(a, r) <= 1


def is_regular_vector(a, r):
    return tits_form(a, r) <= 0


def shift_dim(a, r):
    """Dimension action of the shift: (x, y) -> (rx - y, x)."""
    return DimVector(r * a.x - a.y, a.x)


def shift_dim_inverse(a, r):
    """(x, y) -> (y, ry - x)."""
    return DimVector(a.y, r * a.y - a.x)


class KroneckerRep:
    """A K_r representation: r matrices of identical shape dim.y x dim.x.

    ``p`` is None for the rational mode, or a small prime for the
    brute-force-oracle mode.
    """

    __slots__ = ("r", "dim", "maps")

    def __init__(self, r, dim, maps):
        self.r = r
        self.dim = DimVector(*dim)
        self.maps = list(maps)
        problem = validate(self)
        if problem is not None:
            raise ValueError(problem)

    @property
    def p(self):
        return self.maps[0].p if self.maps else None

    def __eq__(self, other):
        return (isinstance(other, KroneckerRep) and self.r == other.r
                and self.dim == other.dim and self.maps == other.maps)

    def __repr__(self):
        return "KroneckerRep(r=%d, dim=(%d, %d))" % (self.r, self.dim.x, self.dim.y)

    def psi_concat(self):
        """The structure map A_r (x) M_1 -> M_2 as one dim.y x (r dim.x) matrix."""
        m = self.maps[0]
        for b in self.maps[1:]:
            m = m.hstack(b)
        return m

    def eta_stack(self):
        """The map M_1 -> A_r (x) M_2, m |-> sum_i gamma_i (x) M(gamma_i) m."""
        m = self.maps[0]
        for b in self.maps[1:]:
            m = m.vstack(b)
        return m

    def is_zero(self):
        return self.dim == (0, 0)


def validate(rep):
    """None when the shape invariants hold, else a description of the violation."""
    if rep.r < 1:
        return "arrow count must be >= 1, got %d" % rep.r
    if rep.dim.x < 0 or rep.dim.y < 0:
        return "negative dimension vector %s" % (tuple(rep.dim),)
    if len(rep.maps) != rep.r:
        return "expected %d maps, got %d" % (rep.r, len(rep.maps))
    modes = {m.p for m in rep.maps}
    if len(modes) > 1:
        return "maps mix field modes"
    for i, m in enumerate(rep.maps):
        if m.shape != (rep.dim.y, rep.dim.x):
            return ("map %d has shape %s, expected %s"
                    % (i, m.shape, (rep.dim.y, rep.dim.x)))
    return None


class SubspaceMap:
    """An injective map alpha: A_d -> A_r given by an r x d full-column-rank matrix.

    Column j is the image of the j-th standard arrow.  The image subspace is
    a point of Gr_d(A_r); its canonical representative is the column-reduced
    echelon form, so two SubspaceMaps span the same subspace iff their
    ``canonical().cols`` agree.
    """

    __slots__ = ("r", "d", "cols")

    def __init__(self, r, d, cols):
        if cols.shape != (r, d):
            raise ValueError("expected %dx%d column matrix, got %s" % (r, d, cols.shape))
        if not (1 <= d <= r):
            raise ValueError("need 1 <= d <= r, got d=%d, r=%d" % (d, r))
        if rank(cols) != d:
            raise ValueError("columns are not linearly independent")
        self.r = r
        self.d = d
        self.cols = cols

    @classmethod
    def from_columns(cls, r, columns):
        data = [[ratio(columns[j][i]) if isinstance(columns[j][i], int) else columns[j][i]
                 for j in range(len(columns))] for i in range(r)]
        return cls(r, len(columns), Matrix(r, len(columns), data))

    @classmethod
    def canonical_inclusion(cls, d, r):
        """iota: A_d -> A_r, the first d standard columns."""
        cols = Matrix.zeros(r, d)
        one = ratio(1)
        for j in range(d):
            cols.data[j][j] = one
        return cls(r, d, cols)

    def canonical(self):
        """The column-RREF representative of the image subspace."""
        red, _, rk = rref(self.cols.transpose())
        cols = red.transpose().submatrix(range(self.r), range(rk))
        return SubspaceMap(self.r, self.d, cols)

    def image_key(self):
        c = self.canonical().cols
        return tuple(tuple(row) for row in c.data)

    def literal(self):
        """Columns in the CLI literal syntax 'a,b,..;c,d,..' (canonical form)."""
        from .linalg import format_scalar
        c = self.canonical().cols
        return ";".join(",".join(format_scalar(c.data[i][j]) for i in range(self.r))
                        for j in range(self.d))

    def __eq__(self, other):
        return (isinstance(other, SubspaceMap) and self.r == other.r
                and self.d == other.d and self.cols == other.cols)

    def __hash__(self):
        return hash((self.r, self.d, self.cols))

    def __repr__(self):
        cols = "; ".join(",".join(str(e) for e in self.cols.column(j))
                         for j in range(self.d))
        return "SubspaceMap(%d->%d: %s)" % (self.d, self.r, cols)


class GroupElement:
    """An element of GL(A_r) in the standard arrow basis."""

    __slots__ = ("r", "g", "_inv")

    def __init__(self, r, g):
        if g.shape != (r, r):
            raise ValueError("expected %dx%d matrix" % (r, r))
        if not det(g):
            raise ValueError("singular matrix is not a group element")
        self.r = r
        self.g = g
        self._inv = None

    def inverse_matrix(self):
        if self._inv is None:
            from .linalg import inverse
            self._inv = inverse(self.g)
        return self._inv

    def transpose(self):
        return GroupElement(self.r, self.g.transpose())

    def compose(self, other):
        return GroupElement(self.r, self.g * other.g)

    def as_subspace_map(self):
        return SubspaceMap(self.r, self.r, self.g)

    @classmethod
    def identity(cls, r):
        return cls(r, Matrix.identity(r))


class MorphismPair:
    """A morphism (f1, f2) of representations, checked to intertwine."""

    __slots__ = ("source", "target", "f1", "f2")

    def __init__(self, source, target, f1, f2, check=True):
        if f1.shape != (target.dim.x, source.dim.x):
            raise ValueError("f1 has shape %s, expected %s"
                             % (f1.shape, (target.dim.x, source.dim.x)))
        if f2.shape != (target.dim.y, source.dim.y):
            raise ValueError("f2 has shape %s, expected %s"
                             % (f2.shape, (target.dim.y, source.dim.y)))
        if check and not intertwines(source, target, f1, f2):
            raise ValueError("the pair (f1, f2) does not intertwine the structure maps")
        self.source = source
        self.target = target
        self.f1 = f1
        self.f2 = f2

    def is_zero(self):
        return self.f1.is_zero() and self.f2.is_zero()

    def compose(self, other):
        """self after other (other first)."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition mismatch")
        return MorphismPair(other.source, self.target,
                            self.f1 * other.f1, self.f2 * other.f2, check=False)

    @classmethod
    def identity(cls, rep):
        return cls(rep, rep, Matrix.identity(rep.dim.x, rep.p),
                   Matrix.identity(rep.dim.y, rep.p), check=False)


def intertwines(source, target, f1, f2):
    for a, b in zip(source.maps, target.maps):
        if f2 * a != b * f1:
            return False
    return True


# -- elementary operations --------------------------------------------------

def direct_sum(m, n):
    if m.r != n.r:
        raise ValueError("arrow-count mismatch: %d vs %d" % (m.r, n.r))
    maps = [block_matrix([[a, None], [None, b]], p=m.p)
            for a, b in zip(m.maps, n.maps)]
    return KroneckerRep(m.r, m.dim + n.dim, maps)


def dual(m):
    """Standard duality: swap the two spaces and transpose every map."""
    return KroneckerRep(m.r, m.dim.twist(), [a.transpose() for a in m.maps])


def restrict(m, alpha):
    """Restriction along alpha: the K_d representation with maps sum_i alpha[i][j] M(gamma_i)."""
    if alpha.r != m.r:
        raise ValueError("arrow-count mismatch: subspace lives in A_%d, rep over K_%d"
                         % (alpha.r, m.r))
    maps = []
    for j in range(alpha.d):
        acc = Matrix.zeros(m.dim.y, m.dim.x, m.p)
        for i in range(m.r):
            c = alpha.cols.data[i][j]
            if c:
                acc = acc + m.maps[i].scale(c)
        maps.append(acc)
    return KroneckerRep(alpha.d, m.dim, maps)


def inflate(x, r):
    """Extend a K_d representation to K_r by zero maps on the new arrows."""
    if r < x.r:
        raise ValueError("cannot inflate K_%d to K_%d" % (x.r, r))
    maps = list(x.maps) + [Matrix.zeros(x.dim.y, x.dim.x, x.p)
                           for _ in range(r - x.r)]
    return KroneckerRep(r, x.dim, maps)


def act(g, m):
    """The GL(A_r) action: psi_{g.M} = psi_M o (g^{-1} (x) id)."""
    if g.r != m.r:
        raise ValueError("arrow-count mismatch")
    ginv = g.inverse_matrix()
    maps = []
    for i in range(m.r):
        acc = Matrix.zeros(m.dim.y, m.dim.x, m.p)
        for j in range(m.r):
            c = ginv.data[j][i]
            if c:
                acc = acc + m.maps[j].scale(c)
        maps.append(acc)
    return KroneckerRep(m.r, m.dim, maps)


def rank_at_subspace(m, v):
    """Rank of psi_M restricted to v (x) M_1, and whether it is injective.

    Injectivity at every v in Gr_d is relative d-projectivity; a single
    failure puts v in the rank variety.
    """
    if v.r != m.r:
        raise ValueError("arrow-count mismatch")
    res = restrict(m, v)
    rk = rank(res.psi_concat())
    return rk, rk == v.d * m.dim.x


# -- standard models ---------------------------------------------------------

def simple1(r):
    """S(1) = (k, 0)."""
    return KroneckerRep(r, DimVector(1, 0), [Matrix.zeros(0, 1) for _ in range(r)])


def simple2(r):
    """S(2) = P_0(r) = (0, k)."""
    return KroneckerRep(r, DimVector(0, 1), [Matrix.zeros(1, 0) for _ in range(r)])


def proj_p0(r):
    return simple2(r)


def proj_p1(r):
    """P_1(r) = (k, A_r) with the i-th map the i-th standard column."""
    maps = []
    for i in range(r):
        m = Matrix.zeros(r, 1)
        m.data[i][0] = ratio(1)
        maps.append(m)
    return KroneckerRep(r, DimVector(1, r), maps)


def inj_i0(r):
    return simple1(r)


def inj_i1(r):
    """I_1(r), the injective hull of P_0(r); dual of P_1(r)."""
    return dual(proj_p1(r))


def std_models(r):
    if r < 1:
        raise ValueError("need r >= 1")
    return {"S1": simple1(r), "S2": simple2(r), "P0": proj_p0(r),
            "P1": proj_p1(r), "I0": inj_i0(r), "I1": inj_i1(r)}


def zero_rep(r):
    return KroneckerRep(r, DimVector(0, 0), [Matrix.zeros(0, 0) for _ in range(r)])


def block_diagonal(f, copies):
    """copies x copies block diagonal matrix with block f (id_{A_copies} (x) f)."""
    if copies == 0:
        return Matrix.zeros(0, 0, f.p)
    grid = [[f if i == j else None for j in range(copies)] for i in range(copies)]
    return block_matrix(grid, p=f.p)
