"""Preprojective and preinjective models, and splitting types over K_2.

The indecomposable preprojectives P_n(d) are produced by iterating the
downward shift on the simple projective, so their matrices are canonical.
Splitting types of K_2 representations are extracted from the dimensions
h_k = dim Hom(P_k(2), N) by second differences, which works because
dim Hom(P_k(2), P_i(2)) = max(0, i - k + 1); a failed dimension audit
flags a non-preprojective remainder instead of silently misreporting.

The h_k are computed from a staircase presentation: a morphism from the
standard P_k(2) is determined by the vertex-1 component (u_1, ..., u_k),
subject to N(g2) u_j = N(g1) u_{j+1}.  This keeps the systems small; the
identification with the generic Hom solver is covered by tests.
"""

from . import modrank
from .linalg import block_matrix, rank
from .rep import DimVector, dual, euler_form, simple2
from .functors import shift_minus

_pp_cache = {}


def a_seq(d, n):
    """a_0 .. a_n with a_0 = 0, a_1 = 1, a_{k+2} = d a_{k+1} - a_k."""
    if d < 2:
        raise ValueError("the index sequence needs d >= 2")
    out = [0, 1]
    while len(out) <= n:
        out.append(d * out[-1] - out[-2])
    return out[:n + 1]


def preprojective(d, n, sign="P"):
    """The indecomposable P_n(d) (sign "P") or I_n(d) = D(P_n(d)) (sign "I").

    Built by iterating the downward shift from P_0(d); for d >= 2 the
    dimension vector is (a_n(d), a_{n+1}(d)).  d = 1 is allowed and follows
    the same chain (only n <= 2 gives nonzero output there).
    """
    if n < 0:
        raise ValueError("need n >= 0")
    key = (d, n)
    if key not in _pp_cache:
        if n == 0:
            rep = simple2(d)
        else:
            rep = shift_minus(preprojective(d, n - 1, "P")).rep
        if d >= 2:
            seq = a_seq(d, n + 1)
            expected = DimVector(seq[n], seq[n + 1])
            if rep.dim != expected:
                raise ArithmeticError("P_%d(%d) has dim %s, expected %s"
                                      % (n, d, tuple(rep.dim), tuple(expected)))
        _pp_cache[key] = rep
    if sign == "P":
        return _pp_cache[key]
    if sign == "I":
        return dual(_pp_cache[key])
    raise ValueError("sign must be 'P' or 'I'")


class SplittingType:
    """Multiplicities b_i of P_i(2) in a K_2 decomposition, plus a
    non-preprojective remainder when the dimension audit fails."""

    __slots__ = ("multiplicities", "remainder")

    def __init__(self, multiplicities, remainder=None):
        self.multiplicities = {i: b for i, b in multiplicities.items() if b}
        self.remainder = remainder

    def support(self):
        return sorted(self.multiplicities)

    def k_type(self):
        sup = self.support()
        return sup[-1] if sup else None

    def total_dim(self):
        x = sum(i * b for i, b in self.multiplicities.items())
        y = sum((i + 1) * b for i, b in self.multiplicities.items())
        if self.remainder is not None:
            x += self.remainder.x
            y += self.remainder.y
        return DimVector(x, y)

    def __add__(self, other):
        out = dict(self.multiplicities)
        for i, b in other.multiplicities.items():
            out[i] = out.get(i, 0) + b
        rem = None
        rems = [r for r in (self.remainder, other.remainder) if r is not None]
        if rems:
            rem = rems[0] if len(rems) == 1 else rems[0] + rems[1]
        return SplittingType(out, rem)

    def __eq__(self, other):
        return (isinstance(other, SplittingType)
                and self.multiplicities == other.multiplicities
                and self.remainder == other.remainder)

    def __hash__(self):
        return hash((tuple(sorted(self.multiplicities.items())), self.remainder))

    def __repr__(self):
        parts = ["%d*P_%d" % (b, i) for i, b in sorted(self.multiplicities.items())]
        if self.remainder is not None:
            parts.append("remainder%s" % (tuple(self.remainder),))
        return "SplittingType(%s)" % (" + ".join(parts) if parts else "0")

    def to_json(self):
        return {"b": {str(i): b for i, b in sorted(self.multiplicities.items())},
                "remainder": None if self.remainder is None else list(self.remainder)}


def split_off_p0(n_rep):
    """(count, complement) with n_rep isomorphic to count * P_0 (+) complement.

    The multiplicity of the simple projective P_0 at vertex 2 is the
    codimension of the radical (the joint image of the arrow maps); the
    complement rewrites the maps in a basis of that image, which is a direct
    complement because every arrow lands inside it.
    """
    from .linalg import rref, solve
    psi = n_rep.psi_concat()
    _, pivots, rk = rref(psi)
    count = n_rep.dim.y - rk
    if count == 0:
        return 0, n_rep
    basis = psi.submatrix(range(n_rep.dim.y), pivots)   # y x rk, spans the radical
    new_maps = []
    for mat in n_rep.maps:
        coords = solve(basis, mat)
        if coords is None:
            raise ArithmeticError("arrow image escaped the radical")
        new_maps.append(coords)
    from .rep import KroneckerRep
    comp = KroneckerRep(n_rep.r, DimVector(n_rep.dim.x, rk), new_maps)
    return count, comp


def _exact_or_certified_h(staircase, unknowns, euler_lower):
    """Value of unknowns - rank(staircase), certified or exact."""
    if staircase.rows == 0 or staircase.cols == 0:
        return unknowns
    if staircase.p is not None or min(staircase.shape) <= 40:
        return unknowns - rank(staircase)
    lower = max(0, euler_lower)
    upper = unknowns - modrank.rank_lower_bound(modrank.matrix_to_int_array(staircase))
    if upper == lower:
        return upper
    return unknowns - rank(staircase)


def hom_dim_from_p2(k, n_rep):
    """dim Hom(P_k(2), N) via the staircase presentation."""
    if n_rep.r != 2:
        raise ValueError("K_2 representations only")
    x, y = n_rep.dim
    if k == 0:
        return y
    a, b = n_rep.maps
    if k == 1:
        return x
    blocks = [[None] * k for _ in range(k - 1)]
    for j in range(k - 1):
        blocks[j][j] = b
        blocks[j][j + 1] = -a
    s = block_matrix(blocks, p=n_rep.p)
    return _exact_or_certified_h(s, k * x,
                                 euler_form(DimVector(k, k + 1), n_rep.dim, 2))


def hom_dim_to_p2(n_rep, m):
    """dim Hom(N, P_m(2)) via the transposed staircase."""
    if n_rep.r != 2:
        raise ValueError("K_2 representations only")
    x, y = n_rep.dim
    a, b = n_rep.maps
    at, bt = a.transpose(), b.transpose()
    blocks = [[None] * (m + 1) for _ in range(m + 2)]
    blocks[0][0] = bt
    for i in range(1, m + 1):
        blocks[i][i - 1] = at
        blocks[i][i] = -bt
    blocks[m + 1][m] = at
    s = block_matrix(blocks, p=n_rep.p)
    return _exact_or_certified_h(s, (m + 1) * y,
                                 euler_form(n_rep.dim, DimVector(m, m + 1), 2))


def split_k2(n_rep):
    """Splitting type of a K_2 representation.

    Computes h_k = dim Hom(P_k(2), N) for k up to dim N_2 + 2 (stopping early
    once two consecutive values vanish, which forces all later multiplicities
    to zero), takes second differences, and audits the reconstruction against
    the dimension vector.  A shortfall is reported as a non-preprojective
    remainder; a negative multiplicity cannot arise from a valid input and
    raises.
    """
    if n_rep.r != 2:
        raise ValueError("splitting types are extracted from K_2 representations")
    x, y = n_rep.dim
    cutoff = y + 2
    h = []
    k = 0
    while k <= cutoff:
        h.append(hom_dim_from_p2(k, n_rep))
        if len(h) >= 2 and h[-1] == 0 and h[-2] == 0 and k >= 2:
            break
        k += 1
    while len(h) < 3:
        h.append(hom_dim_from_p2(len(h), n_rep))
    mult = {}
    for j in range(len(h) - 2):
        b = h[j] - 2 * h[j + 1] + h[j + 2]
        if b < 0:
            raise ArithmeticError("negative multiplicity b_%d = %d; "
                                  "internal inconsistency" % (j, b))
        if b:
            mult[j] = b
    st = SplittingType(mult)
    got = st.total_dim()
    if got == n_rep.dim:
        return st
    deficit = DimVector(x - got.x, y - got.y)
    if deficit.x < 0 or deficit.y < 0:
        raise ArithmeticError("preprojective part exceeds the dimension vector; "
                              "internal inconsistency")
    return SplittingType(mult, deficit)
