"""Test representations: shifted inflations transported to a subspace.

Given a K_d representation X and an injection alpha: A_d -> A_r, the
minus/plus test representations are g.(sigma^{-1}(inf X)) and
g.(sigma(inf X)) for any completion g of alpha to GL(A_r).  For
homogeneous X the isomorphism class depends only on the image of alpha,
which is why the p_test family is indexed by Grassmannian points; the
completion rule is fixed so the constructed matrices are canonical.

Hom-vanishing against these detects the splitting behavior of restrictions:
Hom(P_1^-(v), M) != 0 exactly when v lies in the rank variety of M.
"""

from .canonical import preprojective
from .functors import shift_minus, shift_plus
from .linalg import Matrix, rref
from .rep import GroupElement, act, inflate


class TestRep:
    __slots__ = ("rep", "base", "subspace", "sign")

    def __init__(self, rep, base, subspace, sign):
        self.rep = rep
        self.base = base
        self.subspace = subspace
        self.sign = sign

    def __repr__(self):
        return "TestRep(sign=%s, base=%s, dim=%s)" % (
            self.sign, tuple(self.base), tuple(self.rep.dim))


def complete_to_glr(alpha):
    """Extend alpha: A_d -> A_r to an element of GL(A_r).

    The first d columns are alpha; the remaining ones are the standard basis
    vectors at the non-pivot rows of alpha's column space, ascending, which
    is a complement by the echelon-form argument.
    """
    red, pivots, rk = rref(alpha.cols.transpose())
    if rk != alpha.d:
        raise ValueError("rank-deficient subspace map")
    pivot_rows = set(pivots)
    cols = alpha.cols
    from .linalg import ratio
    for i in range(alpha.r):
        if i in pivot_rows:
            continue
        unit = Matrix.zeros(alpha.r, 1)
        unit.data[i][0] = ratio(1)
        cols = cols.hstack(unit)
    return GroupElement(alpha.r, cols)


def test_rep(x, alpha, sign):
    """X^-(alpha) (sign "minus") or X^+(alpha) (sign "plus") over K_r."""
    if alpha.d != x.r:
        raise ValueError("alpha must start at A_%d, the arrow space of x" % x.r)
    g = complete_to_glr(alpha)
    inflated = inflate(x, alpha.r)
    if sign == "minus":
        shifted = shift_minus(inflated).rep
    elif sign == "plus":
        shifted = shift_plus(inflated).rep
    else:
        raise ValueError("sign must be 'minus' or 'plus'")
    return TestRep(act(g, shifted), x.dim, alpha, sign)


def p_test(n, v, sign):
    """P_n^{+/-}(v) for the canonical representative of the subspace v.

    The seed P_n(v.d) is homogeneous, so the class depends only on the image
    of v; canonicalizing first makes the output matrices depend only on it too.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    vc = v.canonical()
    x = preprojective(v.d, n, "P")
    return test_rep(x, vc, sign)
