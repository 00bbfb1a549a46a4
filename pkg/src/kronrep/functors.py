"""Shift functors, the Auslander-Reiten translate, and the adjunction transport.

The downward shift replaces a representation by the kernel of its
structure map, the upward one by the cokernel of the coevaluation
m |-> sum_i gamma_i (x) M(gamma_i)m.  Both are realized with canonical
bases (deterministic kernel and left-kernel bases), so functorial
identities can be tested on the nose where the theory only promises them
up to isomorphism.

The transport map implements the unit/counit calculus of the adjunction
(sigma^{-1} o inf  -|  sigma o res): a morphism sigma^{-1}(inf X) -> M
corresponds to X -> sigma(res M) via f |-> ((id (x) f1) o eta_X, f1), and
back by extending over the cokernel.
"""

from .linalg import kernel_basis, solve
from .rep import (DimVector, KroneckerRep, MorphismPair, SubspaceMap,
                  block_diagonal, inflate, restrict)


class ShiftWitness:
    """A shifted representation together with the basis choice that built it.

    For the downward shift the basis matrix has as columns the chosen basis
    of ker(psi) inside A_r (x) M_1; for the upward one it is the projection
    matrix A_r (x) M_2 ->> coker(eta).
    """

    __slots__ = ("rep", "basis", "direction")

    def __init__(self, rep, basis, direction):
        self.rep = rep
        self.basis = basis
        self.direction = direction


def shift_plus(m):
    """sigma(M) = (ker psi_M, M_1) with the tautological structure map."""
    psi = m.psi_concat()                      # y x (r*x)
    k = kernel_basis(psi)                     # (r*x) x nu
    nu = k.cols
    x = m.dim.x
    maps = [k.submatrix(range(i * x, (i + 1) * x), range(nu)) for i in range(m.r)]
    rep = KroneckerRep(m.r, DimVector(nu, x), maps)
    return ShiftWitness(rep, k, "plus")


def shift_minus(m):
    """sigma^{-1}(M) = (M_2, coker eta_M), eta_M = sum_i gamma_i (x) M(gamma_i)."""
    eta = m.eta_stack()                       # (r*y) x x
    q = kernel_basis(eta.transpose()).transpose()   # c x (r*y), c = r*y - rank(eta)
    y = m.dim.y
    c = q.rows
    maps = [q.submatrix(range(c), range(i * y, (i + 1) * y)) for i in range(m.r)]
    rep = KroneckerRep(m.r, DimVector(y, c), maps)
    return ShiftWitness(rep, q, "minus")


def tau(m):
    """Auslander-Reiten translate as sigma o sigma."""
    return shift_plus(shift_plus(m).rep).rep


def tau_inverse(m):
    return shift_minus(shift_minus(m).rep).rep


def shift_on_morphism(f, direction, witness_source, witness_target):
    """Image of a morphism under sigma (direction "plus") or sigma^{-1} ("minus").

    The witnesses must be the ShiftWitnesses of f.source and f.target.
    """
    if direction == "plus":
        # new f2 = old f1; new f1 expresses (id (x) f1)|_ker in the kernel bases
        big = block_diagonal(f.f1, f.source.r)
        image = big * witness_source.basis
        new_f1 = solve(witness_target.basis, image)
        if new_f1 is None:
            raise ValueError("inconsistent shift witness for the source kernel")
        return MorphismPair(witness_source.rep, witness_target.rep, new_f1, f.f1)
    if direction == "minus":
        # new f1 = old f2; new f2 solves  newf2 . Q_src = Q_tgt . (id (x) f2)
        big = block_diagonal(f.f2, f.source.r)
        rhs = witness_target.basis * big
        sol = solve(witness_source.basis.transpose(), rhs.transpose())
        if sol is None:
            raise ValueError("inconsistent shift witness for the target cokernel")
        new_f2 = sol.transpose()
        return MorphismPair(witness_source.rep, witness_target.rep, f.f2, new_f2)
    raise ValueError("direction must be 'plus' or 'minus'")


class AdjunctionContext:
    """Precomputed witnesses for transporting Hom(sigma^{-1}(inf X), M)
    to Hom(X, sigma(res M)) and back, for X over K_d and M over K_r."""

    def __init__(self, x, m):
        if x.r > m.r:
            raise ValueError("need d <= r")
        self.x = x
        self.m = m
        self.d = x.r
        self.r = m.r
        self.inflated = inflate(x, m.r)
        self.left = shift_minus(self.inflated)      # sigma^{-1}(inf X), witness Q
        iota = SubspaceMap.canonical_inclusion(self.d, self.r)
        self.restricted = restrict(m, iota)          # res M over K_d
        self.right = shift_plus(self.restricted)     # sigma(res M), witness K

    def forward(self, f):
        """tau_{X,M}: Hom(sigma^{-1}(inf X), M) -> Hom(X, sigma(res M))."""
        if f.source != self.left.rep or f.target != self.m:
            raise ValueError("morphism does not match the context")
        eta_x = self.x.eta_stack()                   # (d*x2) x x1
        big = block_diagonal(f.f1, self.d)           # d copies of f1: X2 -> M1
        image = big * eta_x                          # lands in ker psi_{res M}
        g1 = solve(self.right.basis, image)
        if g1 is None:
            raise ValueError("transport image misses the kernel; corrupted input")
        return MorphismPair(self.x, self.right.rep, g1, f.f1)

    def backward(self, g):
        """Inverse transport, extending over the cokernel."""
        if g.source != self.x or g.target != self.right.rep:
            raise ValueError("morphism does not match the context")
        f1 = g.f2                                    # X2 -> M1
        psi = self.m.psi_concat()                    # y x (r*mx)
        big = block_diagonal(f1, self.r)             # r copies: A_r(x)X2 -> A_r(x)M1
        rhs = psi * big                              # m.y x (r*x2)
        sol = solve(self.left.basis.transpose(), rhs.transpose())
        if sol is None:
            raise ValueError("cokernel extension failed; corrupted input")
        f2 = sol.transpose()
        return MorphismPair(self.left.rep, self.m, f1, f2)


def adjunction_transport(x, m, f, direction):
    """One-shot transport; direction "forward" takes f in Hom(sigma^{-1}(inf X), M)."""
    ctx = AdjunctionContext(x, m)
    if direction == "forward":
        return ctx.forward(f)
    if direction == "backward":
        return ctx.backward(f)
    raise ValueError("direction must be 'forward' or 'backward'")
