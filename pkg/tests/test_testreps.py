import random

from kronrep.canonical import a_seq, preprojective, split_k2
from kronrep.functors import tau
from kronrep.homalg import hom_dim, is_isomorphic
from kronrep.linalg import Matrix, det
from kronrep.rep import (DimVector, SubspaceMap, inj_i1, proj_p0, proj_p1,
                         rank_at_subspace, restrict, simple1)
from kronrep.testreps import complete_to_glr, p_test
from kronrep.testreps import test_rep as make_test_rep


def test_complete_to_glr():
    iota = SubspaceMap.canonical_inclusion(2, 3)
    assert complete_to_glr(iota).g == Matrix.identity(3)
    perm = SubspaceMap.from_columns(3, [[0, 1, 0], [0, 0, 1]])
    g = complete_to_glr(perm)
    assert g.g.column(2) == Matrix.identity(3).column(0)
    rng = random.Random(0)
    for _ in range(10):
        while True:
            cols = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(2)]
            try:
                a = SubspaceMap.from_columns(3, cols)
                break
            except ValueError:
                continue
        assert det(complete_to_glr(a).g) != 0


def test_degenerate_seeds():
    v = SubspaceMap.from_columns(3, [[1, 0, 1], [0, 1, 2]])
    assert is_isomorphic(make_test_rep(proj_p0(2), v, "minus").rep, proj_p1(3),
                         seed=0) == "yes"
    assert make_test_rep(proj_p0(2), v, "plus").rep.is_zero()
    assert make_test_rep(simple1(2), v, "minus").rep.is_zero()
    assert is_isomorphic(make_test_rep(simple1(2), v, "plus").rep, inj_i1(3),
                         seed=0) == "yes"


def test_p_test_dimensions():
    for (d, r) in [(2, 3), (2, 4), (3, 4)]:
        cols = [[1 if i == j else 0 for i in range(r)] for j in range(d)]
        v = SubspaceMap.from_columns(r, cols)
        t = p_test(1, v, "minus")
        assert t.rep.dim == DimVector(d, r * d - 1)
        seq = a_seq(d, 3)
        t2 = p_test(2, v, "minus")
        assert t2.rep.dim == DimVector(seq[3], r * seq[3] - seq[2])
        tp = p_test(1, v, "plus")
        assert tp.rep.dim == DimVector(r - d, 1)  # sigma_r of (1, d)


def test_restriction_identity():
    v = SubspaceMap.from_columns(3, [[1, 2, 0], [0, 1, 1]])
    for n in range(3):
        t = p_test(n, v, "minus")
        res = restrict(t.rep, v.canonical())
        st = split_k2(res)
        a = a_seq(2, n + 2)
        want = {n + 1: 1}
        if (3 - 2) * a[n + 1]:
            want[0] = want.get(0, 0) + (3 - 2) * a[n + 1]
        assert st.remainder is None and st.multiplicities == want


def test_image_only_dependence():
    b1 = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 1, 0]])
    b2 = SubspaceMap.from_columns(3, [[3, 1, 0], [1, 1, 0]])
    assert b1.image_key() == b2.image_key()
    t1 = make_test_rep(preprojective(2, 1), b1, "minus")
    t2 = make_test_rep(preprojective(2, 1), b2, "minus")
    assert is_isomorphic(t1.rep, t2.rep, seed=1) == "yes"
    # p_test canonicalizes, so equal images give equal matrices
    assert p_test(1, b1, "minus").rep == p_test(1, b2, "minus").rep


def test_separation_and_brick():
    u = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 1, 0]])
    v = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 0, 1]])
    eu = p_test(1, u, "minus").rep
    ev = p_test(1, v, "minus").rep
    assert hom_dim(eu, ev) == 0 and hom_dim(ev, eu) == 0
    assert hom_dim(eu, eu) == 1
    assert is_isomorphic(eu, ev, seed=0) != "yes"
    for n in (1, 2):
        assert hom_dim(p_test(n, u, "minus").rep, p_test(n, u, "minus").rep) == 1
        assert hom_dim(p_test(n, u, "plus").rep, p_test(n, u, "plus").rep) == 1


def test_adjunction_instance():
    import kronrep.homalg as H
    from kronrep.functors import shift_minus
    from kronrep.rep import KroneckerRep
    rng = random.Random(2)
    v = SubspaceMap.from_columns(3, [[1, 0, 2], [0, 1, 1]]).canonical()
    x = preprojective(2, 1)
    for _ in range(4):
        maps = [Matrix.from_rows([[rng.randint(-3, 3) for _ in range(2)]
                                  for _ in range(4)]) for _ in range(3)]
        m = KroneckerRep(3, DimVector(2, 4), maps)
        lhs = hom_dim(make_test_rep(x, v, "minus").rep, m)
        rhs = hom_dim(shift_minus(x).rep, restrict(m, v))
        assert lhs == rhs


def test_tau_exchange():
    v = SubspaceMap.from_columns(3, [[1, 1, 0], [0, 1, 1]])
    tm = p_test(1, v, "minus").rep
    tp = p_test(1, v, "plus").rep
    assert is_isomorphic(tau(tm), tp, seed=0) == "yes"


def test_elementary_consequence_sampled():
    # P_1^-(v) for d = 3 < r = 4 is relative 2-projective: full rank at
    # sampled 2-subspaces
    rng = random.Random(3)
    v = SubspaceMap.from_columns(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    t = p_test(1, v, "minus").rep
    for _ in range(10):
        while True:
            cols = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)]
            try:
                w = SubspaceMap.from_columns(4, cols)
                break
            except ValueError:
                continue
        assert rank_at_subspace(t, w)[1]
