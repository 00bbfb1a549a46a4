import random

import pytest

from kronrep.linalg import Matrix
from kronrep.rep import (DimVector, GroupElement, KroneckerRep, SubspaceMap,
                         act, direct_sum, dual, euler_form, inflate, inj_i1,
                         proj_p0, proj_p1, rank_at_subspace, restrict,
                         simple1, std_models, tits_form, validate, zero_rep)
import kronrep.homalg as homalg


def random_rep(rng, r, x, y, bound=3):
    maps = [Matrix.from_rows([[rng.randint(-bound, bound) for _ in range(x)]
                              for _ in range(y)] if y else [])
            for _ in range(r)]
    if y == 0:
        maps = [Matrix.zeros(0, x) for _ in range(r)]
    return KroneckerRep(r, DimVector(x, y), maps)


def test_validate():
    assert validate(proj_p1(3)) is None
    assert validate(zero_rep(2)) is None
    with pytest.raises(ValueError) as err:
        KroneckerRep(2, DimVector(3, 2),
                     [Matrix.zeros(2, 3), Matrix.zeros(3, 2)])
    assert "map 1" in str(err.value)


def test_euler_form_examples():
    assert euler_form(DimVector(1, 0), DimVector(0, 1), 7) == -7
    assert tits_form(DimVector(13, 34), 3) == -1
    assert tits_form(DimVector(1, 2), 3) == -1


def test_direct_sum():
    m = proj_p1(2)
    z = zero_rep(2)
    assert direct_sum(m, z).dim == m.dim
    assert direct_sum(proj_p0(2), proj_p0(2)).dim == DimVector(0, 2)
    p2 = direct_sum(proj_p1(2), KroneckerRep(
        2, DimVector(2, 3),
        [Matrix.zeros(3, 2), Matrix.zeros(3, 2)]))
    assert p2.dim == DimVector(3, 5)
    with pytest.raises(ValueError):
        direct_sum(proj_p1(2), proj_p1(3))


def test_dual():
    d = dual(proj_p1(2))
    assert d.dim == DimVector(2, 1)
    assert homalg.is_isomorphic(d, inj_i1(2), seed=0) == "yes"
    m = proj_p1(3)
    assert dual(dual(m)) == m
    assert dual(proj_p0(2)).dim == DimVector(1, 0)


def test_restrict():
    iota = SubspaceMap.canonical_inclusion(2, 3)
    res = restrict(proj_p1(3), iota)
    # res(P_1(3)) = P_1(2) (+) P_0(2)
    expected = direct_sum(proj_p1(2), proj_p0(2))
    assert homalg.is_isomorphic(res, expected, seed=1) == "yes"
    # identity restriction
    full = SubspaceMap(3, 3, Matrix.identity(3))
    assert restrict(proj_p1(3), full) == proj_p1(3)
    # linearity in the columns
    doubled = SubspaceMap(3, 2, iota.cols.scale(2))
    r2 = restrict(proj_p1(3), doubled)
    assert r2.maps[0] == res.maps[0].scale(2)


def test_inflate():
    x = proj_p1(2)
    inf = inflate(x, 3)
    assert inf.dim == x.dim and inf.maps[2].is_zero()
    iota = SubspaceMap.canonical_inclusion(2, 3)
    assert restrict(inf, iota) == x
    assert inflate(x, 2) == x
    with pytest.raises(ValueError):
        inflate(proj_p1(3), 2)


def test_act():
    rng = random.Random(5)
    m = random_rep(rng, 3, 2, 3)
    ident = GroupElement.identity(3)
    assert act(ident, m) == m
    g = GroupElement(3, Matrix.from_rows([[1, 1, 0], [0, 1, 0], [2, 0, 1]]))
    h = GroupElement(3, Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 3]]))
    assert act(g, act(h, m)) == act(g.compose(h), m)
    # g.M is isomorphic to the restriction along g^{-1}
    ginv_map = SubspaceMap(3, 3, g.inverse_matrix())
    assert homalg.is_isomorphic(act(g, m), restrict(m, ginv_map), seed=2) == "yes"
    # the action preserves dimension vectors and subspace ranks
    v = SubspaceMap.from_columns(3, [[1, 0, 1], [0, 2, 1]])
    gv = SubspaceMap(3, 2, g.g * v.cols)
    assert rank_at_subspace(act(g, m), gv)[0] == rank_at_subspace(m, v)[0]


def test_rank_at_subspace():
    p1 = proj_p1(3)
    for cols in ([[1, 0, 0], [0, 1, 0]], [[1, 2, 0], [0, 1, 1]]):
        v = SubspaceMap.from_columns(3, cols)
        rk, proj = rank_at_subspace(p1, v)
        assert rk == 2 and proj
    s1 = simple1(3)
    v = SubspaceMap.from_columns(3, [[1, 0, 0]])
    assert rank_at_subspace(s1, v) == (0, False)
    # inflated representation: the kernel direction gamma_3 alone gives rank 0
    e = inflate(proj_p1(2), 3)
    v3 = SubspaceMap.from_columns(3, [[0, 0, 1]])
    assert rank_at_subspace(e, v3) == (0, False)
    good = SubspaceMap.from_columns(3, [[0, 0, 1], [1, 1, 0]])
    assert rank_at_subspace(e, good)[1] is False  # contains the zero direction
    mixed = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 1, 0]])
    assert rank_at_subspace(e, mixed) == (2, True)


def test_std_models():
    models = std_models(3)
    assert models["P1"].dim == DimVector(1, 3)
    assert models["I1"].dim == DimVector(3, 1)
    assert models["P0"].dim == DimVector(0, 1)
    assert models["I0"].dim == DimVector(1, 0)


def test_subspace_canonical():
    a = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 1, 0]])
    b = SubspaceMap.from_columns(3, [[2, 2, 0], [1, 3, 0]])
    assert a.image_key() == b.image_key()
    c = SubspaceMap.from_columns(3, [[1, 0, 0], [0, 0, 1]])
    assert a.image_key() != c.image_key()
    with pytest.raises(ValueError):
        SubspaceMap.from_columns(3, [[1, 1, 0], [2, 2, 0]])


def test_restriction_depends_on_image_up_to_action():
    # beta = alpha o g  =>  restrict(m, beta) = act(g^{-1}, restrict(m, alpha))
    rng = random.Random(9)
    m = random_rep(rng, 3, 2, 3)
    alpha = SubspaceMap.from_columns(3, [[1, 0, 1], [0, 1, 1]])
    g = GroupElement(2, Matrix.from_rows([[1, 2], [1, 3]]))
    beta = SubspaceMap(3, 2, alpha.cols * g.g)
    lhs = restrict(m, beta)
    rhs = act(GroupElement(2, g.inverse_matrix()), restrict(m, alpha))
    assert lhs == rhs
    assert rank_at_subspace(m, alpha)[0] == rank_at_subspace(m, beta)[0]


def test_euler_equals_hom_minus_ext():
    rng = random.Random(11)
    for _ in range(20):
        r = rng.choice([2, 3])
        m = random_rep(rng, r, rng.randint(0, 3), rng.randint(0, 3))
        n = random_rep(rng, r, rng.randint(0, 3), rng.randint(0, 3))
        hom = homalg.hom_dim(m, n)
        ext = homalg.ext1(m, n)[0]
        assert hom - ext == euler_form(m.dim, n.dim, r)
