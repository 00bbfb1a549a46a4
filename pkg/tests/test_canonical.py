import random

import pytest

from kronrep.canonical import (SplittingType, a_seq, hom_dim_from_p2,
                               hom_dim_to_p2, preprojective, split_k2,
                               split_off_p0)
from kronrep.homalg import hom_dim, is_isomorphic
from kronrep.linalg import Matrix
from kronrep.rep import (DimVector, KroneckerRep, direct_sum, dual, proj_p0,
                         proj_p1, tits_form, zero_rep)


def test_a_seq():
    assert a_seq(2, 6) == [0, 1, 2, 3, 4, 5, 6]
    assert a_seq(3, 5) == [0, 1, 3, 8, 21, 55]
    with pytest.raises(ValueError):
        a_seq(1, 3)
    for d in (2, 3, 4):
        seq = a_seq(d, 7)
        for n in range(6):
            assert tits_form(DimVector(seq[n], seq[n + 1]), d) == 1


def test_preprojective_models():
    assert preprojective(2, 2).dim == DimVector(2, 3)
    assert preprojective(3, 2).dim == DimVector(3, 8)
    for n in range(4):
        i_n = preprojective(2, n, "I")
        assert i_n.dim == preprojective(2, n).dim.twist()
        assert is_isomorphic(dual(preprojective(2, n)), i_n, seed=0) == "yes"
    assert preprojective(2, 0) == proj_p0(2)
    assert is_isomorphic(preprojective(3, 1), proj_p1(3), seed=0) == "yes"


def test_hom_dimension_table():
    # dim Hom(P_n(d), P_m(d)) = a_{m-n+1}(d) for n <= m, else 0
    for d in (2, 3):
        seq = a_seq(d, 5)
        for n in range(4):
            for m in range(4):
                got = hom_dim(preprojective(d, n), preprojective(d, m))
                want = seq[m - n + 1] if n <= m else 0
                assert got == want, (d, n, m, got, want)


def test_almost_split_dimension_law():
    for d in (2, 3):
        for n in range(3):
            a = preprojective(d, n).dim
            b = preprojective(d, n + 1).dim
            c = preprojective(d, n + 2).dim
            assert a.x + c.x == d * b.x and a.y + c.y == d * b.y


def test_staircase_matches_solver():
    rng = random.Random(0)
    for t in range(12):
        x, y = rng.randint(0, 3), rng.randint(0, 3)
        maps = [Matrix.from_rows([[rng.randint(-3, 3) for _ in range(x)]
                                  for _ in range(y)] if y else [])
                for _ in range(2)]
        if y == 0:
            maps = [Matrix.zeros(0, x) for _ in range(2)]
        n = KroneckerRep(2, DimVector(x, y), maps)
        for k in range(5):
            assert hom_dim_from_p2(k, n) == hom_dim(preprojective(2, k), n)
        for m in range(4):
            assert hom_dim_to_p2(n, m) == hom_dim(n, preprojective(2, m))


def test_split_k2_examples():
    n = direct_sum(direct_sum(proj_p0(2), proj_p0(2)), proj_p1(2))
    st = split_k2(n)
    assert st.multiplicities == {0: 2, 1: 1} and st.remainder is None
    for m in range(4):
        st = split_k2(preprojective(2, m))
        assert st.multiplicities == {m: 1} and st.remainder is None
    reg = KroneckerRep(2, DimVector(1, 1),
                       [Matrix.identity(1), Matrix.identity(1)])
    st = split_k2(reg)
    assert st.multiplicities == {} and st.remainder == DimVector(1, 1)
    assert split_k2(zero_rep(2)).multiplicities == {}


def test_split_k2_round_trip_random():
    rng = random.Random(1)
    for _ in range(30):
        target = {}
        total = 0
        while total < rng.randint(1, 6):
            i = rng.randint(0, 4)
            target[i] = target.get(i, 0) + 1
            total += 1
        rep = zero_rep(2)
        for i, b in sorted(target.items()):
            for _ in range(b):
                rep = direct_sum(rep, preprojective(2, i))
        st = split_k2(rep)
        assert st.multiplicities == target and st.remainder is None


def test_splitting_type_helpers():
    st = SplittingType({0: 2, 3: 1})
    assert st.support() == [0, 3]
    assert st.k_type() == 3
    assert st.total_dim() == DimVector(3, 6)
    st2 = SplittingType({0: 1})
    both = st + st2
    assert both.multiplicities == {0: 3, 3: 1}
    assert st.to_json() == {"b": {"0": 2, "3": 1}, "remainder": None}


def test_split_off_p0():
    n = direct_sum(direct_sum(proj_p0(2), preprojective(2, 2)), proj_p0(2))
    count, comp = split_off_p0(n)
    assert count == 2
    assert is_isomorphic(comp, preprojective(2, 2), seed=0) == "yes"
    count2, comp2 = split_off_p0(preprojective(2, 3))
    assert count2 == 0 and comp2 == preprojective(2, 3)
