import random

import pytest

from kronrep.analysis import line_sampler, splitting_at_line
from kronrep.constructions import (chen_brick, fundamental_domain_reduce,
                                   prescribed_jumping, radical_dim2,
                                   sampler_gate, subrep_bruteforce,
                                   uniform_candidate_sampler,
                                   _shifted_identity)
from kronrep.homalg import ExtCocycle, extension_from_cocycle
from kronrep.linalg import Matrix
from kronrep.rep import (DimVector, KroneckerRep, SubspaceMap, euler_form,
                         proj_p1)


def test_chen_brick_cases():
    res = chen_brick(2, 3)
    assert res.params["case"] == "ii"
    assert res.params["discriminant"] == {"kind": "rank", "value": 0}
    assert res.verified.find("brick").status == "certified"
    assert res.verified.find("non-homogeneous").status == "certified"

    res = chen_brick(3, 5)
    assert res.params["discriminant"] == {"kind": "radical", "values": [4, 5]}
    assert res.verified.find("brick").status == "certified"
    assert res.verified.find("non-uniform").status == "certified"

    # q = 2, s = 1: the printed matrices leave S(2) summands, so the brick
    # verdict is honestly refuted while the non-uniformity discriminant holds
    res = chen_brick(2, 5)
    assert res.params["discriminant"] == {"kind": "radical", "values": [3, 4]}
    assert res.verified.find("brick").status == "refuted"
    assert res.verified.find("non-uniform").status == "certified"
    assert ("brick", "Prop2.2.6") not in res.intended

    # q = 2, s = 0 keeps the brick property
    res = chen_brick(2, 4)
    assert res.verified.find("brick").status == "certified"

    with pytest.raises(ValueError):
        chen_brick(2, 2)   # case (i)
    with pytest.raises(ValueError):
        chen_brick(1, 4)   # q = 4


def test_radical_dim2():
    rep = KroneckerRep(2, DimVector(2, 4),
                       [_shifted_identity(1, 2, 4), _shifted_identity(2, 2, 4)])
    assert radical_dim2(rep) == 3   # m + min(i-1, m) with m=2, i=2
    assert radical_dim2(proj_p1(3)) == 3
    zero = KroneckerRep(2, DimVector(2, 3),
                        [Matrix.zeros(3, 2), Matrix.zeros(3, 2)])
    assert radical_dim2(zero) == 0


def test_sampler_gate():
    assert sampler_gate(3, 1, 8, 10) is None
    assert sampler_gate(3, 1, 7, 9) is not None
    with pytest.raises(ValueError):
        uniform_candidate_sampler(3, 1, 7, 9, seed=0)


def test_uniform_candidate_sampler_desk():
    lines = line_sampler(3, 6, seed=5, strategy="mixed")
    res = uniform_candidate_sampler(3, 1, 8, 10, seed=1, lines=lines)
    assert res.rep.dim == DimVector(10, 18)
    assert res.verified.splitting.multiplicities == {1: 6, 2: 2}
    assert res.verified.find("brick").status == "certified"
    assert res.verified.find("non-homogeneous").status == "certified"
    # verify one line against the slow path
    st = splitting_at_line(res.rep, lines[0])
    assert st.multiplicities == {1: 6, 2: 2}


def test_prescribed_jumping_two_planes():
    planes = [SubspaceMap.from_columns(3, [[1, 0, 0], [0, 1, 0]]),
              SubspaceMap.from_columns(3, [[1, 0, 0], [0, 0, 1]])]
    res = prescribed_jumping(3, planes, seed=3, probes=8)
    assert res.rep.dim == DimVector(6, 15)
    assert res.verified.find("brick").status == "certified"
    assert res.verified.find("Bongartz orthogonality").status == "certified"
    jl = res.verified.find("jumping lines exactly the prescribed planes")
    assert jl.status == "sampled_evidence"
    with pytest.raises(ValueError):
        prescribed_jumping(3, planes + [planes[0]], seed=0)
    with pytest.raises(ValueError):
        prescribed_jumping(2, planes, seed=0)


def test_zero_cocycle_control():
    # the split middle term has the same line splittings as the direct sum
    lines = line_sampler(3, 3, seed=6, strategy="mixed")
    seed_res = uniform_candidate_sampler(3, 1, 8, 10, seed=4, lines=lines)
    m = seed_res.rep
    x = proj_p1(3)
    zero = ExtCocycle.zero(x, m)
    e = extension_from_cocycle(zero)
    assert e.dim == m.dim + x.dim
    for v in lines:
        assert splitting_at_line(e, v) == \
            splitting_at_line(m, v) + splitting_at_line(x, v)


def test_subrep_bruteforce():
    p1 = KroneckerRep(2, DimVector(1, 2),
                      [Matrix.from_rows([[1], [0]], p=2),
                       Matrix.from_rows([[0], [1]], p=2)])
    ok, wit = subrep_bruteforce(p1, DimVector(0, 1))
    assert ok and wit is not None
    ok, wit = subrep_bruteforce(p1, DimVector(1, 1))
    assert not ok and wit is None
    ok, _ = subrep_bruteforce(p1, DimVector(1, 2))
    assert ok
    with pytest.raises(ValueError):
        subrep_bruteforce(p1, DimVector(2, 1))
    big = KroneckerRep(2, DimVector(5, 6),
                       [Matrix.zeros(6, 5, p=2), Matrix.zeros(6, 5, p=2)])
    with pytest.raises(ValueError):
        subrep_bruteforce(big, DimVector(2, 3))


def test_fundamental_domain_reduce():
    red, word = fundamental_domain_reduce(DimVector(13, 34), 3)
    assert red == DimVector(1, 1)
    assert word == ["sigma"] * 4
    red, word = fundamental_domain_reduce(DimVector(1, 1), 3)
    assert red == DimVector(1, 1) and word == []
    # the twist is an involution: reducing the twist ends at the same point
    red2, _ = fundamental_domain_reduce(DimVector(34, 13), 3)
    assert red2 == DimVector(1, 1)
    with pytest.raises(ValueError):
        fundamental_domain_reduce(DimVector(1, 3), 3)  # q > 0


def test_oracle_consistency_small_batch():
    rng = random.Random(7)
    d = DimVector(2, 3)
    for e in (DimVector(1, 2), DimVector(0, 1), DimVector(2, 1)):
        pairing = euler_form(e, d - e, 2)
        for _ in range(10):
            maps = [Matrix.from_rows([[rng.randint(0, 1) for _ in range(2)]
                                      for _ in range(3)], p=2)
                    for _ in range(2)]
            m = KroneckerRep(2, d, maps)
            exists, _ = subrep_bruteforce(m, e)
            if not exists:
                assert pairing < 0, (tuple(e), pairing)
