import pytest
from hypothesis import given, settings, strategies as st

from rankhull.codes import Flavor, RankCode, apply_equivalence, hermitian_gram, hull, hull_oracle, is_mrd, random_code
from rankhull.errors import (
    AllOnesHullBinary,
    AlreadyLCD,
    ExcludedParameters,
    InvalidEll,
    InvalidK,
    Obstructed22,
    TargetAboveHull,
    UnsupportedShape,
)
from rankhull.construct import hermitian_so_gabidulin
from rankhull.gf import standard_tower
from rankhull.hullvary import descent_witness, mrd_with_hull, reduce_hull_once, to_lcd, vary_hull
from rankhull.linalg import Matrix, det, rowspace_equal


def all_ones_code(T):
    w = T.omega
    return RankCode.from_rows(T, [[1, 1, 1, 1], [0, 1, w, T.add(w, 1)]])


def descent_code(T):
    return RankCode.from_rows(T, [[T.pow(T.omega, 3), 1, 0, 0], [0, 0, 1, 0]])


def _witness_identity(wit, n, Fq):
    uu = Matrix(Fq, tuple(tuple(Fq.mul(wit.lam, Fq.mul(a, b)) for b in wit.u) for a in wit.u), n)
    return wit.M @ wit.M.T == Matrix.identity(Fq, n) + uu


def test_witness_binary_example(f16):
    wit = descent_witness([f16.pow(f16.omega, 3), 1, 0, 0], f16)
    assert wit.u == (1, 1, 0, 0) and wit.lam == 1
    assert wit.M.tolist() == [[1, 1, 0, 0], [0, 1, 1, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
    assert _witness_identity(wit, 4, f16.Fq)


def test_witness_ternary_example(f9):
    wit = descent_witness([1, 0, 0], f9)
    assert wit.u == (1, 1, 1)
    assert wit.M.tolist() == [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
    assert _witness_identity(wit, 3, f9.Fq)


def test_witness_large_q_example(f16_over_f4):
    T = f16_over_f4
    wit = descent_witness([1, 0], T)
    mu = wit.M.rows[0][0]
    assert wit.u == (1, 0)
    assert wit.M.tolist() == [[mu, 0], [0, 1]]
    assert T.Fq.mul(mu, mu) != 1
    assert wit.lam == T.Fq.sub(T.Fq.mul(mu, mu), 1)
    assert _witness_identity(wit, 2, T.Fq)


def test_witness_errors(f16, f9, f4):
    with pytest.raises(AllOnesHullBinary):
        descent_witness([f16.omega] * 4, f16)
    with pytest.raises(UnsupportedShape):
        descent_witness([1, f4.omega], f4)
    with pytest.raises(UnsupportedShape):
        descent_witness([1, 2], f9)


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1)])
def test_witness_properties(q, m):
    T = standard_tower(q, m)
    import random

    rng = random.Random(q + m)
    for _ in range(40):
        n = rng.randint(3, 6)
        w = [rng.randrange(T.order) for _ in range(n)]
        if not any(w) or (q == 2 and len(set(w)) == 1):
            continue
        wit = descent_witness(w, T)
        assert T.dot(w, wit.u) != 0
        assert wit.lam != 0
        assert det(wit.M) != 0
        assert _witness_identity(wit, n, T.Fq)


def test_reduce_all_ones_code(f16):
    C2, M = reduce_hull_once(all_ones_code(f16))
    w = f16.omega
    assert C2.G.tolist() == [[1, 0, 0, 0], [0, 1, w, f16.add(w, 1)]]
    assert hull(C2).h == 0


def test_reduce_descent_code(f16):
    C2, M = reduce_hull_once(descent_code(f16))
    w = f16.omega
    g = f16.add(f16.mul(w, w), f16.add(w, 1))
    assert hermitian_gram(C2).tolist() == [[g, 0], [0, 1]]
    assert hull(C2).h == 0


def test_reduce_length_two_ternary(f9):
    C = RankCode.from_rows(f9, [[1, f9.add(1, f9.omega)]])
    assert hull(C).h == 1
    C2, M = reduce_hull_once(C)
    assert M.tolist() == [[1, 0], [1, 1]]
    assert hull(C2).h == 0
    assert rowspace_equal(C2.G, apply_equivalence(C, M).G)


def test_reduce_errors(f9, f4):
    C = RankCode(Matrix.identity(f9, 2), f9)
    with pytest.raises(AlreadyLCD):
        reduce_hull_once(C)
    with pytest.raises(Obstructed22):
        reduce_hull_once(RankCode.from_rows(f4, [[1, f4.omega]]))
    with pytest.raises(Obstructed22):
        vary_hull(RankCode.from_rows(f4, [[1, f4.omega]]), 0)


def test_euclidean_22_is_not_obstructed(f4):
    # x^2 + y^2 = (x + y)^2 vanishes on K 1_2
    C = RankCode.from_rows(f4, [[1, 1]])
    assert hull(C, Flavor.EUCLIDEAN).h == 1
    C2 = to_lcd(C, Flavor.EUCLIDEAN)
    assert hull(C2, Flavor.EUCLIDEAN).h == 0


def test_vary_hull_examples(f16):
    C = all_ones_code(f16)
    same, trace = vary_hull(C, 1)
    assert same is C and trace.steps == []
    C2, trace = vary_hull(C, 0)
    assert len(trace.steps) == 1 and trace.final_h == 0
    assert rowspace_equal(C2.G, apply_equivalence(C, trace.product(f16, 4)).G)
    with pytest.raises(TargetAboveHull):
        vary_hull(C, 2)


def test_vary_hull_two_steps_large_tower():
    T = standard_tower(3, 3)
    C = random_code(T, 6, 3, seed=11, min_hull=2)
    h = hull(C).h
    assert h >= 2
    C2, trace = vary_hull(C, 0)
    assert len(trace.steps) == h
    cur = C
    for M, h_after in trace.steps:
        cur = apply_equivalence(cur, M)
        assert hull(cur).h == h_after == hull_oracle(cur).h
    assert rowspace_equal(cur.G, C2.G)


def test_to_lcd_examples(f16, f9):
    w = f16.omega
    assert to_lcd(all_ones_code(f16)).G.tolist() == [[1, 0, 0, 0], [0, 1, w, f16.add(w, 1)]]
    C = RankCode(Matrix.identity(f9, 2), f9)
    assert to_lcd(C) is C
    assert hull(to_lcd(descent_code(f16))).h == 0


def test_mrd_with_hull_examples(f9, f16):
    C = mrd_with_hull(f9, 1, 1)
    assert rowspace_equal(C.G, hermitian_so_gabidulin(f9, 1).G)
    C = mrd_with_hull(f9, 1, 0)
    assert hull(C).h == 0 and is_mrd(C)
    for ell in range(3):
        C = mrd_with_hull(f16, 2, ell)
        assert (C.n, C.k) == (4, 2)
        assert hull(C).h == ell == hull_oracle(C).h
        assert is_mrd(C)


def test_mrd_with_hull_errors(f4, f16):
    with pytest.raises(ExcludedParameters):
        mrd_with_hull(f4, 1, 0)
    with pytest.raises(InvalidK):
        mrd_with_hull(f16, 3, 0)
    with pytest.raises(InvalidEll):
        mrd_with_hull(f16, 1, 2)


GRID = [(2, 2, 3), (2, 2, 4), (3, 1, 2), (3, 2, 3), (4, 1, 2), (4, 1, 3), (5, 1, 4)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GRID), st.integers(0, 10**6), st.sampled_from(list(Flavor)))
def test_vary_hull_reaches_every_target(cfg, seed, fl):
    q, m, n = cfg
    T = standard_tower(q, m)
    k = 1 + seed % (n - 1) if n > 2 else 1
    hmin = min(k, n - k)
    C = random_code(T, n, k, seed, min_hull=hmin, flavor=fl)
    h = hull(C, fl).h
    for target in range(h + 1):
        C2, trace = vary_hull(C, target, fl, seed)
        assert hull(C2, fl).h == target == hull_oracle(C2, fl).h
        assert rowspace_equal(C2.G, apply_equivalence(C, trace.product(T, n)).G)
