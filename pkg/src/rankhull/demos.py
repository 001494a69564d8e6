"""Worked examples over F16, F9 and F4, reproduced with every published
intermediate value checked."""
from __future__ import annotations

from .codes import Flavor, RankCode, dual, hermitian_gram, hull, hull_oracle, inner, min_rank_distance, rank_weight
from .construct import (
    ScaledSelfDualBasis,
    gram_of_scaled_form,
    find_scale_lambda,
    hermitian_so_gabidulin,
    power_basis,
    scaled_self_dual_basis,
    verify_scaled_basis,
)
from .gf import build_field
from .hullvary import descent_witness, reduce_hull_once
from .linalg import Matrix, dagger, det, rowspace_equal
from .oracle import hull_spectrum
from .report import CommandReport
from .serialize import code_to_json


def f16():
    return build_field(2, 1, 2, None, [1, 1, 0, 0, 1])


def f9():
    return build_field(3, 1, 1, None, [1, 0, 1])


def f4():
    return build_field(2, 1, 1, None, [1, 1, 1])


def _rows(M: Matrix) -> list[list[int]]:
    return M.tolist()


def demo_all_ones_hull() -> CommandReport:
    """All-ones hull over F16: G = [[1,1,1,1],[0,1,w,w+1]]."""
    T = f16()
    w = T.omega
    w1 = T.add(w, 1)
    rep = CommandReport("demo", {"case": "5.1", "field": T.config()})
    rep.check("sigma(w) = w+1", T.sigma(w) == w1)
    rep.check("sigma(w+1) = w", T.sigma(w1) == w)
    C = RankCode.from_rows(T, [[1, 1, 1, 1], [0, 1, w, w1]])
    B = Matrix(T, ((1, w, w1),), 3)
    rep.check("B B^dagger = 1", (B @ dagger(B)).rows == ((1,),))
    gram = hermitian_gram(C)
    rep.check("GG^dagger = [[0,0],[0,1]]", _rows(gram) == [[0, 0], [0, 1]], _rows(gram))
    h = hull(C)
    rep.check("e_1 in ker(GG^dagger)", [1, 0] in h.kernel_basis, h.kernel_basis)
    rep.check("h = 1", h.h == 1 and hull_oracle(C).h == 1, h.h)
    rep.check("H(C) = K 1_4", rowspace_equal(Matrix(T, tuple(map(tuple, h.hull_basis)), 4), Matrix(T, ((1, 1, 1, 1),), 4)))
    M_pub = [[1, 1, 1, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    C2, M = reduce_hull_once(C, Flavor.HERMITIAN)
    rep.check("M as published", _rows(M) == M_pub, _rows(M))
    rep.check("G' = [[1,0,0,0],[0,1,w,w+1]]", _rows(C2.G) == [[1, 0, 0, 0], [0, 1, w, w1]], _rows(C2.G))
    rep.check("G'G'^dagger = I_2", _rows(hermitian_gram(C2)) == [[1, 0], [0, 1]])
    rep.check("h(CM) = 0", hull(C2).h == 0 and hull_oracle(C2).h == 0)
    rep.outputs = {"G_prime": _rows(C2.G), "M": _rows(M), "h_before": h.h, "h_after": hull(C2).h}
    return rep


def demo_rank_one_descent() -> CommandReport:
    """Rank-one descent over F16 with w = (w^3, 1, 0, 0)."""
    T = f16()
    w = T.omega
    w3 = T.pow(w, 3)
    rep = CommandReport("demo", {"case": "5.2", "field": T.config()})
    C = RankCode.from_rows(T, [[w3, 1, 0, 0], [0, 0, 1, 0]])
    hw = list(C.G.rows[0])
    rep.check("<w,w>_H = 0", inner(hw, hw, T) == 0)
    v = list(C.G.rows[1])
    rep.check("<v,w>_H = 0 and <v,v>_H = 1", inner(v, hw, T) == 0 and inner(v, v, T) == 1)
    gram = hermitian_gram(C)
    rep.check("GG^dagger = [[0,0],[0,1]]", _rows(gram) == [[0, 0], [0, 1]], _rows(gram))
    h = hull(C)
    rep.check("H(C) = K w", h.h == 1 and rowspace_equal(Matrix(T, tuple(map(tuple, h.hull_basis)), 4), Matrix(T, (tuple(hw),), 4)))
    rep.check("H(C) != K 1_4", not rowspace_equal(Matrix(T, tuple(map(tuple, h.hull_basis)), 4), Matrix(T, ((1, 1, 1, 1),), 4)))
    wit = descent_witness(hw, T)
    rep.check("u = (1,1,0,0)", list(wit.u) == [1, 1, 0, 0], list(wit.u))
    rep.check("w u^T = w^3 + 1 != 0", T.dot(hw, wit.u) == T.add(w3, 1) != 0)
    M_pub = [[1, 1, 0, 0], [0, 1, 1, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
    rep.check("M as published", _rows(wit.M) == M_pub, _rows(wit.M))
    MMt = wit.M @ wit.M.T
    rep.check("M M^T = I_4 + u^T u", _rows(MMt) == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], _rows(MMt))
    a = [T.dot(r, wit.u) for r in C.G.rows]
    rep.check("G u^T = (w^3+1, 0)", a == [T.add(w3, 1), 0], a)
    w2w1 = T.add(T.mul(w, w), T.add(w, 1))
    rep.check("(w^3+1) sigma(w^3+1) = w^2+w+1", T.mul(a[0], T.sigma(a[0])) == w2w1)
    C2, M = reduce_hull_once(C)
    rep.check("reduce_hull_once uses the published M", _rows(M) == M_pub)
    rep.check("G' as published", _rows(C2.G) == [[w3, T.add(w3, 1), 1, 0], [1, 1, 1, 0]], _rows(C2.G))
    g2 = hermitian_gram(C2)
    rep.check("G'G'^dagger = [[w^2+w+1,0],[0,1]]", _rows(g2) == [[w2w1, 0], [0, 1]], _rows(g2))
    rep.check("h(CM) = 0", hull(C2).h == 0 and hull_oracle(C2).h == 0)
    rep.outputs = {"u": list(wit.u), "M": _rows(M), "G_prime": _rows(C2.G), "gram_prime": _rows(g2)}
    return rep


def demo_scaled_basis() -> CommandReport:
    """Scaled trace-self-dual basis of F9/F3 and the self-dual [2,1,2] code."""
    T = f9()
    w = T.omega
    rep = CommandReport("demo", {"case": "5.3", "field": T.config()})
    rep.check("sigma(w) = -w", T.sigma(w) == T.neg(w))
    ok_tr = ok_nm = True
    for a in range(3):
        for b in range(3):
            x = T.from_coeffs([a, b])
            ok_tr &= T.trace(x) == 2 * a % 3
            ok_nm &= T.norm(x) == (a * a + b * b) % 3
    rep.check("Tr(a+bw) = 2a", ok_tr)
    rep.check("N(a+bw) = a^2+b^2", ok_nm)
    M1 = gram_of_scaled_form(power_basis(T), 1, T)
    rep.check("M_1 = [[2,0],[0,1]]", _rows(M1) == [[2, 0], [0, 1]], _rows(M1))
    delta = det(M1)
    rep.check("Delta = 2", delta == 2)
    lam = T.add(1, w)
    rep.check("N(1+w) = 2 = Delta^-1", T.norm(lam) == 2 == T.Fq.inv(delta))
    rep.check("find_scale_lambda gives 1+w", find_scale_lambda(power_basis(T), T) == lam)
    alpha = (w, T.sub(1, w))
    a1, a2 = alpha
    rep.check("lam a1^2 = 2+2w", T.mul(lam, T.mul(a1, a1)) == T.from_coeffs([2, 2]))
    rep.check("lam a2^2 = 2+w", T.mul(lam, T.mul(a2, a2)) == T.from_coeffs([2, 1]))
    rep.check("lam a1 a2 = 2w", T.mul(lam, T.mul(a1, a2)) == T.from_coeffs([0, 2]))
    rep.check("Tr(lam a_i a_j) = delta_ij", verify_scaled_basis(ScaledSelfDualBasis(T, alpha, lam)))
    b = scaled_self_dual_basis(T)
    rep.check("construction returns ((w, 1-w), 1+w)", (b.alpha, b.lam) == (alpha, lam), [list(b.alpha), b.lam])
    C = hermitian_so_gabidulin(T, 1, 1)
    rep.check("G_{1,1}(alpha) = K alpha", _rows(C.G) == [list(alpha)], _rows(C.G))
    rep.check("<alpha,alpha>_H = 0", inner(list(alpha), list(alpha), T) == 0)
    D = dual(C, Flavor.HERMITIAN)
    rep.check("Hermitian self-dual", rowspace_equal(C.G, D.G))
    # the F_3-projective classes of nonzero codewords: c alpha with c up to sign
    reps = [c for c in T.nonzero() if c < T.neg(c) or c == T.neg(c)]
    weights = [rank_weight([T.mul(c, a) for a in alpha], T) for c in reps]
    rep.check("4 projective codewords, all of rank weight 2", len(reps) == 4 and set(weights) == {2}, weights)
    d = min_rank_distance(C)
    rep.check("minimum rank distance 2", d == 2, d)
    rep.outputs = {"alpha": list(alpha), "lambda": lam, "code": code_to_json(C), "d": d}
    return rep


def demo_binary_obstruction() -> CommandReport:
    """K(1, w) over F4 keeps hull dimension 1 under all of GL_2(F_2)."""
    T = f4()
    w = T.omega
    rep = CommandReport("demo", {"case": "remark-3.8", "field": T.config()})
    v = [1, w]
    rep.check("<v,v>_H = 0", inner(v, v, T) == 0)
    C = RankCode.from_rows(T, [v])
    rep.check("H(C) = C", hull(C).h == 1)
    spec = hull_spectrum(C, Flavor.HERMITIAN, literal=True)
    rep.check("histogram {1: 6}", spec.histogram == {1: 6}, spec.histogram)
    # (a + c w)^3 + (b + d w)^3 = 1 + 1 for each invertible [[a, b], [c, d]]
    cubes = all(T.pow(x, 3) == 1 for x in T.nonzero())
    rep.check("x^3 = 1 on F4*", cubes)
    rep.outputs = {"histogram": [[h, c] for h, c in spec.histogram.items()], "attained": spec.attained}
    return rep


CASES = {
    "5.1": demo_all_ones_hull,
    "5.2": demo_rank_one_descent,
    "5.3": demo_scaled_basis,
    "remark-3.8": demo_binary_obstruction,
}
