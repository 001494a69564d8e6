"""Gabidulin codes, scaled trace-self-dual bases and Hermitian self-orthogonal MRD codes."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Sequence

from .codes import RankCode
from .errors import (
    Degenerate,
    InvalidK,
    InvalidStep,
    NotABasis,
    NotOrthonormalizable,
    NotSymmetric,
    ZeroLambda,
)
from .gf import FieldTower, FiniteField
from .linalg import Matrix, det, is_basis, right_kernel, vec_matmul


@dataclass(frozen=True)
class GabidulinSpec:
    tower: FieldTower
    alpha: tuple[int, ...]
    k: int
    s: int = 1

    def validate(self) -> None:
        n = self.tower.degree
        if gcd(self.s, n) != 1:
            raise InvalidStep(f"gcd({self.s}, {n}) != 1")
        if not 1 <= self.k <= n:
            raise InvalidK(f"k = {self.k} outside 1..{n}")
        if not is_basis(self.alpha, self.tower):
            raise NotABasis("alpha is not an F_q-basis of K")


@dataclass(frozen=True)
class ScaledSelfDualBasis:
    """(alpha, lam) with Tr(lam * alpha_i * alpha_j) = delta_ij."""

    tower: FieldTower
    alpha: tuple[int, ...]
    lam: int


@dataclass(frozen=True)
class PowerSums:
    values: tuple[int, ...]


def power_basis(tower: FieldTower) -> tuple[int, ...]:
    return tuple(tower.q**i for i in range(tower.degree))


def moore_matrix(spec: GabidulinSpec) -> Matrix:
    """Row i is alpha^(q^(s i))."""
    spec.validate()
    T = spec.tower
    rows = tuple(tuple(T.frobenius_power(a, spec.s * i) for a in spec.alpha) for i in range(spec.k))
    return Matrix(T, rows, T.degree)


def gabidulin_code(spec: GabidulinSpec) -> RankCode:
    return RankCode(moore_matrix(spec), spec.tower)


def power_sums(alpha: Sequence[int], tower: FieldTower) -> PowerSums:
    """S_r = sum_i alpha_i * alpha_i^(q^r) for r = 0..2m-1."""
    if not is_basis(alpha, tower):
        raise NotABasis("alpha is not an F_q-basis of K")
    vals = []
    for r in range(tower.degree):
        vals.append(tower.K.sum(tower.mul(a, tower.frobenius_power(a, r)) for a in alpha))
    return PowerSums(tuple(vals))


def gram_of_scaled_form(beta: Sequence[int], lam: int, tower: FieldTower) -> Matrix:
    """(Tr(lam beta_i beta_j))_ij over F_q."""
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    if not is_basis(beta, tower):
        raise NotABasis("beta is not an F_q-basis of K")
    rows = tuple(
        tuple(tower.trace(tower.mul(lam, tower.mul(bi, bj))) for bj in beta) for bi in beta
    )
    return Matrix(tower.Fq, rows, len(beta))


def find_scale_lambda(beta: Sequence[int], tower: FieldTower) -> int:
    """lam with N(lam) = det(Gram of the trace form on beta)^-1; lam = 1 when q is even."""
    if tower.p == 2:
        return 1
    Fq = tower.Fq
    target = Fq.inv(det(gram_of_scaled_form(beta, 1, tower)))
    g = tower.K.generator
    ng = tower.norm(g)
    x = 1
    for j in range(tower.q - 1):
        if x == target:
            return tower.pow(g, j)
        x = Fq.mul(x, ng)
    raise AssertionError("norm of a generator does not generate F_q*")  # unreachable


def _bilinear(S: Matrix, F: FiniteField):
    def B(x, y):
        return F.dot(vec_matmul(F, x, S), y)

    return B


def _complement(W: list[list[int]], U: list[list[int]], B, F: FiniteField) -> list[list[int]]:
    """Vectors of span(W) that are B-orthogonal to every u in U."""
    n = len(W[0])
    # a W is orthogonal to U  <=>  X a^T = 0 with X[t][i] = B(U_t, W_i)
    X = Matrix(F, tuple(tuple(B(u, w) for w in W) for u in U), len(W))
    return [vec_matmul(F, a, Matrix(F, tuple(map(tuple, W)), n)) for a in right_kernel(X)]


def _combo(F: FiniteField, W: list[list[int]], coeffs) -> list[int]:
    return vec_matmul(F, coeffs, Matrix(F, tuple(map(tuple, W)), len(W[0])))


def _candidates(W: list[list[int]], F: FiniteField, rng: random.Random):
    r = len(W)
    yield from W
    for i in range(r):
        for j in range(i + 1, r):
            for c in range(1, F.order):
                yield [F.add(a, F.mul(c, b)) for a, b in zip(W[i], W[j])]
    for _ in range(64 * r):
        yield _combo(F, W, [rng.randrange(F.order) for _ in range(r)])
    for coeffs in product(range(F.order), repeat=r):
        yield _combo(F, W, coeffs)


def orthonormalize_form(S: Matrix, seed: int = 0) -> Matrix:
    """A over F_q with A S A^T = I for a symmetric nondegenerate S.

    Odd q needs det(S) to be a square; in characteristic 2, S must not be
    alternating.  Rows are extracted greedily; in characteristic 2 an
    alternating residual is absorbed into the last unit vector g via the
    triple g+e, g+f, g+e+f for a hyperbolic pair (e, f).
    """
    F = S.field
    n = S.nrows
    if S.rows != S.T.rows:
        raise NotSymmetric("form matrix is not symmetric")
    if det(S) == 0:
        raise Degenerate("form is degenerate")
    B = _bilinear(S, F)
    rng = random.Random(seed)
    residual = [[int(i == j) for j in range(n)] for i in range(n)]
    out: list[list[int]] = []
    while residual:
        v = None
        # in characteristic 2 the diagonal is additive, so the basis vectors decide
        alternating = F.p == 2 and all(B(w, w) == 0 for w in residual)
        if not alternating:
            for cand in _candidates(residual, F, rng):
                c = B(cand, cand)
                if c and F.sqrt(c) is not None:
                    v, norm = cand, c
                    break
        if v is None:
            if F.p != 2:
                raise NotOrthonormalizable("residual form represents no nonzero square")
            if not out:
                raise NotOrthonormalizable("form is alternating")
            e = residual[0]
            f = next(w for w in residual if B(e, w))
            f = [F.mul(F.inv(B(e, f)), x) for x in f]
            g = out.pop()
            ge = [F.add(a, b) for a, b in zip(g, e)]
            gf_ = [F.add(a, b) for a, b in zip(g, f)]
            gef = [F.add(a, b) for a, b in zip(ge, f)]
            out += [ge, gf_, gef]
            residual = _complement(residual, [e, f], B, F)
            continue
        scale = F.inv(F.sqrt(norm))
        v = [F.mul(scale, x) for x in v]
        if F.p != 2:
            lead = next(x for x in v if x)
            if F.neg(lead) < lead:
                v = [F.neg(x) for x in v]
        out.append(v)
        residual = _complement(residual, [v], B, F)
    return Matrix(F, tuple(map(tuple, out)), n)


def scaled_self_dual_basis(tower: FieldTower, seed: int = 0) -> ScaledSelfDualBasis:
    """Orthonormalize the scaled trace form on the power basis."""
    beta = power_basis(tower)
    lam = find_scale_lambda(beta, tower)
    A = orthonormalize_form(gram_of_scaled_form(beta, lam, tower), seed)
    # beta is the power basis, so row i of A is the coordinate vector of alpha_i
    alpha = tuple(tower.from_coeffs(row) for row in A.rows)
    return ScaledSelfDualBasis(tower, alpha, lam)


def verify_scaled_basis(b: ScaledSelfDualBasis) -> bool:
    T = b.tower
    if b.lam == 0 or len(b.alpha) != T.degree:
        return False
    for i, ai in enumerate(b.alpha):
        for j, aj in enumerate(b.alpha):
            if T.trace(T.mul(b.lam, T.mul(ai, aj))) != int(i == j):
                return False
    return True


def hermitian_so_gabidulin(tower: FieldTower, k: int, s: int = 1, seed: int = 0) -> RankCode:
    """G_{k,s}(alpha) for a scaled trace-self-dual alpha; Hermitian self-orthogonal for k <= m."""
    if not 1 <= k <= tower.m:
        raise InvalidK(f"k = {k} outside 1..m = {tower.m}")
    if gcd(s, tower.degree) != 1:
        raise InvalidStep(f"gcd({s}, {tower.degree}) != 1")
    basis = scaled_self_dual_basis(tower, seed)
    return gabidulin_code(GabidulinSpec(tower, basis.alpha, k, s))
