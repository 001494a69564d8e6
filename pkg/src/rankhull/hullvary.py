"""Hull variation: lowering the hull dimension of a code one step at a time by
equivalences M in GL_n(F_q), and MRD codes with a prescribed Hermitian hull."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .codes import Flavor, RankCode, apply_equivalence, gram, hull, inner
from .construct import hermitian_so_gabidulin
from .errors import (
    AllOnesHullBinary,
    AlreadyLCD,
    ExcludedParameters,
    InvalidEll,
    InvalidK,
    InvalidStep,
    Obstructed22,
    TargetAboveHull,
    UnsupportedShape,
)
from .gf import FieldTower
from .linalg import Matrix, rank, solve_left


@dataclass(frozen=True)
class DescentWitness:
    """u in F_q^n and M in GL_n(F_q) with M M^T = I + lam u^T u."""

    u: tuple[int, ...]
    M: Matrix
    lam: int


@dataclass
class VariationTrace:
    flavor: Flavor
    initial_h: int
    final_h: int
    steps: list[tuple[Matrix, int]] = field(default_factory=list)

    def product(self, tower: FieldTower, n: int) -> Matrix:
        P = Matrix.identity(tower.Fq, n)
        for M, _ in self.steps:
            P = P @ M
        return P


def _is_all_ones_multiple(w: Sequence[int]) -> bool:
    return len(set(w)) == 1


# L L^T = I_3 + (0,1,1)^T (0,1,1) over F_2
_L_BLOCK = ((1, 1, 1), (0, 1, 1), (1, 0, 1))


def descent_witness(w: Sequence[int], tower: FieldTower, seed: int = 0) -> DescentWitness:
    """u, M with w u^T != 0 and M M^T = I + lam u^T u; smallest valid indices throughout."""
    n = len(w)
    q = tower.q
    Fq = tower.Fq
    supp = [i for i, x in enumerate(w) if x]
    if not supp:
        raise ValueError("w must be nonzero")
    i = supp[0]
    if q >= 4:
        mu = next(x for x in range(2, q) if Fq.mul(x, x) != 1)
        rows = [[int(a == b) for b in range(n)] for a in range(n)]
        rows[i][i] = mu
        u = tuple(int(t == i) for t in range(n))
        return DescentWitness(u, Matrix(Fq, tuple(map(tuple, rows)), n), Fq.sub(Fq.mul(mu, mu), 1))
    if n < 3:
        raise UnsupportedShape(f"(q, n) = ({q}, {n}) needs a dedicated construction")
    if q == 3:
        j, l = [t for t in range(n) if t != i][:2]
        for lead in (1, 2):
            u = [0] * n
            u[i], u[j], u[l] = lead, 1, 1
            if tower.dot(w, u):
                break
        # M = I + 2 u^T u
        rows = tuple(
            tuple(Fq.add(int(a == b), Fq.mul(2, Fq.mul(u[a], u[b]))) for b in range(n)) for a in range(n)
        )
        return DescentWitness(tuple(u), Matrix(Fq, rows, n), 1)
    # q == 2
    if _is_all_ones_multiple(w):
        raise AllOnesHullBinary("w lies in K 1_n; use the all-ones construction")
    j = next(t for t in range(n) if t != i and w[t] != w[i])
    l = next(t for t in range(n) if t not in (i, j))
    u = tuple(int(t in (i, j)) for t in range(n))
    # M = P diag(L, I) P^T with P sending block positions (0, 1, 2) to (l, i, j)
    pos = (l, i, j)
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    for a in range(3):
        for b in range(3):
            rows[pos[a]][pos[b]] = _L_BLOCK[a][b]
    return DescentWitness(u, Matrix(Fq, tuple(map(tuple, rows)), n), 1)


def _all_ones_step(C: RankCode) -> tuple[RankCode, Matrix]:
    """Hull equal to K 1_n over q = 2: make 1_n the first row, clear column 0, apply [[1, 1], [0, I]]."""
    T = C.tower
    n = C.n
    ones = [1] * n
    c = solve_left(C.G, ones)
    r = next(i for i, x in enumerate(c) if x)
    others = [list(row) for i, row in enumerate(C.G.rows) if i != r]
    others = [[T.sub(x, row[0]) for x in row] for row in others]
    G1 = Matrix(T, tuple(map(tuple, [ones] + others)), n)
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[0] = [1] * n
    M = Matrix(T.Fq, tuple(map(tuple, rows)), n)
    return RankCode(G1 @ M.over(T), T), M


def _n2_step(C: RankCode, flavor: Flavor) -> tuple[RankCode, Matrix]:
    """n = 2, k = 1: first t in F_q (canonical order) with <v M_t, v M_t> != 0, M_t = [[1, 0], [t, 1]]."""
    T = C.tower
    x, y = C.G.rows[0]
    for t in range(T.q):
        v = [T.add(x, T.mul(t, y)), y]
        if inner(v, v, T, flavor):
            M = Matrix(T.Fq, ((1, 0), (t, 1)), 2)
            return RankCode(Matrix(T, (tuple(v),), 2), T), M
    raise AssertionError("no t with nonzero norm")  # unreachable for a hull-1 line


def reduce_hull_once(
    C: RankCode, flavor: Flavor = Flavor.HERMITIAN, seed: int = 0
) -> tuple[RankCode, Matrix]:
    """An equivalent code C M whose hull dimension is one less."""
    T = C.tower
    q, n = T.q, C.n
    rep = hull(C, flavor)
    h = rep.h
    if h == 0:
        raise AlreadyLCD("hull is already trivial")
    if flavor is Flavor.HERMITIAN and (q, n) == (2, 2):
        raise Obstructed22()
    if n == 2 and q in (2, 3):
        # h >= 1 with n = 2 forces k = h = 1
        out = _n2_step(C, flavor)
    else:
        w = rep.hull_basis[0]
        if q == 2:
            w = next((v for v in rep.hull_basis if not _is_all_ones_multiple(v)), None)
        if w is None:
            out = _all_ones_step(C)
        else:
            wit = descent_witness(w, T, seed)
            out = (apply_equivalence(C, wit.M), wit.M)
    C2 = out[0]
    got = C2.k - rank(gram(C2, flavor))
    if got != h - 1:
        raise AssertionError(f"hull went {h} -> {got}")
    return out


def vary_hull(
    C: RankCode, target: int, flavor: Flavor = Flavor.HERMITIAN, seed: int = 0
) -> tuple[RankCode, VariationTrace]:
    """Equivalent code with hull dimension exactly ``target``."""
    h = hull(C, flavor).h
    if target > h:
        raise TargetAboveHull(f"target {target} exceeds hull dimension {h}")
    if target < 0:
        raise ValueError("target must be nonnegative")
    trace = VariationTrace(flavor, h, h)
    cur = C
    while trace.final_h > target:
        cur, M = reduce_hull_once(cur, flavor, seed)
        trace.final_h -= 1
        trace.steps.append((M, trace.final_h))
    return cur, trace


def to_lcd(C: RankCode, flavor: Flavor = Flavor.HERMITIAN, seed: int = 0) -> RankCode:
    return vary_hull(C, 0, flavor, seed)[0]


def mrd_with_hull(tower: FieldTower, k: int, ell: int, s: int = 1, seed: int = 0) -> RankCode:
    """[2m, k, 2m-k+1] MRD code with Hermitian hull dimension ell."""
    if (tower.q, tower.m) == (2, 1):
        raise ExcludedParameters("(q, m) = (2, 1) is excluded")
    if not 1 <= k <= tower.m:
        raise InvalidK(f"k = {k} outside 1..{tower.m}")
    if not 0 <= ell <= k:
        raise InvalidEll(f"ell = {ell} outside 0..{k}")
    if gcd(s, tower.degree) != 1:
        raise InvalidStep(f"gcd({s}, {tower.degree}) != 1")
    C = hermitian_so_gabidulin(tower, k, s, seed)
    return vary_hull(C, ell, Flavor.HERMITIAN, seed)[0]
