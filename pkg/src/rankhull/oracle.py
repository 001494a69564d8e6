"""Brute-force ground truth: hull spectra over all of GL_n(F_q), the (q, n) = (2, 2)
obstruction, and the search for Euclidean self-orthogonal MRD codes."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .codes import (
    DEFAULT_CAP,
    Flavor,
    RankCode,
    adjoint,
    apply_equivalence,
    gram,
    hull,
    min_rank_distance,
)
from .errors import GroupTooLarge, OddCharacteristic, TooLargeToEnumerate, WrongParameters
from .gf import FieldTower, FiniteField
from .linalg import Matrix, rank

#: default cap on |GL_n(F_q)| for exhaustive sweeps
GROUP_CAP = 10**6


@dataclass(frozen=True)
class SpectrumReport:
    code: RankCode
    flavor: Flavor
    group_size: int
    histogram: dict[int, int]

    @property
    def attained(self) -> list[int]:
        return sorted(h for h, c in self.histogram.items() if c)


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def enumerate_gl(n: int, F: FiniteField) -> Iterator[Matrix]:
    """All of GL_n(F), each new row chosen outside the span of the previous ones."""
    vectors = list(product(range(F.order), repeat=n))
    scalars = range(F.order)

    def extend(rows: list[tuple[int, ...]], span: set[tuple[int, ...]]):
        if len(rows) == n:
            yield Matrix(F, tuple(rows), n)
            return
        for v in vectors:
            if v in span:
                continue
            grown = {
                tuple(F.add(a, F.mul(c, b)) for a, b in zip(s, v)) for s in span for c in scalars
            }
            rows.append(v)
            yield from extend(rows, grown)
            rows.pop()

    yield from extend([], {(0,) * n})


def hull_spectrum(
    C: RankCode, flavor: Flavor = Flavor.HERMITIAN, cap: int = GROUP_CAP, literal: bool = False
) -> SpectrumReport:
    """Histogram of hull dimensions of C M over every M in GL_n(F_q).

    The Gram matrix of C M is G (M M^T) G^adj because M has entries in F_q,
    so matrices are grouped by M M^T; ``literal=True`` recomputes every hull.
    """
    T = C.tower
    size = gl_order(C.n, T.q)
    if size > cap:
        raise GroupTooLarge(size, cap)
    hist: Counter[int] = Counter()
    if literal:
        for M in enumerate_gl(C.n, T.Fq):
            hist[hull(apply_equivalence(C, M), flavor).h] += 1
    else:
        by_form: Counter[tuple] = Counter()
        for M in enumerate_gl(C.n, T.Fq):
            by_form[(M @ M.T).rows] += 1
        Gadj = adjoint(C.G, T, flavor)
        for S, count in by_form.items():
            B = C.G @ Matrix(T, S, C.n) @ Gadj
            hist[C.k - rank(B)] += count
    return SpectrumReport(C, flavor, size, dict(sorted(hist.items())))


def check_22_obstruction(tower: FieldTower, v: Sequence[int] | None = None) -> bool:
    """True iff K v (default v = (1, w)) keeps Hermitian hull dimension 1 under all of GL_2(F_2)."""
    if tower.q != 2:
        raise WrongParameters(f"obstruction check needs q = 2, got q = {tower.q}")
    v = list(v) if v is not None else [1, tower.omega]
    if len(v) != 2:
        raise WrongParameters("obstruction check needs n = 2")
    C = RankCode(Matrix(tower, (tuple(v),), 2), tower)
    if hull(C, Flavor.HERMITIAN).h == 0:
        raise WrongParameters("code has trivial Hermitian hull")
    return hull_spectrum(C, Flavor.HERMITIAN).histogram == {1: gl_order(2, 2)}


def gaussian_binomial(n: int, k: int, Q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= Q ** (n - i) - 1
        den *= Q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(tower: FieldTower, n: int, k: int) -> Iterator[Matrix]:
    """Every k-dimensional subspace of K^n once, as its RREF generator matrix."""
    Q = tower.order
    for pivots in combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pivots]
        for vals in product(range(Q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, vals):
                rows[i][j] = x
            yield Matrix(tower, tuple(map(tuple, rows)), n)


def euclidean_so_mrd_search(
    tower: FieldTower, n: int, k: int, allow_odd: bool = False, cap: int = DEFAULT_CAP
) -> list[RankCode]:
    """Euclidean self-orthogonal MRD codes in K^n of dimension k (expected: none for q even).

    Uses the Euclidean convention where K itself is the extension of F_q, of
    degree d = 2m here, and requires 1 <= n <= d.
    """
    if tower.p != 2 and not allow_odd:
        raise OddCharacteristic("the nonexistence statement is for even q; pass allow_odd to explore")
    if not 1 <= n <= tower.degree:
        raise ValueError(f"need 1 <= n <= {tower.degree}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    total = gaussian_binomial(n, k, tower.order)
    if total > cap:
        raise TooLargeToEnumerate(total, cap)
    found = []
    for G in enumerate_subspaces(tower, n, k):
        C = RankCode(G, tower)
        if not gram(C, Flavor.EUCLIDEAN).is_zero():
            continue
        if min_rank_distance(C, cap) == n - k + 1:
            found.append(C)
    return found
