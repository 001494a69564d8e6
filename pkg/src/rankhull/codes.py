"""Vector rank-metric codes: duals, hulls, rank weights and equivalence."""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Sequence

from .errors import NotInvertible, NotOverSubfield, TooLargeToEnumerate
from .gf import FieldTower
from .linalg import (
    Matrix,
    dagger,
    det,
    intersect_rowspaces,
    rank,
    right_kernel,
    row_basis,
    rowspace_equal,
    solve_left,
    subfield_expansion,
    vec_matmul,
)

#: default cap on the number of projective codeword classes enumerated
DEFAULT_CAP = 1 << 20


class Flavor(str, Enum):
    HERMITIAN = "hermitian"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class RankCode:
    """K-linear code given by a full-row-rank generator matrix over K."""

    G: Matrix
    tower: FieldTower

    def __post_init__(self):
        if self.G.nrows < 1 or self.G.ncols < 1:
            raise ValueError("a code needs n >= 1 and k >= 1")
        if self.G.nrows > self.G.ncols:
            raise ValueError("k cannot exceed n")
        if rank(self.G) != self.G.nrows:
            raise ValueError("generator matrix does not have full row rank")

    @classmethod
    def from_rows(cls, tower: FieldTower, rows: Sequence[Sequence]) -> "RankCode":
        return cls(Matrix.from_rows(tower, [[tower.parse(x) for x in r] for r in rows]), tower)

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    def same_code(self, other: "RankCode") -> bool:
        return self.n == other.n and rowspace_equal(self.G, other.G)

    def contains(self, v: Sequence[int]) -> bool:
        return solve_left(self.G, v) is not None

    def canonical(self) -> Matrix:
        return row_basis(self.G)


@dataclass(frozen=True)
class ZeroCode:
    """The zero subspace of K^n, e.g. the dual of the full space."""

    tower: FieldTower
    n: int
    k: int = 0

    def contains(self, v: Sequence[int]) -> bool:
        return not any(v)


@dataclass(frozen=True)
class HullReport:
    h: int
    hull_basis: list[list[int]]
    kernel_basis: list[list[int]]
    flavor: Flavor


def inner(x: Sequence[int], y: Sequence[int], tower: FieldTower, flavor: Flavor = Flavor.HERMITIAN) -> int:
    if flavor is Flavor.HERMITIAN:
        return tower.dot(x, [tower.sigma(b) for b in y])
    return tower.dot(x, y)


def adjoint(A: Matrix, tower: FieldTower, flavor: Flavor) -> Matrix:
    return dagger(A, tower) if flavor is Flavor.HERMITIAN else A.T


def gram(C: RankCode, flavor: Flavor = Flavor.HERMITIAN) -> Matrix:
    """G G^dagger (Hermitian) or G G^T (Euclidean)."""
    return C.G @ adjoint(C.G, C.tower, flavor)


def hermitian_gram(C: RankCode) -> Matrix:
    return gram(C, Flavor.HERMITIAN)


def _kernel_to_hull(z: Sequence[int], C: RankCode, flavor: Flavor) -> list[int]:
    if flavor is Flavor.HERMITIAN:
        z = [C.tower.sigma(x) for x in z]
    return vec_matmul(C.tower, z, C.G)


def hull(C: RankCode, flavor: Flavor = Flavor.HERMITIAN) -> HullReport:
    """Hull via the kernel of the Gram matrix: z -> z^dagger G (or z^T G) is a bijection onto H(C)."""
    Z = right_kernel(gram(C, flavor))
    return HullReport(len(Z), [_kernel_to_hull(z, C, flavor) for z in Z], Z, flavor)


def hull_dim(C: RankCode, flavor: Flavor = Flavor.HERMITIAN) -> int:
    return C.k - rank(gram(C, flavor))


def dual(C: RankCode, flavor: Flavor = Flavor.HERMITIAN) -> RankCode | ZeroCode:
    T = C.tower
    if C.k == C.n:
        return ZeroCode(T, C.n)
    G = C.G
    if flavor is Flavor.HERMITIAN:
        # <x, c>_H = sum x_i sigma(c_i), so x spans the right kernel of sigma(G)
        G = Matrix(T, tuple(tuple(T.sigma(x) for x in r) for r in G.rows), G.ncols)
    rows = right_kernel(G)
    return RankCode(Matrix(T, tuple(tuple(r) for r in rows), C.n), T)


def hull_oracle(C: RankCode, flavor: Flavor = Flavor.HERMITIAN) -> HullReport:
    """C intersected with its dual, computed literally."""
    T = C.tower
    D = dual(C, flavor)
    if isinstance(D, ZeroCode):
        return HullReport(0, [], [], flavor)
    inter = intersect_rowspaces(C.G, D.G)
    hull_basis = [list(r) for r in inter.rows]
    kernel_basis = []
    for v in hull_basis:
        c = solve_left(C.G, v)
        kernel_basis.append([T.sigma(x) for x in c] if flavor is Flavor.HERMITIAN else c)
    return HullReport(len(hull_basis), hull_basis, kernel_basis, flavor)


def rank_weight(v: Sequence[int], tower: FieldTower, beta: Sequence[int] | None = None) -> int:
    """F_q-dimension of the span of the coordinates of v."""
    if not any(v):
        return 0
    return rank(subfield_expansion(v, beta, tower))


def rank_distance(u: Sequence[int], v: Sequence[int], tower: FieldTower) -> int:
    return rank_weight([tower.sub(a, b) for a, b in zip(u, v)], tower)


def projective_count(Q: int, k: int) -> int:
    return (Q**k - 1) // (Q - 1)


def projective_vectors(Q: int, k: int) -> Iterator[tuple[int, ...]]:
    """Vectors in F_Q^k whose first nonzero entry is 1."""
    for lead in range(k):
        for tail in product(range(Q), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def codeword_classes(C: RankCode) -> Iterator[list[int]]:
    """One codeword per nonzero scalar class."""
    for c in projective_vectors(C.tower.order, C.k):
        yield vec_matmul(C.tower, c, C.G)


def min_rank_distance(C: RankCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum rank weight over nonzero codewords, by exhaustive enumeration of scalar classes."""
    need = projective_count(C.tower.order, C.k)
    if need > cap:
        raise TooLargeToEnumerate(need, cap)
    best = None
    for w in codeword_classes(C):
        d = rank_weight(w, C.tower)
        if best is None or d < best:
            best = d
            if best == 1:
                break
    return best


def is_mrd(C: RankCode, cap: int = DEFAULT_CAP) -> bool:
    if C.n > C.tower.degree:
        raise ValueError(f"MRD bound needs n <= 2m = {C.tower.degree}")
    return min_rank_distance(C, cap) == C.n - C.k + 1


def check_equivalence_matrix(M: Matrix, tower: FieldTower, n: int) -> Matrix:
    """Validate M in GL_n(F_q) and return it viewed over F_q."""
    if M.shape != (n, n):
        raise NotInvertible(f"expected {n}x{n}, got {M.shape}")
    if any(x >= tower.q for r in M.rows for x in r):
        raise NotOverSubfield("equivalence matrix has entries outside F_q")
    Mq = Matrix(tower.Fq, M.rows, n)
    if det(Mq) == 0:
        raise NotInvertible("equivalence matrix is singular")
    return Mq


def apply_equivalence(C: RankCode, M: Matrix) -> RankCode:
    """The code generated by G M for M in GL_n(F_q)."""
    Mq = check_equivalence_matrix(M, C.tower, C.n)
    return RankCode(C.G @ Mq.over(C.tower), C.tower)


def random_code(
    tower: FieldTower,
    n: int,
    k: int,
    seed: int,
    min_hull: int = 0,
    flavor: Flavor = Flavor.HERMITIAN,
    max_tries: int = 100_000,
) -> RankCode:
    """Random [n, k] code whose hull has dimension at least ``min_hull``.

    A self-orthogonal subspace of dimension ``min_hull`` is grown one isotropic
    vector at a time inside the current dual, then padded with random rows of
    its dual.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if min_hull > min(k, n - k):
        raise ValueError(f"hull dimension {min_hull} impossible for [{n}, {k}]")
    rng = random.Random(seed)
    Q = tower.order
    rows: list[list[int]] = []
    tries = 0
    while len(rows) < min_hull:
        tries += 1
        if tries > max_tries:
            raise RuntimeError("could not find an isotropic vector")
        if rows:
            D = dual(RankCode(Matrix(tower, tuple(map(tuple, rows)), n), tower), flavor)
            x = vec_matmul(tower, [rng.randrange(Q) for _ in range(D.k)], D.G)
        else:
            x = [rng.randrange(Q) for _ in range(n)]
        if not any(x) or inner(x, x, tower, flavor) != 0:
            continue
        cand = Matrix(tower, tuple(map(tuple, rows + [x])), n)
        if rank(cand) == len(rows) + 1:
            rows.append(x)
    # padding comes from the dual of the isotropic span, which then stays in the hull
    pad = dual(RankCode(Matrix(tower, tuple(map(tuple, rows)), n), tower), flavor) if rows else None
    while len(rows) < k:
        if pad is None:
            x = [rng.randrange(Q) for _ in range(n)]
        else:
            x = vec_matmul(tower, [rng.randrange(Q) for _ in range(pad.k)], pad.G)
        cand = Matrix(tower, tuple(map(tuple, rows + [x])), n)
        if rank(cand) == len(rows) + 1:
            rows.append(x)
    while True:
        S = Matrix(tower, tuple(tuple(rng.randrange(Q) for _ in range(k)) for _ in range(k)), k)
        if det(S):
            break
    return RankCode(S @ Matrix(tower, tuple(map(tuple, rows)), n), tower)
