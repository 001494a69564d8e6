"""Exact linear algebra over K and over F_q.

A :class:`Matrix` carries its field (a :class:`~rankhull.gf.FieldTower` for
matrices over K, a :class:`~rankhull.gf.FiniteField` for matrices over F_q)
and rows of canonical integers.  Since F_q is embedded in K as 0..q-1, an
F_q-matrix can be multiplied against a K-matrix directly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DimensionMismatch, NotABasis, NotInvertible
from .gf import FieldTower


@dataclass(frozen=True)
class Matrix:
    field: Any
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        if any(not 0 <= x < field.order for r in rows for x in r):
            raise ValueError("entry outside the field")
        return cls(field, rows, ncols)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field, r: int, c: int) -> "Matrix":
        return cls(field, tuple((0,) * c for _ in range(r)), c)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)), self.nrows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def over(self, field) -> "Matrix":
        """Same entries viewed over another field (F_q-matrix as a K-matrix, or back)."""
        return Matrix.from_rows(field, self.rows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        F = self.field if self.field.order >= other.field.order else other.field
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        rows = tuple(tuple(F.dot(r, c) for c in cols) for r in self.rows)
        return Matrix(F, rows, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        F = self.field if self.field.order >= other.field.order else other.field
        return Matrix(F, tuple(tuple(F.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c: int) -> "Matrix":
        F = self.field
        return Matrix(F, tuple(tuple(F.mul(c, a) for a in r) for r in self.rows), self.ncols)


def vec_matmul(field, v: Sequence[int], A: Matrix) -> list[int]:
    out = [0] * A.ncols
    for c, r in zip(v, A.rows):
        if c:
            for j, x in enumerate(r):
                if x:
                    out[j] = field.add(out[j], field.mul(c, x))
    return out


def rref(A: Matrix) -> tuple[Matrix, int, list[int]]:
    """Gauss-Jordan with first-nonzero pivoting; pivot rows scaled to 1."""
    F = A.field
    R = [list(r) for r in A.rows]
    nr, nc = len(R), A.ncols
    pivots: list[int] = []
    row = 0
    for col in range(nc):
        if row == nr:
            break
        piv = next((i for i in range(row, nr) if R[i][col]), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        inv = F.inv(R[row][col])
        if inv != 1:
            R[row] = [F.mul(inv, x) for x in R[row]]
        prow = R[row]
        for i in range(nr):
            c = R[i][col]
            if i != row and c:
                ri = R[i]
                for j in range(col, nc):
                    if prow[j]:
                        ri[j] = F.sub(ri[j], F.mul(c, prow[j]))
        pivots.append(col)
        row += 1
    return Matrix(F, tuple(tuple(r) for r in R), nc), len(pivots), pivots


def rank(A: Matrix) -> int:
    return rref(A)[1]


def row_basis(A: Matrix) -> Matrix:
    """Nonzero rows of rref(A): the canonical basis of the row space."""
    R, r, _ = rref(A)
    return Matrix(A.field, R.rows[:r], A.ncols)


def right_kernel(A: Matrix) -> list[list[int]]:
    """Basis of {z : A z = 0}, one free column per vector, as plain lists."""
    F = A.field
    R, r, pivots = rref(A)
    free = [j for j in range(A.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        z = [0] * A.ncols
        z[f] = 1
        for i, pc in enumerate(pivots):
            z[pc] = F.neg(R.rows[i][f])
        basis.append(z)
    return basis


def dagger(A: Matrix, tower: FieldTower | None = None) -> Matrix:
    """Conjugate transpose, entries mapped by x -> x^(q^m)."""
    tower = tower or A.field
    sig = tower.sigma
    cols = zip(*A.rows) if A.rows else [()] * A.ncols
    return Matrix(tower, tuple(tuple(sig(x) for x in c) for c in cols), A.nrows)


def det(A: Matrix) -> int:
    if A.nrows != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    F = A.field
    R = [list(r) for r in A.rows]
    n = len(R)
    d = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if R[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            R[col], R[piv] = R[piv], R[col]
            d = F.neg(d)
        d = F.mul(d, R[col][col])
        inv = F.inv(R[col][col])
        for i in range(col + 1, n):
            c = F.mul(R[i][col], inv)
            if c:
                R[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(R[i], R[col])]
    return d


def inverse(A: Matrix) -> Matrix:
    n = A.nrows
    if n != A.ncols:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = Matrix(A.field, tuple(r + tuple(int(i == j) for j in range(n)) for i, r in enumerate(A.rows)), 2 * n)
    R, _, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return Matrix(A.field, tuple(r[n:] for r in R.rows), n)


def solve_left(A: Matrix, v: Sequence[int]) -> list[int] | None:
    """Some c with c A = v, or None if v is not in the row space."""
    F = A.field
    if A.nrows == 0:
        return [] if not any(v) else None
    # c A = v  <=>  A^T c^T = v^T
    aug = Matrix(F, tuple(tuple(col) + (x,) for col, x in zip(zip(*A.rows), v)), A.nrows + 1)
    R, r, pivots = rref(aug)
    if pivots and pivots[-1] == A.nrows:
        return None
    c = [0] * A.nrows
    for i, pc in enumerate(pivots):
        c[pc] = R.rows[i][-1]
    return c


def in_rowspace(A: Matrix, v: Sequence[int]) -> bool:
    return solve_left(A, v) is not None


def rowspace_equal(A: Matrix, B: Matrix) -> bool:
    return row_basis(A).rows == row_basis(B).rows


def expansion_matrix(beta: Sequence[int], tower: FieldTower) -> Matrix:
    """Rows are power-basis coordinates of the beta_i, over F_q."""
    return Matrix(tower.Fq, tuple(tuple(tower.coeffs(b)) for b in beta), tower.degree)


def subfield_expansion(v: Sequence[int], beta: Sequence[int] | None, tower: FieldTower) -> Matrix:
    """2m x n matrix over F_q whose column j is the beta-coordinate vector of v_j."""
    n = tower.degree
    if beta is None:
        cols = [tower.coeffs(x) for x in v]
    else:
        if len(beta) != n:
            raise NotABasis(f"expected {n} basis elements, got {len(beta)}")
        E = expansion_matrix(beta, tower)
        try:
            Einv = inverse(E)
        except NotInvertible:
            raise NotABasis("beta is not an F_q-basis of K") from None
        cols = [vec_matmul(tower.Fq, tower.coeffs(x), Einv) for x in v]
    return Matrix(tower.Fq, tuple(tuple(c[i] for c in cols) for i in range(n)), len(v))


def is_basis(beta: Sequence[int], tower: FieldTower) -> bool:
    return len(beta) == tower.degree and rank(expansion_matrix(beta, tower)) == tower.degree


def intersect_rowspaces(A: Matrix, B: Matrix) -> Matrix:
    """Basis (rref rows) of rowspace(A) & rowspace(B), from the kernel of [A^T | -B^T]."""
    if A.ncols != B.ncols:
        raise DimensionMismatch(f"{A.ncols} vs {B.ncols} columns")
    F = A.field if A.field.order >= B.field.order else B.field
    A = row_basis(A.over(F))
    B = row_basis(B.over(F))
    a = A.nrows
    if a == 0 or B.nrows == 0:
        return Matrix(F, (), A.ncols)
    stacked = Matrix(
        F,
        tuple(tuple(ar) + tuple(F.neg(x) for x in br) for ar, br in zip(zip(*A.rows), zip(*B.rows))),
        a + B.nrows,
    )
    vecs = [vec_matmul(F, z[:a], A) for z in right_kernel(stacked)]
    if not vecs:
        return Matrix(F, (), A.ncols)
    return row_basis(Matrix(F, tuple(tuple(v) for v in vecs), A.ncols))


def random_matrix(field, r: int, c: int, rng: random.Random) -> Matrix:
    return Matrix(field, tuple(tuple(rng.randrange(field.order) for _ in range(c)) for _ in range(r)), c)


def random_invertible(n: int, field, seed: int) -> Matrix:
    """Uniform element of GL_n(field) by rejection, deterministic per seed."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    while True:
        M = random_matrix(field, n, n, rng)
        if det(M) != 0:
            return M
