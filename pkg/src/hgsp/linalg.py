"""Exact dense linear algebra over the integers and rationals.

Matrices are tuples of row tuples and vectors are plain tuples, so every
value is hashable and safe to share across worker processes.  Rank, kernel
and determinant computations run Bareiss fraction-free elimination on
integer rows; only the final back substitution touches Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .poly import IntPoly

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class NonUnimodularError(ValueError):
    """An integer matrix whose determinant is not a unit."""

    def __init__(self, determinant: int):
        self.determinant = determinant
        super().__init__(f"matrix is not unimodular (determinant {determinant})")


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if len(a[0]) != len(v):
        raise ValueError("shape mismatch in matrix-vector product")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def companion_matrix(p: IntPoly) -> Matrix:
    """Companion matrix with ones on the subdiagonal and -coefficients in the
    last column, so the characteristic polynomial is p itself.

    For x^2 - 3x + 1 this is ((0, -1), (1, 3)).
    """
    if not p.is_monic():
        raise ValueError("companion matrix requires a monic polynomial")
    n = p.degree
    if n < 1:
        raise ValueError("companion matrix requires degree >= 1")
    return tuple(
        tuple(
            -p.coeffs[i] if j == n - 1 else (1 if i == j + 1 else 0)
            for j in range(n)
        )
        for i in range(n)
    )


# -- fraction-free elimination ----------------------------------------------


def _bareiss_echelon(rows: Sequence[Sequence[int]], ncols: int):
    """Forward eliminate; return (echelon rows, pivot columns, swap parity).

    The one-step Bareiss update keeps every intermediate entry an integer
    minor of the input, so all the divisions below are exact.
    """
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise ValueError("ragged constraint rows")
    pivot_cols: list[int] = []
    rank = 0
    prev = 1
    swaps = 0
    for c in range(ncols):
        sel = None
        for i in range(rank, len(work)):
            if work[i][c]:
                sel = i
                break
        if sel is None:
            continue
        if sel != rank:
            work[rank], work[sel] = work[sel], work[rank]
            swaps += 1
        piv_row = work[rank]
        piv = piv_row[c]
        for i in range(rank + 1, len(work)):
            row = work[i]
            t = row[c]
            if t:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - t * piv_row[j]) // prev
            elif prev != 1 or piv != 1:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = piv * row[j] // prev
            row[c] = 0
        pivot_cols.append(c)
        prev = piv
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivot_cols, swaps


def rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    rows = [tuple(r) for r in rows]
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(_bareiss_echelon(rows, ncols)[1])


def linearly_independent(vectors: Sequence[Sequence[int]]) -> bool:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    if len({len(v) for v in vectors}) != 1:
        raise ValueError("vectors of unequal length")
    return rank(vectors) == len(vectors)


def determinant(a: Matrix) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    ech, pivots, swaps = _bareiss_echelon(a, n)
    if len(pivots) < n:
        return 0
    d = ech[n - 1][pivots[n - 1]]
    return -d if swaps % 2 else d


def _primitive_int_vector(x: Sequence[Fraction]) -> Vector:
    """Scale a rational vector to primitive integers, first nonzero entry positive."""
    denom = 1
    for r in x:
        denom = denom * r.denominator // gcd(denom, r.denominator)
    ints = [int(r * denom) for r in x]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if content == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [c // content for c in ints]
    first = next(c for c in ints if c)
    if first < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Primitive integer basis of the solution space of a homogeneous system.

    One basis vector per free column, ordered by free column index, each
    normalized to content 1 with positive first nonzero entry.
    """
    ech, pivot_cols, _ = _bareiss_echelon([tuple(r) for r in rows], ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for i in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[i]
            s = Fraction(0)
            row = ech[i]
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    s += row[j] * x[j]
            if s:
                x[pc] = -s / row[pc]
        basis.append(_primitive_int_vector(x))
    return basis


def kernel_basis(
    constraints: Sequence[Sequence[int]], shape: tuple[int, int]
) -> list[Matrix]:
    """Basis of the space of r x c integer matrices killed by linear constraints.

    Each constraint is a flat row of r*c coefficients against the row-major
    matrix entries.  With no constraints this is the full matrix space.
    """
    nrows, ncols = shape
    size = nrows * ncols
    for row in constraints:
        if len(row) != size:
            raise ValueError(f"constraint length {len(row)} does not match shape {shape}")
    flat = nullspace(constraints, size)
    return [
        tuple(tuple(vec[i * ncols + j] for j in range(ncols)) for i in range(nrows))
        for vec in flat
    ]


# -- rational solving --------------------------------------------------------


def _solve_rational(a: Matrix, b: Vector) -> tuple[Fraction, ...]:
    """Solve a nonsingular square integer system exactly."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        sel = next((i for i in range(c, n) if aug[i][c]), None)
        if sel is None:
            raise ValueError("singular system")
        aug[c], aug[sel] = aug[sel], aug[c]
        piv = aug[c][c]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c] / piv
                for j in range(c, n + 1):
                    aug[i][j] -= f * aug[c][j]
    return tuple(aug[i][n] / aug[i][i] for i in range(n))


def solve_unimodular(a: Matrix, b: Vector) -> Vector:
    """Integer solution of a x = b for unimodular a."""
    x = _solve_rational(a, b)
    if any(r.denominator != 1 for r in x):
        raise NonUnimodularError(determinant(a))
    return tuple(int(r) for r in x)


def unimodular_inverse(a: Matrix) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    d = determinant(a)
    if d not in (1, -1):
        raise NonUnimodularError(d)
    n = len(a)
    cols = [solve_unimodular(a, tuple(1 if i == j else 0 for i in range(n)))
            for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
