"""Group data attached to a qualified pair.

The group is generated by the companion matrices A of f and B of g.  The
element A^-1 B is a transvection; its direction vector v = (A^-1 B - I) e_n
has i-th entry equal to the coefficient of x^i in f - g.  The full group
preserves a unique (up to scale) nondegenerate alternating bilinear form,
recovered here as the kernel of an explicit linear system over ZZ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    Matrix,
    Vector,
    companion_matrix,
    determinant,
    identity_matrix,
    kernel_basis,
    mat_mul,
    mat_sub,
    mat_vec,
    rank,
    unimodular_inverse,
)
from .pairs import QualifiedPair


class InvariantFormError(ValueError):
    pass


class InvariantSpaceDimensionError(InvariantFormError):
    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(
            f"space of invariant alternating forms has dimension {dimension}, expected 1"
        )


class DegenerateFormError(InvariantFormError):
    def __init__(self) -> None:
        super().__init__("invariant alternating form is degenerate")


@dataclass(frozen=True)
class GeneratorPair:
    """Companion matrices of f and g with their inverses, all unimodular."""

    a: Matrix
    b: Matrix
    a_inv: Matrix
    b_inv: Matrix
    degree: int

    def letter_matrix(self, code: int) -> Matrix:
        return (self.a, self.b, self.a_inv, self.b_inv)[code]


@dataclass(frozen=True)
class SymplecticForm:
    """The invariant alternating form, primitive integer, Omega(v, e_n) > 0."""

    omega: Matrix
    degree: int

    def pairing(self, x: Vector, y: Vector) -> int:
        return sum(
            xi * sum(wij * yj for wij, yj in zip(row, y))
            for xi, row in zip(x, self.omega)
        )


def build_generators(pair: QualifiedPair) -> GeneratorPair:
    a = companion_matrix(pair.f)
    b = companion_matrix(pair.g)
    return GeneratorPair(
        a=a,
        b=b,
        a_inv=unimodular_inverse(a),
        b_inv=unimodular_inverse(b),
        degree=pair.degree,
    )


def transvection_vector(gen: GeneratorPair) -> Vector:
    """v = (A^-1 B - I) e_n, the direction of the transvection A^-1 B."""
    n = gen.degree
    c = mat_mul(gen.a_inv, gen.b)
    return tuple(c[i][n - 1] - (1 if i == n - 1 else 0) for i in range(n))


def is_transvection(c: Matrix) -> bool:
    """rank(C - I) = 1 and (C - I)^2 = 0."""
    n = len(c)
    d = mat_sub(c, identity_matrix(n))
    if rank(d) != 1:
        return False
    zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return mat_mul(d, d) == zero


# -- invariant form -----------------------------------------------------------


def invariance_rows(m: Matrix) -> list[tuple[int, ...]]:
    """Rows of the linear system M^T X M - X = 0 in the n^2 entries of X."""
    n = len(m)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                mki = m[k][i]
                if not mki:
                    continue
                for l in range(n):
                    if m[l][j]:
                        row[k * n + l] += mki * m[l][j]
            row[i * n + j] -= 1
            if any(row):
                rows.append(tuple(row))
    return rows


def antisymmetry_rows(n: int) -> list[tuple[int, ...]]:
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [0] * (n * n)
            row[i * n + j] += 1
            row[j * n + i] += 1
            rows.append(tuple(row))
    return rows


def symmetry_rows(n: int) -> list[tuple[int, ...]]:
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            row = [0] * (n * n)
            row[i * n + j] += 1
            row[j * n + i] -= 1
            rows.append(tuple(row))
    return rows


def invariant_alternating_space(gen: GeneratorPair) -> list[Matrix]:
    n = gen.degree
    # The sparse antisymmetry rows go first; they clear half the unknowns
    # cheaply before the dense invariance rows enter the elimination.
    rows = antisymmetry_rows(n) + invariance_rows(gen.a) + invariance_rows(gen.b)
    return kernel_basis(rows, (n, n))


def symmetric_invariant_dimension(gen: GeneratorPair) -> int:
    """Dimension of invariant symmetric forms (0 exactly when the symmetric
    space attached to the pair carries no invariant quadratic form)."""
    n = gen.degree
    rows = symmetry_rows(n) + invariance_rows(gen.a) + invariance_rows(gen.b)
    return len(kernel_basis(rows, (n, n)))


def invariant_symplectic_form(
    gen: GeneratorPair, v: Vector | None = None
) -> SymplecticForm:
    """The invariant alternating form, made unique by normalization.

    The kernel computation already returns a primitive integer matrix; the
    sign is then fixed so that Omega(v, e_n) > 0.  Raises when the space of
    invariant alternating forms does not have dimension 1 or the form is
    degenerate.
    """
    basis = invariant_alternating_space(gen)
    if len(basis) != 1:
        raise InvariantSpaceDimensionError(len(basis))
    omega = basis[0]
    if determinant(omega) == 0:
        raise DegenerateFormError()
    if v is None:
        v = transvection_vector(gen)
    n = gen.degree
    v_en = sum(v[i] * omega[i][n - 1] for i in range(n))
    if v_en == 0:
        raise DegenerateFormError()
    if v_en < 0:
        omega = tuple(tuple(-x for x in row) for row in omega)
    return SymplecticForm(omega=omega, degree=n)
