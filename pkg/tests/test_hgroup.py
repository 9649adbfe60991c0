"""Generators, transvection vector, and the invariant symplectic form."""

import random

import pytest

from hgsp.cyclotomic import CycloFactorization
from hgsp.hgroup import (
    DegenerateFormError,
    InvariantSpaceDimensionError,
    build_generators,
    invariant_alternating_space,
    invariant_symplectic_form,
    is_transvection,
    symmetric_invariant_dimension,
    transvection_vector,
)
from hgsp.linalg import (
    determinant,
    identity_matrix,
    mat_mul,
    mat_sub,
    mat_vec,
    rank,
    transpose,
    unimodular_inverse,
)
from hgsp.pairs import enumerate_qualified_pairs, make_pair


def pair_by_id(pair_id, mum=True):
    for p in enumerate_qualified_pairs(6, mum_only=mum):
        if p.pair_id == pair_id:
            return p
    raise LookupError(pair_id)


def basis_vector(n, j):
    return tuple(1 if i == j else 0 for i in range(n))


def test_generators_are_unimodular_companions():
    pair = pair_by_id("1^6|3^2,6")
    gen = build_generators(pair)
    assert determinant(gen.a) == 1
    assert determinant(gen.b) == 1
    assert mat_mul(gen.a, gen.a_inv) == identity_matrix(6)
    assert mat_mul(gen.b, gen.b_inv) == identity_matrix(6)
    assert gen.letter_matrix(0) == gen.a
    assert gen.letter_matrix(1) == gen.b
    assert gen.letter_matrix(2) == gen.a_inv
    assert gen.letter_matrix(3) == gen.b_inv


def test_transvection_vector_row_17():
    gen = build_generators(pair_by_id("1^6|3^2,6"))
    assert transvection_vector(gen) == (-7, 13, -21, 13, -7, 0)


def test_transvection_vector_row_33():
    gen = build_generators(pair_by_id("1^6|6^3"))
    assert transvection_vector(gen) == (-3, 9, -13, 9, -3, 0)


def test_transvection_vector_is_f_minus_g_coefficients():
    """v carries the x^1..x^n coefficients of f - g (x^0 terms cancel)."""
    for pair in enumerate_qualified_pairs(6)[::41]:
        gen = build_generators(pair)
        v = transvection_vector(gen)
        diff = pair.f - pair.g
        assert v == tuple(diff.coefficient(i) for i in range(1, 7))


def test_degree_four_example_v():
    f = CycloFactorization(((2, 2), (3, 1)))
    g = CycloFactorization(((4, 2),))
    pair = make_pair(f, g)
    gen = build_generators(pair)
    assert transvection_vector(gen) == (3, 2, 3, 0)


def test_c1_is_transvection_and_fixes_prefix_basis():
    pair = pair_by_id("1^6|3^2,6")
    gen = build_generators(pair)
    c1 = mat_mul(gen.a_inv, gen.b)
    assert is_transvection(c1)
    for j in range(5):
        assert mat_vec(c1, basis_vector(6, j)) == basis_vector(6, j)


def test_transvection_image_lies_in_v_line():
    """(C1 - I) x is an integer multiple of v for every basis vector x."""
    pair = pair_by_id("1^6|2^4,3")
    gen = build_generators(pair)
    v = transvection_vector(gen)
    c1 = mat_mul(gen.a_inv, gen.b)
    d = mat_sub(c1, identity_matrix(6))
    for j in range(6):
        image = mat_vec(d, basis_vector(6, j))
        if all(x == 0 for x in image):
            continue
        assert rank([v, image], 6) == 1


def test_is_transvection_rejects():
    assert not is_transvection(identity_matrix(4))  # rank 0
    # diagonal flip: rank 1 but not unipotent
    m = ((1, 0), (0, -1))
    assert not is_transvection(m)
    shear = ((1, 1), (0, 1))
    assert is_transvection(shear)


def test_invariant_form_row_17_values():
    pair = pair_by_id("1^6|3^2,6")
    gen = build_generators(pair)
    v = transvection_vector(gen)
    form = invariant_symplectic_form(gen, v)
    om = form.omega
    n = 6
    # antisymmetry
    assert om == tuple(tuple(-om[j][i] for j in range(n)) for i in range(n))
    # invariance under both generators
    for m in (gen.a, gen.b):
        assert mat_mul(mat_mul(transpose(m), om), m) == om
    # nondegenerate
    assert determinant(om) != 0
    # pairing with v: zero against e_1..e_5, positive against e_6
    for j in range(5):
        assert form.pairing(v, basis_vector(6, j)) == 0
    assert form.pairing(v, basis_vector(6, 5)) > 0


def test_invariant_space_dimensions_sample():
    for pair in enumerate_qualified_pairs(6)[::53]:
        gen = build_generators(pair)
        assert len(invariant_alternating_space(gen)) == 1
        assert symmetric_invariant_dimension(gen) == 0


def test_form_invariant_under_random_words():
    rng = random.Random(7)
    pair = pair_by_id("1^6|3,6^2")
    gen = build_generators(pair)
    v = transvection_vector(gen)
    form = invariant_symplectic_form(gen, v)
    mats = (gen.a, gen.b, gen.a_inv, gen.b_inv)
    for _ in range(100):
        m = identity_matrix(6)
        for _ in range(rng.randint(1, 8)):
            m = mat_mul(m, mats[rng.randrange(4)])
        assert mat_mul(mat_mul(transpose(m), form.omega), m) == form.omega


def test_form_preserves_pairing_under_group():
    pair = pair_by_id("1^6|4^3")
    gen = build_generators(pair)
    v = transvection_vector(gen)
    form = invariant_symplectic_form(gen, v)
    x = (1, 2, 0, -1, 3, 1)
    y = (0, 1, 1, 0, -2, 5)
    for m in (gen.a, gen.b):
        assert form.pairing(mat_vec(m, x), mat_vec(m, y)) == form.pairing(x, y)


def test_sign_normalization_consistent():
    """omega(v, e_n) > 0 for every MUM pair after normalization."""
    e6 = basis_vector(6, 5)
    for pair in enumerate_qualified_pairs(6, mum_only=True):
        gen = build_generators(pair)
        v = transvection_vector(gen)
        form = invariant_symplectic_form(gen, v)
        assert form.pairing(v, e6) > 0


def test_dimension_error_when_space_too_big():
    """Identity generators leave every alternating form invariant.

    In degree 4 that space has dimension 6, so the uniqueness guard must
    trip rather than silently picking one form out of many.
    """
    from hgsp.hgroup import GeneratorPair

    eye = identity_matrix(4)
    gen = GeneratorPair(a=eye, b=eye, a_inv=eye, b_inv=eye, degree=4)
    with pytest.raises(InvariantSpaceDimensionError) as err:
        invariant_symplectic_form(gen, (1, 0, 0, 0))
    assert err.value.dimension == 6


def test_degenerate_error_needs_matching_v():
    """omega(v, e_n) = 0 trips the degeneracy guard for a mismatched v."""
    pair = pair_by_id("1^6|3^2,6")
    gen = build_generators(pair)
    e6 = (0, 0, 0, 0, 0, 1)
    with pytest.raises(DegenerateFormError):
        invariant_symplectic_form(gen, e6)
