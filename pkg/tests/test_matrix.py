import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specball.matrix import (
    InputError,
    NumericalError,
    Polynomial,
    as_matrix,
    char_poly,
    conjugate,
    eigenvalues,
    inverse,
    mat_arith,
    poly_roots,
    rank,
    root_residual,
    solve,
)

# det(xI - K) by exact symbolic expansion, computed once and frozen here
K3 = [[2, -1, 0], [3, 4, -2], [1, 0, 5]]
K3_CHARPOLY = [-57, 41, -11, 1]
K4 = [[1, 2, 3, 4], [0, -1, 2, -3], [5, 1, 0, 2], [-2, 3, 1, 1]]
K4_CHARPOLY = [-207, -45, -3, -1, 1]


def test_as_matrix_rejects_bad_shapes():
    with pytest.raises(InputError):
        as_matrix([[1, 2, 3]])
    with pytest.raises(InputError):
        as_matrix([[1.0]])
    with pytest.raises(InputError):
        as_matrix([[1, np.nan], [0, 1]])
    with pytest.raises(InputError):
        as_matrix([1, 2, 3, 4])


def test_mat_arith_operations():
    A = np.array([[1, 2], [3, 4]])
    B = np.array([[0, 1], [1, 0]])
    assert np.array_equal(mat_arith(A, B, "add"), A + B)
    assert np.array_equal(mat_arith(A, B, "mul"), A @ B)
    assert np.array_equal(mat_arith(A, op="scale", c=2j), 2j * A)
    with pytest.raises(InputError):
        mat_arith(A, np.eye(3), "add")
    with pytest.raises(InputError):
        mat_arith(A, B, "pow")


@pytest.mark.parametrize("K, expected", [(K3, K3_CHARPOLY), (K4, K4_CHARPOLY)])
def test_char_poly_matches_exact_expansion(K, expected):
    got = char_poly(K).array
    assert np.max(np.abs(got - np.array(expected))) <= 1e-12


def test_char_poly_of_two_by_two():
    A = np.array([[1, 2], [3, 4]], dtype=complex)
    # x^2 - tr x + det
    assert np.allclose(char_poly(A).array, [-2, -5, 1], atol=1e-14)


def test_polynomial_from_roots_and_evaluation():
    p = Polynomial.from_roots([1, -2, 3j])
    assert p.degree == 3
    assert np.allclose(p([1, -2, 3j]), 0)
    # p(0) = (-1)^3 * 1 * (-2) * 3j
    assert p(0) == pytest.approx(6j)


def test_polynomial_rejects_zero_leading():
    with pytest.raises(InputError):
        Polynomial((1.0, 0.0))


def test_poly_roots_simple():
    r = np.sort_complex(poly_roots(Polynomial((-1, 0, 1))))
    assert np.allclose(r, [-1, 1], atol=1e-14)


def test_poly_roots_triple_root_cluster_is_consistent():
    p = Polynomial.from_roots([0.5, 0.5, 0.5])
    r = poly_roots(p)
    assert np.max(np.abs(r - 0.5)) < 1e-4
    # the expanded product reproduces the coefficients much better than the
    # individual roots are determined
    back = Polynomial.from_roots(r).array
    assert np.max(np.abs(back - p.array)) < 1e-13


def test_poly_roots_is_deterministic():
    p = Polynomial((0.3 - 0.1j, 1.2, -0.4j, 0.7, 1.0))
    assert np.array_equal(poly_roots(p), poly_roots(p))


def test_root_residual_is_small_for_returned_roots():
    p = Polynomial((2, -3, 0.5, 1j, 1))
    assert root_residual(p, poly_roots(p)).max() < 1e-13


def test_eigenvalues_nilpotent_example():
    A = np.array([[1, -1], [1, -1]])
    assert np.max(np.abs(eigenvalues(A))) < 1e-7


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_eigenvalues_reproduce_characteristic_polynomial(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    p = char_poly(A)
    back = Polynomial.from_roots(eigenvalues(A)).array
    assert np.max(np.abs(back - p.array)) <= 1e-9 * max(1.0, np.max(np.abs(p.array)))


def test_rank_basic_and_scaled():
    assert rank(np.eye(3)) == 3
    assert rank(np.outer([1, 2, 3], [1, -1, 2])) == 1
    assert rank(np.zeros((3, 3))) == 0
    noise = 1e-14 * np.ones((3, 3))
    assert rank(noise) == 1
    assert rank(noise, scale=1.0) == 0


def test_rank_of_rectangular():
    M = np.array([[1, 0, 0, 1], [0, 1, 1, 0]])
    assert rank(M) == 2


def test_solve_and_inverse():
    rng = np.random.default_rng(3)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=4)
    x = solve(A, b)
    assert np.allclose(A @ x, b, atol=1e-12)
    assert np.allclose(inverse(A) @ A, np.eye(4), atol=1e-12)


def test_solve_singular_raises():
    with pytest.raises(NumericalError):
        solve([[1, 2], [2, 4]], [1, 1])


def test_solve_column_scaling_does_not_trigger_singularity():
    A = np.array([[1e-20, 1.0], [2e-20, 3.0]])
    x = solve(A, [1.0, 1.0])
    assert np.allclose(A @ x, [1, 1])


def test_conjugate_matches_explicit_inverse():
    rng = np.random.default_rng(5)
    S = rng.normal(size=(3, 3))
    X = rng.normal(size=(3, 3))
    assert np.allclose(conjugate(S, X), S @ X @ np.linalg.inv(S), atol=1e-12)
