import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specball.fibers import random_basis
from specball.geometry import (
    discriminant,
    in_gn,
    in_jn,
    in_omega,
    jacobian_rank,
    pi_n,
    point_roots,
    sigma,
    sigma_jacobian,
    spectral_radius,
)


def test_sigma_of_diagonal():
    A = np.diag([0.5, 0.5, -0.3])
    assert np.allclose(sigma(A), [0.7, -0.05, -0.075], atol=1e-15)


def test_sigma_of_nilpotent_example():
    A = np.array([[1, -1], [1, -1]])
    assert np.allclose(sigma(A), [0, 0], atol=1e-15)
    assert spectral_radius(A) < 1e-7
    assert in_omega(A)


def test_pi_n_values():
    assert np.allclose(pi_n([0.1, 0.2]), [0.3, 0.02])
    assert np.allclose(pi_n([1, 2, 3]), [6, 11, 6])


def test_point_roots_inverts_pi_n():
    z = np.array([0.3 + 0.1j, -0.5, 0.2j])
    r = point_roots(pi_n(z))
    assert np.allclose(np.sort_complex(r), np.sort_complex(z), atol=1e-12)


def test_in_gn_and_margin():
    assert in_gn(pi_n([0.5, -0.5]))
    assert not in_gn(pi_n([0.5, 1.2]))
    assert not in_gn(pi_n([0.5, 0.95]), margin=0.1)


def test_in_omega_is_unbounded():
    A = np.array([[0, 1e6], [0, 0]])
    assert in_omega(A)


def test_discriminant_of_quadratic():
    # roots 0.1, 0.2: (0.1 - 0.2)^2
    assert discriminant(pi_n([0.1, 0.2])) == pytest.approx(0.01, abs=1e-15)


def test_discriminant_of_cubic():
    r = np.array([0.1, -0.2, 0.3j])
    expected = np.prod([(r[i] - r[j]) ** 2 for i in range(3) for j in range(i + 1, 3)])
    assert abs(discriminant(pi_n(r)) - expected) < 1e-14


def test_in_jn_detects_repeated_roots():
    assert in_jn(pi_n([0.3, 0.3, -0.2]))
    assert not in_jn(pi_n([0.3, 0.1, -0.2]))
    assert not in_jn(pi_n([1.3, 1.3]))


def test_sigma_jacobian_two_by_two_closed_form():
    a, b, c, d = 0.3, -1.1 + 0.2j, 0.7, 2.0
    A = np.array([[a, b], [c, d]])
    # sigma_1 = a + d, sigma_2 = ad - bc
    expected = np.array([[1, 0, 0, 1], [d, -c, -b, a]])
    assert np.allclose(sigma_jacobian(A), expected, atol=1e-14)


def test_jacobian_rank_at_zero_and_generic():
    assert jacobian_rank(np.zeros((2, 2))) == 1
    assert jacobian_rank(np.zeros((3, 3))) == 1
    assert jacobian_rank(np.diag([0.1, 0.2, 0.3])) == 3
    assert jacobian_rank(0.4 * np.eye(3)) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_sigma_jacobian_matches_central_differences(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    J = sigma_jacobian(A)
    h = 1e-5
    for k in range(n * n):
        E = np.zeros((n, n), dtype=complex)
        E.flat[k] = h
        fd = (sigma(A + E) - sigma(A - E)) / (2 * h)
        assert np.linalg.norm(fd - J[:, k]) <= 1e-6 * np.linalg.norm(J)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_membership_equivalence(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    A *= rng.uniform(0.2, 2.0) / spectral_radius(A)
    assert in_omega(A) == in_gn(sigma(A))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_sigma_invariant_under_transpose_and_conjugation(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    S = random_basis(rng, n, 10.0)  # conjugation loses about cond(S) digits
    s = sigma(A)
    scale = max(1.0, np.max(np.abs(s)))
    assert np.max(np.abs(sigma(A.T) - s)) <= 1e-12 * scale
    assert np.max(np.abs(sigma(S @ A @ np.linalg.inv(S)) - s)) <= 1e-8 * scale


def test_random_points_avoid_repeated_root_set():
    # frequency only: random points of G_n land outside J_n essentially always
    rng = np.random.default_rng(7)
    hits = 0
    for _ in range(2000):
        n = int(rng.integers(2, 7))
        zetas = np.sqrt(rng.uniform(0, 0.81, n)) * np.exp(2j * np.pi * rng.uniform(size=n))
        z = pi_n(zetas)
        assert in_gn(z)
        hits += in_jn(z)
    assert hits == 0
