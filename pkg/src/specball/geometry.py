"""Spectral radius, the symmetrization map and membership predicates.

A point of C^n produced by :func:`sigma` or :func:`pi_n` is a complex numpy
vector ``z`` with ``z[j-1]`` the j-th signed characteristic coefficient, so
that ``det(xI - A) = x^n + sum_j (-1)^j z_j x^(n-j)``.
"""

from __future__ import annotations

import numpy as np

from .matrix import (
    RANK_TOL,
    ROOT_TOL,
    Polynomial,
    as_matrix,
    as_vector,
    char_poly,
    eigenvalues,
    poly_roots,
    rank,
)

REPEAT_TOL = 1e-6


def spectral_radius(A, tol=ROOT_TOL) -> float:
    return float(np.max(np.abs(eigenvalues(A, tol))))


def sigma(A) -> np.ndarray:
    A = as_matrix(A)
    n = A.shape[0]
    c = char_poly(A).array
    j = np.arange(1, n + 1)
    return (-1.0) ** j * c[n - j]


def pi_n(zetas) -> np.ndarray:
    """Elementary symmetric polynomials of ``zetas`` by incremental expansion."""
    zetas = as_vector(zetas, min_len=1)
    e = np.zeros(zetas.size + 1, dtype=complex)
    e[0] = 1.0
    for k, t in enumerate(zetas, start=1):
        e[1 : k + 1] = e[1 : k + 1] + t * e[0:k]
    return e[1:]


def point_polynomial(z) -> Polynomial:
    """The monic polynomial whose roots ``zeta`` satisfy ``pi_n(zeta) = z``."""
    z = as_vector(z, min_len=1)
    n = z.size
    desc = np.concatenate(([1.0], (-1.0) ** np.arange(1, n + 1) * z))
    return Polynomial(tuple(desc[::-1]))


def point_roots(z, tol=ROOT_TOL) -> np.ndarray:
    return poly_roots(point_polynomial(z), tol)


def in_omega(A, margin=0.0, tol=ROOT_TOL) -> bool:
    return spectral_radius(A, tol) < 1.0 - margin


def in_gn(z, margin=0.0, tol=ROOT_TOL) -> bool:
    return bool(np.max(np.abs(point_roots(z, tol))) < 1.0 - margin)


def discriminant(z) -> complex:
    """Discriminant of the monic polynomial attached to ``z``.

    Computed as ``(-1)^(n(n-1)/2) Res(p, p')`` with the resultant taken as the
    determinant of the Sylvester matrix.
    """
    p = point_polynomial(z)
    n = p.degree
    desc = p.array[::-1]
    ddesc = (desc[:-1] * np.arange(n, 0, -1))
    m = n - 1
    size = n + m
    Syl = np.zeros((size, size), dtype=complex)
    for i in range(m):
        Syl[i, i : i + n + 1] = desc
    for i in range(n):
        Syl[m + i, i : i + m + 1] = ddesc
    res = np.linalg.det(Syl)
    return complex((-1) ** (n * (n - 1) // 2) * res)


def in_jn(z, tol=REPEAT_TOL, margin=0.0) -> bool:
    """True when the roots attached to ``z`` lie in the open disc and two of
    them are closer than ``tol``."""
    roots = point_roots(z)
    if np.max(np.abs(roots)) >= 1.0 - margin:
        return False
    d = np.abs(roots[:, None] - roots[None, :])
    d[np.diag_indices_from(d)] = np.inf
    return bool(d.min() < tol)


def sigma_jacobian(A) -> np.ndarray:
    """Complex Jacobian of ``sigma`` as an ``n x n^2`` array.

    Column ``r*n + s`` holds the derivatives with respect to ``a[r, s]``. Power
    sums ``p_k = tr(A^k)`` have gradients ``k (A^(k-1))^T``; Newton's identities
    ``j e_j = sum_i (-1)^(i-1) e_(j-i) p_i`` carry them to the elementary
    symmetric functions by the chain rule.
    """
    A = as_matrix(A)
    n = A.shape[0]
    powers = [np.eye(n, dtype=complex)]
    for _ in range(n):
        powers.append(powers[-1] @ A)
    p = np.array([np.trace(powers[k]) for k in range(n + 1)])
    dp = [None] + [k * powers[k - 1].T.reshape(-1) for k in range(1, n + 1)]
    e = np.zeros(n + 1, dtype=complex)
    de = np.zeros((n + 1, n * n), dtype=complex)
    e[0] = 1.0
    for j in range(1, n + 1):
        acc = 0j
        dacc = np.zeros(n * n, dtype=complex)
        for i in range(1, j + 1):
            sgn = (-1) ** (i - 1)
            acc += sgn * e[j - i] * p[i]
            dacc += sgn * (de[j - i] * p[i] + e[j - i] * dp[i])
        e[j] = acc / j
        de[j] = dacc / j
    return de[1:]


def jacobian_rank(A, tol=RANK_TOL) -> int:
    return rank(sigma_jacobian(A), tol)
