"""Dense complex linear algebra used by every other module.

Matrices are plain ``numpy`` complex128 arrays. Everything entering through a
public function is validated by :func:`as_matrix` (square, n >= 2, finite).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = np.finfo(float).eps

RANK_TOL = 1e-9
ROOT_TOL = 1e-10
SOLVE_TOL = 1e-13


class InputError(ValueError):
    """Malformed or out-of-domain input."""


class DomainError(InputError):
    """Input lies outside the region where the operation is defined."""


class NumericalError(ArithmeticError):
    """An iteration or factorization could not reach the requested accuracy."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def as_matrix(A, square=True, min_n=2) -> np.ndarray:
    M = np.array(A, dtype=complex)
    if M.ndim != 2:
        raise InputError(f"expected a 2-d matrix, got shape {M.shape}")
    if square:
        if M.shape[0] != M.shape[1]:
            raise InputError(f"matrix is not square: {M.shape}")
        if M.shape[0] < min_n:
            raise InputError(f"dimension must be >= {min_n}, got {M.shape[0]}")
    if not np.all(np.isfinite(M)):
        raise InputError("matrix has non-finite entries")
    return M


def as_vector(z, min_len=1) -> np.ndarray:
    v = np.array(z, dtype=complex).reshape(-1)
    if v.size < min_len:
        raise InputError(f"expected at least {min_len} entries, got {v.size}")
    if not np.all(np.isfinite(v)):
        raise InputError("vector has non-finite entries")
    return v


def mat_arith(A, B=None, op="mul", c=None) -> np.ndarray:
    """Elementwise sum, product or scalar multiple.

    ``op`` is one of ``"add"``, ``"mul"`` or ``"scale"``; the last uses ``c``
    and ignores ``B``.
    """
    A = as_matrix(A)
    if op == "scale":
        if c is None or not np.isfinite(c):
            raise InputError("scale needs a finite scalar c")
        return complex(c) * A
    B = as_matrix(B)
    if A.shape != B.shape:
        raise InputError(f"dimension mismatch: {A.shape} vs {B.shape}")
    if op == "add":
        return A + B
    if op == "mul":
        return A @ B
    raise InputError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with complex coefficients in ascending degree order."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(complex(x) for x in self.coeffs)
        if not c:
            raise InputError("polynomial needs at least one coefficient")
        if not all(np.isfinite(x) for x in c):
            raise InputError("polynomial has non-finite coefficients")
        if abs(c[-1]) == 0:
            raise InputError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_roots(cls, roots):
        c = np.array([1.0 + 0j])
        for r in np.asarray(roots, dtype=complex):
            # multiply by (x - r), ascending order
            c = np.concatenate(([0j], c)) - r * np.concatenate((c, [0j]))
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def norm(self) -> float:
        return float(np.sum(np.abs(self.array)))

    def __call__(self, x):
        out = np.zeros_like(np.asarray(x, dtype=complex))
        for a in reversed(self.coeffs):
            out = out * x + a
        return out


def char_poly(A) -> Polynomial:
    """Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.

    No eigenvalues are involved, so the coefficients carry only the rounding
    of the matrix products.
    """
    A = as_matrix(A)
    n = A.shape[0]
    I = np.eye(n, dtype=complex)
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    M = np.zeros_like(A)
    for k in range(1, n + 1):
        M = A @ M + c[n - k + 1] * I
        c[n - k] = -np.trace(A @ M) / k
    return Polynomial(tuple(c))


def _eval_with_derivative(desc, z):
    """p(z), p'(z) and the Horner rounding scale sum |a_k| |z|^k, vectorized
    over ``z`` through a Vandermonde product."""
    n = desc.size - 1
    V = z[:, None] ** np.arange(n, -1, -1)
    p = V @ desc
    dp = V[:, 1:] @ (desc[:-1] * np.arange(n, 0, -1))
    s = np.abs(V) @ np.abs(desc)
    return p, dp, s


def root_residual(p: Polynomial, z) -> np.ndarray:
    """Backward-error style residual |p(z)| / (||p||_1 max(1, |z|)^deg)."""
    z = np.asarray(z, dtype=complex)
    scale = p.norm() * np.maximum(1.0, np.abs(z)) ** p.degree
    return np.abs(p(z)) / scale


def poly_roots(p: Polynomial, tol=ROOT_TOL, maxiter=2000) -> np.ndarray:
    """All roots of ``p`` with multiplicity, by Aberth-Ehrlich iteration.

    Starting points sit on the circle of radius ``1 + max|a_k / a_n|`` at angles
    ``2 pi k / n + 0.4``, so the result is reproducible. A root is frozen once
    its residual reaches the rounding level of the Horner evaluation or its
    correction drops below machine precision.

    Raises
    ------
    NumericalError
        if some root has not converged after ``maxiter`` sweeps, or the final
        residual exceeds ``tol``.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(tuple(p))
    n = p.degree
    if n < 1:
        raise InputError("polynomial degree must be >= 1")
    a = p.array / p.coeffs[-1]
    if n == 1:
        return np.array([-a[0]])

    z, active = _aberth(a, maxiter)
    polished = _cluster_polish(a, z, maxiter)
    if _coeff_mismatch(a, polished) < _coeff_mismatch(a, z):
        z = polished
    res = root_residual(Polynomial(tuple(a)), z)
    worst = float(res.max())
    if active.any() or worst >= tol:
        raise NumericalError(
            f"Aberth iteration did not converge (residual {worst:.3e})", residual=worst
        )
    return z


def _coeff_mismatch(a, z):
    return float(np.max(np.abs(Polynomial.from_roots(z).array - a)))


def _aberth(a, maxiter, z0=None):
    """Raw Aberth sweeps on the monic ascending coefficients ``a``."""
    n = a.size - 1
    desc = a[::-1]
    if z0 is None:
        radius = 1.0 + np.max(np.abs(a[:-1]))
        k = np.arange(n)
        z = radius * np.exp(1j * (2 * np.pi * k / n + 0.4))
    else:
        z = np.array(z0, dtype=complex)
    active = np.ones(n, dtype=bool)
    for _ in range(maxiter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        pz, dpz, s = _eval_with_derivative(desc, z[idx])
        small = np.abs(pz) <= 4 * n * EPS * s
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        # coincident iterates would blow up the repulsion sum
        diff[diff == 0] = EPS
        inv = 1.0 / diff
        inv[np.arange(idx.size), idx] = 0.0
        rep = inv.sum(axis=1)
        dpz = np.where(dpz == 0, EPS, dpz)
        w = pz / dpz
        corr = w / (1.0 - w * rep)
        move = ~small
        z[idx[move]] -= corr[move]
        done = small | (np.abs(corr) <= 2 * EPS * np.maximum(1.0, np.abs(z[idx])))
        active[idx[done]] = False
    return z, active


def _taylor_shift(a, c):
    """Ascending coefficients of p(c + y) from those of p(x)."""
    b = a.astype(complex).copy()
    n = b.size - 1
    for k in range(n):
        for j in range(n - 1, k - 1, -1):
            b[j] += c * b[j + 1]
    return b


def _monic_quotient(num, den):
    """Quotient of ascending-coefficient polynomials; ``den`` is monic."""
    n = num.size - 1
    m = den.size - 1
    rem = num.astype(complex).copy()
    q = np.zeros(n - m + 1, dtype=complex)
    for k in range(n - m, -1, -1):
        q[k] = rem[k + m]
        rem[k : k + m + 1] -= q[k] * den
    return q


def _root_groups(z, link):
    """Single-linkage groups of roots closer than ``link``."""
    n = z.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    d = np.abs(z[:, None] - z[None, :])
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] < link:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _refine_factor(P, g, steps=4):
    """Newton refinement of a monic factor ``g`` of ``P`` (ascending order).

    Solves ``g dh + h dg = P - g h`` for corrections with deg dg < deg g and
    deg dh < deg h. The system is the Sylvester matrix of ``g`` and ``h``,
    well conditioned as long as their roots are separated.
    """
    n = P.size - 1
    m = g.size - 1
    for _ in range(steps):
        h = _monic_quotient(P, g)
        res = P - np.convolve(g, h)
        k = n - m
        S = np.zeros((n, n), dtype=complex)
        # unknowns: dh_0..dh_{k-1}, dg_0..dg_{m-1}; equations: degrees 0..n-1
        for j in range(k):
            S[j : j + m + 1, j] = g
        for j in range(m):
            S[j : j + k + 1, k + j] = h
        try:
            x = np.linalg.solve(S, res[:n])
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(x)):
            break
        g = g + np.concatenate((x[k:], [0j]))
        if np.max(np.abs(x[k:])) <= EPS * np.max(np.abs(g)):
            break
    return g


def _scaled_roots(g, maxiter, guess):
    """Roots of a monic polynomial whose roots are all small, after rescaling
    the variable so that they become of unit size."""
    m = g.size - 1
    lower = np.abs(g[:-1])
    with np.errstate(divide="ignore"):
        delta = np.max(lower ** (1.0 / (m - np.arange(m))))
    if delta == 0:
        return np.zeros(m, dtype=complex)
    t = g * delta ** (np.arange(m + 1) - m)
    w, active = _aberth(t, maxiter, guess / delta)
    if active.any():
        w, _ = _aberth(t, maxiter)
    return delta * w


def _cluster_polish(a, z, maxiter):
    """Recompute tight groups of roots from a refined local factor.

    Aberth freezes each root of a cluster somewhere in its pseudo-zero
    region independently, so the roots are individually fine but their
    symmetric functions are off by the cluster size. Extracting the group's
    factor around its centroid and solving it in a rescaled variable gives a
    mutually consistent set.
    """
    n = a.size - 1
    link = 0.02 * max(1.0, float(np.max(np.abs(z))))
    out = z.copy()
    for grp in _root_groups(z, link):
        m = len(grp)
        if m < 2:
            continue
        c = z[grp].mean()
        P = _taylor_shift(a, c)
        g = Polynomial.from_roots(z[grp] - c).array
        if m < n:
            g = _refine_factor(P, g)
        else:
            g = P
        out[grp] = c + _scaled_roots(g, maxiter, z[grp] - c)
    return out


def eigenvalues(A, tol=ROOT_TOL) -> np.ndarray:
    return poly_roots(char_poly(A), tol)


def rank(M, tol=RANK_TOL, scale=None) -> int:
    """Numerical rank by Gaussian elimination with complete pivoting.

    A pivot counts while its modulus exceeds ``tol`` times the largest entry
    of the input (the first pivot). Passing ``scale`` replaces that reference
    magnitude, which is needed when the input may be pure rounding noise.
    """
    W = as_matrix(M, square=False)
    m, n = W.shape
    if W.size == 0:
        return 0
    first = np.max(np.abs(W)) if scale is None else float(scale)
    if first == 0:
        return 0
    r = 0
    for k in range(min(m, n)):
        sub = np.abs(W[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        piv = sub[i, j]
        if piv <= tol * first:
            break
        i += k
        j += k
        W[[k, i], :] = W[[i, k], :]
        W[:, [k, j]] = W[:, [j, k]]
        W[k + 1 :, k] /= W[k, k]
        W[k + 1 :, k + 1 :] -= np.outer(W[k + 1 :, k], W[k, k + 1 :])
        r += 1
    return r


def _lu(A, tol):
    n = A.shape[0]
    LU = A.copy()
    perm = np.arange(n)
    colnorm = np.abs(A).max(axis=0)
    for k in range(n):
        i = k + int(np.argmax(np.abs(LU[k:, k])))
        if abs(LU[i, k]) <= tol * colnorm[k] or colnorm[k] == 0:
            raise NumericalError(
                f"matrix is singular to tolerance (pivot {abs(LU[i, k]):.3e} at step {k})",
                residual=float(abs(LU[i, k])),
            )
        if i != k:
            LU[[k, i], :] = LU[[i, k], :]
            perm[[k, i]] = perm[[i, k]]
        LU[k + 1 :, k] /= LU[k, k]
        LU[k + 1 :, k + 1 :] -= np.outer(LU[k + 1 :, k], LU[k, k + 1 :])
    return LU, perm


def solve(A, b, tol=SOLVE_TOL) -> np.ndarray:
    """Solve ``A x = b`` by LU with partial pivoting.

    Row pivoting makes the singularity test invariant to column scaling: a
    pivot is rejected when it is below ``tol`` times the largest entry of its
    original column.
    """
    A = as_matrix(A, min_n=1)
    b = np.array(b, dtype=complex)
    if b.shape[0] != A.shape[0]:
        raise InputError(f"right-hand side has {b.shape[0]} rows, expected {A.shape[0]}")
    if not np.all(np.isfinite(b)):
        raise InputError("right-hand side has non-finite entries")
    LU, perm = _lu(A, tol)
    n = A.shape[0]
    x = b[perm].astype(complex)
    for k in range(n):
        x[k + 1 :] -= np.multiply.outer(LU[k + 1 :, k], x[k])
    for k in range(n - 1, -1, -1):
        x[k] /= LU[k, k]
        x[:k] -= np.multiply.outer(LU[:k, k], x[k])
    return x


def inverse(A, tol=SOLVE_TOL) -> np.ndarray:
    A = as_matrix(A, min_n=1)
    return solve(A, np.eye(A.shape[0], dtype=complex), tol)


def conjugate(S, X) -> np.ndarray:
    """S X S^-1 without forming the inverse explicitly."""
    # S X S^-1 = (S^-T (S X)^T)^T
    SX = np.asarray(S) @ np.asarray(X)
    return solve(np.asarray(S).T, SX.T).T
