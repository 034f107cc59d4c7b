"""Holomorphic self-maps of the unit disc and their action on matrices.

Two independent routes evaluate ``f(A)``: :func:`apply_series` sums the Taylor
series at 0, :func:`apply_exact` evaluates the Hermite interpolant of ``f`` on
the spectrum (derivatives up to the largest Jordan block). They are kept
side by side so that each can check the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fibers import JordanRealization, eigen_structure
from .geometry import pi_n, sigma, spectral_radius
from .matrix import (
    DomainError,
    NumericalError,
    InputError,
    as_matrix,
    as_vector,
    conjugate,
    eigenvalues,
    inverse,
)

BOUNDARY_SAMPLES = 720
SERIES_MAXN = 10_000


class PreconditionError(InputError):
    """A map does not meet the normalization an operation requires."""


class Jet:
    """Truncated Taylor expansion ``sum_k t[k] (x - center)^k`` of order m."""

    __slots__ = ("center", "t")

    def __init__(self, center, t):
        self.center = complex(center)
        self.t = np.asarray(t, dtype=complex)

    @classmethod
    def variable(cls, center, m):
        t = np.zeros(m, dtype=complex)
        t[0] = center
        if m > 1:
            t[1] = 1.0
        return cls(center, t)

    @classmethod
    def constant(cls, center, value, m):
        t = np.zeros(m, dtype=complex)
        t[0] = value
        return cls(center, t)

    @property
    def order(self) -> int:
        return self.t.size

    @property
    def values(self) -> np.ndarray:
        """``(f, f', ..., f^(m-1))`` at the center."""
        return self.t * np.array([math.factorial(k) for k in range(self.order)], dtype=float)

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other.t
        return Jet.constant(self.center, other, self.order).t

    def __add__(self, other):
        return Jet(self.center, self.t + self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.center, -self.t)

    def __sub__(self, other):
        return Jet(self.center, self.t - self._coerce(other))

    def __rsub__(self, other):
        return Jet(self.center, self._coerce(other) - self.t)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.center, self.t * complex(other))
        return Jet(self.center, np.convolve(self.t, other.t)[: self.order])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.center, self.t / complex(other))
        a, b = self.t, other.t
        if b[0] == 0:
            raise ZeroDivisionError("jet division by a jet vanishing at the center")
        q = np.zeros_like(a)
        for k in range(self.order):
            q[k] = (a[k] - np.dot(b[1 : k + 1], q[k - 1 :: -1][:k])) / b[0]
        return Jet(self.center, q)

    def __rtruediv__(self, other):
        return Jet.constant(self.center, other, self.order) / self

    def __repr__(self):
        return f"Jet(center={self.center!r}, values={self.values!r})"


def _factor_coeffs(a, N):
    """Taylor coefficients at 0 of (x - a) / (1 - conj(a) x), first N of them."""
    ab = np.conj(a)
    c = np.empty(N, dtype=complex)
    c[0] = -a
    if N > 1:
        c[1:] = (1 - abs(a) ** 2) * ab ** np.arange(N - 1)
    return c


class DiscMap:
    """Holomorphic map of the unit disc into itself."""

    def __call__(self, lam):
        raise NotImplementedError

    def jet(self, lam, m) -> Jet:
        raise NotImplementedError

    def taylor(self, N) -> np.ndarray:
        """First N Taylor coefficients at 0."""
        raise NotImplementedError

    finite = False


@dataclass(frozen=True)
class Mobius(DiscMap):
    """``x -> exp(i theta) (x - c) / (1 - conj(c) x)`` with ``|c| < 1``."""

    c: complex = 0j
    theta: float = 0.0

    def __post_init__(self):
        c = complex(self.c)
        if not (np.isfinite(c) and abs(c) < 1 and np.isfinite(self.theta)):
            raise InputError("Mobius map needs |c| < 1 and a finite phase")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def phase(self) -> complex:
        return np.exp(1j * self.theta)

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        return self.phase * (lam - self.c) / (1 - np.conj(self.c) * lam)

    def jet(self, lam, m):
        x = Jet.variable(lam, m)
        return self.phase * (x - self.c) / (1 - np.conj(self.c) * x)

    def taylor(self, N):
        return self.phase * _factor_coeffs(self.c, N)

    def inverse(self) -> "Mobius":
        return Mobius(-self.c * self.phase, -self.theta)

    def compose(self, inner: "Mobius") -> "Mobius":
        """The map ``x -> self(inner(x))``."""

        def mat(f):
            return np.array([[f.phase, -f.phase * f.c], [-np.conj(f.c), 1.0]])

        (p, q), (r, s) = mat(self) @ mat(inner)
        return Mobius(-q / p, float(np.angle(p / s)))


@dataclass(frozen=True)
class Blaschke(DiscMap):
    """``x -> exp(i theta) prod_j (x - a_j) / (1 - conj(a_j) x)``, degree >= 1."""

    zeros: tuple = (0j,)
    theta: float = 0.0

    def __post_init__(self):
        z = tuple(complex(a) for a in self.zeros)
        if not z:
            raise InputError("a Blaschke product needs at least one zero")
        if not all(np.isfinite(a) and abs(a) < 1 for a in z):
            raise InputError("Blaschke zeros must lie in the open unit disc")
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        out = np.exp(1j * self.theta) * np.ones_like(lam)
        for a in self.zeros:
            out = out * (lam - a) / (1 - np.conj(a) * lam)
        return out

    def jet(self, lam, m):
        x = Jet.variable(lam, m)
        out = Jet.constant(lam, np.exp(1j * self.theta), m)
        for a in self.zeros:
            out = out * ((x - a) / (1 - np.conj(a) * x))
        return out

    def taylor(self, N):
        c = np.zeros(N, dtype=complex)
        c[0] = np.exp(1j * self.theta)
        for a in self.zeros:
            c = np.convolve(c, _factor_coeffs(a, N))[:N]
        return c


@dataclass(frozen=True)
class Series(DiscMap):
    """Polynomial self-map given by its Taylor coefficients at 0.

    The self-map property is checked heuristically: ``|f| <= 1`` on 720
    points of the circle of radius ``radius_guard``.
    """

    coeffs: tuple = (0j, 1.0)
    radius_guard: float = 0.99

    finite = True

    def __post_init__(self):
        c = np.trim_zeros(as_vector(self.coeffs), "b")
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        object.__setattr__(self, "coeffs", tuple(complex(x) for x in c))
        t = np.exp(2j * np.pi * np.arange(BOUNDARY_SAMPLES) / BOUNDARY_SAMPLES)
        peak = np.max(np.abs(self(self.radius_guard * t)))
        if peak > 1.0:
            raise InputError(
                f"series is not a self-map of the disc: |f| reaches {peak:.4g} "
                f"at radius {self.radius_guard}"
            )

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        out = np.zeros_like(lam)
        for a in reversed(self.coeffs):
            out = out * lam + a
        return out

    def jet(self, lam, m):
        x = Jet.variable(lam, m)
        out = Jet.constant(lam, 0.0, m)
        for a in reversed(self.coeffs):
            out = out * x + a
        return out

    def taylor(self, N):
        c = np.zeros(N, dtype=complex)
        k = min(N, len(self.coeffs))
        c[:k] = self.coeffs[:k]
        return c


def eval_jet(f: DiscMap, lam, m) -> Jet:
    lam = complex(lam)
    if m < 1:
        raise InputError("jet order must be >= 1")
    if not abs(lam) < 1:
        raise InputError(f"jet center {lam} is outside the open unit disc")
    return f.jet(lam, m)


def apply_series(f: DiscMap, A, tol=1e-15, maxN=SERIES_MAXN) -> np.ndarray:
    """``sum_j c_j A^j`` with the Taylor coefficients ``c_j`` of ``f`` at 0.

    Summation stops once ``||c_N A^N||_F`` is below ``tol`` times the size of
    the partial sum and the last three term norms are non-increasing.

    Raises
    ------
    DomainError
        if ``rho(A) >= 1`` and the series is infinite.
    NumericalError
        if the stopping rule is not met within ``maxN`` terms.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if f.finite:
        coeffs = f.taylor(len(f.coeffs))
        total = np.zeros_like(A)
        for c in reversed(coeffs):
            total = total @ A + c * np.eye(n)
        return total
    # rho(A) <= ||A||_2, so the root finder is only needed for large norms
    if np.linalg.norm(A, 2) >= 1 and spectral_radius(A) >= 1:
        raise DomainError("series calculus needs spectral radius < 1")
    N = 64
    coeffs = f.taylor(N)
    P = np.eye(n, dtype=complex)
    total = coeffs[0] * P
    norms = [abs(coeffs[0]) * np.sqrt(n)]
    for j in range(1, maxN + 1):
        if j >= N:
            N = min(2 * N, maxN + 1)
            coeffs = f.taylor(N)
        P = P @ A
        term = coeffs[j] * P
        total = total + term
        norms.append(float(np.linalg.norm(term)))
        if (
            j >= 3
            and norms[-1] < tol * max(1.0, float(np.linalg.norm(total)))
            and norms[-3] >= norms[-2] >= norms[-1]
        ):
            return total
    raise NumericalError(
        f"series did not converge in {maxN} terms (last term {norms[-1]:.3e})",
        residual=norms[-1],
    )


def hermite_coefficients(f: DiscMap, nodes, mults):
    """Newton-form coefficients of the Hermite interpolant.

    ``nodes[i]`` is matched with derivatives of order < ``mults[i]``. Returns
    the expanded node list and divided differences.
    """
    z = []
    jets = []
    for lam, m in zip(nodes, mults):
        j = eval_jet(f, lam, m).t
        z.extend([complex(lam)] * m)
        jets.extend([j] * m)
    N = len(z)
    Q = np.zeros((N, N), dtype=complex)
    for i in range(N):
        Q[i, 0] = jets[i][0]
    for k in range(1, N):
        for i in range(k, N):
            if z[i] == z[i - k]:
                Q[i, k] = jets[i][k]
            else:
                Q[i, k] = (Q[i, k - 1] - Q[i - 1, k - 1]) / (z[i] - z[i - k])
    return np.array(z), np.diag(Q).copy()


def _newton_horner(A, z, d):
    n = A.shape[0]
    I = np.eye(n, dtype=complex)
    out = d[-1] * I
    for k in range(len(d) - 2, -1, -1):
        out = out @ (A - z[k] * I) + d[k] * I
    return out


def apply_exact(f: DiscMap, A, cluster_tol=None) -> np.ndarray:
    """``f(A)`` through the Hermite interpolant of ``f`` on the spectrum.

    ``A`` may be a matrix, whose Jordan structure is then detected, or a
    :class:`JordanRealization` whose structure is known. On a Jordan block
    the result carries ``f(lam)`` on the diagonal and ``f'(lam)`` above it.
    """
    if isinstance(A, JordanRealization):
        M = A.realize()
        nodes = [lam for lam, _ in A.spec.blocks]
        mults = [sizes[0] for _, sizes in A.spec.blocks]
    else:
        M = as_matrix(A)
        try:
            es = eigen_structure(M, cluster_tol)
        except NumericalError as exc:
            raise NumericalError(
                f"cannot resolve the Jordan structure ({exc}); use apply_series"
            ) from exc
        nodes = [c.center for c in es.clusters]
        mults = [c.block_sizes[0] for c in es.clusters]
    if any(abs(lam) >= 1 for lam in nodes):
        raise DomainError("spectrum must lie in the open unit disc")
    z, d = hermite_coefficients(f, nodes, mults)
    return _newton_horner(M, z, d)


def apply(f: DiscMap, A, method="exact") -> np.ndarray:
    if method == "exact":
        return apply_exact(f, A)
    if method == "series":
        if isinstance(A, JordanRealization):
            A = A.realize()
        return apply_series(f, A)
    raise InputError(f"unknown method {method!r}")


@dataclass(frozen=True)
class OmegaAut:
    """``A -> S m(A') S^-1`` with ``A' = A`` or ``A^T`` and ``m`` a disc automorphism."""

    mobius: Mobius = field(default_factory=Mobius)
    conjugator: np.ndarray = None
    transpose: bool = False

    def __post_init__(self):
        if self.conjugator is not None:
            S = as_matrix(self.conjugator)
            inverse(S)  # raises if singular
            object.__setattr__(self, "conjugator", S)

    def inverse(self) -> "OmegaAut":
        S = self.conjugator
        if S is None:
            R = None
        elif self.transpose:
            R = S.T
        else:
            R = inverse(S)
        return OmegaAut(self.mobius.inverse(), R, self.transpose)


def omega_automorphism(aut: OmegaAut, A) -> np.ndarray:
    A = as_matrix(A)
    if spectral_radius(A) >= 1:
        raise DomainError("automorphisms act on matrices with spectral radius < 1")
    X = A.T if aut.transpose else A
    M = apply_exact(aut.mobius, X)
    if aut.conjugator is None:
        return M
    return conjugate(aut.conjugator, M)


def equivariance_residual(f: DiscMap, A, method="exact") -> float:
    """``||sigma(f(A)) - pi_n(f(lam_1), ..., f(lam_n))||_inf``."""
    M = A.realize() if isinstance(A, JordanRealization) else as_matrix(A)
    F = apply(f, A, method)
    lam = eigenvalues(M)
    return float(np.max(np.abs(sigma(F) - pi_n(f(lam)))))


def _check_normalized(f):
    j = eval_jet(f, 0.0, 2).t
    if abs(j[0]) > 1e-12:
        raise PreconditionError(f"map must fix 0, got f(0) = {j[0]:.3g}")
    if abs(j[1]) < 1e-8:
        raise PreconditionError("map must have f'(0) != 0")
    return j[1]


def normalized_differential(f: DiscMap, V, h=1e-4) -> np.ndarray:
    """``F'(0) V / f'(0)`` for ``F = f(.)`` by Richardson-extrapolated quotients.

    ``D(h) = f(hV) / h`` has error ``O(h)``; ``2 D(h/2) - D(h)`` removes it.
    """
    alpha = _check_normalized(f)
    V = as_matrix(V)

    def quotient(t):
        return apply_series(f, t * V) / t

    return (2 * quotient(h / 2) - quotient(h)) / alpha


def differential_matrix(f: DiscMap, n, h=1e-4) -> np.ndarray:
    """The normalized differential as an ``n^2 x n^2`` matrix acting on
    row-major vectorizations."""
    _check_normalized(f)
    cols = []
    for k in range(n * n):
        E = np.zeros((n, n), dtype=complex)
        E.flat[k] = 1.0
        cols.append(normalized_differential(f, E, h).reshape(-1))
    return np.column_stack(cols)
