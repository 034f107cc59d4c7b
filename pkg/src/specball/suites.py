"""Deterministic randomized verification suites.

Each suite draws its cases from a generator seeded by ``(seed, n, index)``, so
a case depends only on its own coordinates and never on the order in which
the other cases run. A case produces a dictionary of named residuals; each
name has a tolerance, and a suite passes when every residual is within its
tolerance and no case raised. Yes/no properties (a rank being right, a block
count dropping) are encoded as integer residuals with tolerance 0.5. Keys
starting with ``info_`` are reported per case but not judged.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field

import numpy as np

from .calculus import (
    Blaschke,
    Mobius,
    OmegaAut,
    Series,
    apply_exact,
    apply_series,
    equivariance_residual,
    normalized_differential,
    omega_automorphism,
)
from .fibers import (
    JordanRealization,
    JordanSpec,
    _random_partition,
    chain_witness,
    fiber_tangent_dim,
    fuse_until_nonderogatory,
    fusion_displacement,
    nilpotent_spanning_set,
    nonderogatory_member,
    random_basis,
    random_disc_points,
    random_nilpotent,
    random_realization,
    random_spec,
)
from .geometry import (
    in_gn,
    in_omega,
    jacobian_rank,
    pi_n,
    sigma,
    sigma_jacobian,
    spectral_radius,
)
from .matrix import (
    RANK_TOL,
    ROOT_TOL,
    InputError,
    NumericalError,
    char_poly,
    conjugate,
    eigenvalues,
    rank,
)

# Shared knobs every suite understands, set from --tol-eig / --tol-rank.
COMMON_TOLERANCES = {"eig": ROOT_TOL, "rank": RANK_TOL}

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n_range: tuple = (2, 5)
    cases: int = 200
    seed: int = 1
    radius: float = 0.9
    tolerances: dict = field(default_factory=dict)
    margin: float = 0.0

    def __post_init__(self):
        if self.suite not in SUITES:
            raise InputError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        lo, hi = self.n_range
        if not (isinstance(lo, int) and isinstance(hi, int) and 2 <= lo <= hi):
            raise InputError(f"n range must be integers 2 <= A <= B, got {self.n_range}")
        if not isinstance(self.cases, int) or self.cases < 1:
            raise InputError("cases must be a positive integer")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MAX_SEED:
            raise InputError("seed must be an integer in [0, 2^64)")
        if not 0 < self.radius < 1:
            raise InputError("radius must lie in (0, 1)")
        if not 0 <= self.margin < 1:
            raise InputError("margin must lie in [0, 1)")
        known = set(SUITES[self.suite].checks) | set(COMMON_TOLERANCES)
        for name, tol in self.tolerances.items():
            if name not in known:
                raise InputError(f"suite {self.suite!r} has no tolerance named {name!r}")
            if not (isinstance(tol, (int, float)) and np.isfinite(tol) and tol > 0):
                raise InputError(f"tolerance {name!r} must be a positive number")
        object.__setattr__(self, "n_range", (lo, hi))
        object.__setattr__(self, "tolerances", dict(self.tolerances))

    @property
    def ns(self):
        return range(self.n_range[0], self.n_range[1] + 1)

    def tol(self, name) -> float:
        if name in self.tolerances:
            return float(self.tolerances[name])
        if name in COMMON_TOLERANCES:
            return COMMON_TOLERANCES[name]
        return SUITES[self.suite].checks[name]

    def echo(self) -> dict:
        tols = {name: self.tol(name) for name in SUITES[self.suite].checks}
        tols.update({name: self.tol(name) for name in COMMON_TOLERANCES})
        return {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "cases": self.cases,
            "seed": self.seed,
            "radius": self.radius,
            "margin": self.margin,
            "tolerances": tols,
        }


@dataclass
class Report:
    suite: str
    config: dict
    records: list
    max_residual: float
    max_residuals: dict
    passed: bool
    failures: list
    wall_time: float

    def to_dict(self, wall_time=True) -> dict:
        out = {
            "suite": self.suite,
            "config": self.config,
            "records": self.records,
            "max_residual": self.max_residual,
            "max_residuals": self.max_residuals,
            "pass": self.passed,
            "failures": self.failures,
        }
        if wall_time:
            out["wall_time"] = self.wall_time
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [f"{k}={v:.3e}" for k, v in self.max_residuals.items()]
        line = f"{status} {self.suite}: {len(self.records)} cases, " + ", ".join(parts)
        return line + f" ({self.wall_time:.2f}s)"


@dataclass(frozen=True)
class _Suite:
    run_case: object
    checks: dict
    description: str
    fixed_n: tuple = None


def case_rng(seed, n, index) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, n, index]))


def digest(*arrays) -> str:
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(np.asarray(a, dtype=complex))
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()[:16]


def _relmax(x, ref) -> float:
    return float(np.max(np.abs(x)) / max(1.0, float(np.max(np.abs(ref)))))


def _seed_of(rng) -> int:
    return int(rng.integers(2**63))


def random_map(rng, normalized=False):
    """Random Mobius map, Blaschke product (degree <= 3) or polynomial self-map.

    ``normalized=True`` draws maps with ``f(0) = 0`` and ``f'(0) != 0``.
    """
    kind = int(rng.integers(3))
    theta = float(rng.uniform(0, 2 * np.pi))
    if kind == 0:
        c = 0j if normalized else complex(random_disc_points(rng, 1, 0.7)[0])
        return Mobius(c, theta)
    if kind == 1:
        d = int(rng.integers(1, 4))
        zeros = list(random_disc_points(rng, d, 0.7))
        if normalized:
            zeros[0] = 0j
        return Blaschke(tuple(zeros), theta)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    if normalized:
        c[0] = 0.0
        c[1] = (0.5 + 0.5 * rng.uniform()) * np.exp(1j * theta)
    c = c / (np.sum(np.abs(c)) * (1 + 1e-9))
    return Series(tuple(c))


# ---------------------------------------------------------------- suites


def _symmetrization(cfg, n, i, rng):
    if i % 2 == 0:
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    else:
        A = random_realization(n, _seed_of(rng), cfg.radius).realize()
    s = sigma(A)
    lam = eigenvalues(A, cfg.tol("eig"))
    return [A], {"sigma": _relmax(s - pi_n(lam), s)}


def _membership(cfg, n, i, rng):
    if i % 4 == 3:
        A = random_nilpotent(rng, n, 10.0, norm=1e3)
    else:
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        A *= rng.uniform(0.3, 1.7) / spectral_radius(A, cfg.tol("eig"))
    m = cfg.margin
    a = in_omega(A, m, cfg.tol("eig"))
    b = in_gn(sigma(A), m, cfg.tol("eig"))
    res = {"agreement": float(a != b)}
    if i % 4 == 3:
        # nilpotents of any size lie in the ball
        res["nilpotent"] = float(not in_omega(A, 0.0, cfg.tol("eig")))
    return [A], res


def _equivariance(cfg, n, i, rng, method="exact", radius=None):
    f = random_map(rng)
    r = random_realization(n, _seed_of(rng), radius or cfg.radius)
    A = r.realize()
    return [A], {"equivariance": equivariance_residual(f, A, method)}


def _equivariance_series(cfg, n, i, rng):
    return _equivariance(cfg, n, i, rng, "series", min(cfg.radius, 0.8))


DIRECTIONS = 50


def _differential(cfg, n, i, rng):
    f = random_map(rng, normalized=True)
    S = random_basis(rng, n, 10.0)
    flip = bool(rng.integers(2))

    def phi(V):
        D = normalized_differential(f, V.T if flip else V)
        return conjugate(S, D)

    worst = 0.0
    for _ in range(DIRECTIONS):
        V = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        V /= np.linalg.norm(V)
        sv = sigma(V)
        worst = max(worst, _relmax(sigma(phi(V)) - sv, sv))
    cols = []
    for k in range(n * n):
        E = np.zeros((n, n), dtype=complex)
        E.flat[k] = 1.0
        cols.append(phi(E).reshape(-1))
    r = rank(np.column_stack(cols), cfg.tol("rank"))
    return [S], {"sigma": worst, "rank_deficit": float(n * n - r)}


# 8 moduli x 8 phases
ZETAS = (
    np.linspace(0.05, 0.5, 8)[:, None] * np.exp(2j * np.pi * np.arange(8) / 8)[None, :]
).reshape(-1)


def _witness(cfg, n, i, rng):
    canonical = n == 2 and i == 0
    if canonical:
        A = np.array([[0, 1], [0, 0]], dtype=complex)
    else:
        A = random_nilpotent(rng, n, 10.0)
    V, basis = chain_witness(A, cfg.tol("rank"))
    bound = chain = upper = ident = equal = 0.0
    for z in ZETAS:
        M = A + z * V
        target = abs(z) * abs(1 + z)
        r = spectral_radius(M, cfg.tol("eig"))
        r2 = spectral_radius(M @ M, cfg.tol("eig"))
        bound = max(bound, target - r * r)
        chain = max(chain, (target - r2) / max(1.0, r * r))
        # M^2 is scalar on the witness plane, so its characteristic polynomial
        # has a double root, resolved only to about sqrt(eps) * |M|^2
        upper = max(upper, (r2 - r * r) / max(1.0, np.linalg.norm(M) ** 2))
        M2v = M @ (M @ basis[:, :2])
        ident = max(ident, _relmax(M2v - z * (1 + z) * basis[:, :2], M2v))
        if canonical:
            equal = max(equal, abs(r * r - target))
    res = {
        "bound": max(bound, 0.0),
        "chain": max(chain, 0.0),
        "chain_upper": max(upper, 0.0),
        "identity": ident,
    }
    if canonical:
        res["canonical"] = equal
    return [A], res


def _fusion(cfg, n, i, rng):
    r = random_realization(n, _seed_of(rng), cfg.radius, derogatory=True)
    eps = float(rng.uniform(0.1, 1.0))
    steps = fuse_until_nonderogatory(r, eps)
    s0 = sigma(r.realize())
    drift = 0.0
    stalls = 0
    for a, b in zip(steps, steps[1:]):
        drift = max(drift, _relmax(sigma(b.realize()) - s0, s0))
        if sum(map(len, (s for _, s in b.spec.blocks))) >= sum(
            map(len, (s for _, s in a.spec.blocks))
        ):
            stalls += 1
    last = steps[-1].realize()
    terminal = jacobian_rank(last, cfg.tol("rank")) != n or not steps[-1].spec.is_nonderogatory()
    disp = max(
        fusion_displacement(a, next(mu for mu, s in a.spec.blocks if len(s) > 1), eps)
        for a in steps[:-1]
    )
    return [r.basis, r.spec.matrix()], {
        "sigma": drift,
        "block_count": float(stalls + (len(steps) < 2)),
        "terminal": float(terminal),
        "info_steps": len(steps) - 1,
        "info_displacement": disp,
    }


def _random_grouped_zetas(rng, n, radius):
    parts = _random_partition(rng, n)
    values = random_disc_points(rng, len(parts), radius, min_sep=0.1)
    z = np.concatenate([np.full(k, v) for k, v in zip(parts, values)])
    return rng.permutation(z)


def _fiber(cfg, n, i, rng):
    z = _random_grouped_zetas(rng, n, cfg.radius)
    A = nonderogatory_member(z, random_basis(rng, n, 10.0))
    target = pi_n(z)
    return [z, A], {
        "sigma": _relmax(sigma(A) - target, target),
        "jacobian_rank": float(abs(jacobian_rank(A, cfg.tol("rank")) - n)),
        "tangent_dim": float(abs(fiber_tangent_dim(A, cfg.tol("rank")) - (n * n - n))),
    }


def _codimension(cfg, n, i, rng):
    rt = cfg.tol("rank")
    A = random_realization(n, _seed_of(rng), cfg.radius, derogatory=False).realize()
    B = random_realization(n, _seed_of(rng), cfg.radius, derogatory=True).realize()
    res = {
        "nonderogatory": float(abs(fiber_tangent_dim(A, rt) - (n * n - n))),
        "derogatory": float(fiber_tangent_dim(B, rt) <= n * n - n),
    }
    if i == 0:
        res["zero"] = float(fiber_tangent_dim(np.zeros((n, n)), rt) <= n * n - n)
        T = nilpotent_spanning_set(n)
        span = rank(np.array([t.reshape(-1) for t in T]), rt)
        res["spanning"] = float(abs(span - (n * n - n + 1)))
        res["spanning_nilpotent"] = max(float(np.max(np.abs(sigma(t)))) for t in T)
    return [A, B], res


def _squaremap(cfg, n, i, rng):
    square = Series((0, 0, 1))
    A = random_nilpotent(rng, 2, 10.0, norm=float(rng.uniform(0.1, 10.0)))
    A2 = apply_exact(square, A)
    ratio = float(np.linalg.norm(A2) / np.linalg.norm(A) ** 2)
    z = random_disc_points(rng, 2, cfg.radius, min_sep=0.1)
    D = np.diag(z)
    return [A, D], {
        "collapse": ratio,
        "fiber": equivariance_residual(square, D),
    }


def _automorphisms(cfg, n, i, rng):
    A = random_realization(n, _seed_of(rng), cfg.radius).realize()
    m = Mobius(complex(random_disc_points(rng, 1, 0.7)[0]), float(rng.uniform(0, 2 * np.pi)))
    S = random_basis(rng, n, 100.0)
    aut = OmegaAut(m, S, bool(rng.integers(2)))
    B = omega_automorphism(aut, A)
    back = omega_automorphism(aut.inverse(), B)
    s = sigma(A)
    lam = eigenvalues(A, cfg.tol("eig"))
    target = pi_n(m(lam))
    return [A, S], {
        "roundtrip": _relmax(back - A, A),
        "pushforward": _relmax(sigma(B) - target, target),
        "transpose": _relmax(sigma(A.T) - s, s),
        "conjugation": _relmax(sigma(conjugate(S, A)) - s, s),
    }


def _blaschke(cfg, n, i, rng):
    d = int(rng.integers(1, 6))
    f = Blaschke(tuple(random_disc_points(rng, d, 0.95)), float(rng.uniform(0, 2 * np.pi)))
    t = np.exp(2j * np.pi * np.arange(360) / 360)
    return [np.array(f.zeros)], {
        "modulus": float(np.max(np.abs(np.abs(f(t)) - 1))),
        "info_degree": f.degree,
    }


def charpoly_by_cofactors(A) -> list:
    """det(xI - A) for an integer matrix by Laplace expansion, in exact
    integer arithmetic; ascending coefficient list."""
    n = len(A)

    def pmul(p, q):
        out = [0] * (len(p) + len(q) - 1)
        for a, x in enumerate(p):
            for b, y in enumerate(q):
                out[a + b] += x * y
        return out

    def padd(p, q, sign=1):
        out = [0] * max(len(p), len(q))
        for k, x in enumerate(p):
            out[k] += x
        for k, y in enumerate(q):
            out[k] += sign * y
        return out

    M = [[[(-A[r][c]), 1] if r == c else [-A[r][c]] for c in range(n)] for r in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return M[rows[0]][cols[0]]
        acc = [0]
        for k, c in enumerate(cols):
            minor = det(rows[1:], cols[:k] + cols[k + 1 :])
            acc = padd(acc, pmul(M[rows[0]][c], minor), 1 if k % 2 == 0 else -1)
        return acc

    return det(list(range(n)), list(range(n)))


def _oracles(cfg, n, i, rng):
    res = {}
    # analytic sigma-Jacobian against central differences
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    J = sigma_jacobian(A)
    h = 1e-5
    fd = np.empty_like(J)
    for k in range(n * n):
        E = np.zeros((n, n), dtype=complex)
        E.flat[k] = h
        fd[:, k] = (sigma(A + E) - sigma(A - E)) / (2 * h)
    res["jacobian"] = float(np.linalg.norm(J - fd) / np.linalg.norm(J))
    # the two calculus routes against each other
    f = random_map(rng)
    B = random_realization(n, _seed_of(rng), min(cfg.radius, 0.8)).realize()
    res["calculus"] = float(np.max(np.abs(apply_series(f, B) - apply_exact(f, B))))
    # composition of Mobius maps is respected by the calculus
    g1 = Mobius(complex(random_disc_points(rng, 1, 0.5)[0]), float(rng.uniform(0, 6)))
    g2 = Mobius(complex(random_disc_points(rng, 1, 0.5)[0]), float(rng.uniform(0, 6)))
    spec = JordanSpec(tuple((z, (1,)) for z in random_disc_points(rng, n, cfg.radius, 0.1)))
    C = JordanRealization(spec, random_basis(rng, n, 10.0)).realize()
    lhs = apply_exact(g1.compose(g2), C)
    rhs = apply_exact(g1, apply_exact(g2, C))
    res["composition"] = _relmax(lhs - rhs, lhs)
    # Faddeev-LeVerrier against exact cofactor expansion (small integer matrices)
    if n <= 4:
        K = rng.integers(-9, 10, size=(n, n))
        exact = charpoly_by_cofactors(K.tolist())
        got = char_poly(K).array
        res["charpoly"] = float(np.max(np.abs(got - np.array(exact, dtype=float))))
        inputs = [A, B, C, K]
    else:
        inputs = [A, B, C]
    return inputs, res


SUITES = {
    "symmetrization": _Suite(
        _symmetrization, {"sigma": 1e-8},
        "sigma(A) against the elementary symmetric functions of the eigenvalues"),
    "membership": _Suite(
        _membership, {"agreement": 0.5, "nilpotent": 0.5},
        "spectral-radius membership agrees with root membership of sigma(A)"),
    "equivariance": _Suite(
        _equivariance, {"equivariance": 1e-8},
        "sigma(f(A)) = pi_n(f(eigenvalues)) with the exact calculus"),
    "equivariance-series": _Suite(
        _equivariance_series, {"equivariance": 1e-6},
        "the same identity with the truncated series, spectral radius <= 0.8"),
    "differential": _Suite(
        _differential, {"sigma": 1e-5, "rank_deficit": 0.5},
        "normalized differential at 0 preserves sigma and is invertible"),
    "witness": _Suite(
        _witness,
        {"bound": 1e-10, "chain": 1e-10, "chain_upper": 1e-6, "identity": 1e-8,
         "canonical": 1e-12},
        "|z||1+z| <= rho(A + zV)^2 for the chain-swapping witness V"),
    "fusion": _Suite(
        _fusion, {"sigma": 1e-10, "block_count": 0.5, "terminal": 0.5},
        "merging Jordan blocks keeps sigma and ends non-derogatory"),
    "fiber": _Suite(
        _fiber, {"sigma": 1e-9, "jacobian_rank": 0.5, "tangent_dim": 0.5},
        "constructed fiber members are non-derogatory with the right tangent space"),
    "codimension": _Suite(
        _codimension, {"nonderogatory": 0.5, "derogatory": 0.5, "zero": 0.5,
                       "spanning": 0.5, "spanning_nilpotent": 1e-15},
        "fiber tangent dimension n^2 - n exactly at non-derogatory points"),
    "squaremap": _Suite(
        _squaremap, {"collapse": 1e-10, "fiber": 1e-12},
        "A -> A^2 sends 2x2 nilpotents to 0", fixed_n=(2, 2)),
    "automorphisms": _Suite(
        _automorphisms, {"roundtrip": 1e-8, "pushforward": 1e-8, "transpose": 1e-8,
                         "conjugation": 1e-8},
        "inverse composition and sigma-invariance of the ball automorphisms"),
    "blaschke": _Suite(
        _blaschke, {"modulus": 1e-12},
        "finite Blaschke products have modulus 1 on the circle", fixed_n=(2, 2)),
    "oracles": _Suite(
        _oracles, {"jacobian": 1e-6, "calculus": 1e-6, "composition": 1e-7, "charpoly": 1e-12},
        "cross-checks against finite differences, the other calculus and cofactors"),
}


def run_suite(cfg: SuiteConfig) -> Report:
    suite = SUITES[cfg.suite]
    start = time.perf_counter()
    ns = range(suite.fixed_n[0], suite.fixed_n[1] + 1) if suite.fixed_n else cfg.ns
    records = []
    failures = []
    for n in ns:
        for i in range(cfg.cases):
            rng = case_rng(cfg.seed, n, i)
            rec = {"n": n, "case": i}
            try:
                inputs, res = suite.run_case(cfg, n, i, rng)
            except (InputError, NumericalError) as exc:
                rec["error"] = f"{type(exc).__name__}: {exc}"
                failures.append(f"n={n} case={i}: {rec['error']}")
                records.append(rec)
                continue
            rec["digest"] = digest(*inputs)
            rec["residuals"] = {k: float(v) for k, v in res.items() if not k.startswith("info_")}
            info = {k[5:]: v for k, v in res.items() if k.startswith("info_")}
            if info:
                rec["info"] = info
            records.append(rec)
    maxima = {}
    for name in suite.checks:
        vals = [r["residuals"][name] for r in records if name in r.get("residuals", {})]
        if vals:
            maxima[name] = max(vals)
    for name, worst in maxima.items():
        tol = cfg.tol(name)
        if not worst <= tol:
            bad = [r for r in records if r.get("residuals", {}).get(name, -1.0) > tol]
            failures.append(
                f"{name}: {len(bad)} case(s) above {tol:g}, worst {worst:.3e} "
                f"(n={bad[0]['n']} case={bad[0]['case']})"
            )
    primary = next(iter(suite.checks))
    return Report(
        suite=cfg.suite,
        config=cfg.echo(),
        records=records,
        max_residual=maxima.get(primary, 0.0),
        max_residuals=maxima,
        passed=not failures,
        failures=failures,
        wall_time=time.perf_counter() - start,
    )


def run_all(**kwargs) -> list:
    return [run_suite(SuiteConfig(suite=name, **kwargs)) for name in SUITES]
