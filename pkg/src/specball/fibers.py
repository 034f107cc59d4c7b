"""Jordan structure, fibers of the symmetrization map and their constructions.

Basis convention for a :class:`JordanRealization`: the columns of ``basis``
list the Jordan chains block by block in the order of ``spec.blocks``. Inside
a chain of length k the columns are ``v_1, ..., v_k`` with ``v_1`` the
eigenvector, ``A v_1 = lam v_1`` and ``A v_t = lam v_t + v_(t-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import in_gn, jacobian_rank, pi_n, point_roots, sigma
from .matrix import (
    RANK_TOL,
    InputError,
    NumericalError,
    as_matrix,
    as_vector,
    conjugate,
    eigenvalues,
    rank,
    solve,
)


@dataclass(frozen=True)
class JordanSpec:
    """Distinct eigenvalues, each with its Jordan block sizes (descending)."""

    blocks: tuple

    def __post_init__(self):
        norm = []
        for lam, sizes in self.blocks:
            lam = complex(lam)
            sizes = tuple(sorted((int(s) for s in sizes), reverse=True))
            if not np.isfinite(lam):
                raise InputError("eigenvalue must be finite")
            if not sizes or min(sizes) < 1:
                raise InputError(f"block sizes must be positive, got {sizes}")
            norm.append((lam, sizes))
        if not norm:
            raise InputError("empty Jordan spec")
        eigs = [lam for lam, _ in norm]
        if len(set(eigs)) != len(eigs):
            raise InputError("eigenvalues of a Jordan spec must be pairwise distinct")
        object.__setattr__(self, "blocks", tuple(norm))
        if self.n < 2:
            raise InputError("total size must be >= 2")

    @property
    def n(self) -> int:
        return sum(sum(s) for _, s in self.blocks)

    @property
    def spectrum(self) -> np.ndarray:
        """Eigenvalues repeated by algebraic multiplicity."""
        return np.array([lam for lam, s in self.blocks for _ in range(sum(s))], dtype=complex)

    def block_count(self, lam=None) -> int:
        if lam is None:
            return sum(len(s) for _, s in self.blocks)
        return len(self.blocks[self.index_of(lam)][1])

    def index_of(self, lam, tol=1e-12) -> int:
        for i, (mu, _) in enumerate(self.blocks):
            if abs(mu - lam) <= tol * max(1.0, abs(lam)):
                return i
        raise InputError(f"{lam} is not an eigenvalue of this spec")

    def is_nonderogatory(self) -> bool:
        return all(len(s) == 1 for _, s in self.blocks)

    def chains(self):
        """Yield ``(eigenvalue, first column, length)`` for each Jordan chain."""
        col = 0
        for lam, sizes in self.blocks:
            for s in sizes:
                yield lam, col, s
                col += s

    def matrix(self) -> np.ndarray:
        J = np.zeros((self.n, self.n), dtype=complex)
        for lam, start, size in self.chains():
            for t in range(size):
                J[start + t, start + t] = lam
                if t:
                    J[start + t - 1, start + t] = 1.0
        return J


def jordan_block(lam, size) -> np.ndarray:
    return JordanSpec(((lam, (size,)),)).matrix() if size >= 2 else np.array([[complex(lam)]])


@dataclass(frozen=True)
class JordanRealization:
    spec: JordanSpec
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        B = as_matrix(self.basis)
        if B.shape[0] != self.spec.n:
            raise InputError(f"basis is {B.shape[0]}x{B.shape[0]}, spec needs n={self.spec.n}")
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    def realize(self) -> np.ndarray:
        try:
            return conjugate(self.basis, self.spec.matrix())
        except NumericalError as exc:
            raise InputError(f"basis is numerically singular: {exc}") from exc


@dataclass(frozen=True)
class Cluster:
    center: complex
    algebraic_mult: int
    weyr: tuple
    block_sizes: tuple


@dataclass(frozen=True)
class EigenStructure:
    clusters: tuple

    @property
    def n(self) -> int:
        return sum(c.algebraic_mult for c in self.clusters)

    def is_nonderogatory(self) -> bool:
        return all(len(c.block_sizes) == 1 for c in self.clusters)

    def to_spec(self) -> JordanSpec:
        return JordanSpec(tuple((c.center, c.block_sizes) for c in self.clusters))


@dataclass(frozen=True)
class FiberHandle:
    """A fiber ``{A : rho(A) < 1, sigma(A) = z}`` identified by its point z."""

    z: np.ndarray

    def __post_init__(self):
        z = as_vector(self.z, min_len=2)
        if not in_gn(z):
            raise InputError("fiber point is not in the symmetrized polydisc")
        object.__setattr__(self, "z", z)

    @classmethod
    def of(cls, zetas):
        return cls(pi_n(zetas))

    def residual(self, A) -> float:
        return float(np.max(np.abs(sigma(A) - self.z)))


def conjugate_partition(weyr) -> tuple:
    weyr = list(weyr)
    if not weyr:
        return ()
    return tuple(sum(1 for w in weyr if w > b) for b in range(weyr[0]))


def _shifted_power_ranks(A, lam, m, rank_tol):
    # Each power is ranked against ||P_(k-1)|| ||A - lam I||, the size of the
    # rounding it inherits; the power itself may be nothing but noise. Once
    # the rank stops dropping it stays put.
    n = A.shape[0]
    N = A - lam * np.eye(n)
    nN = max(float(np.linalg.norm(N)), float(np.linalg.norm(A)))
    P = np.eye(n, dtype=complex)
    ranks = [n]
    for _ in range(m):
        ref = float(np.linalg.norm(P)) * nN
        P = P @ N
        r = rank(P, rank_tol, scale=ref) if ref > 0 else 0
        ranks.append(r)
        if r == ranks[-2] or r == 0:
            ranks.extend([r] * (m + 1 - len(ranks)))
            break
    return ranks


def _refine_centers(A, groups, centers, iters=8):
    """Newton refinement of multiple-eigenvalue centers from power sums.

    With multiplicities fixed, ``tr(A^k) = sum_i m_i c_i^k``. Only the centers
    of groups of size >= 2 are unknowns (k = 1..#unknowns); simple roots are
    well conditioned and kept. Mean-of-roots centers of a large cluster are
    far less accurate than these traces.
    """
    centers = np.array(centers, dtype=complex)
    mults = np.array([len(g) for g in groups])
    unknown = np.flatnonzero(mults > 1)
    d = unknown.size
    if d == 0:
        return centers
    n = A.shape[0]
    P = np.eye(n, dtype=complex)
    p = np.empty(d, dtype=complex)
    for k in range(d):
        P = P @ A
        p[k] = np.trace(P)
    ks = np.arange(1, d + 1)
    for _ in range(iters):
        pw = centers[None, :] ** ks[:, None]
        F = (pw * mults[None, :]).sum(axis=1) - p
        cu = centers[unknown]
        Jm = ks[:, None] * mults[unknown][None, :] * cu[None, :] ** (ks[:, None] - 1)
        try:
            step = np.linalg.solve(Jm, F)
        except np.linalg.LinAlgError:
            break
        centers[unknown] = cu - step
        if np.max(np.abs(step)) <= 4 * np.finfo(float).eps * max(1.0, np.max(np.abs(cu))):
            break
    return centers


def _agglomerate(A, roots, cluster_tol, scale, rank_tol, known=None):
    """Partition the roots using the single-linkage merge tree.

    A perturbed m-fold eigenvalue shows up as m roots spread over a radius of
    order delta^(1/m); a tree node of size m is accepted when its diameter
    fits that allowance and the power ``(A - c I)^m`` has the rank ``n - m``
    of an isolated m-fold eigenvalue. The center ``c`` is the trace minus the
    other eigenvalues, using ``known`` group centers where available. Nodes
    tighter than ``cluster_tol`` are always accepted. Each root goes to its
    highest accepted ancestor.
    """
    n = roots.size
    delta = cluster_tol / scale
    trace = np.trace(A)
    known = known or {}

    def center(G):
        if len(G) == 1:
            return roots[G[0]]
        Gs = set(G)
        rest = 0j
        used = set()
        for H, c in known.items():
            if not Gs.intersection(H):
                rest += len(H) * c
                used.update(H)
        rest += sum(roots[j] for j in range(n) if j not in Gs and j not in used)
        return (trace - rest) / len(G)

    pairs = sorted(
        (abs(roots[i] - roots[j]), i, j) for i in range(n) for j in range(i + 1, n)
    )
    owner = list(range(n))
    members = {i: (i,) for i in range(n)}
    best = {i: (i,) for i in range(n)}
    node = n
    for _, i, j in pairs:
        a, b = owner[i], owner[j]
        if a == b:
            continue
        merged = tuple(sorted(members[a] + members[b]))
        m = len(merged)
        pts = roots[list(merged)]
        diam = float(np.max(np.abs(pts[:, None] - pts[None, :])))
        ok = diam < cluster_tol
        if not ok and diam <= 2.0 * scale * delta ** (1.0 / m):
            ok = _shifted_power_ranks(A, center(merged), m, rank_tol)[-1] == n - m
        for k in merged:
            owner[k] = node
        members[node] = merged
        del members[a], members[b]
        if ok:
            for k in merged:
                best[k] = merged
        node += 1
    groups = list(dict.fromkeys(best[k] for k in range(n)))
    return groups, [center(G) for G in groups]


def eigen_structure(A, cluster_tol=None, rank_tol=RANK_TOL) -> EigenStructure:
    """Cluster the eigenvalues of ``A`` and read block sizes off rank sequences.

    For each cluster with center ``lam`` and multiplicity ``m`` the ranks
    ``r_k = rank((A - lam I)^k)``, ``k = 0..m`` give the Weyr characteristic
    ``w_k = r_(k-1) - r_k`` (number of blocks of size >= k); the block sizes
    are its conjugate partition.

    Eigenvalues closer than ``cluster_tol`` (default ``1e-7 max(1, ||A||_F)``)
    are always grouped. Larger groups, which a root finder produces around a
    defective eigenvalue, are accepted only when the rank of the shifted power
    confirms the multiplicity.

    Raises
    ------
    NumericalError
        when the rank data of a cluster is inconsistent with its size; a
        larger ``cluster_tol`` or ``rank_tol`` may help.
    """
    A = as_matrix(A)
    n = A.shape[0]
    scale = max(1.0, float(np.linalg.norm(A)))
    if cluster_tol is None:
        cluster_tol = 1e-7 * scale
    roots = eigenvalues(A)
    groups, centers = _agglomerate(A, roots, cluster_tol, scale, rank_tol)
    centers = _refine_centers(A, groups, centers)
    # second pass: candidate centers now deflate with the refined ones
    known = {G: c for G, c in zip(groups, centers) if len(G) > 1}
    groups, centers = _agglomerate(A, roots, cluster_tol, scale, rank_tol, known)
    centers = _refine_centers(A, groups, centers)
    clusters = []
    for g, lam in sorted(zip(groups, centers), key=lambda gc: min(gc[0])):
        m = len(g)
        lam = complex(lam)
        r = _shifted_power_ranks(A, lam, m, rank_tol)
        weyr = tuple(r[k - 1] - r[k] for k in range(1, m + 1))
        weyr = tuple(w for w in weyr if w > 0)
        if r[m] != n - m or any(b > a for a, b in zip(weyr, weyr[1:])):
            raise NumericalError(
                f"inconsistent structure at {lam:.6g}: multiplicity {m}, ranks {r}; "
                "try a larger cluster_tol"
            )
        clusters.append(Cluster(lam, m, weyr, conjugate_partition(weyr)))
    return EigenStructure(tuple(clusters))


def is_nonderogatory(A, cluster_tol=None, rank_tol=RANK_TOL) -> bool:
    return eigen_structure(A, cluster_tol, rank_tol).is_nonderogatory()


def nonderogatory_via_jacobian(A, rank_tol=RANK_TOL) -> bool:
    A = as_matrix(A)
    return jacobian_rank(A, rank_tol) == A.shape[0]


def geometric_multiplicity(A, lam, rank_tol=RANK_TOL) -> int:
    A = as_matrix(A)
    n = A.shape[0]
    return n - rank(A - lam * np.eye(n), rank_tol, scale=max(1.0, float(np.linalg.norm(A))))


def fiber_tangent_dim(A, rank_tol=RANK_TOL) -> int:
    A = as_matrix(A)
    return A.shape[0] ** 2 - jacobian_rank(A, rank_tol)


def jordan_assemble(spec: JordanSpec, basis=None):
    """Build ``basis @ J(spec) @ basis^-1``; returns the matrix and its realization."""
    if basis is None:
        basis = np.eye(spec.n, dtype=complex)
    r = JordanRealization(spec, basis)
    return r.realize(), r


def nonderogatory_spec(zetas) -> JordanSpec:
    """One Jordan chain per distinct value, of length equal to its multiplicity."""
    zetas = as_vector(zetas, min_len=2)
    counts = {}
    for z in zetas:
        counts[complex(z)] = counts.get(complex(z), 0) + 1
    return JordanSpec(tuple((lam, (m,)) for lam, m in counts.items()))


def nonderogatory_member(zetas, basis=None) -> np.ndarray:
    """The non-derogatory matrix of the fiber over ``pi_n(zetas)`` fixed by ``basis``.

    Every non-derogatory element of that fiber arises this way for some basis.
    """
    zetas = as_vector(zetas, min_len=2)
    if np.any(np.abs(zetas) >= 1):
        raise InputError("all zetas must lie in the open unit disc")
    A, _ = jordan_assemble(nonderogatory_spec(zetas), basis)
    return A


def group_equal_roots(roots, tol) -> np.ndarray:
    """Replace roots closer than ``tol`` (single linkage) by their mean.

    A root finder returns a k-fold root as k points spread by about
    eps^(1/k); merging them restores exact equality, which the fiber
    constructions use to decide the Jordan chains.
    """
    roots = np.array(as_vector(roots), dtype=complex)
    label = list(range(roots.size))
    for i in range(roots.size):
        for j in range(i + 1, roots.size):
            if abs(roots[i] - roots[j]) < tol and label[i] != label[j]:
                old, new = label[j], label[i]
                label = [new if x == old else x for x in label]
    out = roots.copy()
    for lab in set(label):
        idx = [k for k, x in enumerate(label) if x == lab]
        out[idx] = roots[idx].mean()
    return out


def nonderogatory_member_over(z, basis=None, repeat_tol=1e-6) -> np.ndarray:
    """:func:`nonderogatory_member` for a point ``z`` of the symmetrized polydisc.

    The roots of the attached polynomial closer than ``repeat_tol`` are taken
    to be one repeated eigenvalue.
    """
    z = as_vector(z, min_len=2)
    if not in_gn(z):
        raise InputError("the point does not lie in the symmetrized polydisc")
    return nonderogatory_member(group_equal_roots(point_roots(z), repeat_tol), basis)


def fuse_blocks(r: JordanRealization, lam, eps) -> JordanRealization:
    """Merge the two largest Jordan blocks at ``lam`` by a rank-one perturbation.

    With ``v_1..v_k`` and ``w_1..w_l`` the two chains, the new map sends
    ``v_1`` to ``lam v_1 + eps w_l`` and agrees with the old one elsewhere. The
    chain ``eps w_1, ..., eps w_l, v_1, ..., v_k`` is then a single Jordan
    chain of length k + l, so the spectrum (and sigma) is unchanged.
    """
    if not eps > 0:
        raise InputError("eps must be positive")
    spec = r.spec
    i = spec.index_of(lam)
    lam, sizes = spec.blocks[i]
    if len(sizes) < 2:
        raise InputError(f"eigenvalue {lam} has a single Jordan block")
    chains = [(mu, c, s) for mu, c, s in spec.chains()]
    at_lam = [ch for ch in chains if ch[0] == lam]
    (_, vc, k), (_, wc, l) = at_lam[0], at_lam[1]
    B = np.array(r.basis)
    fused = np.concatenate((eps * B[:, wc : wc + l], B[:, vc : vc + k]), axis=1)
    chunks = [fused] + [B[:, c : c + s] for _, c, s in at_lam[2:]]
    chunks.sort(key=lambda ch: -ch.shape[1])
    new_blocks = list(spec.blocks)
    new_blocks[i] = (lam, tuple(ch.shape[1] for ch in chunks))
    new_spec = JordanSpec(tuple(new_blocks))
    cols = []
    for mu, _ in new_spec.blocks:
        if mu == lam:
            cols.extend(chunks)
        else:
            cols.extend(B[:, c : c + s] for m2, c, s in chains if m2 == mu)
    return JordanRealization(new_spec, np.concatenate(cols, axis=1))


def fusion_displacement(r: JordanRealization, lam, eps) -> float:
    """Frobenius norm of the change made by :func:`fuse_blocks` (a rank-one term)."""
    spec = r.spec
    lam = spec.blocks[spec.index_of(lam)][0]
    at_lam = [ch for ch in spec.chains() if ch[0] == lam]
    (_, vc, _), (_, wc, l) = at_lam[0], at_lam[1]
    w_top = r.basis[:, wc + l - 1]
    e = np.zeros(spec.n, dtype=complex)
    e[vc] = 1.0
    row = solve(r.basis.T, e)  # row vc of basis^-1
    return float(eps * np.linalg.norm(w_top) * np.linalg.norm(row))


def fuse_until_nonderogatory(r: JordanRealization, eps):
    """Apply :func:`fuse_blocks` (largest blocks first) until every eigenvalue
    has one block; returns the list of realizations, starting with ``r``."""
    steps = [r]
    while not steps[-1].spec.is_nonderogatory():
        cur = steps[-1]
        lam = next(mu for mu, s in cur.spec.blocks if len(s) > 1)
        steps.append(fuse_blocks(cur, lam, eps))
    return steps


def nilpotent_spanning_set(n) -> list:
    """n^2 - n + 1 linearly independent nilpotent matrices.

    All off-diagonal matrix units, plus the matrix with rows ``(1, -1)`` and
    ``(1, -1)`` in the top-left corner.
    """
    if n < 2:
        raise InputError("n must be >= 2")
    out = []
    for r in range(n):
        for s in range(n):
            if r != s:
                E = np.zeros((n, n), dtype=complex)
                E[r, s] = 1.0
                out.append(E)
    M = np.zeros((n, n), dtype=complex)
    M[:2, :2] = [[1, -1], [1, -1]]
    out.append(M)
    return out


def chain_witness(A, rank_tol=RANK_TOL):
    """For nilpotent ``A != 0`` find ``V`` and a basis with ``A v2 = v1``, ``A v1 = 0``.

    ``V`` swaps ``v1`` and ``v2`` and kills the remaining basis vectors, so
    ``(A + z V)^2`` acts as multiplication by ``z (1 + z)`` on ``v1`` and ``v2``.

    Returns
    -------
    V, basis : ndarray
        ``basis[:, 0] = v1`` and ``basis[:, 1] = v2``.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if rank(A, rank_tol) == 0:
        raise InputError("witness needs a nonzero matrix")
    scale = max(1.0, float(np.linalg.norm(A)))
    if np.max(np.abs(sigma(A))) > 1e-8 * scale ** n:
        raise InputError("witness needs a nilpotent matrix (sigma(A) = 0)")
    # nilpotency index from the rank sequence of powers
    powers = [np.eye(n, dtype=complex), A]
    norm_a = float(np.linalg.norm(A))
    # judge A^k against ||A^(k-1)|| ||A||, not against its own (noise) entries
    while len(powers) <= n and rank(
        powers[-1], rank_tol, scale=np.linalg.norm(powers[-2]) * norm_a
    ) > 0:
        powers.append(powers[-1] @ A)
    top = powers[-2]
    # first column of A^(p-1) with maximal norm; lowest index wins ties
    norms = np.linalg.norm(top, axis=0)
    i = int(np.flatnonzero(norms >= norms.max())[0])
    x = np.zeros(n, dtype=complex)
    x[i] = 1.0
    v2 = powers[-3] @ x
    v2 = v2 / np.linalg.norm(v2)
    v1 = A @ v2
    basis = _complete_basis(np.column_stack([v1, v2]))
    K = np.zeros((n, n), dtype=complex)
    K[0, 1] = K[1, 0] = 1.0
    return conjugate(basis, K), basis


def _complete_basis(C):
    """Extend the columns of C by unit vectors, chosen by row-pivoted elimination."""
    n, k = C.shape
    W = np.array(C, dtype=complex)
    rows = list(range(n))
    pivots = []
    for j in range(k):
        cand = [r for r in rows if r not in pivots]
        r = max(cand, key=lambda r: (abs(W[r, j]), -r))
        if abs(W[r, j]) == 0:
            raise NumericalError("columns are linearly dependent")
        pivots.append(r)
        W[:, j + 1 :] -= np.outer(W[:, j] / W[r, j], W[r, j + 1 :])
    extra = [r for r in rows if r not in pivots]
    E = np.eye(n, dtype=complex)[:, extra]
    return np.concatenate((C, E), axis=1)


def random_basis(rng, n, cond_bound=10.0) -> np.ndarray:
    """U diag(s) W^H with Haar-like unitaries and singular values in [1/cond, 1]."""

    def unitary():
        Z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        Q, R = np.linalg.qr(Z)
        return Q * (np.diag(R) / np.abs(np.diag(R)))

    s = np.exp(rng.uniform(-np.log(cond_bound), 0.0, size=n))
    s[0], s[-1] = 1.0, 1.0 / cond_bound
    return (unitary() * s) @ unitary().conj().T


def random_disc_points(rng, count, radius, min_sep=0.0, max_tries=10000) -> np.ndarray:
    pts = []
    for _ in range(max_tries):
        if len(pts) == count:
            break
        p = radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        if all(abs(p - q) >= min_sep for q in pts):
            pts.append(p)
    if len(pts) < count:
        raise InputError("could not place eigenvalues with the requested separation")
    return np.array(pts)


def _random_partition(rng, m):
    parts = []
    while m:
        s = int(rng.integers(1, m + 1))
        parts.append(s)
        m -= s
    return tuple(sorted(parts, reverse=True))


def random_spec(rng, n, radius=0.9, min_sep=0.1, derogatory=None) -> JordanSpec:
    """Random Jordan spec; ``derogatory=True`` forces an eigenvalue with >= 2
    blocks, ``False`` forces one block per eigenvalue."""
    d = int(rng.integers(1, n + 1))
    if derogatory:
        d = min(d, n - 1)
    cuts = np.sort(rng.choice(np.arange(1, n), size=d - 1, replace=False)) if d > 1 else []
    mults = np.diff(np.concatenate(([0], cuts, [n]))).astype(int)
    if derogatory:
        # some multiplicity must be >= 2 to split into two blocks
        if mults.max() < 2:
            raise AssertionError("unreachable: d <= n-1 forces a multiplicity >= 2")
    eigs = random_disc_points(rng, d, radius, min_sep)
    blocks = []
    for lam, m in zip(eigs, mults):
        if derogatory is False:
            sizes = (int(m),)
        else:
            sizes = _random_partition(rng, int(m))
        blocks.append((lam, sizes))
    if derogatory and all(len(s) < 2 for _, s in blocks):
        k = int(np.argmax(mults))
        m = int(mults[k])
        a = int(rng.integers(1, m))
        blocks[k] = (blocks[k][0], tuple(sorted((a, m - a), reverse=True)))
    return JordanSpec(tuple(blocks))


def random_realization(n, seed, radius=0.9, cond_bound=10.0, min_sep=0.1, derogatory=None):
    if not 0 < radius < 1:
        raise InputError("radius must lie in (0, 1)")
    rng = np.random.default_rng(seed)
    spec = random_spec(rng, n, radius, min_sep, derogatory)
    return JordanRealization(spec, random_basis(rng, n, cond_bound))


def random_in_omega(n, seed, radius=0.9, cond_bound=10.0, min_sep=0.1) -> np.ndarray:
    """Deterministic sample of the spectral unit ball with spectral radius <= radius."""
    return random_realization(n, seed, radius, cond_bound, min_sep).realize()


def random_in_fiber(zetas, seed, cond_bound=10.0) -> np.ndarray:
    zetas = as_vector(zetas, min_len=2)
    rng = np.random.default_rng(seed)
    return nonderogatory_member(zetas, random_basis(rng, zetas.size, cond_bound))


def random_nilpotent(rng, n, cond_bound=10.0, norm=None, nonzero=True) -> np.ndarray:
    """Conjugated nilpotent Jordan matrix with a random block partition.

    ``nonzero=True`` guarantees a block of size >= 2. If ``norm`` is given the
    result is rescaled to that Frobenius norm.
    """
    sizes = _random_partition(rng, n)
    if nonzero and sizes[0] < 2:
        sizes = (2,) + (1,) * (n - 2)
    A = JordanRealization(JordanSpec(((0j, sizes),)), random_basis(rng, n, cond_bound)).realize()
    if norm is not None and np.linalg.norm(A) > 0:
        A = A * (norm / np.linalg.norm(A))
    return A
