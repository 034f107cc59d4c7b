"""Numerical toolkit for the spectral unit ball.

The spectral unit ball is the set of complex n x n matrices with spectral
radius below one. The package computes the symmetrization map (signed
characteristic coefficients), Jordan structure and fibers of that map, applies
holomorphic self-maps of the disc to matrices, and runs randomized suites that
check the identities relating these objects.
"""

from .calculus import (
    Blaschke,
    Mobius,
    OmegaAut,
    Series,
    apply,
    apply_exact,
    apply_series,
    equivariance_residual,
    normalized_differential,
    omega_automorphism,
)
from .fibers import (
    JordanRealization,
    JordanSpec,
    chain_witness,
    eigen_structure,
    fiber_tangent_dim,
    fuse_blocks,
    fuse_until_nonderogatory,
    is_nonderogatory,
    jordan_assemble,
    nilpotent_spanning_set,
    nonderogatory_member,
)
from .geometry import (
    discriminant,
    in_gn,
    in_jn,
    in_omega,
    pi_n,
    sigma,
    sigma_jacobian,
    spectral_radius,
)
from .matrix import (
    DomainError,
    InputError,
    NumericalError,
    Polynomial,
    char_poly,
    eigenvalues,
    poly_roots,
    rank,
)

__version__ = "0.1.0"
