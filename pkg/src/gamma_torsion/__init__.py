"""Exact Alexander polynomial and Reidemeister torsion toolkit over Q[t, t^-1]."""

from .chain import (
    BasedChainComplex,
    HomologyProfile,
    ModuleDecomposition,
    covering_dim,
    direct_sum,
    elementary,
    homology,
    is_rationally_acyclic,
    jordan_count,
    local_system_dim,
    validate,
)
from .cyclotomic import CyclotomicFactorization, cyclotomic, factor_cyclotomic, is_cyclotomic_product
from .errors import GammaError
from .hypersurface import (
    HypersurfaceData,
    IdentityReport,
    SingularPointData,
    boundary_profile,
    det_phi,
    dimension_bookkeeping,
    error_terms,
    homogeneous_dataset,
    psi_top,
    r_top,
    smooth_dataset,
    verify_corollary,
)
from .laurent import (
    ONE,
    T,
    ZERO,
    Ambiguity,
    LaurentPoly,
    RationalFn,
    UnitClass,
    canonical_representative,
    format_poly,
    format_ratfn,
    gcd,
    involution,
    lcm,
    total_degree,
    unit_equal,
    unit_normalize,
)
from .linalg import Matrix, SmithForm, determinant, rank, smith_normal_form
from .parser import parse_poly, parse_ratfn
from .singularity import (
    BrieskornExponents,
    GlobalParams,
    brieskorn_charpoly,
    brieskorn_milnor_number,
    chi_milnor_fiber,
    global_mu,
    top_h_polynomial,
    xi,
)
from .torsion import (
    basis_change_factor,
    reidemeister_torsion,
    solve_det_phi,
    stabilization_check,
    torsion_from_orders,
)

__version__ = "0.1.0"
