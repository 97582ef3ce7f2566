"""Sieved Jacobi orthogonal polynomials on the unit circle and real line.

Builds the sieved families from Verblunsky parameters, the Dunkl-type
differential-reflection operators they are eigenfunctions of, and the
verification suites certifying every identity numerically.
"""

from .errors import (
    CompositionError,
    ConsistencyError,
    DomainError,
    PlanError,
    SievedJacobiError,
    SymmetryError,
    ValidityError,
)
from .laurent import LaurentPoly, SamplePlan, make_plan, max_residual_on_samples
from .dihedral import DihedralWord, GroupElement, compose_group, full_group, relation_suite
from .opuc import CmvTruncation, OpucFamily, VerblunskySequence, h_norm
from .sieve import (
    JacobiParams,
    PhaseTable,
    SievedFamily,
    jacobi_verblunsky,
    psi_case,
    psi_from_case,
    sieved_phi,
    sieved_psi,
    sieved_verblunsky,
    weights,
)
from .rational import RationalCoeff
from .operators import (
    DunklOperator,
    OperatorTerm,
    build_H,
    build_H_hat,
    build_H_tilde,
    build_K,
    build_L,
    build_Y,
    eig_lambda,
    eig_lambda_tilde,
    eig_Lambda,
    eig_mu,
    eig_omega,
    eig_Xi,
    eigenvalue,
    op_algebra,
)
from .realline import (
    SymmetricFamily,
    poly_P,
    poly_Q,
    special_operator,
    special_recurrence_u,
)
from .report import CheckReport
from .verify import (
    QuadratureGrid,
    circle_inner,
    eigen_residual,
    identity_suite,
    orthogonality_suite,
    run_suite,
    selfadjoint_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "CmvTruncation",
    "CompositionError",
    "ConsistencyError",
    "DihedralWord",
    "DomainError",
    "DunklOperator",
    "GroupElement",
    "JacobiParams",
    "LaurentPoly",
    "OperatorTerm",
    "OpucFamily",
    "PhaseTable",
    "PlanError",
    "QuadratureGrid",
    "RationalCoeff",
    "SamplePlan",
    "SievedFamily",
    "SievedJacobiError",
    "SymmetricFamily",
    "SymmetryError",
    "ValidityError",
    "VerblunskySequence",
    "build_H",
    "build_H_hat",
    "build_H_tilde",
    "build_K",
    "build_L",
    "build_Y",
    "circle_inner",
    "compose_group",
    "eig_Lambda",
    "eig_Xi",
    "eig_lambda",
    "eig_lambda_tilde",
    "eig_mu",
    "eig_omega",
    "eigen_residual",
    "eigenvalue",
    "full_group",
    "h_norm",
    "identity_suite",
    "jacobi_verblunsky",
    "make_plan",
    "max_residual_on_samples",
    "op_algebra",
    "orthogonality_suite",
    "poly_P",
    "poly_Q",
    "psi_case",
    "psi_from_case",
    "relation_suite",
    "run_suite",
    "selfadjoint_suite",
    "sieved_phi",
    "sieved_psi",
    "sieved_verblunsky",
    "special_operator",
    "special_recurrence_u",
    "weights",
]
