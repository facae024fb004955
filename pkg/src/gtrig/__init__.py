"""Generalized trigonometric functions, their circle constants, and a
numerical verifier for the identities that relate them."""

from .errors import (
    BracketError,
    DomainError,
    GtrigError,
    NonConvergenceError,
    NonFiniteIntegrandError,
    UnknownIdentityError,
)
from .functions import (
    DEFAULT_CONFIG,
    EvalConfig,
    FunctionValue,
    ParamPair,
    arcsin_pq,
    cos_pq,
    ode_residual,
    pi_pq,
    sin_cos,
    sin_pq,
)
from .identities import (
    P_PANEL,
    PQ_PANEL,
    IdentityReport,
    IdentitySpec,
    dbl_angle_2_3,
    dbl_angle_43_2,
    eval_identity,
    identity_ids,
    identity_specs,
    verify,
)
from .numerics import (
    QuadratureResult,
    agm,
    beta,
    integrate_endpoint_singular,
    log_gamma,
    solve_increasing,
)

__version__ = "0.1.0"

__all__ = [
    "GtrigError",
    "DomainError",
    "BracketError",
    "NonConvergenceError",
    "NonFiniteIntegrandError",
    "UnknownIdentityError",
    "QuadratureResult",
    "integrate_endpoint_singular",
    "log_gamma",
    "beta",
    "agm",
    "solve_increasing",
    "ParamPair",
    "EvalConfig",
    "FunctionValue",
    "DEFAULT_CONFIG",
    "pi_pq",
    "arcsin_pq",
    "sin_pq",
    "cos_pq",
    "sin_cos",
    "ode_residual",
    "IdentitySpec",
    "IdentityReport",
    "P_PANEL",
    "PQ_PANEL",
    "identity_ids",
    "identity_specs",
    "eval_identity",
    "verify",
    "dbl_angle_2_3",
    "dbl_angle_43_2",
    "__version__",
]
