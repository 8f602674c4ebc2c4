"""Exact computer algebra for the quantum Lorentz group and q-Minkowski space."""

from .coordalg import casimir, normal_order
from .functionals import big_R, derive_coordinate_relations, lambda_expansion
from .identities import IdentityId, run_all
from .ncpoly import NCPoly, RewriteSystem
from .parsing import ParseError, parse_expression, parse_scalar
from .scalars import Q, Scalar, q_pow
from .so3q import build_d1, sphere_parameters, verify_so3
from .spectra import BoostLabel, Params, gamma_l, spectrum_table
from .tensors import quantum_metric, spinor_R

__all__ = [
    "BoostLabel",
    "IdentityId",
    "NCPoly",
    "Params",
    "ParseError",
    "Q",
    "RewriteSystem",
    "Scalar",
    "big_R",
    "build_d1",
    "casimir",
    "derive_coordinate_relations",
    "gamma_l",
    "lambda_expansion",
    "normal_order",
    "parse_expression",
    "parse_scalar",
    "q_pow",
    "quantum_metric",
    "run_all",
    "spectrum_table",
    "sphere_parameters",
    "spinor_R",
    "verify_so3",
]
