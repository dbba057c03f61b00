"""Exact certification of the dimension of loci of plane curves through
star configurations, with an experimental extension to P^n."""

from .fields import DEFAULT_PRIME, PrimeField, QQ, RationalField
from .formulas import (TheoremValue, closed_form_dimension, min_upper_bound,
                       pn_upper_bound, upper_bounds)
from .matrices import ExactMatrix
from .polynomials import (HomogeneousPoly, monomials_of_degree, parse_poly,
                          perturbation_coefficient)
from .pnstar import (PnStarConfiguration, build_pn_star, conjecture_row,
                     pn_tangent_lower_bound)
from .starconfig import (GenericityError, LinearForm, ProjectivePoint,
                         StarConfiguration, build_star, hilbert_function,
                         intersection_point, is_general, random_general_forms)
from .tangent import (DimensionCertificate, TangentProblem, build_q_forms,
                      certify, ideal_component_dim, lower_bound_dim_S,
                      evaluation_submatrix_rank, tangent_dim_direct,
                      tangent_dim_points, structured_multipliers)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME", "PrimeField", "QQ", "RationalField",
    "TheoremValue", "closed_form_dimension", "min_upper_bound",
    "pn_upper_bound", "upper_bounds",
    "ExactMatrix",
    "HomogeneousPoly", "monomials_of_degree", "parse_poly",
    "perturbation_coefficient",
    "PnStarConfiguration", "build_pn_star", "conjecture_row",
    "pn_tangent_lower_bound",
    "GenericityError", "LinearForm", "ProjectivePoint", "StarConfiguration",
    "build_star", "hilbert_function", "intersection_point", "is_general",
    "random_general_forms",
    "DimensionCertificate", "TangentProblem", "build_q_forms", "certify",
    "ideal_component_dim", "lower_bound_dim_S", "evaluation_submatrix_rank",
    "tangent_dim_direct", "tangent_dim_points", "structured_multipliers",
]
