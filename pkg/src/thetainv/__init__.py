"""Exact algebra for the twisted Theta-graph invariant over Q(i, sqrt5)."""

from .field import Scalar, ZERO, ONE, I, SQRT5, format_scalar
from .laurent import LaurentPoly, TriLaurent, lp_mul, lp_substitute, tl_substitute3
from .linalg import ExactMatrix, exact_rank, rank_over_Q
from .sl2 import (
    LieElt, TensorSq, TensorSqLaurent, SU2Matrix, bracket, bform, casimir, tsq_mul, ad_of,
    end_trace, triple_trace, theta_weight, bracket_relation_coeff, tr_pair,
)
from .groups import (
    Word, GroupPresentation, Rep, presentation_235, rho_235, rho1_extension, eval_word,
    enumerate_image, circle_weight, sym_power_rep,
)
from .theta import ThetaClass, SThetaElt, DecoratedTheta, normalize_triple, embed_class, w_scalar, w_lie, f_poly
from .cohomology import fox_derivative, cochain_maps, cohomology_dims, invariants_dim, decomposition_check
from .surgery import SurgerySpec, Certificate, z_theta_surgery, cyclic_lift_value, independence_certificate

__version__ = "0.1.0"
