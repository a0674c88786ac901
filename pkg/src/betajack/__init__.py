"""Exact Jack polynomials, b-Hurwitz numbers and beta-ensemble correlators."""

from .errors import *  # noqa: F401,F403
from .ensemble import (CorrelatorRequest, JacobiParams, appendix_identity_check, correlator,
                       f_coefficient, f_pochhammer_form, laguerre_correlator, verify_expansion)
from .hurwitz import HurwitzTable, WeightGF, content_weight_series, hurwitz_table, make_weight
from .maps import (FactorizationQuery, PZPolynomial, attach_vertex,
                   enumerate_colored_monotone_factorizations, jm_class_expansion, lambda_apply,
                   t_table)
from .partitions import (Partition, cell_stats, content, dominance_leq, hat_partition,
                         hook_products, partitions_of, z_of)
from .scalars import ParamContext, Scalar, parse_scalar, render
from .series import TruncatedSeries, laurent_expand_at_infinity, limit_scaled_at_infinity
from .symfun import (FiniteSpecialization, SymmetricFunction, cs_apply, hall_inner,
                     jack_in_powersum, monomial_to_powersum, specialize, verify_inverse_identity)

__version__ = "0.1.0"
