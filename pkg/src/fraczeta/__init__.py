"""Fractional derivatives of the Hurwitz zeta and Jacobi theta functions, with
independent oracles and residual audits of the identities that relate them."""

from .bridge import (DEFAULT_QUADRATURE, QuadratureConfig, completed_zeta_integral,
                     frac_zeta_integral, frac_zeta_integral_value, theta_log_moment,
                     theta_log_moments)
from .core import DEFAULT_BUDGET, MethodResult, SeriesBudget, cpow, gen_binom, sum_series
from .errors import (ConvergenceError, DomainError, FracZetaError, OrderCapError, PoleError,
                     QuadratureError)
from .frac_theta import ThetaVariant, frac_theta_fe, frac_theta_series
from .frac_zeta import (FormulaVariant, FracEvalPoint, SeriesSign, SimplifiedVariant,
                        convolution_identity_residual, frac_hurwitz_fe_rational,
                        frac_hurwitz_fe_simplified, frac_hurwitz_fe_trig,
                        frac_hurwitz_fe_triple, frac_zeta_series)
from .gamma import polygamma, recip_gamma
from .gl import DEFAULT_SCHEDULE, GLSchedule, consistency_sweep, gl_derivative
from .reports import EvalPoint, ResidualReport, Verdict
from .zeta import hurwitz_zeta

__version__ = "0.1.0"
