"""Integrals of products of Hurwitz zeta functions and the O(g) Dirichlet-film Casimir coefficient."""

from .casimir import (
    CasimirReport,
    EpsilonParam,
    K_assembled,
    K_closed,
    amplitude_DD,
    c0,
    c1_assembled,
    c1_closed,
    casimir_report,
    tail_integral,
)
from .closed_form_integrals import (
    SeriesPolicy,
    andersson_integral,
    appendix_sum_S,
    complementary_hurwitz_integral,
    complementary_power_integral,
    integral_I,
    integral_I_integer,
    integral_J,
    integral_J_integer,
    mikolas_integral,
    moment_integral,
    upsilon_term,
)
from .errors import (
    DidNotConverge,
    DivergenceError,
    DomainError,
    NearPoleError,
    NearSingularError,
    NonFiniteError,
    NonFiniteSample,
    PoleError,
    ZetaIntError,
)
from .quadrature import IntegrandKind, IntegrandSpec, QuadratureResult, build_integrand, quad_eval, tanh_sinh
from .special_functions import (
    beta,
    beta_laurent,
    digamma,
    gamma,
    hurwitz_zeta,
    laurent_check,
    log_gamma,
    pochhammer,
    riemann_zeta,
    riemann_zeta_derivative,
    wilton_series,
    zeta1,
    zeta1_taylor,
)
from .values import EvalOptions, LaurentPair, ValueWithError

__version__ = "0.1.0"
