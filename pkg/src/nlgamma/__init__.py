"""nlgamma: the normalized log-gamma function ln(Gamma(x+1))/x, its
higher derivatives by independent cross-validating routes, the special
functions underneath them, and a verification CLI.

Hot kernels live in a compiled extension when one is built, with a
pure-Python fallback selected automatically at import
(``nlgamma.backend_name()`` tells you which).
"""

from ._backend import BACKEND
from .delta import (
    EvalResult,
    MAX_DERIV_ORDER,
    Route,
    asymptotic_leading,
    check_complete_monotonicity,
    delta,
    delta_deriv,
    delta_deriv_at_one,
    delta_deriv_half_integer,
    frac_rep_prop2,
    integral_delta,
    integral_delta_squared,
    recurrence_residual,
)
from .hyp2f1 import ConvergenceError, gauss_2f1, hyp_identity_residual, pochhammer
from .quad import (
    PowerTail,
    QuadConfig,
    QuadResult,
    integrate_finite,
    integrate_unit_split,
    lemma2_transform,
    p1_integral,
)
from .report import IdentityResidual, VerificationReport
from .specfun import (
    CONSTANTS,
    gamma_zero,
    hurwitz_zeta,
    ln_gamma,
    polygamma,
    riemann_zeta,
    upper_incomplete_gamma_int,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "CONSTANTS",
    "ConvergenceError",
    "EvalResult",
    "IdentityResidual",
    "MAX_DERIV_ORDER",
    "PowerTail",
    "QuadConfig",
    "QuadResult",
    "Route",
    "VerificationReport",
    "asymptotic_leading",
    "backend_name",
    "check_complete_monotonicity",
    "delta",
    "delta_deriv",
    "delta_deriv_at_one",
    "delta_deriv_half_integer",
    "frac_rep_prop2",
    "gamma_zero",
    "gauss_2f1",
    "hurwitz_zeta",
    "hyp_identity_residual",
    "integral_delta",
    "integral_delta_squared",
    "integrate_finite",
    "integrate_unit_split",
    "lemma2_transform",
    "ln_gamma",
    "p1_integral",
    "pochhammer",
    "polygamma",
    "recurrence_residual",
    "riemann_zeta",
    "upper_incomplete_gamma_int",
]


def backend_name():
    """Which kernel backend is active: 'cython' or 'python'."""
    return BACKEND
