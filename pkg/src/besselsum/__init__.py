"""Bessel-function sums that equal Weber-Schafheitlin integrals."""

from .errors import BesselSumError, ConvergenceError, DomainError, PoleError
from .fourier import (HSpec, coefficient_A, eval_h, fourier_coefficient_closed,
                      fourier_coefficient_numeric, fourier_partial_sum,
                      gegenbauer_cosine_integral_check)
from .kernel import kl_closed_form, knl_radial, resolution_partial_sum
from .quadrature import QuadResult, integrate_bessel_product, integrate_finite_cosine
from .series import (SumSpec, TruncationReport, conjecture_probe, convergence_exponent,
                     corollary1_sum, corollary2_sum, hyp2f1_via_bessel_sum, sum_S_k,
                     theorem1_rhs, truncation_R_N, truncation_T_N)
from .special import (bessel_j, bessel_j_scaled, gamma, gegenbauer, gegenbauer_quadratic_form,
                      hyp2f1, pochhammer, rgamma)
from .weber import (IntegralSpec, Validity, Verdict, check_conditions,
                    corollary2_closed_form, integral_closed_form)

__version__ = "0.1.0"
