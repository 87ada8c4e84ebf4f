"""Mechanical checks of the identities and congruences satisfied by the
finite polylogarithms and their companion polynomials.

Every check takes a prime (and its parameters) and returns a
:class:`CheckReport`; :func:`run_suite` runs them over full parameter grids.
"""
from purepolylog.verify.report import CheckReport
from purepolylog.verify.report import SuiteResult
from purepolylog.verify.report import Witness
from purepolylog.verify.classical import verify_classical
from purepolylog.verify.coefficients import verify_compositional_inverse
from purepolylog.verify.coefficients import verify_highest_weight
from purepolylog.verify.coefficients import verify_jacobi_values
from purepolylog.verify.coefficients import verify_periodicity
from purepolylog.verify.coefficients import verify_theta_chain
from purepolylog.verify.coefficients import verify_weight_methods
from purepolylog.verify.coefficients import verify_weight_symmetry
from purepolylog.verify.congruences import verify_auxiliary_identities
from purepolylog.verify.congruences import verify_generalized_inversion
from purepolylog.verify.congruences import verify_polylog_powers
from purepolylog.verify.congruences import verify_polylog_powers_at_zero
from purepolylog.verify.congruences import verify_polylog_scaling
from purepolylog.verify.congruences import verify_polylog_sum
from purepolylog.verify.congruences import verify_product_lemma
from purepolylog.verify.exponential import verify_characterization
from purepolylog.verify.exponential import verify_exponential_product
from purepolylog.verify.exponential import verify_laguerre_differential
from purepolylog.verify.exponential import verify_laguerre_product
from purepolylog.verify.suite import SUPPORTED_CHECKS
from purepolylog.verify.suite import resolve_selection
from purepolylog.verify.suite import run_suite
