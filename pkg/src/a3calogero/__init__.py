"""Root strings of affine/hyperbolic A3 and the extended Calogero potential."""

__version__ = "0.1.0"

from .lattice import (RootVector, SIMPLE_ROOTS, embed, gram_matrix, inner6,  # noqa: E402
                      inner_coeff, is_real_root)
from .weyl import (apply_word, build_affine_closed_form, build_hyperbolic_spectral,  # noqa: E402
                   characteristic_polynomial, coxeter_matrix, eval_affine_closed_form,
                   eval_hyperbolic_closed_form, matrix_power, reflect_coeff, reflect_vec6)
from .strings import (SignedString, closure_check, coverage_report,  # noqa: E402
                      enumerate_real_roots, gamma, identify, reflect_string)
from .calogero import (CouplingConfig, PhasePoint, finite_a3_potential,  # noqa: E402
                       invariance_residual, kinetic, potential_closed, potential_direct,
                       potential_enumerated, potential_gradient, string_potential_closed)
