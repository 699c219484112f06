"""Metric side: functions and states on the quantized interval, and MK distances."""
from .interval import (QFunction, c_q, diff_d, diff_e, g_func, lip_bound_check,
                       projection_derivative_check, psi_approx, psi_bound_check, psi_error,
                       random_qfunction, seminorm_grad, seminorm_grad_sq)
from .mk import (EdgeSum, cumulative, edge_length, edge_length_sq, envelope, mk_closed_form,
                 mk_lp, mk_table, tail_length)
from .states import (QState, a_k, counit_state, haar_moment, haar_state, hk_moment_exact, hk_state,
                     parse_state)

# names used in the interface description
g_function = g_func
haar_state_iq = haar_state
mk_lp_oracle = mk_lp

__all__ = [
    "EdgeSum", "QFunction", "QState", "a_k", "c_q", "counit_state", "haar_moment", "hk_moment_exact", "cumulative", "diff_d",
    "diff_e", "edge_length", "edge_length_sq", "envelope", "g_func", "haar_state", "hk_state",
    "lip_bound_check", "mk_closed_form", "mk_lp", "mk_table", "parse_state",
    "projection_derivative_check", "psi_approx", "psi_bound_check", "psi_error", "random_qfunction",
    "seminorm_grad", "seminorm_grad_sq", "tail_length", "g_function", "haar_state_iq",
    "mk_lp_oracle",
]
