"""End actions, duality, gluing and the diagonal-action instance checks."""

from .actions import (XiContext, act_left, act_right, decompose,
                      duality_matrix, kappa_strip, line_bimodule_check,
                      line_context, u_category, zigzag_check)
from .diagonal import diagonal_check, diagonal_context
from .gluing import (GlueContext, glue_check, glued_model, q_map, rep_of,
                     self_glue_context, two_interval_context)
from .theta import theta_check

__all__ = [
    "XiContext", "act_left", "act_right", "decompose", "duality_matrix",
    "kappa_strip", "line_bimodule_check", "line_context", "u_category",
    "zigzag_check", "diagonal_check", "diagonal_context", "GlueContext",
    "glue_check", "glued_model", "q_map", "rep_of", "self_glue_context",
    "two_interval_context", "theta_check",
]
