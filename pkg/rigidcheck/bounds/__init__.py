"""Codimension estimates for the projection method and the closed-form bound catalogue."""

from .catalog import BoundName, closed_form_bound, min_prop22, required_params, thm01_attained_by
from .codim import alpha_fn, beta_fn, gamma_e, gamma_min, gamma_profile, plus_tail_pairs
from .profile import (
    RestrictedDegreeProfile,
    reduce_tuple,
    restricted_degrees,
    restricted_degrees_by_formula,
    star_tuple,
)

__all__ = [
    "BoundName",
    "RestrictedDegreeProfile",
    "alpha_fn",
    "beta_fn",
    "closed_form_bound",
    "gamma_e",
    "gamma_min",
    "gamma_profile",
    "min_prop22",
    "plus_tail_pairs",
    "reduce_tuple",
    "required_params",
    "restricted_degrees",
    "restricted_degrees_by_formula",
    "star_tuple",
    "thm01_attained_by",
]
