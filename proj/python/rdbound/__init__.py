"""Exact resolvent degree bounds for PSU(2,q) and PSU(3,q)."""

from ._rdbound import (
    Family,
    RdboundError,
    asymptotic_bound,
    bound,
    class_spectrum,
    closed_form_m4,
    free_algebra_dim,
    molien,
    mu,
    parse_family,
    power_table,
    projective_degree,
    rd_upper,
    select_degrees,
    table,
    verify,
)

__all__ = [
    "Family",
    "RdboundError",
    "asymptotic_bound",
    "bound",
    "class_spectrum",
    "closed_form_m4",
    "free_algebra_dim",
    "molien",
    "mu",
    "parse_family",
    "power_table",
    "projective_degree",
    "rd_upper",
    "select_degrees",
    "table",
    "verify",
]
