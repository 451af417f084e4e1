"""Exact framed disc and sphere multiple-cover invariants."""

from ._ovk import *  # noqa: F401,F403
from ._ovk import (
    DegenerateFrame,
    NonConvergent,
    OvkError,
    UnsupportedRegime,
)

__all__ = [
    "OvkError",
    "UnsupportedRegime",
    "DegenerateFrame",
    "NonConvergent",
    "open_invariant",
    "localize_open",
    "symbolic_integrand",
    "winding_factor",
    "verify_framing_symmetry",
    "integer_invariants",
    "verify_disc_ov",
    "verify_sphere_ov",
    "bg",
    "bg_table",
    "closed_cover_contribution",
    "psi_integral_genus0",
    "psi_integral_oracle",
    "lambda_product_identity",
    "maslov_index",
    "maslov_index_exact",
    "example_cohomology_dims",
    "bordered_rr_chi",
    "run_suite",
]
