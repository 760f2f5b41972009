"""Graded homological algebra for the Mayer-Vietoris computations."""

from .groups import (
    GradedGroup,
    assemble_decomposition,
    resolve_extension,
    suspension_shift,
    wedge_sum,
)
from .mv import bockstein_check, mv_solve_f2, mv_solve_z
from .report import solve_all_bundled, solve_scenario
from .ring import (
    bernoulli,
    gysin_lambda,
    gysin_solve,
    ring_table_check,
    solve_lambda,
    thaddeus_check,
    wall_invariants,
)
from .scenario import (
    BocksteinData,
    GradedF2Space,
    NamedMap,
    Scenario,
    bundled_scenario,
    load_scenario,
)
from .snf import SNFResult, smith_normal_form

__all__ = [
    "BocksteinData",
    "GradedF2Space",
    "GradedGroup",
    "NamedMap",
    "SNFResult",
    "Scenario",
    "assemble_decomposition",
    "bernoulli",
    "bockstein_check",
    "bundled_scenario",
    "gysin_lambda",
    "gysin_solve",
    "load_scenario",
    "mv_solve_f2",
    "mv_solve_z",
    "resolve_extension",
    "ring_table_check",
    "smith_normal_form",
    "solve_all_bundled",
    "solve_lambda",
    "solve_scenario",
    "suspension_shift",
    "thaddeus_check",
    "wall_invariants",
    "wedge_sum",
]
