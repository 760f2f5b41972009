"""Solve a scenario end to end and collect a JSON-ready report."""

from __future__ import annotations

from ..errors import InconsistentScenario
from .groups import GradedGroup, assemble_decomposition, suspension_shift, wedge_sum
from .mv import (
    bockstein_check,
    mv_solve_f2,
    mv_solve_z,
    piece_bockstein,
    piece_naturality,
    union_bockstein,
    uct_consistent,
)
from .scenario import BUNDLED, Scenario, bundled_scenario, expected_group


def summand_group(entry: dict) -> list[GradedGroup]:
    """Reduced cohomology of a summand description, repeated 'copies' times.

    {"sphere": n}, {"table": {q: factors}}, {"suspension": entry, "shift": k},
    {"wedge": [entry, ...]}.
    """
    copies = int(entry.get("copies", 1))
    if "sphere" in entry:
        g = GradedGroup.of({int(entry["sphere"]): [0]})
    elif "table" in entry:
        g = GradedGroup.of({int(q): v for q, v in entry["table"].items()}).reduced()
    elif "suspension" in entry:
        inner = wedge_sum(summand_group(entry["suspension"]))
        g = suspension_shift(inner, int(entry["shift"]))
    elif "wedge" in entry:
        g = wedge_sum([x for s in entry["wedge"] for x in summand_group(s)])
    else:
        raise InconsistentScenario(f"unknown summand {entry}")
    return [g] * copies


def solve_scenario(sc: Scenario) -> dict:
    f2res = mv_solve_f2(sc)
    zres = mv_solve_z(sc, f2res)
    lo, hi = sc.degrees
    groups = zres.groups
    checks: dict[str, bool] = {
        "exactness": f2res.alternating_sum == 0,
        "uct": uct_consistent(groups, f2res.dims),
    }
    if sc.integral_route == "bockstein":
        beta = union_bockstein(sc, f2res) if sc.unknown == "X" else piece_bockstein(sc, f2res)
        checks["bockstein"] = bockstein_check(f2res.space(), beta, groups)
        if sc.unknown == "U":
            checks["naturality"] = piece_naturality(sc)
    if sc.integral is not None:
        checks["integral_inputs_uct"] = all(
            uct_consistent(GradedGroup.of(getattr(sc.integral, name)),
                           {q: sc.spaces[name].dim(q) for q in sc.spaces[name].basis})
            for name in ("U", "V", "B"))
    for name in ("U", "V", "B"):
        if name in sc.spaces:
            checks[f"beta_squared_{name}"] = sc.beta(name).square_defect() == 0
    exp_f2 = sc.expected.get("f2")
    if exp_f2 is not None:
        checks["expected_f2"] = all(f2res.dims.get(int(q), 0) == v for q, v in exp_f2.items())
    exp = expected_group(sc)
    if exp is not None:
        checks["expected_match"] = exp == groups
    report = {
        "scenario": sc.name,
        "unknown": sc.unknown,
        "f2_dims": {str(q): f2res.dims.get(q, 0) for q in range(lo, hi + 1)},
        "solved": {str(q): list(groups[q]) for q in range(lo, hi + 1)},
        "table": groups.table(lo, hi),
        "generators": {str(q): g for q, g in sorted(f2res.generators.items()) if g},
        "kernels": {str(q): g for q, g in sorted(f2res.kernels.items()) if g},
        "cokernels": {str(q): g for q, g in sorted(f2res.cokernels.items()) if g},
        "route": zres.route,
        "extensions": zres.notes,
        "checks": checks,
    }
    if sc.decomposition:
        dec = sc.decomposition
        summands = [g for s in dec.get("wedge_summands", []) for g in summand_group(s)]
        total = assemble_decomposition(groups, summands, tuple(dec["range"]))
        t_hi = max(hi, total.top)
        report["total"] = {
            "name": dec.get("name", "total"),
            "solved": {str(q): list(total[q]) for q in range(lo, t_hi + 1)},
            "table": total.table(lo, t_hi),
        }
        exp_t = expected_group(sc, "total")
        if exp_t is not None:
            checks["expected_total_match"] = exp_t == total
    report["ok"] = all(checks.values())
    return report


def solve_all_bundled() -> dict[str, dict]:
    return {name: solve_scenario(bundled_scenario(name)) for name in BUNDLED}
