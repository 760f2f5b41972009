"""Command-line front end: su2comm {waves, verify, flow, homeo, retract, cohomology}.

Exit codes: 0 success, 1 a verification or check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .comm_geom import ExtendedP
from .errors import Su2CommError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _floats(text: str) -> list[float]:
    out = []
    for tok in text.split(","):
        tok = tok.strip().lower()
        try:
            out.append(math.pi if tok == "pi" else float(tok))
        except ValueError:
            raise UsageError(f"not a number: {tok!r}") from None
    return out


def _p_values(text: str) -> list[tuple[str, ExtendedP]]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            p = ExtendedP.parse(tok)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if not -1.0 <= p.value <= 1.0:
            raise UsageError(f"P = {tok} is outside [-1, 1]")
        out.append((tok, p))
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as e:
            raise UsageError(f"cannot write {out}: {e}") from None
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- waves

def waves_rows(thetas: list[float], ps: list[tuple[str, ExtendedP]], n_samples: int) -> list[tuple]:
    """(theta, P label, phi, Q) rows, n_samples per curve with phi uniform on [0, 2 pi)."""
    from .waves import WaveId, sample_curve

    rows = []
    for theta in thetas:
        if not 0.0 <= theta <= math.pi:
            raise UsageError(f"theta = {theta} is outside [0, pi]")
        for label, p in ps:
            if theta == 0.0 and abs(p.value) == 1.0:
                raise UsageError("theta = 0 with |P| = 1 has no wave")
            w = WaveId.of(theta, p.value, p.sign if p.is_zero else 1)
            phi, Q = sample_curve(w, n_samples)
            rows.extend((theta, label, float(a), float(b) + 0.0) for a, b in zip(phi, Q))
    return rows


def cmd_waves(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    rows = waves_rows(_floats(args.theta), _p_values(args.P), args.samples)
    if args.format == "json":
        _emit(_dump([{"theta": t, "P": p, "phi": a, "Q": b} for t, p, a, b in rows]), args.out)
        return EXIT_OK
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["theta", "P", "phi", "Q"])
    for t, p, a, b in rows:
        wr.writerow([repr(t), p, repr(a), repr(b)])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    from .verify import SUITES, run_suites

    names = list(SUITES) if args.suite == "all" else [args.suite]
    res = run_suites(names, args.seed, args.tol)
    ok = all(c.passed for v in res.values() for c in v)
    _emit(_dump({"seed": args.seed, "pass": ok,
                 "suites": {k: [c.to_json() for c in v] for k, v in res.items()}}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- flow

def flow_stats(n: int, seed: int, method: str = "euler", step: float = 0.02) -> dict:
    from .gradflow import FlowConfig, flow
    from .quat_core import ONE, commutator, haar_sample

    rng = np.random.default_rng(seed)
    cfg = FlowConfig(step=step, method=method)
    conv, steps, comm, monotone = 0, [], [], True
    for _ in range(n):
        g, h = haar_sample(rng), haar_sample(rng)
        tr = flow(g, h, cfg)
        fs = [s[1] for s in tr.states]
        monotone &= all(b >= a - 1e-12 for a, b in zip(fs, fs[1:]))
        steps.append(tr.n_steps)
        if abs(tr.final_f - 2.0) < 1e-6:
            conv += 1
            comm.append(commutator(*tr.final_pair).dist(ONE))
    frac = conv / n if n else 0.0
    return {
        "n": n,
        "converged": conv,
        "fraction": frac,
        "monotone": monotone,
        "max_steps": max(steps, default=0),
        "mean_steps": float(np.mean(steps)) if steps else 0.0,
        "max_commutator_distance": max(comm, default=0.0),
        "line": f"converged {conv}/{n} ({100 * frac:.1f}%)",
    }


def cmd_flow(args) -> int:
    tol = args.tol if args.tol is not None else 1e-4
    st = flow_stats(args.seeds, args.seed, args.method, args.step)
    ok = st["fraction"] >= 0.99 and st["monotone"] and st["max_commutator_distance"] < tol
    st["pass"] = ok
    _emit(_dump(st), args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- homeo / retract

def cmd_homeo(args) -> int:
    from .verify import suite_homeo

    res = suite_homeo(np.random.default_rng(args.seed), args.tol, n=args.samples)
    ok = all(c.passed for c in res)
    _emit(_dump({"seed": args.seed, "samples": args.samples, "pass": ok,
                 "checks": [c.to_json() for c in res]}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_retract(args) -> int:
    from .verify import suite_retract

    res = suite_retract(np.random.default_rng(args.seed), args.tol, n=args.samples)
    ok = all(c.passed for c in res)
    _emit(_dump({"seed": args.seed, "samples": args.samples, "pass": ok,
                 "checks": [c.to_json() for c in res]}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- cohomology

def cmd_cohomology(args) -> int:
    from .homalg.report import solve_scenario
    from .homalg.scenario import BUNDLED, bundled_scenario, scenario_from_dict

    name = args.scenario
    stem = Path(name).stem
    if not Path(name).exists() and stem in BUNDLED:
        sc = bundled_scenario(stem)
    else:
        try:
            text = Path(name).read_text()
        except OSError as e:
            raise UsageError(f"cannot read {name}: {e.strerror}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"{name}:{e.lineno}:{e.colno}: {e.msg}") from None
        sc = scenario_from_dict(data)
    rep = solve_scenario(sc)
    _emit(_dump(rep), args.out)
    return EXIT_OK if rep["ok"] else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None, help="override every tolerance")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    p = argparse.ArgumentParser(prog="su2comm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("waves", parents=[common], help="sample wave curves as CSV")
    w.add_argument("--theta", default="1.2,0.5,0", help="comma list, 'pi' allowed")
    w.add_argument("--P", default="0.7071067811865476", help="comma list; 0+ and 0- allowed")
    w.add_argument("--samples", type=int, default=512)
    w.set_defaults(func=cmd_waves, default_format="csv")

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("suite", nargs="?", default="all",
                   choices=("all", "quat", "geom", "homeo", "retract", "flow", "homalg"))
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("flow", parents=[common], help="gradient-flow convergence statistics")
    f.add_argument("--seeds", type=int, default=200, help="number of Haar starts")
    f.add_argument("--method", choices=("euler", "rk4"), default="euler")
    f.add_argument("--step", type=float, default=0.02)
    f.set_defaults(func=cmd_flow)

    h = sub.add_parser("homeo", parents=[common], help="homeomorphism round trip and equivariance")
    h.add_argument("--samples", type=int, default=300)
    h.set_defaults(func=cmd_homeo)

    r = sub.add_parser("retract", parents=[common], help="retraction invariants")
    r.add_argument("--samples", type=int, default=20)
    r.set_defaults(func=cmd_retract)

    c = sub.add_parser("cohomology", parents=[common], help="solve a Mayer-Vietoris scenario")
    c.add_argument("scenario", help="JSON path or bundled name (torus_commuting, atiyah_A, abar, mcheck)")
    c.set_defaults(func=cmd_cohomology)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    fmt = args.format or getattr(args, "default_format", "json")
    if args.command != "waves" and fmt != "json":
        print("error: only --format json is available for this command", file=sys.stderr)
        return EXIT_USAGE
    args.format = fmt
    if args.tol is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Su2CommError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
