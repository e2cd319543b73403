"""
Command line for the parallel-volume toolkit.

    python main.py pvolume --set "[0,1]u[2,3]" --measure lebesgue --tmax 1
    python main.py check-concavity --csv curve.csv --s 0.5
    python main.py hopflax --f gauss --gamma 0 --p 2 --tmax 2 --svg F.svg
    python main.py blcheck --phi quadratic --log-mode --t 1
    python main.py counterexample half-one --param s=0.75

Reports go to stdout as JSON, curves as CSV (stdout or --out). Exit code 0
on success, 1 when a check fails, 2 on usage or input errors.
"""
import argparse
import sys
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

import catalog
import config
from concavity import check_s_concave, check_s_concave_samples
from counterexamples import SuiteSummary
from errors import LiteralParseError, ParameterRangeError
from hopf_lax import functional_volume, h_t, power_cost, range_notes
from interval_set import parse_set_literal
from measure1d import Density1D, gaussian, lebesgue, power, tabulated, uniform
from output import dump_json, emit_svg, envelope, read_columns, read_grid, save_csv, write_csv
from parallel_volume import evaluate, tabulate, volume_curve
from variance_inequality import bl_check, bl_check_log, corollary_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class RunConfig(BaseModel):
    """One parsed invocation."""

    model_config = ConfigDict(frozen=True)

    subcommand: str
    flags: Dict[str, Any]
    outputs: Dict[str, Optional[str]] = {}
    tolerance: float = config.CLOSED_FORM_TOL
    seed: Optional[int] = None


def _numbers(parts: List[str], literal: str) -> List[float]:
    try:
        return [float(part) for part in parts]
    except ValueError:
        raise LiteralParseError(f"non-numeric field in measure literal {literal!r}")


def parse_measure_literal(text: str) -> Density1D:
    """
    lebesgue | uniform:C:a:b | power:gamma:p:a:b | gauss:mu:sigma | table:<csv>

    Raises:
        LiteralParseError: on an unknown kind or the wrong number of fields
    """
    kind, _, rest = text.strip().partition(":")
    if kind == "lebesgue" and not rest:
        return lebesgue()
    if kind == "table" and rest:
        return tabulated(read_grid(rest))
    arity = {"uniform": 3, "power": 4, "gauss": 2}
    if kind not in arity:
        raise LiteralParseError(f"unknown measure literal {text!r}")
    fields = _numbers(rest.split(":"), text) if rest else []
    if len(fields) != arity[kind]:
        raise LiteralParseError(f"{kind} takes {arity[kind]} fields, got {len(fields)} in {text!r}")
    if kind == "uniform":
        return uniform(*fields)
    if kind == "power":
        return power(*fields)
    return gaussian(*fields)


def _grid_input(table: dict, value: str):
    """A built-in name from the catalog, or a z,value CSV path."""
    if value.endswith(".csv"):
        return read_grid(value)
    return catalog.builtin_grid(table, value)


def _t_grid(tmin: float, tmax: float, steps: int) -> List[float]:
    if steps < 2:
        raise ParameterRangeError(f"--steps must be >= 2, got {steps}")
    if not 0 <= tmin < tmax:
        raise ParameterRangeError(f"need 0 <= tmin < tmax, got [{tmin}, {tmax}]")
    return [float(t) for t in np.linspace(tmin, tmax, steps)]


def _exit_for(verdict: str) -> int:
    return EXIT_OK if verdict == "pass" else EXIT_FAIL


def cmd_pvolume(run: RunConfig) -> int:
    flags = run.flags
    A = parse_set_literal(flags["set"])
    measure = parse_measure_literal(flags["measure"])
    ts = _t_grid(flags["tmin"], flags["tmax"], flags["steps"])
    curve = volume_curve(A, measure)
    print(f"[PVolume] A={A.to_literal()} μ={measure.describe()} "
          f"breakpoints={curve.breakpoints}", file=sys.stderr)

    header = ["t", "V", "V_left_deriv", "V_right_deriv", "V_second_deriv"]
    rows = [
        (row.t, row.V, row.V_left_deriv, row.V_right_deriv, row.V_second_deriv)
        for row in tabulate(curve, ts)
    ]
    out = run.outputs.get("out")
    if out:
        save_csv(out, header, rows)
    else:
        write_csv(sys.stdout, header, rows)

    if flags.get("s") is None:
        return EXIT_OK
    report = check_s_concave(lambda t: evaluate(curve, t), ts[0], ts[-1], flags["s"], tol=run.tolerance)
    dump_json(envelope("pvolume", report))
    return _exit_for(report.verdict)


def cmd_check_concavity(run: RunConfig) -> int:
    ts, vs = read_columns(run.flags["csv"], 2)
    report = check_s_concave_samples(ts, vs, run.flags["s"], tol=run.tolerance)
    print(f"[Concavity] {run.flags['csv']}: s={run.flags['s']:g} -> {report.verdict}", file=sys.stderr)
    dump_json(envelope("check-concavity", report))
    return _exit_for(report.verdict)


def cmd_hopflax(run: RunConfig) -> int:
    flags = run.flags
    f = _grid_input(catalog.FUNCTIONS, flags["f"])
    V = power_cost(flags["p"])
    out = run.outputs.get("out")
    notes = range_notes(flags["gamma"])

    if flags.get("emit_ht") is not None:
        h = h_t(f, flags["gamma"], V, flags["emit_ht"], refine=True, allow_any_gamma=flags["allow_any_gamma"])
        for note in notes:
            print(f"[HopfLax] {note}", file=sys.stderr)
        rows = list(zip(h.nodes, h.values))
        if out:
            save_csv(out, ["z", "value"], rows)
        else:
            write_csv(sys.stdout, ["z", "value"], rows)
        return EXIT_OK

    ts = _t_grid(flags["tmin"], flags["tmax"], flags["steps"])
    volumes = functional_volume(
        f, flags["gamma"], V, ts, tails=flags["tails"], refine=True,
        allow_any_gamma=flags["allow_any_gamma"],
    )
    if out:
        save_csv(out, ["t", "F"], volumes)
    elif not flags["check"]:
        write_csv(sys.stdout, ["t", "F"], volumes)
    if run.outputs.get("svg"):
        emit_svg(volumes, run.outputs["svg"])

    if not flags["check"]:
        return EXIT_OK
    report = check_s_concave_samples(*zip(*volumes), 1.0, tol=max(run.tolerance, config.GRID_TOL))
    if notes:
        report = report.model_copy(update={"notes": report.notes + notes})
    dump_json(envelope("hopflax", report))
    return _exit_for(report.verdict)


def cmd_blcheck(run: RunConfig) -> int:
    flags = run.flags
    phi = _grid_input(catalog.POTENTIALS, flags["phi"])
    if flags["log_mode"]:
        result = bl_check_log(phi, flags["t"])
    elif flags["corollary"]:
        result = corollary_check(phi, power_cost(flags["p"]), flags["gamma"])
    else:
        result = bl_check(phi, power_cost(flags["p"]), flags["gamma"], flags["t"], s=flags.get("s"))
    dump_json(envelope("blcheck", result))
    return _exit_for(result.verdict)


def cmd_counterexample(run: RunConfig) -> int:
    flags = run.flags
    if flags["list"]:
        dump_json({"schema": config.SCHEMA_VERSION, "kind": "catalog", "entries": catalog.listing()})
        return EXIT_OK
    name = flags.get("name")
    if not name:
        raise LiteralParseError("counterexample needs a name (or --list)")

    pairs = list(flags.get("param") or [])
    if run.seed is not None:
        if "seed" not in catalog.find(name)["params"]:
            raise LiteralParseError(f"{name} takes no --seed")
        pairs.append(f"seed={run.seed}")
    outcome = catalog.run(name, pairs)

    curve_path = run.outputs.get("emit_curve")
    if curve_path:
        if isinstance(outcome, SuiteSummary) or not outcome.curve:
            raise LiteralParseError(f"{name} has no sampled curve to emit")
        save_csv(curve_path, ["t", "V"], outcome.curve)
    dump_json(envelope("counterexample", outcome))
    return _exit_for(outcome.verdict)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcave",
        description="Parallel volumes, s-concavity checks and their counterexamples",
    )
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("pvolume", help="tabulate V(t) = μ(A + t[-1, 1])")
    p.add_argument("--set", required=True, help="e.g. [0,1]u[2,3]")
    p.add_argument("--measure", default="lebesgue",
                   help="lebesgue | uniform:C:a:b | power:gamma:p:a:b | gauss:mu:sigma | table:<csv>")
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--s", type=float, help="also check s-concavity on [tmin, tmax] (needs --out)")
    p.add_argument("--tol", type=float)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(handler=cmd_pvolume)

    p = sub.add_parser("check-concavity", help="certify s-concavity of a t,V CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float)
    p.set_defaults(handler=cmd_check_concavity)

    p = sub.add_parser("hopflax", help="functional parallel volume F(t)")
    p.add_argument("--f", required=True, help=f"built-in ({', '.join(catalog.FUNCTIONS)}) or z,value CSV")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--p", type=float, default=2.0, help="cost exponent in [1, inf]")
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--tails", choices=["guard", "extend"], default="extend")
    p.add_argument("--emit-ht", type=float, metavar="T", help="dump h_T as z,value CSV instead of F(t)")
    p.add_argument("--svg", help="SVG plot of F(t)")
    p.add_argument("--check", action="store_true", help="check concavity of F and print the report")
    p.add_argument("--allow-any-gamma", action="store_true")
    p.add_argument("--tol", type=float)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(handler=cmd_hopflax)

    p = sub.add_parser("blcheck", help="both sides of the variance inequality")
    p.add_argument("--phi", required=True, help=f"built-in ({', '.join(catalog.POTENTIALS)}) or z,value CSV")
    p.add_argument("--gamma", type=float, default=-0.25)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--s", type=float)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--log-mode", action="store_true", help="γ = 0 form with V = |y|²/2")
    mode.add_argument("--corollary", action="store_true", help="t = 0 weighted inequality")
    p.set_defaults(handler=cmd_blcheck)

    p = sub.add_parser("counterexample", help="run a named counterexample or suite")
    p.add_argument("name", nargs="?", help="see --list")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--emit-curve", metavar="CSV")
    p.add_argument("--list", action="store_true")
    p.add_argument("--seed", type=int)
    p.set_defaults(handler=cmd_counterexample)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    flags = {k: v for k, v in vars(args).items() if k not in ("handler", "subcommand")}
    outputs = {key: flags.pop(key, None) for key in ("out", "svg", "emit_curve")}
    tol = flags.pop("tol", None)
    return RunConfig(
        subcommand=args.subcommand,
        flags=flags,
        outputs={k: v for k, v in outputs.items() if v is not None},
        tolerance=config.CLOSED_FORM_TOL if tol is None else tol,
        seed=flags.pop("seed", None),
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not args.subcommand:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.subcommand == "pvolume" and args.s is not None and not args.out:
        parser.print_usage(sys.stderr)
        print("[CLI] error: pvolume --s needs --out for the curve", file=sys.stderr)
        return EXIT_USAGE
    if args.subcommand == "hopflax" and args.check and args.emit_ht is not None:
        print("[CLI] error: --check and --emit-ht are exclusive", file=sys.stderr)
        return EXIT_USAGE

    run = _run_config(args)
    print(f"[CLI] {run.subcommand}", file=sys.stderr)
    try:
        return args.handler(run)
    except (ValueError, OSError) as e:
        # ParcaveError is a ValueError
        print(f"[CLI] error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
