"""Command line front end.

Exit codes: 0 success, 1 invariant violation under --strict (or solver
divergence), 2 usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .model import FRACTIONAL, SCHEMES, ModelParams, State
from .runner import (PRESETS, ConfigError, Scenario, compare, load_scenarios,
                     run_figures, run_scenario, run_scenarios,
                     trajectory_from_csv, write_gnuplot_script, DEFAULT_PARAMS,
                     DEFAULT_INITIAL, _stability_text)
from .schemes import DivergenceError


def _add_model_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("model")
    g.add_argument("--alpha", type=float, default=None, help="prey growth rate")
    g.add_argument("--beta", type=float, default=None, help="predator death rate")
    g.add_argument("--p", type=float, default=None, help="predation rate")
    g.add_argument("--capacity", type=float, default=None, help="prey carrying capacity")
    g.add_argument("--d0", type=float, default=None, help="initial prey population")
    g.add_argument("--l0", type=float, default=None, help="initial predator population")
    g.add_argument("--scheme", choices=SCHEMES, default=None,
                   help="solver formulation (default reference)")
    g.add_argument("--h", type=float, default=None, help="step size (default 0.25)")
    g.add_argument("--t-end", type=float, default=None, dest="t_end",
                   help="final time (default 300)")
    g.add_argument("--sigma", type=float, default=None,
                   help="Caputo order in (0, 1] (default 0.95)")


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--output", default=".", help="output directory (default .)")
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero when an invariant is violated")
    p.add_argument("--config", default=None, help="scenario file to run")


def _overrides(args) -> dict:
    keys = ("alpha", "beta", "p", "capacity", "d0", "l0", "scheme", "h",
            "t_end", "sigma")
    return {k: getattr(args, k) for k in keys}


def _flag_scenario(args, name: str, outputs=("timeseries",)) -> Scenario:
    ov = _overrides(args)
    pvals = dict(alpha=DEFAULT_PARAMS.alpha, beta=DEFAULT_PARAMS.beta,
                 p=DEFAULT_PARAMS.p, capacity=DEFAULT_PARAMS.capacity)
    for k in ("alpha", "beta", "p", "capacity"):
        if ov[k] is not None:
            pvals[k] = ov[k]
    try:
        params = ModelParams(**pvals)
    except ValueError:
        params = ModelParams.unchecked(**pvals)
    initial = State(ov["d0"] if ov["d0"] is not None else DEFAULT_INITIAL.d,
                    ov["l0"] if ov["l0"] is not None else DEFAULT_INITIAL.l)
    return Scenario(
        name=name, params=params, initial=initial,
        scheme=ov["scheme"] or "reference",
        h=ov["h"] if ov["h"] is not None else 0.25,
        t_end=ov["t_end"] if ov["t_end"] is not None else 300.0,
        sigma=ov["sigma"] if ov["sigma"] is not None else 0.95,
        outputs=outputs)


def _scenarios_for(args, default_name, outputs):
    if args.config:
        scenarios = load_scenarios(args.config, _overrides(args))
        return [Scenario(**{**sc.__dict__, "outputs": outputs})
                if "verify" in outputs and "verify" not in sc.outputs else sc
                for sc in scenarios]
    return [_flag_scenario(args, default_name, outputs)]


def cmd_simulate(args) -> int:
    outputs = ("timeseries", "verify") if args.strict else ("timeseries",)
    scenarios = _scenarios_for(args, args.name, outputs)
    paths, reports = run_scenarios(scenarios, args.output)
    csvs = [p for p in paths if p.suffix == ".csv"]
    script = write_gnuplot_script(
        csvs, Path(args.output) / f"{scenarios[0].name}.gp",
        title=scenarios[0].name, phase=True)
    for p in [*paths, script]:
        print(p)
    bad = [r for r in reports if not r.ok]
    if args.strict and bad:
        for r in bad:
            print(f"violation: {r.violated_quantity} at index "
                  f"{r.first_violation_index} (observed {r.observed:g}, "
                  f"bound {r.bound:g})", file=sys.stderr)
        return 1
    return 0


def cmd_stability(args) -> int:
    sc = _flag_scenario(args, "stability")
    text = _stability_text(sc)
    if args.output != ".":
        out = Path(args.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, newline="\n")
        print(out)
    else:
        print(text, end="")
    return 0


def cmd_verify(args) -> int:
    scenarios = _scenarios_for(args, "verify", ("timeseries", "verify"))
    ok = True
    for sc in scenarios:
        _, report = run_scenario(sc, args.output)
        if report.ok:
            print(f"{sc.name}: ok (scheme {sc.scheme}, {sc.t_end:g} time units)")
        else:
            ok = False
            t = report.trajectory.times[report.first_violation_index]
            print(f"{sc.name}: VIOLATION {report.violated_quantity} at t = {t:g} "
                  f"(observed {report.observed:g}, bound {report.bound:g})")
    if not ok and args.strict:
        return 1
    return 0


def cmd_compare(args) -> int:
    a = trajectory_from_csv(args.csv_a)
    b = trajectory_from_csv(args.csv_b)
    res = compare(a, b)
    note = " (resampled onto the shared range)" if res.resampled else ""
    print(f"sup distance      {res.sup_distance:.17g}{note}")
    print(f"terminal distance {res.terminal_distance:.17g}")
    return 0


def cmd_sweep(args) -> int:
    values = [float(v) for v in args.values.split(",") if v.strip()]
    if not values:
        raise ConfigError("--values must list at least one number")
    base = _flag_scenario(args, "sweep")
    scenarios = []
    for v in values:
        fields = dict(base.__dict__)
        fields["name"] = f"{base.name}_{args.param}{v:g}"
        fields[args.param] = v
        if args.param == "sigma" and base.scheme != FRACTIONAL:
            fields["scheme"] = FRACTIONAL
        scenarios.append(Scenario(**fields))
    paths, _ = run_scenarios(scenarios, args.output)
    csvs = [p for p in paths if p.suffix == ".csv"]
    write_gnuplot_script(csvs, Path(args.output) / f"{base.name}_{args.param}.gp",
                         title=f"{args.param} sweep", phase=False)
    for p in csvs:
        print(p)
    return 0


def cmd_figures(args) -> int:
    presets = PRESETS if args.preset == "all" else (args.preset,)
    for preset in presets:
        for p in run_figures(preset, args.output):
            print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="predprey",
        description="Predator-prey dynamics with logistic prey growth: "
                    "reference, Euler, Mickens, and Caputo-order solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one scenario (or a config file) to CSV")
    p.add_argument("--name", default="run", help="scenario name for artifacts")
    _add_model_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("stability", help="print the equilibrium classification table")
    _add_model_flags(p)
    p.add_argument("--output", default=".",
                   help="file to write instead of stdout")
    p.set_defaults(func=cmd_stability, strict=False, config=None)

    p = sub.add_parser("verify", help="check a run against its invariant region")
    _add_model_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="distances between two trajectory CSVs")
    p.add_argument("csv_a")
    p.add_argument("csv_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="rerun a scenario across parameter values")
    p.add_argument("--param", choices=("sigma", "h"), required=True)
    p.add_argument("--values", required=True, help="comma-separated list")
    _add_model_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figures", help="emit the CSVs and gnuplot script of a preset")
    p.add_argument("preset", choices=(*PRESETS, "all"))
    p.add_argument("--output", default=".", help="output directory")
    p.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
