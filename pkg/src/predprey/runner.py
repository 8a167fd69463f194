"""Scenario execution: CSV artifacts, comparisons, presets, config files.

The CSV contract is deliberately rigid: header ``t,D,L``, one row per
grid point, values printed with 17 significant digits and LF line
endings, so a round trip through disk is bit-exact and gnuplot can read
the files unmodified.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .fractional import FractionalConfig, caputo_solve
from .model import (EULER, FRACTIONAL, MICKENS, REFERENCE, SCHEMES,
                    ModelParams, State, Trajectory)
from .regions import (check_trajectory, continuous_region, euler_region,
                      fractional_region, mickens_region)
from .schemes import SchemeConfig, iterate
from .stability import classify

CSV_HEADER = "t,D,L"

OUTPUT_KINDS = ("timeseries", "phase", "stability", "verify")

#: defaults shared by the command line and the bundled presets
DEFAULT_PARAMS = ModelParams(alpha=0.05, beta=0.3, p=0.4, capacity=1.0)
DEFAULT_INITIAL = State(0.2, 0.3)
STANDARD_INITIALS = (State(0.2, 0.3), State(0.0, 0.5), State(0.85, 0.1))


class ConfigError(ValueError):
    """Bad scenario file; the message carries file and line number."""


@dataclass(frozen=True)
class Scenario:
    """One solver run plus the artifacts requested from it."""

    name: str
    params: ModelParams = DEFAULT_PARAMS
    initial: State = DEFAULT_INITIAL
    scheme: str = REFERENCE
    h: float = 0.25
    t_end: float = 300.0
    sigma: float = 0.95
    outputs: tuple = ("timeseries",)

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        bad = [o for o in self.outputs if o not in OUTPUT_KINDS]
        if bad:
            raise ValueError(f"unknown outputs {bad!r}; expected {OUTPUT_KINDS}")


def solve_scenario(sc: Scenario) -> Trajectory:
    """Dispatch to the scheme-appropriate solver."""
    if sc.scheme == FRACTIONAL:
        cfg = FractionalConfig(sigma=sc.sigma, h=sc.h, t_end=sc.t_end)
        return caputo_solve(sc.params, cfg, sc.initial)
    cfg = SchemeConfig(h=sc.h, t_end=sc.t_end, scheme=sc.scheme)
    return iterate(sc.params, cfg, sc.initial)


def scheme_region(sc: Scenario):
    """The region spec matching a scenario's scheme."""
    if sc.scheme == REFERENCE:
        return continuous_region(sc.params, sc.initial)
    if sc.scheme == EULER:
        return euler_region(sc.params, sc.h)
    if sc.scheme == MICKENS:
        return mickens_region(sc.params, sc.h)
    return fractional_region(sc.params, sc.initial)


# {{{ CSV round trip

def trajectory_to_csv(traj: Trajectory, path) -> Path:
    """Write ``t,D,L`` rows with 17 significant digits and LF endings."""
    path = Path(path)
    lines = [CSV_HEADER]
    for t, (dv, lv) in zip(traj.times, traj.states):
        lines.append(f"{t:.17g},{dv:.17g},{lv:.17g}")
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def trajectory_from_csv(path, scheme: str = "csv",
                        params: Optional[ModelParams] = None,
                        config=None) -> Trajectory:
    """Re-read a trajectory CSV; numeric fields round-trip bit-exact."""
    path = Path(path)
    lines = [ln for ln in path.read_text().split("\n") if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: expected header {CSV_HEADER!r}")
    times = np.empty(len(lines) - 1)
    states = np.empty((len(lines) - 1, 2))
    for i, line in enumerate(lines[1:]):
        cells = line.split(",")
        if len(cells) != 3:
            raise ValueError(f"{path}: row {i + 2} has {len(cells)} columns")
        times[i] = float(cells[0])
        states[i, 0] = float(cells[1])
        states[i, 1] = float(cells[2])
    return Trajectory(times, states, scheme, params, config)

# }}}


@dataclass(frozen=True)
class CompareResult:
    """Distances between two trajectories over their shared time range."""

    sup_distance: float
    terminal_distance: float
    resampled: bool = False


def compare(traj_a: Trajectory, traj_b: Trajectory) -> CompareResult:
    """Sup-norm and final-time distance between two trajectories.

    Trajectories on different grids are resampled by linear interpolation
    onto the overlap of their time ranges (flagged in the result).
    Disjoint ranges are a usage error.
    """
    ta, tb = traj_a.times, traj_b.times
    if ta.size == tb.size and np.array_equal(ta, tb):
        a_states, b_states = traj_a.states, traj_b.states
        resampled = False
    else:
        lo, hi = max(ta[0], tb[0]), min(ta[-1], tb[-1])
        if hi < lo:
            raise ValueError("trajectories cover disjoint time ranges")
        keep = (ta >= lo) & (ta <= hi)
        grid = ta[keep]
        if grid.size == 0:
            raise ValueError("no sample points fall inside the shared range")
        a_states = traj_a.states[keep]
        b_states = np.column_stack([
            np.interp(grid, tb, traj_b.states[:, 0]),
            np.interp(grid, tb, traj_b.states[:, 1])])
        resampled = True
    pointwise = np.abs(a_states - b_states).max(axis=1)
    return CompareResult(sup_distance=float(pointwise.max()),
                         terminal_distance=float(pointwise[-1]),
                         resampled=resampled)


# {{{ artifact writing

def _stability_text(sc: Scenario) -> str:
    arg = sc.sigma if sc.scheme == FRACTIONAL else sc.h
    lines = [f"# stability report: scenario {sc.name}, scheme {sc.scheme}"]
    for rep in classify(sc.params, sc.scheme, arg):
        eq = rep.equilibrium
        point = (f"({eq.point.d:.6g}, {eq.point.l:.6g})"
                 if rep.jacobian is not None else "(undefined)")
        detail = ", ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                           for k, v in rep.criterion_details.items())
        extra = f", h_max={rep.step_bound:.6g}" if rep.step_bound else ""
        lines.append(f"{eq.label} {point}: {rep.classification} [{detail}]{extra}")
    return "\n".join(lines) + "\n"


def _verification_text(sc: Scenario, report) -> str:
    lines = [f"# verification report: scenario {sc.name}, scheme {sc.scheme}"]
    if report.ok:
        lines.append("ok: all states inside the invariant region")
    else:
        lines.append(
            f"violation at index {report.first_violation_index} "
            f"(t = {report.trajectory.times[report.first_violation_index]:g}): "
            f"{report.violated_quantity}, observed {report.observed:.17g}, "
            f"bound {report.bound:.17g}")
    return "\n".join(lines) + "\n"


def run_scenario(sc: Scenario, out_dir):
    """Solve one scenario and write its artifacts.

    Returns (paths, violation_report) where the report is None unless the
    scenario requested verification.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    traj = solve_scenario(sc)
    paths = []
    report = None
    if "timeseries" in sc.outputs or "phase" in sc.outputs:
        paths.append(trajectory_to_csv(traj, out_dir / f"{sc.name}.csv"))
    if "stability" in sc.outputs:
        p = out_dir / f"{sc.name}_stability.txt"
        p.write_text(_stability_text(sc), newline="\n")
        paths.append(p)
    if "verify" in sc.outputs:
        report = check_trajectory(traj, scheme_region(sc))
        p = out_dir / f"{sc.name}_verification.txt"
        p.write_text(_verification_text(sc, report), newline="\n")
        paths.append(p)
    return paths, report


def run_scenarios(scenarios, out_dir, workers: Optional[int] = None):
    """Run a batch in a thread pool; artifact files never collide by name."""
    names = [sc.name for sc in scenarios]
    if len(set(names)) != len(names):
        raise ValueError("scenario names must be unique within a batch")
    if workers is None:
        workers = min(len(scenarios), os.cpu_count() or 1) or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda sc: run_scenario(sc, out_dir), scenarios))
    paths = [p for ps, _ in results for p in ps]
    reports = [r for _, r in results if r is not None]
    return paths, reports

# }}}


# {{{ gnuplot emission

def write_gnuplot_script(csv_paths, out_path, title: str,
                         phase: bool = False) -> Path:
    """Emit a batch gnuplot script rendering the given CSVs to PNG."""
    out_path = Path(out_path)
    stem = out_path.stem
    lines = [
        "# generated by predprey; run with: gnuplot " + out_path.name,
        "set datafile separator ','",
        "set key outside",
        "set grid",
        "set terminal pngcairo size 1000,600",
        f"set output '{stem}_timeseries.png'",
        f"set title '{title}'",
        "set xlabel 't'",
        "set ylabel 'population'",
    ]
    plot_parts = []
    for p in csv_paths:
        name = Path(p).name
        label = Path(p).stem
        plot_parts.append(f"'{name}' skip 1 using 1:2 with lines title '{label} D'")
        plot_parts.append(f"'{name}' skip 1 using 1:3 with lines title '{label} L'")
    lines.append("plot " + ", \\\n     ".join(plot_parts))
    if phase:
        lines += [
            f"set output '{stem}_phase.png'",
            "set xlabel 'D'",
            "set ylabel 'L'",
            "plot " + ", \\\n     ".join(
                f"'{Path(p).name}' skip 1 using 2:3 with lines title '{Path(p).stem}'"
                for p in csv_paths),
        ]
    out_path.write_text("\n".join(lines) + "\n", newline="\n")
    return out_path

# }}}


# {{{ presets

def _named(name, **kw):
    return Scenario(name=name, **kw)


def _ic_tag(s: State) -> str:
    return f"d{s.d:g}_l{s.l:g}"


def _spread_initials(prefix, scheme, **kw):
    return [_named(f"{prefix}_{_ic_tag(ic)}", scheme=scheme, initial=ic, **kw)
            for ic in STANDARD_INITIALS]


def _scheme_lineup(prefix, schemes):
    return [_named(f"{prefix}_{s}", scheme=s) for s in schemes]


def preset_scenarios(preset: str):
    """Scenario bundle for a named preset (figure2 .. figure10)."""
    if preset == "figure2":
        return _spread_initials("figure2", REFERENCE)
    if preset == "figure3":
        return _spread_initials("figure3", EULER)
    if preset == "figure4":
        return _spread_initials("figure4", MICKENS)
    if preset == "figure5":
        return _spread_initials("figure5", FRACTIONAL)
    if preset == "figure6":
        return _scheme_lineup("figure6", (FRACTIONAL, REFERENCE, EULER, MICKENS))
    if preset == "figure7":
        return _scheme_lineup("figure7", (MICKENS, REFERENCE, EULER))
    if preset == "figure8":
        return _scheme_lineup("figure8", (EULER, REFERENCE))
    if preset == "figure9":
        return [_named("figure9_reference", scheme=REFERENCE)]
    if preset == "figure10":
        out = [_named(f"figure10_sigma{s:g}", scheme=FRACTIONAL, sigma=s)
               for s in (0.8, 0.9, 0.95, 0.99)]
        out.append(_named("figure10_reference", scheme=REFERENCE))
        return out
    raise ValueError(f"unknown preset {preset!r}; expected figure2 .. figure10")


PRESETS = tuple(f"figure{i}" for i in range(2, 11))


def run_figures(preset: str, out_dir, workers: Optional[int] = None):
    """Run a preset and emit its CSVs plus one gnuplot script."""
    scenarios = preset_scenarios(preset)
    paths, _ = run_scenarios(scenarios, out_dir, workers)
    csvs = [p for p in paths if p.suffix == ".csv"]
    script = write_gnuplot_script(csvs, Path(out_dir) / f"{preset}.gp",
                                  title=preset, phase=True)
    return csvs + [script]

# }}}


# {{{ scenario config files

_FLOAT_KEYS = ("alpha", "beta", "p", "capacity", "d0", "l0", "h", "t_end", "sigma")
_SCENARIO_KEYS = frozenset(_FLOAT_KEYS) | {"scheme", "outputs"}


def parse_config(text: str, source: str = "<config>"):
    """Parse a sectioned key-value scenario file.

    Format: ``[name]`` headers introduce scenarios; ``key = value`` lines
    set fields; ``#`` or ``;`` start comments.  Unknown keys and malformed
    lines are reported with their line numbers.  Returns a list of
    (name, {key: (raw_value, lineno)}).
    """
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"{source}:{lineno}: unterminated section header")
            name = line[1:-1].strip()
            if not name:
                raise ConfigError(f"{source}:{lineno}: empty section name")
            if any(n == name for n, _ in sections):
                raise ConfigError(f"{source}:{lineno}: duplicate section {name!r}")
            current = {}
            sections.append((name, current))
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', "
                              f"got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if current is None:
            raise ConfigError(f"{source}:{lineno}: {key!r} appears before any "
                              "[section] header")
        if key not in _SCENARIO_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if not value:
            raise ConfigError(f"{source}:{lineno}: empty value for {key!r}")
        current[key] = (value, lineno)
    if not sections:
        raise ConfigError(f"{source}: no scenario sections found")
    return sections


def _scenario_from_section(name, mapping, source, overrides=None):
    fields = {}
    for key, (value, lineno) in mapping.items():
        if key in _FLOAT_KEYS:
            try:
                fields[key] = float(value)
            except ValueError:
                raise ConfigError(f"{source}:{lineno}: {key} must be a number, "
                                  f"got {value!r}") from None
        elif key == "outputs":
            fields[key] = tuple(v.strip() for v in value.split(",") if v.strip())
        else:
            fields[key] = value
    if overrides:
        fields.update({k: v for k, v in overrides.items() if v is not None})

    p = dict(alpha=DEFAULT_PARAMS.alpha, beta=DEFAULT_PARAMS.beta,
             p=DEFAULT_PARAMS.p, capacity=DEFAULT_PARAMS.capacity)
    for key in ("alpha", "beta", "p", "capacity"):
        if key in fields:
            p[key] = fields[key]
    try:
        params = ModelParams(**p)
    except ValueError:
        params = ModelParams.unchecked(**p)
    initial = State(fields.get("d0", DEFAULT_INITIAL.d),
                    fields.get("l0", DEFAULT_INITIAL.l))
    try:
        return Scenario(
            name=name, params=params, initial=initial,
            scheme=fields.get("scheme", REFERENCE),
            h=fields.get("h", 0.25), t_end=fields.get("t_end", 300.0),
            sigma=fields.get("sigma", 0.95),
            outputs=fields.get("outputs", ("timeseries",)))
    except ValueError as exc:
        raise ConfigError(f"{source}: scenario {name!r}: {exc}") from None


def load_scenarios(path, overrides=None):
    """Scenarios from a config file, with optional flag overrides applied."""
    path = Path(path)
    sections = parse_config(path.read_text(), source=str(path))
    return [_scenario_from_section(name, mapping, str(path), overrides)
            for name, mapping in sections]

# }}}
