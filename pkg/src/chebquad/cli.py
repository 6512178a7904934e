"""Command-line front end wiring the modules into reproducible experiments.

Every command prints a machine-parsable final line ``RESULT: pass`` or
``RESULT: fail`` and exits 0 exactly when its checks pass.  Output files are
plain CSV with 17 significant digits, byte-identical for identical
configuration and seed.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import aliasing, bestapprox, rates, testfns
from .config import DEFAULT_GRID, ENVELOPE_WINDOW, GridSpec
from .quadrature import Family, make_rule, rule_to_csv

_MAX_N = 100_000  # desk-scale guard


class CliError(ValueError):
    """Configuration the command cannot run with."""


@dataclass(frozen=True)
class ExperimentConfig:
    command: str
    family: Optional[Family]
    function: Optional[str]
    s: Optional[float]
    xi: float
    n_min: Optional[int]
    n_max: Optional[int]
    n_count: Optional[int]
    m_min: Optional[int]
    m_max: Optional[int]
    envelope: bool
    envelope_window: int
    out: Optional[str]
    seed: int
    dump_reference: bool

    def __post_init__(self):
        for name in ("n_min", "n_max"):
            value = getattr(self, name)
            if value is not None and not 1 <= value <= _MAX_N:
                raise CliError(f"--{name.replace('_', '-')} must lie in [1, {_MAX_N}]")
        if self.n_min is not None and self.n_max is not None and self.n_max < self.n_min:
            raise CliError("--n-max must not be below --n-min")
        if self.n_count is not None and self.n_count < 1:
            raise CliError("--n-count must be positive")
        if self.envelope_window < 2:
            raise CliError("--envelope-window must be at least 2")

    def grid(self, default: GridSpec = DEFAULT_GRID) -> list[int]:
        spec = GridSpec(
            n_min=self.n_min if self.n_min is not None else default.n_min,
            n_max=self.n_max if self.n_max is not None else (self.n_min or default.n_max),
            count=self.n_count if self.n_count is not None else default.count,
        )
        if spec.n_max < spec.n_min:
            raise CliError("--n-max must not be below --n-min")
        return spec.values()

    def test_function(self, default: Optional[str] = None) -> testfns.TestFunction:
        if self.function:
            try:
                return testfns.parse_function_id(self.function)
            except ValueError as exc:
                raise CliError(str(exc)) from exc
        if self.s is not None:
            return testfns.abs_power(self.s, self.xi)
        if default:
            return testfns.parse_function_id(default)
        raise CliError("specify --function or --s")


def _family_arg(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"family must be cc or gauss, not {text!r}")


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _out_dir(config: ExperimentConfig) -> Path:
    return Path(config.out) if config.out else Path(".")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def cmd_nodes(config: ExperimentConfig) -> bool:
    if config.family is None:
        raise CliError("nodes needs --family")
    if config.n_min is None:
        raise CliError("nodes needs --n-min (the rule size; add --n-max for a range)")
    out_dir = _out_dir(config)
    grid = config.grid(GridSpec(config.n_min, config.n_min, 1))
    for n in grid:
        rule = make_rule(config.family, n)
        path = out_dir / f"{config.family.value}_nodes_n{n}.csv"
        _write(path, rule_to_csv(rule))
        print(f"wrote {path} (sum of weights {_fmt(float(np.sum(rule.weights)))})")
    return True


def cmd_sweep(config: ExperimentConfig) -> bool:
    if config.family is None:
        raise CliError("sweep needs --family")
    f = config.test_function()
    grid = config.grid()
    sw = rates.sweep(config.family, f, grid)
    path = _single_file(config, f"sweep_{config.family.value}.csv")
    _write(path, rates.sweep_csv([sw]))
    fit = rates.fit_rate(sw, use_envelope=config.envelope, window=config.envelope_window)
    print(f"wrote {path}")
    print(rates.fit_summary(fit))
    return True


def _is_file_out(config: ExperimentConfig) -> bool:
    return bool(config.out) and config.out.endswith(".csv")


def _single_file(config: ExperimentConfig, default_name: str) -> Path:
    if _is_file_out(config):
        return Path(config.out)
    return _out_dir(config) / default_name


def cmd_figure1(config: ExperimentConfig) -> bool:
    s_values = [config.s] if config.s is not None else [0.5, 1.5]
    grid = config.grid()
    if len(grid) < 6:
        raise CliError("rate fits need at least 6 grid points")
    ok = True
    for s in s_values:
        f = testfns.abs_power(s, config.xi)
        cc = rates.sweep(Family.CLENSHAW_CURTIS, f, grid)
        gauss = rates.sweep(Family.GAUSS_LEGENDRE, f, grid)
        cc_fit = rates.fit_rate(cc, use_envelope=True, window=config.envelope_window)
        gauss_fit = rates.fit_rate(gauss, use_envelope=True, window=config.envelope_window)

        # trend line c * n^-(s+1) with c fitted on the Clenshaw-Curtis envelope
        mags = [(n, abs(e)) for n, e in cc.points if abs(e) > 1e-13]
        env = rates.envelope_indices([m for _, m in mags], config.envelope_window)
        log_c = float(np.mean([math.log(mags[i][1]) + (s + 1) * math.log(mags[i][0]) for i in env]))
        c_hat = math.exp(log_c)

        lines = ["n,E_gauss,E_cc,fit_line"]
        for (n, e_g), (_, e_c) in zip(gauss.points, cc.points):
            lines.append(f"{n},{_fmt(abs(e_g))},{_fmt(abs(e_c))},{_fmt(c_hat * n ** (-(s + 1)))}")
        path = _out_dir(config) / f"figure1_s{s:g}.csv"
        _write(path, "\n".join(lines) + "\n")

        target = -(s + 1)
        cc_ok = abs(cc_fit.slope - target) <= 0.15
        gauss_ok = abs(gauss_fit.slope - target) <= (0.2 if s < 2 else 0.15)
        ok = ok and cc_ok and gauss_ok
        print(
            f"s={s:g}: slope_cc={cc_fit.slope:.4f} slope_gauss={gauss_fit.slope:.4f} "
            f"target={target:g} c_hat={c_hat:.6g} -> {path}"
        )
    return ok


def cmd_alias(config: ExperimentConfig) -> bool:
    if config.family is None:
        raise CliError("alias needs --family")
    if config.n_min is None:
        raise CliError("alias needs --n-min (the rule size)")
    n = config.n_min
    m_min = config.m_min if config.m_min is not None else 0
    if config.m_max is not None:
        m_max = config.m_max
    elif config.family is Family.CLENSHAW_CURTIS:
        m_max = 16 * n
    else:
        m_max = int(n**1.4)
    rows = aliasing.alias_table(config.family, n, range(m_min, m_max + 1))
    path = _single_file(config, f"alias_{config.family.value}_n{n}.csv")
    _write(path, aliasing.alias_table_csv(rows))
    print(f"wrote {path} ({len(rows)} rows, m in [{m_min}, {m_max}])")

    if config.family is Family.CLENSHAW_CURTIS:
        worst = max((abs(r["residual"]) for r in rows), default=0.0)
        print(f"max |closed-form - measured| = {worst:.3g}")
        return worst <= 1e-12
    window = [r for r in rows if r["m"] % 2 == 0 and 2 * n <= r["m"] <= int(n**1.4)]
    worst = max((abs(r["residual"]) for r in window), default=0.0)
    print(f"max |measured - model| for even m in [2n, n^1.4] = {worst:.3g}")
    ok = worst <= 0.1
    # uniform-bound spot check on randomly sampled high degrees
    rng = np.random.default_rng(config.seed)
    rule = make_rule(config.family, n)
    sampled = 2 * rng.integers(n, 25 * n, size=200)
    bound_max = max(abs(aliasing.measured_error_chebyshev(rule, int(m))) for m in sampled)
    print(f"max |E| over 200 random even m <= 50n: {bound_max:.6g} (bound 4)")
    return ok and bound_max <= 4.0


def cmd_gauss_model(config: ExperimentConfig) -> bool:
    grid = config.grid(GridSpec(50, 400, 4))
    rows = []
    for n in grid:
        m = 4 * n + 10  # the aliased degree with (j, r) = (1, 4)
        measured = aliasing.measured_error_chebyshev(make_rule(Family.GAUSS_LEGENDRE, n), m)
        model = aliasing.gauss_error_model(n, m)
        rows.append((n, m, measured, model, measured - model))
    lines = ["n,m,measured,model,residual"]
    for n, m, measured, model, residual in rows:
        lines.append(f"{n},{m},{_fmt(measured)},{_fmt(model)},{_fmt(residual)}")
    path = _single_file(config, "gauss_model.csv")
    _write(path, "\n".join(lines) + "\n")
    residuals = [abs(r[-1]) for r in rows]
    decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))
    print(f"wrote {path}; residuals at (j,r)=(1,4): " + ", ".join(f"{r:.3g}" for r in residuals))
    print(f"strictly decreasing along n: {decreasing}")
    return decreasing


def cmd_remez(config: ExperimentConfig) -> bool:
    f = config.test_function(default="abs_pow:s=1,xi=0")
    degrees = config.grid(GridSpec(8, 128, 9))
    results = [bestapprox.minimax_error(f.fn, d) for d in degrees]
    lines = ["degree,minimax_error"]
    for res in results:
        lines.append(f"{res.degree},{_fmt(res.error)}")
    path = _single_file(config, "remez.csv")
    _write(path, "\n".join(lines) + "\n")
    print(f"wrote {path}")
    if config.dump_reference:
        for res in results:
            ref_path = _out_dir(config) / f"remez_reference_d{res.degree}.csv"
            ref_lines = ["index,x"] + [f"{i + 1},{_fmt(x)}" for i, x in enumerate(res.reference)]
            _write(ref_path, "\n".join(ref_lines) + "\n")
        print(f"dumped {len(results)} reference sets")
    if len(degrees) >= 6:
        sw = rates.ErrorSweep(family="best", function_id=f.id, points=[(r.degree, r.error) for r in results])
        print(rates.fit_summary(rates.fit_rate(sw)))
    return True


def cmd_ratio(config: ExperimentConfig) -> bool:
    f = config.test_function()
    grid = config.grid()
    gauss = rates.sweep(Family.GAUSS_LEGENDRE, f, grid)
    cc = rates.sweep(Family.CLENSHAW_CURTIS, f, grid)
    series = rates.ratio_series(gauss, cc, window=config.envelope_window)
    lines = ["n,ratio"] + [f"{n},{_fmt(r)}" for n, r in series.points]
    path = _single_file(config, "ratio.csv")
    _write(path, "\n".join(lines) + "\n")
    print(f"wrote {path}")
    print(f"ratio min={_fmt(series.ratio_min)} max={_fmt(series.ratio_max)} (observational; no target value)")
    return all(math.isfinite(r) and r > 0 for _, r in series.points)


def cmd_bounds(config: ExperimentConfig) -> bool:
    if config.family is None:
        raise CliError("bounds needs --family")
    f = config.test_function()
    if f.smoothness is None or f.variation is None:
        raise CliError(f"{f.id} carries no smoothness/variation data; bound checks need both")
    if config.family is Family.GAUSS_LEGENDRE and f.smoothness < 2:
        raise CliError("Gauss bound checks need smoothness order k >= 2")
    grid = config.grid(GridSpec(10, 2048, 24))
    report = rates.error_bound_check(config.family, f, grid)
    for entry in report.entries:
        status = "ok" if entry.holds else "VIOLATION"
        print(f"n={entry.n}: |E|={entry.error:.6g} bound={entry.bound:.6g} {status}")
    violations = [e.n for e in report.entries if not e.holds]
    if violations:
        print(f"first violation at n={violations[0]}")
    else:
        print("no violations")
    if report.threshold is not None:
        print(f"bound holds from n={report.threshold} onward")
    return report.all_hold


_COMMANDS = {
    "nodes": cmd_nodes,
    "sweep": cmd_sweep,
    "figure1": cmd_figure1,
    "alias": cmd_alias,
    "gauss-model": cmd_gauss_model,
    "remez": cmd_remez,
    "ratio": cmd_ratio,
    "bounds": cmd_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebquad",
        description="Quadrature convergence-rate experiments; CSV output with 17 significant digits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "nodes": "write rule nodes/weights as CSV (index,node,weight)",
        "sweep": "error sweep over an n grid plus a rate fit",
        "figure1": "Gauss vs Clenshaw-Curtis error decay for |x-xi|^s, per-s CSV files",
        "alias": "measured vs closed-form/model errors for Chebyshev polynomials",
        "gauss-model": "Gauss model residual decay at fixed aliasing indices (j,r)=(1,4)",
        "remez": "minimax errors over a degree grid (degrees taken from the n range)",
        "ratio": "observed |E_gauss|/|E_cc| ratio series over a shared grid",
        "bounds": "falling-factorial coefficient/error bound checks",
    }
    for name, desc in specs.items():
        p = sub.add_parser(name, help=desc, description=desc)
        p.add_argument("--family", type=_family_arg, help="rule family: cc or gauss")
        p.add_argument("--function", help="registry id, e.g. abs_pow:s=0.5,xi=0.3 or quad_spline:xi=0.3")
        p.add_argument("--s", type=float, help="exponent of |x-xi|^s (alternative to --function)")
        p.add_argument("--xi", type=float, default=0.3, help="singularity location (default 0.3)")
        p.add_argument("--n-min", type=int, help="smallest n (also the single n for nodes/alias)")
        p.add_argument("--n-max", type=int, help="largest n")
        p.add_argument("--n-count", type=int, help="points in the geometric n grid")
        p.add_argument("--m-min", type=int, help="smallest Chebyshev degree (alias)")
        p.add_argument("--m-max", type=int, help="largest Chebyshev degree (alias)")
        p.add_argument("--envelope", action="store_true", help="fit on the error envelope")
        p.add_argument(
            "--envelope-window", type=int, default=ENVELOPE_WINDOW,
            help=f"samples per envelope window (default {ENVELOPE_WINDOW})",
        )
        p.add_argument("--out", help="output file (*.csv) or directory (default: current directory)")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
        p.add_argument("--dump-reference", action="store_true", help="remez: also write the final reference sets")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = ExperimentConfig(
            command=args.command,
            family=args.family,
            function=args.function,
            s=args.s,
            xi=args.xi,
            n_min=args.n_min,
            n_max=args.n_max,
            n_count=args.n_count,
            m_min=args.m_min,
            m_max=args.m_max,
            envelope=args.envelope,
            envelope_window=args.envelope_window,
            out=args.out,
            seed=args.seed,
            dump_reference=args.dump_reference,
        )
        ok = _COMMANDS[args.command](config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("RESULT: fail")
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("RESULT: fail")
        return 2
    print(f"RESULT: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
