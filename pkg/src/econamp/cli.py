"""Command line front end.

Subcommands:
  simulate <config>             solve one CE stage and report bias, small-signal
                                parameters, gains and limit warnings
  fit <csv> --x COL --y COL     least-squares line through two CSV columns,
                                plus a <input>.points.csv file for plotting
  analyze <csv>                 economic coefficient report for a period series
  cascade G1 [G2 ...]           product of stage gains

Exit codes: 0 success, 2 usage (bad invocation, unreadable file),
3 parse (malformed config or CSV), 4 solver or domain error.
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .amplifier import (
    BreakdownStatus,
    OperatingLimits,
    StageGain,
    breakdown_check,
    cascade_gain,
    stage_gain,
)
from .circuit import (
    AmplifierConfig,
    OperatingPoint,
    SmallSignalParams,
    SolverError,
    small_signal_params,
    solve_operating_point,
)
from .devices import BjtParams
from .econmap import CoefficientReport, EconPeriod, EconSeries, analyze_series, fit_linear

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DOMAIN = 4

CONFIG_KEYS = (
    "v_cc", "r_b1", "r_b2", "r_l",
    "i_es", "i_cs", "alpha_n", "alpha_i", "temperature",
    "i_c_max", "v_ce_max", "p_max",
)
REQUIRED_CONFIG_KEYS = ("v_cc", "r_b1", "r_b2", "r_l", "i_es", "alpha_n")

ECON_COLUMNS = ("period", "investments", "expenses", "incomes")


class InputFormatError(Exception):
    """Malformed config or CSV content (maps to exit code 3)."""


def _fmt(value: float) -> str:
    # human tables: 6 significant digits
    return format(value, ".6g")


# ---------------------------------------------------------------------------
# config file handling

def parse_config_text(text: str, source: str = "<config>") -> dict:
    """Parse `key = value` lines with # comments into a key->float dict."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputFormatError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, rhs = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise InputFormatError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise InputFormatError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = float(rhs.strip())
        except ValueError:
            raise InputFormatError(
                f"{source}:{lineno}: value for {key!r} is not a number: {rhs.strip()!r}"
            ) from None
    missing = [k for k in REQUIRED_CONFIG_KEYS if k not in values]
    if missing:
        raise InputFormatError(f"{source}: missing required keys: {', '.join(missing)}")
    return values


def build_simulation(values: dict) -> tuple[AmplifierConfig, OperatingLimits]:
    """Resolve parsed config values (defaults applied) into typed objects."""
    device = BjtParams(
        i_es=values["i_es"],
        i_cs=values.get("i_cs", values["i_es"]),
        alpha_n=values["alpha_n"],
        alpha_i=values.get("alpha_i", 0.0),
        temperature=values.get("temperature", 300.0),
    )
    config = AmplifierConfig(
        v_cc=values["v_cc"],
        r_b1=values["r_b1"],
        r_b2=values["r_b2"],
        r_l=values["r_l"],
        device=device,
    )
    limits = OperatingLimits(
        i_c_max=values.get("i_c_max", OperatingLimits.i_c_max),
        v_ce_max=values.get("v_ce_max", OperatingLimits.v_ce_max),
        p_max=values.get("p_max", OperatingLimits.p_max),
    )
    return config, limits


def echo_config(config: AmplifierConfig, limits: OperatingLimits) -> str:
    """Render the resolved configuration in the config-file format."""
    dev = config.device
    pairs = (
        ("v_cc", config.v_cc), ("r_b1", config.r_b1), ("r_b2", config.r_b2),
        ("r_l", config.r_l),
        ("i_es", dev.i_es), ("i_cs", dev.i_cs), ("alpha_n", dev.alpha_n),
        ("alpha_i", dev.alpha_i), ("temperature", dev.temperature),
        ("i_c_max", limits.i_c_max), ("v_ce_max", limits.v_ce_max),
        ("p_max", limits.p_max),
    )
    return "\n".join(f"{key} = {value!r}" for key, value in pairs)


# ---------------------------------------------------------------------------
# simulate

@dataclass(frozen=True)
class RunReport:
    config: AmplifierConfig
    limits: OperatingLimits
    op: OperatingPoint
    small_signal: SmallSignalParams
    gains: StageGain
    status: BreakdownStatus
    coefficients: Optional[CoefficientReport] = None

    def __post_init__(self):
        numbers = (
            self.op.v_be, self.op.i_b, self.op.i_c, self.op.i_e, self.op.v_ce,
            self.small_signal.r_in, self.small_signal.g_out, self.small_signal.slope_s,
            self.gains.beta_current, self.gains.voltage_gain, self.gains.power_out,
        )
        if not all(math.isfinite(v) for v in numbers):
            raise ValueError("run report contains non-finite values")

    @property
    def warnings(self) -> tuple[str, ...]:
        out = []
        if self.op.saturated:
            out.append(
                f"saturation: v_ce = {_fmt(self.op.v_ce)} V <= 0, "
                "device out of active region"
            )
        if not self.status.healthy:
            out.append("breakdown: " + ", ".join(self.status.violations))
        return tuple(out)

    def render(self) -> str:
        op, ss, g = self.op, self.small_signal, self.gains
        lines = [
            "config:",
            echo_config(self.config, self.limits),
            "",
            "operating point:",
            f"  v_be  = {_fmt(op.v_be)} V",
            f"  i_b   = {_fmt(op.i_b)} A",
            f"  i_c   = {_fmt(op.i_c)} A",
            f"  i_e   = {_fmt(op.i_e)} A",
            f"  v_ce  = {_fmt(op.v_ce)} V",
            "",
            "small signal:",
            f"  r_in    = {_fmt(ss.r_in)} ohm",
            f"  g_out   = {_fmt(ss.g_out)} S",
            f"  slope_s = {_fmt(ss.slope_s)} S",
            "",
            "stage gains:",
            f"  beta_current = {_fmt(g.beta_current)}",
            f"  voltage_gain = {_fmt(g.voltage_gain)}",
            f"  power_out    = {_fmt(g.power_out)} W",
            "",
            "warnings:",
        ]
        if self.warnings:
            lines.extend(f"  {w}" for w in self.warnings)
        else:
            lines.append("  none")
        lines.append("")
        lines.append("[values]")
        for key, value in (
            ("v_be", op.v_be), ("i_b", op.i_b), ("i_c", op.i_c), ("i_e", op.i_e),
            ("v_ce", op.v_ce), ("r_in", ss.r_in), ("g_out", ss.g_out),
            ("slope_s", ss.slope_s), ("beta_current", g.beta_current),
            ("voltage_gain", g.voltage_gain), ("power_out", g.power_out),
        ):
            lines.append(f"{key}={value!r}")
        lines.append(f"saturated={str(op.saturated).lower()}")
        lines.append(f"healthy={str(self.status.healthy).lower()}")
        return "\n".join(lines)


def run_simulate(config_path: str) -> RunReport:
    with open(config_path, encoding="utf-8") as fh:
        values = parse_config_text(fh.read(), source=config_path)
    config, limits = build_simulation(values)
    op = solve_operating_point(config)
    ss = small_signal_params(config.device, op)
    return RunReport(
        config=config,
        limits=limits,
        op=op,
        small_signal=ss,
        gains=stage_gain(op, ss, config.r_l),
        status=breakdown_check(op, limits),
    )


def _cmd_simulate(args) -> int:
    print(run_simulate(args.config).render())
    return EXIT_OK


# ---------------------------------------------------------------------------
# CSV handling

def _read_csv_rows(path: str) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="", encoding="utf-8-sig") as fh:
        rows = [row for row in csv.reader(fh)]
    rows = [row for row in rows if any(cell.strip() for cell in row)]
    if not rows:
        raise InputFormatError(f"{path}: empty CSV")
    header = [cell.strip() for cell in rows[0]]
    return header, rows[1:]


def _cell(path: str, row: list[str], rowno: int, index: int, column: str) -> str:
    if index >= len(row):
        raise InputFormatError(f"{path}:{rowno}: row has no {column!r} cell")
    return row[index].strip()


def _float_cell(path: str, row: list[str], rowno: int, index: int, column: str) -> float:
    text = _cell(path, row, rowno, index, column)
    try:
        return float(text)
    except ValueError:
        raise InputFormatError(
            f"{path}:{rowno}: {column!r} is not a number: {text!r}"
        ) from None


def read_xy_columns(path: str, x_column: str, y_column: str):
    header, rows = _read_csv_rows(path)
    missing = [c for c in (x_column, y_column) if c not in header]
    if missing:
        raise InputFormatError(
            f"{path}: missing column(s) {', '.join(repr(c) for c in missing)}; "
            f"header has {header}"
        )
    ix, iy = header.index(x_column), header.index(y_column)
    xs, ys = [], []
    for rowno, row in enumerate(rows, start=2):
        xs.append(_float_cell(path, row, rowno, ix, x_column))
        ys.append(_float_cell(path, row, rowno, iy, y_column))
    return xs, ys


def read_econ_series(path: str) -> EconSeries:
    header, rows = _read_csv_rows(path)
    missing = [c for c in ECON_COLUMNS if c not in header]
    if missing:
        raise InputFormatError(
            f"{path}: missing column(s) {', '.join(repr(c) for c in missing)}; "
            f"header has {header}"
        )
    indices = {c: header.index(c) for c in ECON_COLUMNS}
    qty_index = header.index("quantity_out") if "quantity_out" in header else None
    periods = []
    for rowno, row in enumerate(rows, start=2):
        quantity = None
        if qty_index is not None and qty_index < len(row) and row[qty_index].strip():
            quantity = _float_cell(path, row, rowno, qty_index, "quantity_out")
        periods.append(
            EconPeriod(
                label=_cell(path, row, rowno, indices["period"], "period"),
                investments=_float_cell(path, row, rowno, indices["investments"], "investments"),
                expenses=_float_cell(path, row, rowno, indices["expenses"], "expenses"),
                incomes=_float_cell(path, row, rowno, indices["incomes"], "incomes"),
                quantity_out=quantity,
            )
        )
    return EconSeries(periods)


# ---------------------------------------------------------------------------
# fit

def points_file_path(csv_path: str) -> str:
    return csv_path + ".points.csv"


def _cmd_fit(args) -> int:
    xs, ys = read_xy_columns(args.csv, args.x, args.y)
    fit = fit_linear(xs, ys)
    out_path = points_file_path(args.csv)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write("x,y_observed,y_fitted\n")
        for x, y in zip(xs, ys):
            fh.write(f"{x!r},{y!r},{fit.a0 + fit.beta * x!r}\n")
    lines = [
        f"fit: {args.y} = a0 + beta * {args.x}",
        f"  n         = {fit.n}",
        f"  a0        = {_fmt(fit.a0)}",
        f"  beta      = {_fmt(fit.beta)}",
        f"  r_squared = {_fmt(fit.r_squared)}",
        f"  points file: {out_path}",
        "",
        "[values]",
        f"a0={fit.a0!r}",
        f"beta={fit.beta!r}",
        f"r_squared={fit.r_squared!r}",
        f"n={fit.n}",
    ]
    print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze

def render_coefficients(report: CoefficientReport, n_periods: int) -> str:
    def opt(value):
        return "n/a" if value is None else _fmt(value)

    lines = [
        f"periods: {n_periods}",
        "",
        "coefficients:",
        f"  beta_v      = {_fmt(report.beta_v)}",
        f"  harrod_b    = {_fmt(report.harrod_b)}",
        f"  domar_sigma = {_fmt(report.domar_sigma)}",
        f"  mean_beta   = {_fmt(report.mean_beta)}",
        f"  beta_p      = {opt(report.beta_p)}",
        f"  keynes_m    = {opt(report.keynes_m)}",
        "",
        "regression (incomes vs investments+expenses):",
    ]
    if report.fit is None:
        lines.append("  n/a (needs >= 2 periods with varying inputs)")
    else:
        lines.extend([
            f"  a0        = {_fmt(report.fit.a0)}",
            f"  beta      = {_fmt(report.fit.beta)}",
            f"  r_squared = {_fmt(report.fit.r_squared)}",
            f"  n         = {report.fit.n}",
        ])
    lines.append("")
    lines.append("[values]")
    lines.append(f"beta_v={report.beta_v!r}")
    lines.append(f"harrod_b={report.harrod_b!r}")
    lines.append(f"domar_sigma={report.domar_sigma!r}")
    lines.append(f"mean_beta={report.mean_beta!r}")
    if report.beta_p is not None:
        lines.append(f"beta_p={report.beta_p!r}")
    if report.keynes_m is not None:
        lines.append(f"keynes_m={report.keynes_m!r}")
    if report.fit is not None:
        lines.append(f"fit_a0={report.fit.a0!r}")
        lines.append(f"fit_beta={report.fit.beta!r}")
        lines.append(f"fit_r_squared={report.fit.r_squared!r}")
        lines.append(f"fit_n={report.fit.n}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    series = read_econ_series(args.csv)
    report = analyze_series(series)
    print(render_coefficients(report, len(series)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# cascade

def _cmd_cascade(args) -> int:
    print(repr(cascade_gain(args.gains)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="econamp",
        description="Amplifier-stage simulation and economic gain analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="solve a CE amplifier stage from a config file")
    p.add_argument("config", help="key = value config file")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("fit", help="least-squares line through two CSV columns")
    p.add_argument("csv", help="CSV file with a header row")
    p.add_argument("--x", required=True, help="predictor column name")
    p.add_argument("--y", required=True, help="response column name")
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("analyze", help="economic coefficient report for a period series")
    p.add_argument("csv", help="CSV with period,investments,expenses,incomes[,quantity_out]")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("cascade", help="product of stage gains")
    p.add_argument("gains", nargs="+", type=float, help="stage gains")
    p.set_defaults(func=_cmd_cascade)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OverflowError, SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
