"""Command-line front end.

Subcommands:
  eval     one point, text or JSON, optional absolute CGS output
  sweep    one swept coordinate to CSV (optionally SVG)
  figure1  the four-curve static suppression family to CSV/SVG
  verify   oracle cross-validation suite

Exit codes: 0 success, 1 validation or usage error, 2 numerical-verification
failure (a failed verify check, or any error rows inside a sweep).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .config import DEFAULT_SETTINGS, Settings, apply_overrides, parse_config
from .core import (
    ChiResult,
    DimensionlessPoint,
    landau_chi_physical,
)
from .errors import DiamagError
from .kernel import eval_integrals, chi_ratio, regime_select
from .sweep import (
    FIGURE1_Y_VALUES,
    OutputRow,
    SweepSpec,
    figure1_rows,
    format_float,
    run_sweep,
    write_csv,
)
from .svg import render_line_chart, write_svg
from .verify import render_report, run_verification

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the CLI contract reserves 2 for
    numerical failures, so usage errors are remapped to exit 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="diamag",
        description="susceptibility ratio chi/chi_L for a degenerate collisional plasma",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate one (x, y, q) point")
    p_eval.add_argument("--x", type=float, required=True, help="frequency / (k_F v_F)")
    p_eval.add_argument("--y", type=float, required=True, help="collision rate / (k_F v_F)")
    p_eval.add_argument("--q", type=float, required=True, help="wave number / k_F")
    p_eval.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    p_eval.add_argument(
        "--json", action="store_const", const="json", dest="fmt",
        help="shorthand for --format json",
    )
    p_eval.add_argument(
        "--vf", type=float, default=None, metavar="CM_PER_S",
        help="Fermi velocity; adds absolute CGS susceptibility output",
    )
    p_eval.add_argument("--config", default=None, help="key=value settings override file")

    p_sweep = sub.add_parser("sweep", help="sweep one coordinate to CSV")
    p_sweep.add_argument("--axis", choices=("q", "x", "y"), required=True)
    p_sweep.add_argument("--min", type=float, required=True, dest="lo")
    p_sweep.add_argument("--max", type=float, required=True, dest="hi")
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--spacing", choices=("log", "linear"), default="log")
    p_sweep.add_argument("--x", type=float, default=None, help="fixed x (non-swept)")
    p_sweep.add_argument("--y", type=float, default=None, help="fixed y (non-swept)")
    p_sweep.add_argument("--q", type=float, default=None, help="fixed q (non-swept)")
    p_sweep.add_argument("--out", required=True, help="CSV output path")
    p_sweep.add_argument("--svg", default=None, help="optional SVG plot path")
    p_sweep.add_argument("--config", default=None)

    p_fig = sub.add_parser("figure1", help="static suppression curve family")
    p_fig.add_argument("--out", required=True, help="CSV output path")
    p_fig.add_argument("--svg", default=None, help="optional SVG plot path")
    p_fig.add_argument("--config", default=None)

    p_verify = sub.add_parser("verify", help="run the oracle cross-validation suite")
    p_verify.add_argument(
        "--tol", type=float, default=None,
        help="override every discrepancy bound (default: per-check bounds)",
    )
    p_verify.add_argument("--config", default=None)

    return parser


def _load_settings(config_path: Optional[str]) -> Settings:
    if config_path is None:
        return DEFAULT_SETTINGS
    return apply_overrides(DEFAULT_SETTINGS, parse_config(config_path))


def _fmt_complex(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{format_float(value.real)} {sign} {format_float(abs(value.imag))}j"


def _eval_payload(
    point: DimensionlessPoint,
    result: ChiResult,
    regime: str,
    vf: Optional[float],
) -> dict:
    payload = {
        "q": point.q,
        "x": point.x,
        "y": point.y,
        "chi_total_re": result.total.real,
        "chi_total_im": result.total.imag,
        "chi_classic_re": result.classic.real,
        "chi_classic_im": result.classic.imag,
        "chi_quant_re": result.quant.real,
        "chi_quant_im": result.quant.imag,
        "method": result.method.value,
        "err_est": result.err_est,
        "regime": regime,
        "terms": None,
    }
    if point.y > 0.0:
        try:
            breakdown = eval_integrals(point.z, point.q)
        except DiamagError:
            breakdown = None
        if breakdown is not None:
            payload["terms"] = {
                "I1": [breakdown.I1.real, breakdown.I1.imag],
                "I2": [breakdown.I2.real, breakdown.I2.imag],
                "I3": [breakdown.I3.real, breakdown.I3.imag],
                "term1": [breakdown.term1.real, breakdown.term1.imag],
                "term2": [breakdown.term2.real, breakdown.term2.imag],
                "term3": [breakdown.term3.real, breakdown.term3.imag],
            }
    if vf is not None:
        chi_l = landau_chi_physical(vf)
        payload["absolute"] = {
            "v_fermi_cm_s": vf,
            "chi_landau_cgs": chi_l,
            "chi_total_cgs_re": result.total.real * chi_l,
            "chi_total_cgs_im": result.total.imag * chi_l,
        }
    return payload


def _cmd_eval(args: argparse.Namespace) -> int:
    settings = _load_settings(args.config)
    point = DimensionlessPoint(x=args.x, y=args.y, q=args.q)
    result = chi_ratio(point, settings)
    regime = regime_select(point, settings).value
    if args.fmt == "json":
        payload = _eval_payload(point, result, regime, args.vf)
        print(json.dumps(payload, indent=2))
        return 0
    print(f"point        x = {format_float(point.x)}  y = {format_float(point.y)}"
          f"  q = {format_float(point.q)}")
    print(f"regime       {regime}")
    print(f"method       {result.method.value}")
    print(f"chi_classic  {_fmt_complex(result.classic)}")
    print(f"chi_quant    {_fmt_complex(result.quant)}")
    print(f"chi_total    {_fmt_complex(result.total)}")
    print(f"err_est      {format_float(result.err_est)}")
    if point.y > 0.0:
        try:
            breakdown = eval_integrals(point.z, point.q)
        except DiamagError:
            breakdown = None
        if breakdown is not None:
            print(f"I1           {_fmt_complex(breakdown.I1)}")
            print(f"I2           {_fmt_complex(breakdown.I2)}")
            print(f"I3           {_fmt_complex(breakdown.I3)}")
            print(f"term1        {_fmt_complex(breakdown.term1)}")
            print(f"term2        {_fmt_complex(breakdown.term2)}")
            print(f"term3        {_fmt_complex(breakdown.term3)}")
    if args.vf is not None:
        chi_l = landau_chi_physical(args.vf)
        absolute = complex(result.total.real * chi_l, result.total.imag * chi_l)
        print(f"chi_L        {format_float(chi_l)}  (v_F = {format_float(args.vf)} cm/s)")
        print(f"chi_cgs      {_fmt_complex(absolute)}")
    return 0


def _sweep_curves(rows: Sequence[OutputRow], axis: str) -> List:
    data = [row for row in rows if row.method != "error"]
    axis_of = {"q": lambda r: r.q, "x": lambda r: r.x, "y": lambda r: r.y}[axis]
    mag = [(axis_of(r), abs(complex(r.chi_total_re, r.chi_total_im))) for r in data]
    real = [(axis_of(r), r.chi_total_re) for r in data]
    return [("|chi_total|", mag), ("Re chi_total", real)]


def _cmd_sweep(args: argparse.Namespace) -> int:
    settings = _load_settings(args.config)
    fixed = {"x": args.x, "y": args.y, "q": args.q}
    if fixed[args.axis] is not None:
        print(
            f"diamag sweep: error: --{args.axis} conflicts with --axis {args.axis}",
            file=sys.stderr,
        )
        return 1
    defaults = {"x": 0.0, "y": 0.0, "q": 1.0}
    for name in fixed:
        if fixed[name] is None:
            fixed[name] = defaults[name]
    spec = SweepSpec(
        axis=args.axis,
        lo=args.lo,
        hi=args.hi,
        points=args.points,
        spacing=args.spacing,
        fixed_x=fixed["x"],
        fixed_y=fixed["y"],
        fixed_q=fixed["q"],
    )
    rows, had_error = run_sweep(spec, settings)
    write_csv(rows, args.out)
    if args.svg is not None:
        svg = render_line_chart(
            _sweep_curves(rows, spec.axis),
            x_log=(spec.spacing == "log"),
            title=f"sweep over {spec.axis}",
            x_label=spec.axis,
            y_label="chi / chi_L",
        )
        write_svg(svg, args.svg)
    if had_error:
        print("diamag sweep: some points failed; rows marked method=error", file=sys.stderr)
        return 2
    return 0


def _cmd_figure1(args: argparse.Namespace) -> int:
    settings = _load_settings(args.config)
    rows, had_error = figure1_rows(settings)
    write_csv(rows, args.out)
    if args.svg is not None:
        curves = []
        for y in FIGURE1_Y_VALUES:
            points = [
                (row.q, abs(complex(row.chi_total_re, row.chi_total_im)))
                for row in rows
                if row.y == y and row.method != "error"
            ]
            curves.append((f"y = {y:g}", points))
        svg = render_line_chart(
            curves,
            x_log=True,
            title="static collisional suppression, x = 0",
            x_label="q",
            y_label="|chi / chi_L|",
        )
        write_svg(svg, args.svg)
    if had_error:
        print("diamag figure1: some points failed", file=sys.stderr)
        return 2
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    settings = _load_settings(args.config)
    results = run_verification(settings, tol=args.tol)
    print(render_report(results))
    return 0 if all(result.passed for result in results) else 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and -h; keep main() returning int
        return int(exc.code or 0)
    handlers = {
        "eval": _cmd_eval,
        "sweep": _cmd_sweep,
        "figure1": _cmd_figure1,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DiamagError as exc:
        print(f"diamag {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"diamag {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
