"""Parameter sweeps and deterministic CSV emission.

A sweep varies exactly one of (q, x, y) over a log or linear grid while the
other two stay fixed. Every grid point is evaluated through the kernel's
automatic regime selection; points that raise are reported as rows with
method "error" rather than aborting the whole sweep, so a single pole in the
middle of a scan still yields a usable file.

CSV output is byte-deterministic: fixed column order, 17 significant digits
via repr-stable '%.17g' formatting, '.' decimal separator, '\\n' line endings,
UTF-8. Two runs over the same grid produce identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .config import DEFAULT_SETTINGS, Settings
from .core import ChiResult, DimensionlessPoint
from .errors import DiamagError, ValidationError
from .kernel import chi_ratio

__all__ = [
    "CSV_HEADER",
    "FIGURE1_Y_VALUES",
    "FIGURE1_Q_RANGE",
    "FIGURE1_POINTS_PER_CURVE",
    "SweepSpec",
    "OutputRow",
    "format_float",
    "run_sweep",
    "figure1_rows",
    "rows_to_csv",
    "write_csv",
]

CSV_HEADER = (
    "q,x,y,chi_total_re,chi_total_im,chi_classic_re,chi_classic_im,"
    "chi_quant_re,chi_quant_im,method,err_est"
)

FIGURE1_Y_VALUES: Tuple[float, ...] = (1e-6, 1e-5, 1e-4, 1e-3)
FIGURE1_Q_RANGE: Tuple[float, float] = (1e-7, 2.0)
FIGURE1_POINTS_PER_CURVE = 400

_AXES = ("q", "x", "y")
_SPACINGS = ("log", "linear")


@dataclass(frozen=True)
class SweepSpec:
    """One swept coordinate over [lo, hi] with the other two held fixed.

    axis    : which coordinate varies, one of "q", "x", "y"
    lo, hi  : sweep bounds, lo < hi
    points  : grid size, at least 2
    spacing : "log" (requires lo > 0) or "linear"
    fixed_x, fixed_y, fixed_q : values for the non-swept coordinates; the
        entry matching `axis` is ignored and may be left at its default
    """

    axis: str
    lo: float
    hi: float
    points: int
    spacing: str = "log"
    fixed_x: float = 0.0
    fixed_y: float = 0.0
    fixed_q: float = 1.0

    def __post_init__(self) -> None:
        if self.axis not in _AXES:
            raise ValidationError(f"axis must be one of {_AXES}, got {self.axis!r}")
        if self.spacing not in _SPACINGS:
            raise ValidationError(
                f"spacing must be one of {_SPACINGS}, got {self.spacing!r}"
            )
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValidationError("sweep bounds must be finite")
        if not self.lo < self.hi:
            raise ValidationError(
                f"sweep requires lo < hi, got [{self.lo}, {self.hi}]"
            )
        if self.points < 2:
            raise ValidationError(f"sweep needs at least 2 points, got {self.points}")
        if self.spacing == "log" and self.lo <= 0.0:
            raise ValidationError("log spacing requires lo > 0")
        # Bounds must be admissible coordinates themselves so every grid
        # point yields a valid DimensionlessPoint.
        if self.axis == "q" and self.lo <= 0.0:
            raise ValidationError("q sweep requires lo > 0")
        if self.axis in ("x", "y") and self.lo < 0.0:
            raise ValidationError(f"{self.axis} sweep requires lo >= 0")
        for name, value in (("x", self.fixed_x), ("y", self.fixed_y)):
            if name != self.axis and (not math.isfinite(value) or value < 0.0):
                raise ValidationError(f"fixed {name} must be finite and >= 0")
        if self.axis != "q" and (not math.isfinite(self.fixed_q) or self.fixed_q <= 0.0):
            raise ValidationError("fixed q must be finite and > 0")

    def grid(self) -> List[float]:
        """Ascending grid with exact endpoints."""
        n = self.points
        if self.spacing == "log":
            lo, hi = math.log(self.lo), math.log(self.hi)
            values = [math.exp(lo + (hi - lo) * i / (n - 1)) for i in range(n)]
        else:
            values = [self.lo + (self.hi - self.lo) * i / (n - 1) for i in range(n)]
        values[0] = self.lo
        values[-1] = self.hi
        return values

    def point_at(self, value: float) -> DimensionlessPoint:
        coords = {"x": self.fixed_x, "y": self.fixed_y, "q": self.fixed_q}
        coords[self.axis] = value
        return DimensionlessPoint(x=coords["x"], y=coords["y"], q=coords["q"])


@dataclass(frozen=True)
class OutputRow:
    """One CSV row: coordinates, split susceptibility ratio, provenance."""

    q: float
    x: float
    y: float
    chi_total_re: float
    chi_total_im: float
    chi_classic_re: float
    chi_classic_im: float
    chi_quant_re: float
    chi_quant_im: float
    method: str
    err_est: float

    @classmethod
    def from_result(cls, point: DimensionlessPoint, result: ChiResult) -> "OutputRow":
        return cls(
            q=point.q,
            x=point.x,
            y=point.y,
            chi_total_re=result.total.real,
            chi_total_im=result.total.imag,
            chi_classic_re=result.classic.real,
            chi_classic_im=result.classic.imag,
            chi_quant_re=result.quant.real,
            chi_quant_im=result.quant.imag,
            method=result.method.value,
            err_est=result.err_est,
        )

    @classmethod
    def error_row(cls, x: float, y: float, q: float) -> "OutputRow":
        return cls(
            q=q,
            x=x,
            y=y,
            chi_total_re=0.0,
            chi_total_im=0.0,
            chi_classic_re=0.0,
            chi_classic_im=0.0,
            chi_quant_re=0.0,
            chi_quant_im=0.0,
            method="error",
            err_est=0.0,
        )

    def to_csv_line(self) -> str:
        return ",".join(
            (
                format_float(self.q),
                format_float(self.x),
                format_float(self.y),
                format_float(self.chi_total_re),
                format_float(self.chi_total_im),
                format_float(self.chi_classic_re),
                format_float(self.chi_classic_im),
                format_float(self.chi_quant_re),
                format_float(self.chi_quant_im),
                self.method,
                format_float(self.err_est),
            )
        )


def format_float(value: float) -> str:
    """17 significant digits, enough to round-trip any double exactly."""
    return "%.17g" % value


def run_sweep(
    spec: SweepSpec, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[List[OutputRow], bool]:
    """Evaluate the sweep grid in ascending order.

    Returns (rows, had_error). A point whose evaluation raises any package
    error becomes a zeroed row with method "error"; had_error reports whether
    at least one such row exists so the caller can exit nonzero.
    """
    rows: List[OutputRow] = []
    had_error = False
    for value in spec.grid():
        coords = {"x": spec.fixed_x, "y": spec.fixed_y, "q": spec.fixed_q}
        coords[spec.axis] = value
        try:
            point = spec.point_at(value)
            result = chi_ratio(point, settings)
        except DiamagError:
            rows.append(OutputRow.error_row(coords["x"], coords["y"], coords["q"]))
            had_error = True
            continue
        rows.append(OutputRow.from_result(point, result))
    return rows, had_error


def figure1_rows(
    settings: Settings = DEFAULT_SETTINGS,
) -> Tuple[List[OutputRow], bool]:
    """Static collisional-suppression curve family.

    Four q-sweeps at x = 0, one per collision rate in FIGURE1_Y_VALUES,
    each over FIGURE1_Q_RANGE with FIGURE1_POINTS_PER_CURVE log-spaced
    points. Rows are grouped by curve (ascending y), ascending q within
    each curve: 4 x 400 data rows.
    """
    rows: List[OutputRow] = []
    had_error = False
    lo, hi = FIGURE1_Q_RANGE
    for y in FIGURE1_Y_VALUES:
        spec = SweepSpec(
            axis="q",
            lo=lo,
            hi=hi,
            points=FIGURE1_POINTS_PER_CURVE,
            spacing="log",
            fixed_x=0.0,
            fixed_y=y,
        )
        curve, curve_error = run_sweep(spec, settings)
        rows.extend(curve)
        had_error = had_error or curve_error
    return rows, had_error


def rows_to_csv(rows: Iterable[OutputRow]) -> str:
    lines = [CSV_HEADER]
    lines.extend(row.to_csv_line() for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(rows: Sequence[OutputRow], path: str) -> None:
    """Write rows byte-deterministically: UTF-8, '\\n' endings."""
    payload = rows_to_csv(rows).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(payload)
