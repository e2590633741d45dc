"""Domain types, unit conversions, and the Landau diamagnetic constant.

The calculator works in the dimensionless variables of a degenerate electron
gas: frequency x = omega/(k_F v_F), collision rate y = nu/(k_F v_F), and wave
number q = k/k_F, with the complex combination z = x + iy and the pole
parameter s = z/q. This module owns those types, the mapping to and from
laboratory CGS parameters, and the Landau susceptibility

    chi_L = -e^2 v_F / (12 pi^2 hbar c^2)

which normalizes every ratio the kernel produces. Complex quantities are plain
Python ``complex``; finiteness is enforced at the type boundaries so no NaN or
infinity escapes a public operation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR, SPEED_OF_LIGHT
from .errors import ValidationError

__all__ = [
    "DimensionlessPoint",
    "PhysicalState",
    "FermiParameters",
    "ChiResult",
    "EvalMethod",
    "to_dimensionless",
    "from_dimensionless",
    "fermi_parameters_from_density",
    "landau_chi_physical",
    "landau_chi_magneton_form",
    "chi_ratio_to_absolute",
]


def _require_finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return float(value)


def require_finite_complex(name: str, value: complex) -> complex:
    """Reject NaN/infinity in either component of a complex result."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


class EvalMethod(enum.Enum):
    """Which numerical strategy produced a ChiResult."""

    CLOSED_FORM = "closed-form"
    SERIES_SMALL_Q = "series-small-q"
    PV_STATIC = "pv-static"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class DimensionlessPoint:
    """One evaluation point (x, y, q) in dimensionless plasma variables.

    x : frequency over k_F v_F, >= 0
    y : collision rate over k_F v_F, >= 0
    q : wave number over k_F, > 0

    Negative x is rejected; those values are reachable through the conjugation
    symmetry chi(-x) = conj(chi(x)) instead of direct evaluation. y = 0 is
    accepted at construction but only evaluable on the static line (x = 0) or
    when all integrand poles lie strictly outside the integration interval;
    the kernel enforces that at call time.
    """

    x: float
    y: float
    q: float

    def __post_init__(self) -> None:
        x = _require_finite("x", self.x)
        y = _require_finite("y", self.y)
        q = _require_finite("q", self.q)
        if x < 0:
            raise ValidationError(
                "x must be >= 0; negative frequencies are served by the "
                "conjugation symmetry chi(-x) = conj(chi(x))"
            )
        if y < 0:
            raise ValidationError("y must be >= 0")
        if q <= 0:
            raise ValidationError("q must be > 0")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "q", q)

    @property
    def z(self) -> complex:
        """Complex frequency z = x + iy."""
        return complex(self.x, self.y)

    @property
    def s(self) -> complex:
        """Pole location s = z/q of the angular integrands."""
        return complex(self.x, self.y) / self.q

    def poles_outside_unit_interval(self) -> bool:
        """True when every integrand pole lies strictly outside [-1, 1].

        Only meaningful on the collisionless line y = 0, where the poles are
        real: t = s for the plain denominators and t = s -+ q/2 for the
        shifted one. x = 0 is the static principal-value case and is handled
        separately.
        """
        if self.y != 0.0:
            return True
        a = 0.5 * self.q
        s = self.x / self.q
        return s > 1.0 and abs(s - a) > 1.0 and s + a > 1.0


@dataclass(frozen=True)
class PhysicalState:
    """Laboratory-frame CGS parameters of one evaluation.

    v_F   Fermi velocity [cm/s], > 0
    nu    collision frequency [1/s], >= 0
    omega angular frequency [rad/s], >= 0
    k     wave number [1/cm], > 0
    """

    v_F: float
    nu: float
    omega: float
    k: float

    def __post_init__(self) -> None:
        v_F = _require_finite("v_F", self.v_F)
        nu = _require_finite("nu", self.nu)
        omega = _require_finite("omega", self.omega)
        k = _require_finite("k", self.k)
        if v_F <= 0:
            raise ValidationError("v_F must be > 0")
        if nu < 0:
            raise ValidationError("nu must be >= 0")
        if omega < 0:
            raise ValidationError("omega must be >= 0")
        if k <= 0:
            raise ValidationError("k must be > 0")
        object.__setattr__(self, "v_F", v_F)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "k", k)

    @property
    def k_F(self) -> float:
        """Fermi wave number k_F = m v_F / hbar [1/cm]."""
        return ELECTRON_MASS * self.v_F / HBAR


@dataclass(frozen=True)
class FermiParameters:
    """Derived degenerate-gas scales for a given electron density."""

    v_F: float
    k_F: float
    p_F: float
    E_F: float


@dataclass(frozen=True)
class ChiResult:
    """Susceptibility ratio chi/chi_L split into its two physical origins.

    classic : the classical (orbit-drift) contribution, zero at x = 0
    quant   : the quantum contribution that survives the static limit
    total   : classic + quant, exactly, by construction
    method  : numerical strategy actually used
    err_est : strategy error bound; 0 for exact closed forms, a truncation
              bound for series, the quadrature estimate for oracles. Never a
              model of floating-point rounding.
    """

    classic: complex
    quant: complex
    total: complex
    method: EvalMethod
    err_est: float

    def __post_init__(self) -> None:
        require_finite_complex("classic", self.classic)
        require_finite_complex("quant", self.quant)
        require_finite_complex("total", self.total)
        if self.err_est < 0 or not math.isfinite(self.err_est):
            raise ValidationError("err_est must be finite and >= 0")

    @classmethod
    def from_parts(
        cls, classic: complex, quant: complex, method: EvalMethod, err_est: float = 0.0
    ) -> "ChiResult":
        return cls(
            classic=classic,
            quant=quant,
            total=classic + quant,
            method=method,
            err_est=err_est,
        )


# ---------------------------------------------------------------------------
# Unit conversions
# ---------------------------------------------------------------------------


def to_dimensionless(state: PhysicalState) -> DimensionlessPoint:
    """Map laboratory CGS parameters to (x, y, q).

    x = omega/(k_F v_F), y = nu/(k_F v_F), q = k/k_F with k_F = m v_F/hbar.
    """
    k_F = state.k_F
    scale = k_F * state.v_F
    return DimensionlessPoint(
        x=state.omega / scale, y=state.nu / scale, q=state.k / k_F
    )


def from_dimensionless(point: DimensionlessPoint, v_F: float) -> PhysicalState:
    """Inverse of :func:`to_dimensionless` for a given Fermi velocity."""
    if v_F <= 0 or not math.isfinite(v_F):
        raise ValidationError("v_F must be finite and > 0")
    k_F = ELECTRON_MASS * v_F / HBAR
    scale = k_F * v_F
    return PhysicalState(
        v_F=v_F, nu=point.y * scale, omega=point.x * scale, k=point.q * k_F
    )


def fermi_parameters_from_density(n_e: float) -> FermiParameters:
    """Degenerate-gas scales from the electron density [1/cm^3].

    Uses the spin-degenerate spherical-Fermi-surface relation
    k_F = (3 pi^2 n_e)^(1/3).
    """
    if not math.isfinite(n_e) or n_e <= 0:
        raise ValidationError("n_e must be finite and > 0")
    k_F = (3.0 * math.pi**2 * n_e) ** (1.0 / 3.0)
    v_F = HBAR * k_F / ELECTRON_MASS
    p_F = ELECTRON_MASS * v_F
    E_F = 0.5 * ELECTRON_MASS * v_F**2
    return FermiParameters(v_F=v_F, k_F=k_F, p_F=p_F, E_F=E_F)


# ---------------------------------------------------------------------------
# Landau constant
# ---------------------------------------------------------------------------


def landau_chi_physical(v_F: float) -> float:
    """Landau diamagnetic susceptibility chi_L = -e^2 v_F/(12 pi^2 hbar c^2).

    Strictly negative and linear in v_F; CGS volume susceptibility.
    """
    if not math.isfinite(v_F) or v_F <= 0:
        raise ValidationError("v_F must be finite and > 0")
    return -(ELEMENTARY_CHARGE**2) * v_F / (12.0 * math.pi**2 * HBAR * SPEED_OF_LIGHT**2)


def landau_chi_magneton_form(v_F: float) -> float:
    """chi_L written through the magneton: -(1/3) (e hbar/2mc)^2 p_F m/(pi^2 hbar^3).

    Algebraically identical to :func:`landau_chi_physical` since p_F = m v_F;
    kept as an independent expression for the identity check.
    """
    if not math.isfinite(v_F) or v_F <= 0:
        raise ValidationError("v_F must be finite and > 0")
    magneton = ELEMENTARY_CHARGE * HBAR / (2.0 * ELECTRON_MASS * SPEED_OF_LIGHT)
    p_F = ELECTRON_MASS * v_F
    return -(magneton**2) * p_F * ELECTRON_MASS / (3.0 * math.pi**2 * HBAR**3)


def chi_ratio_to_absolute(ratio: complex, v_F: float) -> complex:
    """Convert a chi/chi_L ratio to an absolute CGS susceptibility."""
    return require_finite_complex("ratio", ratio) * landau_chi_physical(v_F)
