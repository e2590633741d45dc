"""Closed-form susceptibility kernel and its numerically safe regimes.

The susceptibility ratio chi/chi_L of a degenerate collisional electron gas
reduces to three one-dimensional integrals over the angular variable
t in [-1, 1]:

    I1 = Int (1 - t^2) / (q t - z) dt
    I2 = Int t (1 - t^2) / (q t - z) dt
    I3 = Int (1 - t^2)^2 / ((q t - z)^2 - q^4/4) dt

with z = x + iy and s = z/q. Polynomial division against the simple pole
turns each into a rational expression plus the branch logarithm

    L(sigma) = log(sigma - 1) - log(sigma + 1),

and the shifted quadratic denominator of I3 splits into two pole pairs at
sigma = s -+ q/2 handled by the antiderivative

    g(sigma) = 2 sigma^3 - (10/3) sigma + (1 - sigma^2)^2 L(sigma).

The ratio is then

    chi/chi_L = -(3x/q^2) I1  +  (3/q) I2  +  (3/4) I3
                \_ classical _/   \_____ quantum _____/

The classical term vanishes identically at x = 0. The quantum pair is a
difference of terms of size 3/q^2 * O(max(1, |s|^2)) that cancel to O(1) or
far below, so small q or large |s| destroys the closed form in double
precision. Three safe regimes cover that ground:

  * static principal value at x = y = 0 (its own real formula),
  * a shifted-difference Taylor series in q for moderate s (the two shifted
    antiderivative evaluations are expanded about s, and the leading order
    cancels the middle term exactly, term by term),
  * a Laurent series in q/z for large |s|, whose 1/z^2 and q^2/z^4 orders
    cancel symbolically so only the true residual is summed.

Regime choice is deterministic in (x, y, q): literal thresholds first, then a
measured-cancellation escalation (intermediate magnitude over the computed
quantum part) at the configured digit threshold.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .config import DEFAULT_SETTINGS, Settings
from .core import ChiResult, DimensionlessPoint, EvalMethod, require_finite_complex
from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "RegimeTag",
    "TermBreakdown",
    "branch_log_L",
    "eval_integrals",
    "chi_ratio",
    "chi_static_pv",
    "chi_series_small_q",
    "regime_select",
]

_TINY = 1e-300


class RegimeTag(enum.Enum):
    """Which evaluation regime a point falls into. One tag per point."""

    DIRECT_CLOSED_FORM = "direct-closed-form"
    SMALLQ_STATIC_SERIES = "smallq-static-series"
    PV_STATIC = "pv-static"
    LARGE_S_ASYMPTOTIC = "largeS-asymptotic"


@dataclass(frozen=True)
class TermBreakdown:
    """The three integrals and their weighted terms at one point.

    term1 = -(3x/q^2) I1 is the classical contribution (0 exactly at x = 0),
    term2 = (3/q) I2 and term3 = (3/4) I3 sum to the quantum contribution.
    On well-conditioned (direct-regime) points term1 + term2 + term3 agrees
    with chi_ratio's total to 1e-14 relative; inside cancellation regimes the
    raw sum is exactly what the series strategies exist to replace.
    """

    I1: complex
    I2: complex
    I3: complex
    term1: complex
    term2: complex
    term3: complex


# ---------------------------------------------------------------------------
# Branch logarithm and antiderivative
# ---------------------------------------------------------------------------


def branch_log_L(sigma: complex) -> complex:
    """The branch logarithm L(sigma) = log(sigma - 1) - log(sigma + 1).

    Computed as a difference of principal logarithms, which is single-valued
    and analytic on the closed upper half-plane minus the points +-1. On the
    real segment |sigma| < 1 (reached as the y -> 0+ boundary) this yields
    ln((1-sigma)/(1+sigma)) + i pi, the upper-side boundary value.

    Raises PoleError at sigma = +-1 and DomainError for Im(sigma) < 0 (no
    caller needs the lower half-plane; the conjugation symmetry covers it).
    """
    sigma = complex(sigma)
    if sigma.imag < 0.0:
        raise DomainError("branch_log_L requires Im(sigma) >= 0")
    if sigma == 1.0 or sigma == -1.0:
        raise PoleError("branch_log_L pole at sigma = +-1")
    return cmath.log(sigma - 1.0) - cmath.log(sigma + 1.0)


def _antiderivative_with_peak(sigma: complex) -> tuple:
    """g(sigma) = 2 sigma^3 - (10/3) sigma + (1 - sigma^2)^2 L(sigma).

    Returns (value, peak) where peak is the largest |summand|; the three
    pieces cancel to O(1/sigma) at large |sigma|, and tracking the peak is
    what lets the regime choice measure that loss instead of guessing it.
    """
    one_ms2 = 1.0 - sigma * sigma
    cubic = 2.0 * sigma**3
    linear = -(10.0 / 3.0) * sigma
    logpart = one_ms2 * one_ms2 * branch_log_L(sigma)
    return cubic + linear + logpart, max(abs(cubic), abs(linear), abs(logpart))


def _cubic_log_antiderivative(sigma: complex) -> complex:
    return _antiderivative_with_peak(sigma)[0]


def _check_poles(z: complex, q: float) -> None:
    s = z / q
    a = 0.5 * q
    if z.imag == 0.0:
        for pole in (s, s - a, s + a):
            if -1.0 <= pole.real <= 1.0:
                raise PoleError(
                    "integrand pole on the contour: y = 0 with a real pole "
                    f"at t = {pole.real:.6g} inside [-1, 1]"
                )
    elif s == 1.0 or s == -1.0 or s - a == 1.0 or s - a == -1.0 or s + a == 1.0 or s + a == -1.0:
        raise PoleError("integrand pole at s or s -+ q/2 equal to +-1")


def eval_integrals(z: complex, q: float) -> TermBreakdown:
    """Closed forms of the three angular integrals at z = x + iy, wave number q.

    Valid for Im(z) > 0, and on the real axis when every pole lies strictly
    outside [-1, 1] (the x = 0 static line is served by chi_static_pv, but the
    boundary-value closed forms are still well defined there and equal the
    y -> 0+ limit).
    """
    if q <= 0 or not math.isfinite(q):
        raise DomainError("q must be finite and > 0")
    z = require_finite_complex("z", complex(z))
    if z.imag < 0:
        raise DomainError("Im(z) must be >= 0")
    if z.imag == 0.0 and z.real == 0.0:
        # static boundary value: poles at t = -+ q/2 sit on the contour for
        # q < 2, but the upper-side closed forms remain finite and their
        # imaginary parts cancel in the quantum sum (verified against PV)
        pass
    elif z.imag == 0.0:
        _check_poles(z, q)
    return _direct_pieces(z, q)[0]


def _direct_pieces(z: complex, q: float) -> tuple:
    """Shared closed-form evaluation: (TermBreakdown, peak intermediate size).

    The peak scans every summand that feeds the quantum sum, at all three
    assembly levels (the middle-integral bracket, the two antiderivative
    values, and the summands inside each antiderivative), all already scaled
    by their 1/q weights.
    """
    x = z.real
    s = z / q
    a = 0.5 * q
    if s == 1.0 or s == -1.0:
        raise PoleError("pole at s = +-1")
    Ls = branch_log_L(s)
    one_ms2 = 1.0 - s * s
    bracket_log = s * one_ms2 * Ls
    I1 = (-2.0 * s + one_ms2 * Ls) / q
    I2 = (4.0 / 3.0 - 2.0 * s * s + bracket_log) / q
    g_plus, peak_plus = _antiderivative_with_peak(s + a)
    g_minus, peak_minus = _antiderivative_with_peak(s - a)
    I3 = (g_plus - g_minus) / q**3
    term1 = complex(0.0) if x == 0.0 else -3.0 * x / (q * q) * I1
    breakdown = TermBreakdown(
        I1=I1,
        I2=I2,
        I3=I3,
        term1=term1,
        term2=3.0 / q * I2,
        term3=0.75 * I3,
    )
    peak = max(
        3.0 / (q * q) * max(4.0 / 3.0, 2.0 * abs(s * s), abs(bracket_log)),
        0.75 / q**3 * max(peak_plus, peak_minus, abs(g_plus), abs(g_minus)),
    )
    return breakdown, peak


# ---------------------------------------------------------------------------
# Static principal value
# ---------------------------------------------------------------------------


def chi_static_pv(q: float) -> float:
    """Static collisionless ratio chi/chi_L at wave number q, 0 < q <= 2.

    This is the omega -> 0 then nu -> 0 ordered limit: the integrand poles at
    t = -+ q/2 sit on the contour and the integral is taken as a symmetric
    principal value. The two pole residues are equal and opposite, so the
    result is purely real:

        chi/chi_L = 4/q^2 + (3/(4 q^2)) [ 2/3 + 2(a^2 - 2)
                    + ((1 - a^2)^2 / a) ln((1-a)/(1+a)) ],   a = q/2.

    At q = 2 the logarithm's prefactor vanishes and the value is exactly 3/4.
    For q > 2 the poles leave [-1, 1], no principal value is involved, and
    chi_ratio's ordinary closed form applies; such q raise DomainError.

    Below q = 1/2 the closed form is evaluated through its power series
    (identical function, no 1/q^2 cancellation): 1 - q^2/20 - q^4/560 - ...
    """
    if not (0.0 < q <= 2.0) or not math.isfinite(q):
        raise DomainError("chi_static_pv serves 0 < q <= 2; use chi_ratio elsewhere")
    a = 0.5 * q
    if a == 1.0:
        return 0.75
    if q < 0.5:
        # sum_k 3 a^(2k) / ((2k-1)(2k+1)(2k+3)) subtracted from 1
        total = 1.0
        a2 = a * a
        power = 1.0
        k = 1
        while True:
            power *= a2
            term = 3.0 * power / ((2 * k - 1) * (2 * k + 1) * (2 * k + 3))
            total -= term
            if term <= 1e-17 * abs(total):
                return total
            k += 1
    log_term = (1.0 - a * a) ** 2 / a * math.log((1.0 - a) / (1.0 + a))
    return 4.0 / (q * q) + 3.0 / (4.0 * q * q) * (2.0 / 3.0 + 2.0 * (a * a - 2.0) + log_term)


# ---------------------------------------------------------------------------
# Series strategies
# ---------------------------------------------------------------------------


def _neumaier_add(total: complex, comp: complex, term: complex) -> tuple:
    """One compensated-summation step; returns the new (total, compensation)."""
    t = total + term
    if abs(total) >= abs(term):
        comp += (total - t) + term
    else:
        comp += (term - t) + total
    return t, comp


def _antiderivative_odd_derivatives(s: complex, count: int) -> list:
    """Odd-order derivatives g^(3), g^(5), ..., g^(2*count+1) at sigma = s.

    Derivatives of L satisfy the two-term ladder
        (1 - s^2) L^(n+1) = 2 n s L^(n) + n (n-1) L^(n-1)
    seeded by L and L' = -2/(1 - s^2); the polynomial and (1 - s^2)^2 L parts
    of g then combine by the Leibniz rule (the quartic prefactor has only
    five nonzero derivatives).
    """
    one_ms2 = 1.0 - s * s
    nmax = 2 * count + 1
    Lv = [branch_log_L(s), -2.0 / one_ms2]
    for n in range(1, nmax):
        Lv.append((2.0 * n * s * Lv[n] + n * (n - 1) * Lv[n - 1]) / one_ms2)
    u = [one_ms2 * one_ms2, -4.0 * s + 4.0 * s**3, -4.0 + 12.0 * s * s, 24.0 * s, 24.0 + 0j]
    out = []
    for m in range(1, count + 1):
        n = 2 * m + 1
        total = complex(12.0) if n == 3 else complex(0.0)
        for k in range(min(4, n) + 1):
            total += math.comb(n, k) * u[k] * Lv[n - k]
        out.append(total)
    return out


def _quant_taylor_shift(s: complex, q: float, max_terms: int = 60) -> tuple:
    """Quantum part via the shifted-difference Taylor series about s.

    Expanding the two antiderivative evaluations at s -+ q/2 about s, the
    first-derivative order equals -4/3 q^2 times the middle integral bracket
    and cancels it exactly, leaving

        quant = sum_{m>=1} (3/4) q^(2m-2) g^(2m+1)(s) / (4^m (2m+1)!)

    which converges geometrically with ratio (q / (2 dist(s, +-1)))^2.
    Returns (quant, abs truncation bound).
    """
    dist = min(abs(s - 1.0), abs(s + 1.0))
    ratio = (q / (2.0 * dist)) ** 2
    # grow the derivative table on demand; every selected point exits within
    # a few terms of m = 17/(2 log10(1/ratio)), far below max_terms
    count = 8
    derivs = _antiderivative_odd_derivatives(s, count)
    total = complex(0.0)
    comp = complex(0.0)
    last = 0.0
    small_streak = 0
    fact = 6.0
    qpow = 1.0
    fourpow = 4.0
    for m in range(1, max_terms + 1):
        if m > count:
            count = min(2 * count, max_terms)
            derivs = _antiderivative_odd_derivatives(s, count)
        term = 0.75 * qpow * derivs[m - 1] / (fourpow * fact)
        total, comp = _neumaier_add(total, comp, term)
        last = abs(term)
        if last <= 1e-17 * max(abs(total), _TINY):
            small_streak += 1
            if small_streak >= 2:
                break
        else:
            small_streak = 0
        qpow *= q * q
        fourpow *= 4.0
        fact *= (2 * m + 2) * (2 * m + 3)
    else:
        raise ConvergenceError(
            "shifted-difference series did not converge", total + comp, last, max_terms
        )
    total += comp
    tail = last * ratio / (1.0 - ratio) if ratio < 1.0 else last
    return total, 4.0 * tail


def _quant_laurent(z: complex, q: float, max_outer: int = 200, max_inner: int = 400) -> tuple:
    """Quantum part via the large-|s| Laurent double series.

    The quantum integrals expand in powers of (q/z)^2 and q^4/(4 z^2); the
    entire first shifted order cancels the middle term order by order, so the
    sum starts at the q^4/z^4 residual:

        quant = (12/z^2) sum_{m>=1} sum_{j>=0} t_mj,
        t_m0 = (q^4/(4 z^2))^m / 15,
        t_m,j+1 = t_mj (q/z)^2 (2j+2m+3)(2j+2m+2) / ((2j+2)(2j+7)).

    Absolutely convergent for |s| > 1 + q/2 with ample margin at |s| >= 3.
    Returns (quant, abs truncation bound).
    """
    w = (q / z) ** 2
    r = q**4 / (4.0 * z * z)
    total = complex(0.0)
    comp = complex(0.0)
    rm = r / 15.0
    last_inner = 0.0
    small_streak = 0
    for m in range(1, max_outer + 1):
        tmj = rm
        inner = tmj
        icomp = complex(0.0)
        for j in range(max_inner):
            tmj *= w * ((2 * j + 2 * m + 3) * (2 * j + 2 * m + 2)) / ((2 * j + 2) * (2 * j + 7))
            inner, icomp = _neumaier_add(inner, icomp, tmj)
            if abs(tmj) <= 1e-17 * max(abs(inner), abs(total), _TINY):
                break
        else:
            raise ConvergenceError("Laurent inner series stalled", total, abs(inner), max_inner)
        inner += icomp
        total, comp = _neumaier_add(total, comp, inner)
        last_inner = abs(inner)
        if last_inner <= 1e-17 * max(abs(total), _TINY):
            small_streak += 1
            if small_streak >= 2:
                break
        else:
            small_streak = 0
        rm *= r
    else:
        raise ConvergenceError("Laurent outer series stalled", total, last_inner, max_outer)
    total += comp
    prefactor = 12.0 / (z * z)
    return prefactor * total, 4.0 * abs(prefactor) * last_inner


def _classic_laurent(z: complex, q: float, x: float, max_terms: int = 400) -> tuple:
    """Classical term via the Laurent series of the first integral.

    I1 = -(1/z) sum_{j>=0} (4 / ((2j+1)(2j+3))) (q/z)^(2j); the weighted term
    is -(3x/q^2) I1. Converges for |s| > 1. Returns (value, abs bound).
    """
    w = (q / z) ** 2
    term = 4.0 / 3.0 + 0j
    total = term
    comp = complex(0.0)
    j = 0
    while True:
        term *= w * (2 * j + 1) / (2 * j + 5)
        total, comp = _neumaier_add(total, comp, term)
        j += 1
        if abs(term) <= 1e-17 * max(abs(total), _TINY):
            break
        if j >= max_terms:
            raise ConvergenceError("classical Laurent series stalled", total, abs(term), j)
    I1 = -(total + comp) / z
    weight = -3.0 * x / (q * q)
    return weight * I1, 4.0 * abs(weight * term / z)


def _realify_static(value: complex, x: float) -> complex:
    """Exact reality at x = 0: drop the identically-zero imaginary part."""
    if x == 0.0:
        return complex(value.real, 0.0)
    return value


# ---------------------------------------------------------------------------
# Regime selection and dispatch
# ---------------------------------------------------------------------------


def _classify(point: DimensionlessPoint, settings: Settings):
    """Deterministic regime choice; returns (tag, strategy, breakdown|None)."""
    x, y, q = point.x, point.y, point.q
    if y == 0.0 and x == 0.0:
        return RegimeTag.PV_STATIC, "pv", None
    if x == 0.0 and q < settings.smallq_q_max and y < settings.smallq_beta_factor * q:
        return RegimeTag.SMALLQ_STATIC_SERIES, "taylor", None
    s = point.s
    s_abs = abs(s)
    if s_abs > settings.large_s_threshold:
        return RegimeTag.LARGE_S_ASYMPTOTIC, "laurent", None
    breakdown, peak = _direct_pieces(point.z, q)
    quant = breakdown.term2 + breakdown.term3
    lost_digits = math.log10(peak / max(abs(quant), _TINY))
    if lost_digits > settings.cancel_digits:
        if s_abs >= settings.series_s_min:
            return RegimeTag.LARGE_S_ASYMPTOTIC, "laurent", breakdown
        dist = min(abs(s - 1.0), abs(s + 1.0))
        if q <= settings.taylor_span_factor * dist:
            return RegimeTag.SMALLQ_STATIC_SERIES, "taylor", breakdown
    return RegimeTag.DIRECT_CLOSED_FORM, "direct", breakdown


def regime_select(point: DimensionlessPoint, settings: Settings = DEFAULT_SETTINGS) -> RegimeTag:
    """Pick the evaluation regime for a point. Deterministic in (x, y, q).

    Literal windows come first: the static principal value at x = y = 0, the
    static series for x = 0 with q below smallq_q_max and y below
    smallq_beta_factor * q, and the asymptotic branch for |s| above
    large_s_threshold. Otherwise the closed form is evaluated and escalated
    to a series when its measured cancellation exceeds cancel_digits decimal
    digits (boundary values stay with the closed form; all comparisons are
    strict).
    """
    _validate_y0(point)
    tag, _, _ = _classify(point, settings)
    return tag


def _validate_y0(point: DimensionlessPoint) -> None:
    if point.y == 0.0 and point.x > 0.0 and not point.poles_outside_unit_interval():
        raise PoleError(
            "y = 0 with x > 0 puts a pole inside the integration interval "
            "(collisionless Landau-damping line); evaluation is rejected"
        )


def _direct_result(point: DimensionlessPoint, breakdown: TermBreakdown) -> ChiResult:
    x, q = point.x, point.q
    if x == 0.0:
        # assemble from real parts: the quantum part is exactly real here and
        # the shifted-difference bracket reduces to twice a real part
        s = point.s
        bracket = 4.0 / 3.0 - 2.0 * (s * s).real + (s * (1.0 - s * s) * branch_log_L(s)).real
        shifted = 2.0 * _cubic_log_antiderivative(s + 0.5 * q).real
        quant = complex(3.0 / (q * q) * bracket + 0.75 * shifted / q**3, 0.0)
        return ChiResult.from_parts(complex(0.0), quant, EvalMethod.CLOSED_FORM, 0.0)
    quant = _compensated_pair(breakdown.term2, breakdown.term3)
    return ChiResult.from_parts(breakdown.term1, quant, EvalMethod.CLOSED_FORM, 0.0)


def _compensated_pair(a: complex, b: complex) -> complex:
    """Two-sum of the two quantum terms (the rounding of + captured exactly)."""
    s = a + b
    bp = s - a
    err = (a - (s - bp)) + (b - bp)
    return s + err


def chi_series_small_q(point: DimensionlessPoint, settings: Settings = DEFAULT_SETTINGS) -> ChiResult:
    """Series evaluation of chi/chi_L, safe where the closed form cancels.

    Two branches, chosen by |s| = |z|/q:

      * |s| >= series_s_min: Laurent expansion in q/z; the 1/z^2 and q^2/z^4
        orders of the two quantum terms cancel symbolically, so the returned
        value is the true leading residual (starting at q^4/z^4). Covers both
        the collision-dominated window q << |z| and the mandatory large-|s|
        asymptotic regime.
      * |s| < series_s_min with q <= taylor_span_factor * dist(s, +-1):
        shifted-difference Taylor series about s, exact in beta = y/q; on the
        static line it reduces to 1 - q^2/20 - ... .

    err_est carries the analytic truncation bound. Points where neither
    branch converges raise DomainError.
    """
    _validate_y0(point)
    x, q = point.x, point.q
    z = point.z
    s = point.s
    s_abs = abs(s)
    if s_abs >= settings.series_s_min:
        quant, quant_err = _quant_laurent(z, q)
        quant = _realify_static(quant, x)
        if x == 0.0:
            return ChiResult.from_parts(complex(0.0), quant, EvalMethod.SERIES_SMALL_Q, quant_err)
        classic, classic_err = _classic_laurent(z, q, x)
        return ChiResult.from_parts(
            classic, quant, EvalMethod.SERIES_SMALL_Q, quant_err + classic_err
        )
    dist = min(abs(s - 1.0), abs(s + 1.0))
    if q > settings.taylor_span_factor * dist:
        raise DomainError(
            "point is outside both series regimes: |s| < series_s_min and "
            "q exceeds taylor_span_factor * dist(s, +-1)"
        )
    quant, quant_err = _quant_taylor_shift(s, q)
    quant = _realify_static(quant, x)
    if x == 0.0:
        return ChiResult.from_parts(complex(0.0), quant, EvalMethod.SERIES_SMALL_Q, quant_err)
    I1 = (-2.0 * s + (1.0 - s * s) * branch_log_L(s)) / q
    classic = -3.0 * x / (q * q) * I1
    return ChiResult.from_parts(classic, quant, EvalMethod.SERIES_SMALL_Q, quant_err)


def chi_ratio(point: DimensionlessPoint, settings: Settings = DEFAULT_SETTINGS) -> ChiResult:
    """Susceptibility ratio chi/chi_L with automatic regime handling.

    classic and quant are the two physical contributions; total is their sum
    exactly. method records the strategy actually used and err_est its
    truncation bound (0 for closed forms and the principal value).

    Raises PoleError for collisionless points with a pole on the contour
    (y = 0 with 0 < x unless every pole is outside the interval).
    """
    _validate_y0(point)
    tag, strategy, breakdown = _classify(point, settings)
    if strategy == "pv":
        q = point.q
        if q <= 2.0:
            quant = complex(chi_static_pv(q), 0.0)
        else:
            bd = eval_integrals(complex(0.0, 0.0), q)
            quant = complex((bd.term2 + bd.term3).real, 0.0)
        return ChiResult.from_parts(complex(0.0), quant, EvalMethod.PV_STATIC, 0.0)
    if strategy == "direct":
        return _direct_result(point, breakdown)
    return chi_series_small_q(point, settings)
