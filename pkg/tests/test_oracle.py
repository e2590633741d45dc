"""Tests for the independent numerical oracles.

The oracles exist to check the closed forms, so most assertions here compare
oracle output against the kernel at loose-but-meaningful tolerances and pin
down the oracles' own contracts (domains, error fields, limiting values).
"""

import math

import pytest

from diamag import (
    DEFAULT_SETTINGS,
    DimensionlessPoint,
    DomainError,
    ExtrapolationError,
    KineticIntegrand,
    NascentDelta,
    ValidationError,
    chi_from_kinetic,
    chi_quant_smallk,
    chi_ratio,
    chi_ratio_quadrature,
    chi_ratio_quadrature_reflected,
    j_integrals_nascent_delta,
    richardson_extrapolate,
)


def rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------------------
# high-precision quadrature
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "x, y, q",
    [
        (0.1, 0.1, 0.5),
        (0.0, 1e-3, 1.9),
        (0.0, 1.0, 0.05),
        (0.5, 0.01, 1.0),
    ],
)
def test_quadrature_matches_kernel(x, y, q):
    p = DimensionlessPoint(x, y, q)
    got = chi_ratio_quadrature(p)
    want = chi_ratio(p)
    assert rel(got.total, want.total) < 1e-10
    assert got.err_est > 0.0


def test_quadrature_rejects_static_line():
    with pytest.raises(DomainError):
        chi_ratio_quadrature(DimensionlessPoint(0.0, 0.0, 1.0))


def test_reflected_quadrature_is_conjugate():
    # chi(-x) = conj(chi(x)) for a response to a real field
    for x, y, q in [(0.3, 0.05, 0.7), (1.2, 0.4, 1.5)]:
        p = DimensionlessPoint(x, y, q)
        mirrored = chi_ratio_quadrature_reflected(p).total
        direct = chi_ratio(p).total
        assert abs(mirrored - direct.conjugate()) < 1e-10 * abs(direct)


def test_reflected_quadrature_rejects_static_line():
    with pytest.raises(DomainError):
        chi_ratio_quadrature_reflected(DimensionlessPoint(0.5, 0.0, 1.0))


# ---------------------------------------------------------------------------
# kinetic-equation reconstruction
# ---------------------------------------------------------------------------


def test_kinetic_matches_kernel_at_finite_frequency():
    p = DimensionlessPoint(0.1, 0.1, 0.5)
    got = chi_from_kinetic(p)
    want = chi_ratio(p)
    assert rel(got.total, want.total) < 1e-6


def test_kinetic_matches_kernel_on_static_line():
    p = DimensionlessPoint(0.0, 0.01, 1.0)
    got = chi_from_kinetic(p)
    want = chi_ratio(p)
    assert rel(got.total, want.total) < 1e-6
    assert got.classic == 0j


def test_kinetic_rejects_static_line():
    with pytest.raises(DomainError):
        chi_from_kinetic(DimensionlessPoint(0.0, 0.0, 1.0))


def test_occupation_difference_shape():
    ig = KineticIntegrand(x=0.0, y=0.1, q=0.5)
    assert ig.occupation_difference(0.0) == 0.0
    # odd, and identically zero beyond the coupled-shell support
    for u in (0.2, 0.9, 1.2):
        assert ig.occupation_difference(-u) == -ig.occupation_difference(u)
    edge = 1.0 + ig.half_width
    assert ig.occupation_difference(edge + 1e-9) == 0.0
    assert ig.occupation_difference(-edge - 0.5) == 0.0
    # continuous across the clamp seam at u = 1 - q/2
    seam = 1.0 - ig.half_width
    below = ig.occupation_difference(seam - 1e-9)
    above = ig.occupation_difference(seam + 1e-9)
    assert abs(below - above) < 1e-7


def test_denominator_never_vanishes_for_positive_y():
    ig = KineticIntegrand(x=0.3, y=1e-6, q=0.6)
    for u in (-1.3, 0.0, 0.3 / 0.6, 1.3):
        assert abs(ig.denominator(u)) >= ig.y


# ---------------------------------------------------------------------------
# long-wavelength quantum limit
# ---------------------------------------------------------------------------


def test_smallk_static_normalization():
    out = chi_quant_smallk(DimensionlessPoint(0.0, 0.0, 1e-4))
    assert abs(out.quant - 1.0) < 1e-12
    assert out.classic == 0j


def test_smallk_tracks_kernel_when_collisions_dominate():
    # y >> q: the omitted curvature enters at O(q^2) of an O(q^4) value
    y = 0.1
    for q, bar in [(1e-3, 1e-6), (0.01, 1e-5), (0.001, 1e-7)]:
        p = DimensionlessPoint(0.0, y, q)
        got = chi_quant_smallk(p)
        want = chi_ratio(p)
        assert rel(got.total, want.total) < bar


def test_smallk_deviation_is_static_curvature():
    # for y << q the fractional gap to the kernel approaches q^2/20
    p = DimensionlessPoint(0.0, 1e-6, 0.01)
    got = chi_quant_smallk(p).total
    want = chi_ratio(p).total
    gap = abs(got - want) / abs(want)
    assert abs(gap - p.q**2 / 20.0) < 0.1 * (p.q**2 / 20.0)


def test_smallk_rejects_negative_collision_rate_off_static_point():
    with pytest.raises(DomainError):
        chi_quant_smallk(DimensionlessPoint(0.5, 0.0, 0.01))


# ---------------------------------------------------------------------------
# nascent delta and extrapolation
# ---------------------------------------------------------------------------


def test_nascent_delta_validates_width():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(ValidationError):
            NascentDelta(bad)


def test_nascent_delta_normalization_and_peak():
    d = NascentDelta(0.03)
    assert abs(d(0.0) - 1.0 / (0.03 * math.sqrt(2.0 * math.pi))) < 1e-15
    # trapezoid over +-10 widths captures the full mass
    n = 20000
    h = 20.0 * d.width / n
    total = sum(d(-10.0 * d.width + i * h) for i in range(n + 1)) * h
    assert abs(total - 1.0) < 1e-9


def test_nascent_delta_derivatives_match_finite_differences():
    d = NascentDelta(0.5)
    for e in (-0.7, 0.2, 1.1):
        h = 1e-6
        fd1 = (d(e + h) - d(e - h)) / (2.0 * h)
        assert abs(d.first_derivative(e) - fd1) < 1e-6
        # wider step: the second difference amplifies roundoff by 1/h^2
        h = 1e-4
        fd2 = (d(e + h) - 2.0 * d(e) + d(e - h)) / (h * h)
        assert abs(d.second_derivative(e) - fd2) < 1e-6


def test_richardson_recovers_polynomial_exactly():
    hs = [0.1, 0.05, 0.02, 0.01]
    vals = [3.0 + 2.0 * h + 5.0 * h * h for h in hs]
    limit, err = richardson_extrapolate(hs, vals)
    assert abs(limit - 3.0) < 1e-12
    assert err < 1e-10


def test_richardson_input_validation():
    with pytest.raises(ExtrapolationError):
        richardson_extrapolate([0.1], [1.0])
    with pytest.raises(ExtrapolationError):
        richardson_extrapolate([0.1, 0.2], [1.0, 2.0])
    with pytest.raises(ExtrapolationError):
        richardson_extrapolate([0.1, 0.1], [1.0, 2.0])


def test_richardson_order_cap():
    hs = [0.4, 0.2, 0.1, 0.05]
    vals = [1.0 + h for h in hs]
    limit, _ = richardson_extrapolate(hs, vals, max_order=1)
    assert abs(limit - 1.0) < 1e-12


# ---------------------------------------------------------------------------
# velocity-moment integrals
# ---------------------------------------------------------------------------


def test_velocity_moments_reach_their_limits():
    out = j_integrals_nascent_delta(DEFAULT_SETTINGS)
    four_pi = 4.0 * math.pi
    assert abs(out.j1 - four_pi) / four_pi < 5e-6
    assert abs(out.j2 - four_pi) / four_pi < 5e-6
    assert abs(out.landau_combination + 2.0 * four_pi) / (2.0 * four_pi) < 5e-6
    assert out.j1_err_est > 0.0
    assert out.j2_err_est > 0.0
