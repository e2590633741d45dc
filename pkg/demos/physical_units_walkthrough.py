"""
From laboratory numbers to an absolute susceptibility
=====================================================

The kernel works in dimensionless coordinates. This walkthrough starts from
an electron density typical of a simple metal, builds the Fermi-surface
scales, maps a physical (omega, k, nu) triple onto the reduced coordinates,
and converts the computed ratio back to an absolute susceptibility in
Gaussian CGS units.
"""

from diamag import (
    PhysicalState,
    chi_ratio,
    chi_ratio_to_absolute,
    fermi_parameters_from_density,
    landau_chi_physical,
    to_dimensionless,
)

# sodium-like density, in electrons per cubic centimeter
density = 2.5e22
fermi = fermi_parameters_from_density(density)
print(f"n    = {density:.3e} cm^-3")
print(f"k_F  = {fermi.k_F:.6e} cm^-1")
print(f"v_F  = {fermi.v_F:.6e} cm/s")
print(f"E_F  = {fermi.E_F:.6e} erg")

chi_L = landau_chi_physical(fermi.v_F)
print(f"chi_L = {chi_L:.6e}  (dimensionless CGS susceptibility)")

# a slow probe: 10 GHz drive, wavelength ~ 1 micron, weak collisions
state = PhysicalState(
    v_F=fermi.v_F,
    nu=1e9,
    omega=2 * 3.141592653589793 * 1e10,
    k=2 * 3.141592653589793 / 1e-4,
)
point = to_dimensionless(state)
print(f"reduced coordinates: x = {point.x:.3e}, y = {point.y:.3e}, "
      f"q = {point.q:.3e}")

result = chi_ratio(point)
absolute = chi_ratio_to_absolute(result.total, fermi.v_F)
print(f"chi/chi_L = {result.total.real:.6f} {result.total.imag:+.6f}j "
      f"({result.method.value})")
print(f"chi       = {absolute.real:.6e} {absolute.imag:+.6e}j")
