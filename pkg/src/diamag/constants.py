"""Physical constants in Gaussian CGS units (CODATA 2018).

The susceptibility formulas carry the speed of light explicitly, so the whole
package works in Gaussian CGS. All four constants below are exact CODATA 2018
values; the elementary charge is the magnitude in statcoulomb.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# CODATA 2018, Gaussian CGS
# ---------------------------------------------------------------------------

ELEMENTARY_CHARGE = 4.80320471257e-10
"""Elementary charge magnitude e [statC]."""

HBAR = 1.054571817e-27
"""Reduced Planck constant [erg s]."""

SPEED_OF_LIGHT = 2.99792458e10
"""Speed of light in vacuum c [cm/s]."""

ELECTRON_MASS = 9.1093837015e-28
"""Electron rest mass m [g]."""
