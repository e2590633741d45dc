"""
Collisional suppression of the diamagnetic response
===================================================

At zero frequency the ratio chi/chi_L depends only on the reduced wave
number q and the reduced collision rate y. For q >> y the medium responds
almost like the collisionless gas; once the probing wavelength gets long
enough that q sinks below y, collisions wash the quantum response out and
the ratio collapses like q^4. This script traces that collapse for a few
collision rates and writes the curve family to CSV and SVG.
"""

import math

from diamag import DimensionlessPoint, chi_ratio, figure1_rows, rows_to_csv
from diamag.svg import render_line_chart, write_svg

# where each curve crosses 1/2, found by bisection on log q
def half_crossing(y):
    lo, hi = 1e-7, 0.1
    for _ in range(60):
        mid = math.sqrt(lo * hi)
        if abs(chi_ratio(DimensionlessPoint(0.0, y, mid)).total) < 0.5:
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)


for y in (1e-6, 1e-5, 1e-4, 1e-3):
    qc = half_crossing(y)
    summit_q = (24.0 * y) ** (1.0 / 3.0)
    summit = abs(chi_ratio(DimensionlessPoint(0.0, y, summit_q)).total)
    print(f"y = {y:8.0e}   half-crossing q = {qc:.3e}   "
          f"summit |chi/chi_L| = {summit:.4f} near q = {summit_q:.3e}")

# the plateau between the knee and q = 2 sits a little below 1:
for q in (0.1, 0.5, 1.0, 1.9):
    r = chi_ratio(DimensionlessPoint(0.0, 1e-4, q))
    print(f"q = {q:4.2f}   chi/chi_L = {r.total.real:.6f}   ({r.method.value})")

rows, _ = figure1_rows()
with open("suppression_curves.csv", "w", encoding="utf-8", newline="") as fh:
    fh.write(rows_to_csv(rows))

curves = []
for y in (1e-6, 1e-5, 1e-4, 1e-3):
    pts = [(row.q, abs(complex(row.chi_total_re, row.chi_total_im)))
           for row in rows if row.y == y]
    curves.append((f"y = {y:g}", pts))
write_svg(
    render_line_chart(curves, x_log=True, title="static suppression",
                      x_label="q", y_label="|chi / chi_L|"),
    "suppression_curves.svg",
)
print("wrote suppression_curves.csv and suppression_curves.svg")
