"""Write an SVG of the numerical walls in the (x, y) half-plane.

Usage: python demos/05_plot_semicircles.py [out.svg]
"""

import sys

from hilbwalls import chamber_report, from_triple, svg_plot

params = from_triple(1, 3, 2)
walls = chamber_report(params).walls
out = sys.argv[1] if len(sys.argv) > 1 else "walls_1_3_2.svg"
with open(out, "w") as fh:
    fh.write(svg_plot(params, walls))
print(f"wrote {len(walls)} semicircle(s) to {out}")
