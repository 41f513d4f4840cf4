"""Print the rhombic and triangular prototiles for n = 2..11."""

from coxtile import rhombic_prototiles, triangular_prototiles
from coxtile.prototiles import dart_and_kite, interior_angles

import numpy as np

for n in range(2, 12):
    tri = [c.parts for c in triangular_prototiles(n)]
    rh = [tuple(round(a, 2) for a in c.angles_deg) for c in rhombic_prototiles(n)] if n >= 3 else []
    print(f"A_{n:<2} h={n + 1:<2} rhombi {rh}")
    print(f"{'':10}triangles {tri}")

shapes = dart_and_kite(4)
for name, poly in shapes.items():
    print(name, np.round(np.degrees(interior_angles(poly)), 6))
