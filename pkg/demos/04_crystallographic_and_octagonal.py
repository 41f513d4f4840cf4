"""Square, rhombille and Amman-Beenker patches, and the triangle tilings."""

from collections import Counter

from coxtile import generate_rhombic_patch, generate_triangular_patch, tiling_defects

for n in (3, 5, 7):
    p = generate_rhombic_patch(n, 6.0)
    print(f"n={n}: {len(p.tiles)} rhombi", dict(Counter(t.cls.name for t in p.tiles)),
          "defects", len(tiling_defects(p)))

for n in (4, 6):
    p = generate_triangular_patch(n, 6.0)
    print(f"n={n}: {len(p.tiles)} triangles", dict(Counter(t.cls.parts for t in p.tiles)))
