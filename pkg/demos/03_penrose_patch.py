"""Cut a Penrose rhombus patch out of A_4* and write it as SVG.

The shifted window gives a generic patch; shifting only the layer heights
gives a patch centred on a point of 5-fold symmetry.
"""

import sys
from collections import Counter

from coxtile import generate_rhombic_patch, patch_symmetry_report, render_svg, tiling_defects
from coxtile.root_lattice import LatticeVector

out = sys.argv[1] if len(sys.argv) > 1 else "penrose.svg"

patch = generate_rhombic_patch(4, 8.0)
print("tiles:", len(patch.tiles), Counter(t.cls.name for t in patch.tiles))
print("defects:", tiling_defects(patch))
indices = Counter(LatticeVector.from_k(tuple(int(x) for x in q)).index() for q in patch.points)
print("vertex indices:", dict(sorted(indices.items())))

sym = generate_rhombic_patch(4, 8.0, shift=[0.0, 0.0], layer_shift=0.1)
print("symmetric patch order:", patch_symmetry_report(sym)["order"])

with open(out, "w") as fh:
    fh.write(render_svg(sym))
print("wrote", out)
