"""Walk through the A_4 lattice and its Coxeter plane.

Run: python3 demos/01_lattice_and_frame.py
"""

import numpy as np

from coxtile import build_frame, k_vector, project_parallel, project_perp
from coxtile.root_lattice import coxeter_action, fundamental_weights, inner_product, k_vectors

n = 4
ks = k_vectors(n)
print("k_1 . k_1 =", inner_product(ks[0], ks[0]), "  k_1 . k_2 =", inner_product(ks[0], ks[1]))
print("omega_2 in the k basis:", fundamental_weights(n)[1].coords)

# The Coxeter element just rolls the k's; it has order h = 5.
v = k_vector(n, 5)
print("R(k_5) =", coxeter_action(v).coords)

frame = build_frame(n)
print("\nE_par images (unit circle, angle 2 pi j/5):")
print(np.round(project_parallel(np.eye(n + 1), frame), 4))

print("\nE_perp images: a pentagram, consecutive angle 144 deg")
perp = np.array([project_perp(k, frame) for k in ks])
angles = np.degrees(np.arctan2(perp[:, 1], perp[:, 0])) % 360
print(np.round(np.diff(angles) % 360, 6))
