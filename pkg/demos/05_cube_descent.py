"""Project the 5-cube onto A_4: orbit sizes and the rhombohedral facet."""

from coxtile import CubeVertex, cube_orbit_decomposition, project_cube_vertex, rhombohedron_descent

print("orbit sizes:", cube_orbit_decomposition(4))
for s in ("+++++", "-++++", "+----", "++---"):
    print(s, "->", project_cube_vertex(CubeVertex.parse(s)).coords)

report = rhombohedron_descent(4)
for vertex, image in report["mapping"].items():
    print(f"1/2({vertex}) -> {image}")
print("centre", report["center"], " obtuse face angle", round(report["obtuse_angle_deg"], 4))
