"""Aperiodic tilings from the A_n lattices projected onto the Coxeter plane."""

from .cells import (
    delone_cell_at_vertex,
    delone_orbit,
    delone_two_faces_at,
    voronoi_two_faces,
    voronoi_vertices,
)
from .coxeter_projection import (
    build_frame,
    cartan_eigensystem,
    coxeter_rotation_check,
    project_parallel,
    project_perp,
)
from .cubic_descent import (
    CubeVertex,
    cube_orbit_decomposition,
    k_lift_check,
    project_cube_vertex,
    rhombohedron_descent,
)
from .cut_and_project import (
    Patch,
    Window,
    accept,
    build_window,
    debruijn_index,
    generate_rhombic_patch,
    generate_triangular_patch,
    patch_symmetry_report,
    tiling_defects,
)
from .prototiles import (
    RhombusClass,
    TriangleClass,
    classify_rhombus,
    classify_triangle,
    rhombic_prototiles,
    triangular_prototiles,
)
from .render import RenderStyle, patch_from_json, patch_to_json, render_svg
from .root_lattice import LatticeRank, LatticeVector, k_vector, simple_root

__all__ = [
    "RenderStyle",
    "patch_from_json",
    "patch_to_json",
    "render_svg",
    "LatticeRank",
    "LatticeVector",
    "k_vector",
    "simple_root",
    "delone_cell_at_vertex",
    "delone_orbit",
    "delone_two_faces_at",
    "voronoi_two_faces",
    "voronoi_vertices",
    "build_frame",
    "cartan_eigensystem",
    "coxeter_rotation_check",
    "project_parallel",
    "project_perp",
    "CubeVertex",
    "cube_orbit_decomposition",
    "k_lift_check",
    "project_cube_vertex",
    "rhombohedron_descent",
    "Patch",
    "Window",
    "accept",
    "build_window",
    "debruijn_index",
    "generate_rhombic_patch",
    "generate_triangular_patch",
    "patch_symmetry_report",
    "tiling_defects",
    "RhombusClass",
    "TriangleClass",
    "classify_rhombus",
    "classify_triangle",
    "rhombic_prototiles",
    "triangular_prototiles",
]
