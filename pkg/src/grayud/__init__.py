"""Unit-distance polycirculant drawings of the Gray graph.

Three independent routes to the same 54-vertex graph (LCF code, Levi graph of
the 3x3x3 grid, geometric construction) plus the machinery to certify that
they agree and that the drawing has unit edges and 3-fold rotational symmetry.
"""
from ._kernels import BACKEND
from .embedding import (
    ConstructionParams, DegenerateParameters, Embedding, ValidationReport, assemble,
    build_g0, detect_symmetry, extract_graph, point_circle_realization, validate, vector_star,
)
from .graph import (
    Graph, IncidenceConfiguration, LcfCode, LcfError, bipartition, girth, gray_graph,
    grid2_configuration, grid3_configuration, lcf_graph, levi_graph, verify_hamiltonian_cycle,
)
from .render import RenderStyle, embedding_from_json, embedding_to_json, sweep_to_csv, to_svg
from .sweep import FeasibilityMap, classify, sweep
from .symmetry import (
    IsomorphismCertificate, Permutation, automorphism_count, automorphism_group, edge_orbits,
    find_isomorphism, is_automorphism, is_semiregular, rho, vertex_orbits,
)

__version__ = "0.1.0"
