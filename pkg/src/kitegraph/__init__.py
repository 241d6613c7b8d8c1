"""Spectral characterization of small graphs: exact characteristic
polynomials, line graphs and their roots, and exhaustive cospectral-mate
search by orderly generation."""

from .canon import automorphism_group_size, canonical_form, is_isomorphic
from .census import CensusReport, DSVerdict, cospectral_classes, ds_check, enumerate_graphs, trees
from .exact import (
    Certificate,
    MatrixKind,
    certify_lambda_min_ge,
    certify_rho_le,
    charpoly,
    charpoly_pendant_recurrence,
    discriminant,
    inertia,
    trace_powers,
    verify_line_identity,
    verify_subdivision_identity,
)
from .families import (
    FamilySpec,
    b_graph,
    complete,
    cycle,
    double_kite,
    kite,
    lollipop,
    make_family,
    path,
    smith_dn,
    smith_e6,
    smith_e7,
    smith_e8,
    star,
    starlike,
)
from .graph import Graph, GraphError, MultiGraph, disjoint_union
from .graph6 import Graph6Error, from_graph6, read_graph6, to_graph6, write_graph6
from .poly import IntPoly
from .spectra import SpectrumReport, check_interlacing, eigenvalues, least_eigenvalue, second_largest, spectral_radius
from .structure import (
    clique_number,
    induced_subgraph_search,
    is_smith,
    krausz_partitions,
    root_graph_search,
    triangle_count,
)
from .transforms import delete_vertex, delete_vertices, generalized_line_graph, line_graph, subdivision

__version__ = "0.1.0"
