"""Exact combinatorics of hexagonal tilings of the torus and Klein bottle:
family constructions, Pfaffian orientations, matching counts, and the
structural predicates tying them together."""

from .graphs import (
    Cycle,
    EdgeCut,
    Graph,
    INFINITE,
    Matching,
    automorphism_vertex_orbits,
    cyclic_edge_connectivity,
    enumerate_cycles,
    enumerate_perfect_matchings,
    find_isomorphism,
    hamiltonian_cycle,
    has_perfect_matching,
    is_bipartite,
    is_brace,
    is_brick,
    is_k_extendable,
    three_edge_coloring,
    vertex_connectivity_at_least,
)
from .planarity import k33_subdivision_by_packing, planar_by_embedding_search
from .families import (
    Embedding,
    KLEIN_BIPARTITE,
    KLEIN_NONBIPARTITE,
    PolyhexSpec,
    SpecError,
    BuildError,
    TORUS,
    all_specs,
    build_lattice,
    build_polyhex,
    face_width_class,
    face_width_witness,
    is_planar_polyhex,
    named_graph,
    parse_spec,
    torus_param_twin,
    validate_polyhex,
)
from .pfaffian import (
    Orientation,
    SearchBudgetError,
    central_cycles,
    classify_pfaffian,
    cross_cap_odd_check,
    is_oddly_oriented,
    is_pfaffian_orientation,
    matching_count_by_determinant,
    bareiss_determinant,
    pfaffian_search,
    skew_adjacency,
)
from .structure import (
    TriCut,
    TriSumSpec,
    find_ideal_tri_cut,
    tri_sum_compose,
    verify_theorem_cubic_brace_connectivity,
)
from .kuratowski import find_k33_subdivision

__version__ = "0.1.0"
