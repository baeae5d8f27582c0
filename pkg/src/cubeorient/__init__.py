"""Hypercube orientation toolkit.

Construct and verify orientations of hypercube graphs: Eulerian orientation
generators and exhaustive enumeration, strong k-node-connectivity checks
with concrete witnesses, and the vertex-isoperimetric machinery (cascade
representation, colex shadows, boundary oracles) that certifies the
expansion condition behind the connectivity guarantees.
"""

from .connectivity import (
    ConnectivityReport,
    is_strongly_k_node_connected,
    menger_strong_connectivity,
    min_vertex_cut,
    strongly_connected,
    undirected_node_connectivity,
)
from .cube import (
    MAX_DIM,
    InfeasibleError,
    NotEulerianError,
    Orientation,
    cut_arcs,
    deserialize,
    edge_count,
    edge_rank,
    from_text,
    full_node_mask,
    in_neighbor_masks,
    is_eulerian_orientation,
    is_smooth,
    load,
    neighborhood,
    neighbors,
    node_count,
    node_mask,
    nodes_of,
    out_degrees,
    out_neighbor_masks,
    save,
    serialize,
    to_text,
)
from .generate import (
    SamplerConfig,
    enumerate_eulerian_orientations,
    euler_tour_orientation,
    find_smooth_not_strongly_connected,
    inductive_orientation,
    random_eulerian_orientation,
    sample_eulerian_orientations,
    smooth_orientation,
)
from .isoperimetry import (
    CascadeRepresentation,
    cascade_representation,
    check_expansion_condition,
    colex_initial_segment,
    hamming_ball_boundary,
    harper_boundary,
    lower_shadow,
    min_boundary_bruteforce,
    shadow_exceeds_segment,
    shadow_size,
    simplicial_segment,
    small_set_boundary,
    verify_boundary_inequalities,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "CascadeRepresentation",
    "ConnectivityReport",
    "InfeasibleError",
    "NotEulerianError",
    "Orientation",
    "SamplerConfig",
    "cascade_representation",
    "check_expansion_condition",
    "colex_initial_segment",
    "cut_arcs",
    "deserialize",
    "edge_count",
    "edge_rank",
    "enumerate_eulerian_orientations",
    "euler_tour_orientation",
    "find_smooth_not_strongly_connected",
    "from_text",
    "full_node_mask",
    "hamming_ball_boundary",
    "harper_boundary",
    "in_neighbor_masks",
    "inductive_orientation",
    "is_eulerian_orientation",
    "is_smooth",
    "is_strongly_k_node_connected",
    "load",
    "lower_shadow",
    "menger_strong_connectivity",
    "min_boundary_bruteforce",
    "min_vertex_cut",
    "neighborhood",
    "neighbors",
    "node_count",
    "node_mask",
    "nodes_of",
    "out_degrees",
    "out_neighbor_masks",
    "random_eulerian_orientation",
    "sample_eulerian_orientations",
    "save",
    "serialize",
    "shadow_exceeds_segment",
    "shadow_size",
    "simplicial_segment",
    "smooth_orientation",
    "small_set_boundary",
    "strongly_connected",
    "to_text",
    "undirected_node_connectivity",
    "verify_boundary_inequalities",
]
