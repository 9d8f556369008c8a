"""Eccentricity indices, extremal constructions and exhaustive bound checks."""

from .bounds import BOUNDS, BoundReport, evaluate
from .constructions import FamilySpec, build, parse_family
from .enumeration import canonical_graph6, enumerate_connected, enumerate_trees
from .graph import (
    DisconnectedGraphError,
    EccProfile,
    Graph,
    GraphError,
    bfs_distances,
    diametric_path,
    ecc_profile,
    eccentricities,
    from_edge_list,
    is_connected,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .invariants import InvariantSet, chromatic_number, clique_number, dominating_count, invariants, matching_number
from .metrics import IndexReport, indices, path_contribution, tree_max_bound
from .verifier import CHECKS, VerificationRun, verify_bound

__version__ = "0.1.0"

__all__ = [
    "BOUNDS",
    "BoundReport",
    "CHECKS",
    "DisconnectedGraphError",
    "EccProfile",
    "FamilySpec",
    "Graph",
    "GraphError",
    "IndexReport",
    "InvariantSet",
    "VerificationRun",
    "bfs_distances",
    "build",
    "canonical_graph6",
    "chromatic_number",
    "clique_number",
    "diametric_path",
    "dominating_count",
    "ecc_profile",
    "eccentricities",
    "enumerate_connected",
    "enumerate_trees",
    "evaluate",
    "from_edge_list",
    "graph6_decode",
    "graph6_encode",
    "indices",
    "invariants",
    "is_connected",
    "matching_number",
    "parse_family",
    "path_contribution",
    "tree_max_bound",
    "verify_bound",
]
