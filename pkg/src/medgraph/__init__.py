"""medgraph: median sets in graphs, step-p connectivity, and exact LP recognition."""

from .graph import Graph, DistMatrix, build_graph, all_pairs_distances, power_graph, read_graph, write_graph
from .medians import Profile, VertexFunction, median_value, median_set, local_median_set_p

__all__ = [
    "Graph", "DistMatrix", "build_graph", "all_pairs_distances", "power_graph",
    "read_graph", "write_graph",
    "Profile", "VertexFunction", "median_value", "median_set", "local_median_set_p",
]

__version__ = "0.1.0"
