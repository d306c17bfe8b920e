"""Certified bounds on the freeness index of finite graphs.

The freeness index of a connected graph is the largest k for which the
graph embeds in the 3-sphere so that removing any <= k edges leaves a
subgraph whose complement is a connect-sum of handlebodies. This
package searches for the combinatorial certificates that convert into
bounds on that index: Hamiltonian cycles, 2-factors, strong and
polyhedral orientable surface embeddings, orientable cycle double
covers, and Petersen-family minors.
"""

__version__ = "0.1.0"

from .graph import (
    Graph,
    EdgeSubset,
    GraphError,
    UNBOUNDED,
    parse_edge_list,
    parse_graph6,
    encode_graph6,
    is_connected,
    bridges,
    is_cubic,
    vertex_connectivity_at_least,
    girth,
)

__all__ = [
    "Graph",
    "EdgeSubset",
    "GraphError",
    "UNBOUNDED",
    "parse_edge_list",
    "parse_graph6",
    "encode_graph6",
    "is_connected",
    "bridges",
    "is_cubic",
    "vertex_connectivity_at_least",
    "girth",
    "__version__",
]
