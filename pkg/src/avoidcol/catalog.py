"""Shipped catalogs of all graphs on up to 7 vertices, one per isomorphism
class.

Each data line is the hex code of the upper adjacency triangle, pairs
(0,1), (0,2), ..., (n-2,n-1) from bit 0 upward; tools/gen_catalog.py
regenerates the files and re-asserts the class counts.
"""

from __future__ import annotations

from importlib import resources

from .graph import Graph, GraphError

CATALOG_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def graph_from_code(n: int, code: int) -> Graph:
    adj = [0] * n
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> bit) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    if code >> bit:
        raise GraphError("code has bits beyond the upper triangle")
    return Graph(n, tuple(adj))


def catalog_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism, 1 <= n <= 7."""
    if n not in CATALOG_COUNTS:
        raise GraphError("catalogs cover 1..7 vertices")
    text = (
        resources.files("avoidcol").joinpath(f"data/catalog_n{n}.txt").read_text()
    )
    graphs = [graph_from_code(n, int(line, 16)) for line in text.split()]
    assert len(graphs) == CATALOG_COUNTS[n]
    return graphs
