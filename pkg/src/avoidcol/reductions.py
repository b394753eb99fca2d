"""Hardness gadget constructions for pattern-avoiding coloring.

Reductions from 2-coloring of 3-uniform hypergraphs: a pentagon-matrix
construction targeting the P3 pattern and a P3-chain gadget construction
targeting P4, together with a brute-force hypergraph 2-coloring oracle and
the explicit coloring lift for the P4 reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, graph_from_edges
from .pattern import pattern_from_token
from .solver import Coloring, is_avoiding_coloring


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph: edges are sorted triples of distinct vertices."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        for e in self.edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise GraphError(f"hyperedge {e} must have 3 distinct vertices")
            if any(v < 0 or v >= self.n for v in e):
                raise GraphError(f"hyperedge {e} out of range")
            if tuple(sorted(e)) != e:
                raise GraphError(f"hyperedge {e} must be sorted")


def hypergraph3(n: int, edges) -> Hypergraph3:
    return Hypergraph3(n, tuple(tuple(sorted(e)) for e in edges))


def parse_hypergraph(text: str) -> Hypergraph3:
    """First line "n m", then m lines "a b c" (0-based)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphError(f"edge line {ln!r} must have 3 vertices")
        edges.append(tuple(int(x) for x in parts))
    return hypergraph3(n, edges)


def hypergraph_2colorable(t: Hypergraph3) -> Optional[tuple[int, ...]]:
    """A 2-coloring with no monochromatic edge, or None; exhaustive scan."""
    if t.n > 20:
        raise GraphError("2-colorability scan is limited to 20 vertices")
    emasks = [sum(1 << v for v in e) for e in t.edges]
    for mask in range(1 << t.n):
        ok = True
        for em in emasks:
            hit = mask & em
            if hit == 0 or hit == em:
                ok = False
                break
        if ok:
            return tuple((mask >> v) & 1 for v in range(t.n))
    return None


def reduce_to_p3(t: Hypergraph3) -> Graph:
    """Pentagon-matrix graph whose chi_P3 is 5 iff the hypergraph 2-colors.

    An n x m matrix of pentagons C[i][j] (row i = hypergraph vertex i, column
    j = hyperedge j), chained so that every valid 5-class pattern propagates a
    consistent side choice along each row, plus one claw per hyperedge whose
    leaves tap the fifth pentagon vertex in its three rows.
    """
    if t.n < 1 or len(t.edges) < 1:
        raise GraphError("need at least one vertex and one hyperedge")
    n, m = t.n, len(t.edges)

    def pent(i: int, j: int, k: int) -> int:
        return (i * m + j) * 5 + k

    edges = []
    for i in range(n):
        for j in range(m):
            for k in range(5):
                edges.append((pent(i, j, k), pent(i, j, (k + 1) % 5)))
    # third and fourth vertices feed the next row's first vertex
    for j in range(m):
        for i in range(n - 1):
            edges.append((pent(i, j, 2), pent(i + 1, j, 0)))
            edges.append((pent(i, j, 3), pent(i + 1, j, 0)))
    # last row wraps into the next column's first row
    for j in range(m - 1):
        edges.append((pent(n - 1, j, 2), pent(0, j + 1, 0)))
        edges.append((pent(n - 1, j, 3), pent(0, j + 1, 0)))
    # fourth vertex also ties to the second vertex one column over
    for i in range(n):
        for j in range(m - 1):
            edges.append((pent(i, j, 3), pent(i, j + 1, 1)))
    base = 5 * n * m
    for ell, he in enumerate(t.edges):
        center = base + 4 * ell
        for leaf_ix, row in enumerate(he):
            leaf = center + 1 + leaf_ix
            edges.append((center, leaf))
            edges.append((leaf, pent(row, ell, 4)))
    return graph_from_edges(base + 4 * m, edges)


def reduce_to_p4(t: Hypergraph3) -> Graph:
    """Gadget graph whose chi_P4 is at most 3 iff the hypergraph 2-colors.

    Base: vertex pairs (x_i, x_i') joined by an edge, and a hub z adjacent to
    every x_i and x_i'.  Per hyperedge: three paths a_i-b_i-c_i, bridges
    (c1,w1), (c2,w1), (c2,w2), (c3,w2), and attachments from a_1, a_2, a_3 to
    the hyperedge's vertices.
    """
    if t.n < 4:
        raise GraphError("construction needs at least 4 hypergraph vertices")
    if len(t.edges) < 1:
        raise GraphError("need at least one hyperedge")
    n = t.n
    z = 2 * n
    edges = []
    for i in range(n):
        edges += [(i, n + i), (z, i), (z, n + i)]
    for ell, he in enumerate(t.edges):
        base = 2 * n + 1 + 11 * ell
        a = [base, base + 3, base + 6]
        b = [base + 1, base + 4, base + 7]
        c = [base + 2, base + 5, base + 8]
        w1, w2 = base + 9, base + 10
        for i in range(3):
            edges += [(a[i], b[i]), (b[i], c[i])]
        edges += [(c[0], w1), (c[1], w1), (c[1], w2), (c[2], w2)]
        for i in range(3):
            edges.append((a[i], he[i]))
    return graph_from_edges(2 * n + 1 + 11 * len(t.edges), edges)


def lift_coloring_p4(t: Hypergraph3, hcol) -> Coloring:
    """Extend a proper hypergraph 2-coloring to a P4-avoiding 3-coloring of
    reduce_to_p4(t).

    x_i keeps its hypergraph color, x_i' the opposite, z the third class; in
    each gadget the a/c path ends mirror their attachment colors, the b's sit
    in the third class, and w1/w2 depend on which attachment holds the
    minority color.  The result is re-validated before being returned.
    """
    hcol = tuple(hcol)
    if len(hcol) != t.n or any(col not in (0, 1) for col in hcol):
        raise GraphError("need one 0/1 color per hypergraph vertex")
    for he in t.edges:
        if len({hcol[v] for v in he}) == 1:
            raise GraphError(f"hyperedge {he} is monochromatic")
    n = t.n
    g = reduce_to_p4(t)
    assign = [0] * g.n
    for i in range(n):
        assign[i] = hcol[i]
        assign[n + i] = 1 - hcol[i]
    assign[2 * n] = 2
    for ell, he in enumerate(t.edges):
        base = 2 * n + 1 + 11 * ell
        h = [hcol[v] for v in he]
        # the minority position: exactly one endpoint disagrees with the rest
        s = next(i for i in range(3) if h[i] != h[(i + 1) % 3] and h[i] != h[(i + 2) % 3])
        for i in range(3):
            assign[base + 3 * i] = 1 - h[i]      # a_i
            assign[base + 3 * i + 1] = 2         # b_i
            assign[base + 3 * i + 2] = h[i]      # c_i
        w1, w2 = base + 9, base + 10
        if s == 0:
            assign[w1] = 2
            assign[w2] = h[0]
        elif s == 2:
            assign[w2] = 2
            assign[w1] = h[2]
        else:
            assign[w1] = 2
            assign[w2] = 2
    coloring = Coloring(tuple(assign))
    if not is_avoiding_coloring(g, pattern_from_token("P4"), coloring):
        raise AssertionError("lifted coloring failed validation")
    return coloring
