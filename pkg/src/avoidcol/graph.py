"""Undirected simple graphs stored as per-vertex bitmasks.

This module owns the host Graph type, the three file formats, induced-subgraph
machinery, and the exact oracles (chromatic number, independence number,
maximal independent sets) that every other module builds on.  Vertex sets are
plain ints used as bitmasks throughout; adjacency is a tuple of such masks, so
pairwise class checks reduce to word operations.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from ._pykernels import bits

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Malformed input or violated precondition."""


class CapExceeded(RuntimeError):
    """An enumeration grew past its caller-supplied cap."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(n: int, vertex_set) -> int:
    """Normalize a vertex set (mask or iterable of ids) to a bitmask < 2**n."""
    m = vertex_set if isinstance(vertex_set, int) else mask_of(vertex_set)
    if m < 0 or m >> n:
        raise GraphError(f"vertex set {bin(m)} out of range for n={n}")
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    adj: tuple[int, ...]

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @cached_property
    def words(self) -> Optional[array]:
        # uint64 view of the adjacency for the compiled kernels; only graphs
        # that fit one word per mask get one.
        if self.n <= 64:
            return array("Q", self.adj)
        return None

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def full_mask(self) -> int:
        return (1 << self.n) - 1


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, collapsing duplicate edges and rejecting self-loops."""
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} rejected")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# --- file formats ---------------------------------------------------------


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse edgelist / DIMACS .col / 0-1 matrix text into a Graph."""
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "matrix":
        return _parse_matrix(text)
    raise GraphError(f"unknown graph format {format!r}")


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise GraphError(f"line {lineno}: expected vertex count, got {raw!r}")
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u} rejected")
        edges.append((u, v))
    if n is None:
        raise GraphError("empty edgelist input: missing vertex count line")
    try:
        return graph_from_edges(n, edges)
    except GraphError as exc:
        raise GraphError(f"edgelist: {exc}") from None


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: expected 'p edge n m', got {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'e u v', got {raw!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at vertex {u + 1} rejected")
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unknown DIMACS line type {parts[0]!r}")
    if n is None:
        raise GraphError("DIMACS input has no 'p edge' header")
    try:
        return graph_from_edges(n, edges)
    except GraphError as exc:
        raise GraphError(f"dimacs: {exc}") from None


def _parse_matrix(text: str) -> Graph:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    n = len(rows)
    adj = [0] * n
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GraphError(f"matrix row {i + 1}: expected {n} entries, got {len(row)}")
        for j, ch in enumerate(row):
            if ch not in "01":
                raise GraphError(f"matrix row {i + 1}: entry {ch!r} is not 0/1")
            if ch == "1":
                if i == j:
                    raise GraphError(f"matrix row {i + 1}: nonzero diagonal rejected")
                adj[i] |= 1 << j
    for i in range(n):
        for j in bits(adj[i]):
            if not (adj[j] >> i) & 1:
                raise GraphError(f"matrix not symmetric at ({i + 1}, {j + 1})")
    return Graph(n, tuple(adj))


def graph_to_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# --- derived graphs -------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    return Graph(g.n, tuple((full & ~m) & ~(1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertex_set) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given set plus the new-id -> old-id map."""
    smask = as_mask(g.n, vertex_set)
    old_ids = tuple(bits(smask))
    index = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        m = 0
        for w in bits(g.adj[old] & smask):
            m |= 1 << index[w]
        adj.append(m)
    return Graph(len(old_ids), tuple(adj)), old_ids


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [m << a.n for m in b.adj]
    return Graph(a.n + b.n, tuple(adj))


# --- small named families -------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def matching_graph(n: int) -> Graph:
    """Perfect matching on n vertices (n even): edges (0,1), (2,3), ..."""
    if n % 2:
        raise GraphError("matching needs an even vertex count")
    return graph_from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


# --- induced-subgraph containment -----------------------------------------


def contains_induced(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """An injective map phi with uv in E(H) iff phi(u)phi(v) in E(G), or None.

    Backtracks over H-vertices in decreasing-degree order, pruning each
    candidate against both the adjacencies and the non-adjacencies of the
    already-placed vertices.
    """
    if h.n > g.n:
        return None
    order = sorted(range(h.n), key=lambda v: (-h.adj[v].bit_count(), v))
    phi = [-1] * h.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        hv = order[i]
        for gv in range(g.n):
            bit = 1 << gv
            if used & bit:
                continue
            ok = True
            for hj in order[:i]:
                if ((h.adj[hv] >> hj) & 1) != ((g.adj[gv] >> phi[hj]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[hv] = gv
            used |= bit
            if place(i + 1):
                return True
            used &= ~bit
            phi[hv] = -1
        return False

    if place(0):
        return tuple(phi)
    return None


# --- exact oracles ---------------------------------------------------------


def _proper_coloring(g: Graph, order: list[int], k: int) -> Optional[list[int]]:
    """A proper coloring with at most k classes, or None.

    Join-or-open search: a vertex may join any existing non-conflicting class
    or open class index len(classes), which breaks class-relabeling symmetry.
    """
    n = g.n
    assign = [-1] * n
    classes: list[int] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = g.adj[v]
        for ci, cmask in enumerate(classes):
            if not (cmask & av):
                classes[ci] = cmask | (1 << v)
                assign[v] = ci
                if extend(i + 1):
                    return True
                classes[ci] = cmask
                assign[v] = -1
        if len(classes) < k:
            classes.append(1 << v)
            assign[v] = len(classes) - 1
            if extend(i + 1):
                return True
            classes.pop()
            assign[v] = -1
        return False

    if extend(0):
        return assign
    return None


def degree_order(g: Graph) -> list[int]:
    """Vertices by decreasing degree, ties by id; the shared search order."""
    return sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))


def greedy_clique(g: Graph) -> int:
    """Size of a greedily grown clique; a cheap chromatic lower bound."""
    best = 0
    order = degree_order(g)
    for seed in order:
        cmask = 1 << seed
        size = 1
        cand = g.adj[seed]
        for v in order:
            if (cand >> v) & 1 and (g.adj[v] & cmask) == cmask:
                cmask |= 1 << v
                size += 1
                cand &= g.adj[v]
        best = max(best, size)
    return best


def chromatic_number(g: Graph, limit: Optional[int] = None) -> Optional[int]:
    """Exact chromatic number, or None when it exceeds `limit`.

    Iterative deepening on the class budget, starting from a greedy-clique
    lower bound; each budget runs the symmetry-broken join-or-open search over
    the decreasing-degree vertex order.
    """
    if limit is not None and limit < 1:
        raise GraphError("limit must be at least 1")
    if g.n == 0:
        return 0
    order = degree_order(g)
    top = g.n if limit is None else min(limit, g.n)
    for k in range(max(1, greedy_clique(g)), top + 1):
        if _proper_coloring(g, order, k) is not None:
            return k
    return None


def proper_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper coloring using at most k classes, or None if impossible."""
    if g.n == 0:
        return []
    return _proper_coloring(g, degree_order(g), k)


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound."""

    def grow(avail: int, size: int, best: int) -> int:
        if not avail:
            return max(best, size)
        if size + avail.bit_count() <= best:
            return best
        # branch on the available vertex with most available neighbors
        v = max(bits(avail), key=lambda u: ((g.adj[u] & avail).bit_count(), u))
        # include v
        best = grow(avail & ~g.adj[v] & ~(1 << v), size + 1, best)
        # exclude v
        best = grow(avail & ~(1 << v), size, best)
        return best

    return grow(g.full_mask(), 0, 0)


def maximal_independent_sets(g: Graph, cap: Optional[int] = None) -> list[int]:
    """All maximal independent sets as masks, sorted ascending.

    Enumerated as the maximal cliques of the complement (pivoting search);
    raises CapExceeded as soon as the family grows past `cap`.
    """
    if cap is not None and cap < 1:
        raise GraphError("cap must be at least 1")
    comp = complement(g)
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if cap is not None and len(out) > cap:
                raise CapExceeded(f"more than {cap} maximal independent sets")
            return
        pivot = max(bits(p | x), key=lambda u: ((comp.adj[u] & p).bit_count(), u))
        for v in list(bits(p & ~comp.adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & comp.adj[v], x & comp.adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask(), 0)
    return sorted(out)
