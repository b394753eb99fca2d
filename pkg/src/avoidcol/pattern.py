"""Forbidden bipartite patterns and the pair-of-classes freeness test.

A pattern H is a small bipartite graph plus derived data: a tag naming one of
the six specially-detected shapes (or Custom), and the bipartition parameters
k1/k2 used by the closed-form upper bounds.  The central operation is
pair_is_H_free: does the union of two color classes induce a copy of H?
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import _kernels
from ._pykernels import bits
from .graph import (
    Graph,
    GraphError,
    as_mask,
    contains_induced,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    parse_graph,
    path_graph,
)


@dataclass(frozen=True)
class PatternGraph:
    graph: Graph
    tag: str  # K1pK1 | K2 | K2pK1 | P3 | P4 | TwoK2 | Custom
    k1: int
    k2: int

    @property
    def name(self) -> str:
        return _TAG_TO_TOKEN.get(self.tag, "custom")


_NAMED_GRAPHS = {
    "K1pK1": empty_graph(2),
    "K2": graph_from_edges(2, [(0, 1)]),
    "K2pK1": graph_from_edges(3, [(0, 1)]),
    "P3": path_graph(3),
    "P4": path_graph(4),
    "TwoK2": graph_from_edges(4, [(0, 1), (2, 3)]),
}

_TOKEN_TO_TAG = {
    "K1+K1": "K1pK1",
    "K2": "K2",
    "K2+K1": "K2pK1",
    "P3": "P3",
    "P4": "P4",
    "2K2": "TwoK2",
}

_TAG_TO_TOKEN = {tag: token for token, tag in _TOKEN_TO_TAG.items()}

PATTERN_TOKENS = tuple(_TOKEN_TO_TAG)


def _component_sides(h: Graph) -> list[tuple[int, int]]:
    """Per connected component, the sizes of its two 2-coloring sides.

    Raises when some component has an odd cycle: patterns must be bipartite.
    """
    color = [-1] * h.n
    sides = []
    for start in range(h.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        count = [1, 0]
        while queue:
            u = queue.pop()
            for w in bits(h.adj[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    count[color[w]] += 1
                    queue.append(w)
                elif color[w] == color[u]:
                    raise GraphError("pattern must be bipartite")
        sides.append((count[0], count[1]))
    return sides


def compute_k1_k2(h: Graph) -> tuple[int, int]:
    """Bipartition parameters of a bipartite pattern.

    Each component's 2-coloring is fixed up to swapping its two sides, so the
    bipartitions of H are exactly the 2^(#components) side assignments.  Over
    all of them, k1 is the smallest achievable larger-side size and k2 the
    smallest achievable smaller-side size (empty sides permitted).
    """
    sides = _component_sides(h)
    k1 = h.n
    k2 = h.n
    for choice in range(1 << len(sides)):
        left = sum(s[(choice >> i) & 1] for i, s in enumerate(sides))
        right = h.n - left
        k1 = min(k1, max(left, right))
        k2 = min(k2, min(left, right))
    return k1, k2


def make_pattern(h: Graph) -> PatternGraph:
    """Wrap a bipartite graph as a pattern, tagging the specially-detected shapes."""
    k1, k2 = compute_k1_k2(h)  # also enforces bipartiteness
    tag = "Custom"
    for name, named in _NAMED_GRAPHS.items():
        if (
            h.n == named.n
            and h.edge_count == named.edge_count
            and contains_induced(h, named) is not None
        ):
            tag = name
            break
    return PatternGraph(h, tag, k1, k2)


def pattern_from_token(token: str) -> PatternGraph:
    """Resolve a CLI pattern token: a named pattern or custom:<edgelist-file>."""
    if token in _TOKEN_TO_TAG:
        return make_pattern(_NAMED_GRAPHS[_TOKEN_TO_TAG[token]])
    if token.startswith("custom:"):
        path = token[len("custom:") :]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphError(f"cannot read pattern file {path!r}: {exc}") from None
        return make_pattern(parse_graph(text, "edgelist"))
    raise GraphError(
        f"unknown pattern token {token!r}; expected one of {', '.join(PATTERN_TOKENS)} or custom:<file>"
    )


def violation_checker(g: Graph, h: PatternGraph) -> Callable[[int, int], bool]:
    """Bind the fastest available H-presence check for class pairs of g.

    The returned f(amask, bmask) reports True when the union contains an
    induced H.  Callers must pass disjoint independent class masks; with that
    guarantee the answer depends only on the union, which is what makes
    union-keyed memoization in the solvers sound.
    """
    if h.tag != "Custom":
        return _kernels.bound_detector(h.tag, g)

    hgraph = h.graph

    def check(amask: int, bmask: int) -> bool:
        sub, _ = induced_subgraph(g, amask | bmask)
        return contains_induced(sub, hgraph) is not None

    return check


def _independent(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in bits(mask))


def pair_is_H_free(g: Graph, a, b, h: PatternGraph) -> bool:
    """True iff the union of classes A and B induces no copy of H.

    A and B must be disjoint independent sets of g (masks or id iterables).
    """
    amask = as_mask(g.n, a)
    bmask = as_mask(g.n, b)
    if amask & bmask:
        raise GraphError("class sets must be disjoint")
    if not _independent(g, amask) or not _independent(g, bmask):
        raise GraphError("class sets must be independent")
    return not violation_checker(g, h)(amask, bmask)
