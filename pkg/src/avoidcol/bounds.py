"""Closed forms, bounds, and constructions for 2K2-avoiding colorings.

Edge-count lower bound, the two-branch partition upper bound, the path closed
form with its Eulerian-trail coloring, matchings, subdivided stars, hypercube
and projective-plane lower bounds.  All real-valued bounds are reported as
integer ceilings; raw values are kept in the report inputs for audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .graph import Graph, GraphError, graph_from_edges, matching_graph, path_graph
from .pattern import pattern_from_token
from .solver import Coloring, is_avoiding_coloring


@dataclass(frozen=True)
class BoundReport:
    name: str
    kind: str  # "lower", "upper", or "exact"
    value: int
    inputs: dict

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": self.value,
            "inputs": self.inputs,
        }


def edge_bound_lower(edge_count: int, ell: int) -> int:
    """Least k with ell*C(k,2) >= edge_count.

    Any valid coloring with k classes splits the edges among C(k,2) class
    pairs, each carrying at most ell edges when ell bounds the edges of the
    relevant pair unions.
    """
    if edge_count < 0:
        raise GraphError("edge_count must be nonnegative")
    if ell < 1:
        if edge_count > 0:
            raise GraphError("no H-free subgraph can carry edges")
        return 1
    if edge_count == 0:
        return 1
    # k >= 1/2 + sqrt(1/4 + 2e/ell), then verify exactly in integers
    k = max(1, ceil(0.5 + (0.25 + 2 * edge_count / ell) ** 0.5))
    while ell * k * (k - 1) // 2 >= edge_count and k > 1:
        k -= 1
    while ell * k * (k - 1) // 2 < edge_count:
        k += 1
    return k


def prop5_upper(n: int, chi: int, alpha: int, k1: int, k2: int) -> BoundReport:
    """Partition upper bound on the avoiding chromatic number.

    Splitting every proper color class into parts of size at most k1-1 keeps
    each pair union too small on one side to host the pattern; the second
    branch spares the largest class when k2 >= 3, and for k2 = 2 one maximum
    independent set plus singletons does the job.
    """
    if k1 < 2:
        raise GraphError("bound needs k1 >= 2 (formula divides by k1 - 1)")
    if n < 1 or chi < 1 or alpha < 1:
        raise GraphError("need n >= 1, chi >= 1, alpha >= 1")
    term_k1 = Fraction(n, k1 - 1) + Fraction(k1 - 2, k1 - 1) * chi
    candidates = [("prop5_k1", term_k1)]
    if k2 >= 3:
        term_k2 = (
            Fraction(n, k2 - 1) * (1 - Fraction(1, chi))
            + Fraction(k2 - 2, k2 - 1) * (chi - 1)
            + 1
        )
        candidates.append(("prop5_k2", term_k2))
    elif k2 == 2:
        candidates.append(("prop5_alpha", Fraction(n - alpha + 1)))
    name, best = min(candidates, key=lambda nv: nv[1])
    inputs = {"n": n, "chi": chi, "alpha": alpha, "k1": k1, "k2": k2,
              "raw": float(best)}
    for cand_name, cand_value in candidates:
        inputs["term_" + cand_name.removeprefix("prop5_")] = float(cand_value)
    return BoundReport(name, "upper", ceil(best), inputs)


def chi_2k2_path(n: int) -> int:
    """Closed form for the 2K2-avoiding chromatic number of the n-vertex path.

    For n <= 4 two classes suffice (alternate them); beyond that, the least k
    whose longest-trail capacity floor((k+1)/2)*(k-2) covers the
    ceil((n-1)/3) chain slots.
    """
    if n < 2:
        raise GraphError("paths need at least 2 vertices here")
    if n <= 4:
        return 2
    ell = (n + 1) // 3
    k = 2
    while ((k + 1) // 2) * (k - 2) < ell:
        k += 1
    return k


def _eulerian_walk(edges: set[tuple[int, int]], start: int) -> list[int]:
    """Vertex sequence of an edge-exhausting walk; smallest neighbor first."""
    hood: dict[int, list[int]] = {}
    for u, v in edges:
        hood.setdefault(u, []).append(v)
        hood.setdefault(v, []).append(u)
    for vs in hood.values():
        vs.sort(reverse=True)
    used: set[tuple[int, int]] = set()
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = hood.get(v, [])
        while nbrs and (min(v, nbrs[-1]), max(v, nbrs[-1])) in used:
            nbrs.pop()
        if nbrs:
            w = nbrs.pop()
            used.add((min(v, w), max(v, w)))
            stack.append(w)
        else:
            out.append(stack.pop())
    assert len(used) == len(edges), "walk must cover every edge"
    return out[::-1]


def _longest_trail(k: int) -> list[int]:
    """Canonical longest trail in K_k on vertices 1..k, starting at 1.

    Odd k: all of K_k, walked as the cycle 1..k..1 followed by an Eulerian
    circuit of the rest.  Even k: the matching (2,3),(4,5),...,(k-2,k-1) is
    dropped, and the walk opens with 1,2,4,3,6,5,... (which avoids the
    dropped matching) followed by an Eulerian trail of the rest.  Opening
    with a pass through every vertex guarantees that a prefix of at least k
    vertices already shows all k labels.
    """
    all_edges = {(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)}
    if k % 2 == 1:
        prefix = list(range(1, k + 1)) + [1]
    else:
        # 1,2,4,3,6,5,...,k,k-1 steps around the dropped matching
        prefix = [1, 2]
        for i in range(4, k + 1, 2):
            prefix += [i, i - 1]
        dropped = {(i, i + 1) for i in range(2, k - 1, 2)}
        all_edges -= dropped
    walk_edges = {
        (min(a, b), max(a, b)) for a, b in zip(prefix, prefix[1:])
    }
    assert walk_edges <= all_edges and len(walk_edges) == len(prefix) - 1
    rest = all_edges - walk_edges
    if not rest:
        return prefix
    tail = _eulerian_walk(rest, prefix[-1])
    assert tail[0] == prefix[-1]
    return prefix + tail[1:]


def eulerian_path_coloring(n: int) -> Coloring:
    """A valid 2K2-avoiding coloring of the n-vertex path with the closed-form
    class count.

    Walks a longest trail a_1, a_2, ... in K_k and colors path positions
    3i-4, 3i-2, 3i (1-based, clipped to the path) with class a_i: consecutive
    trail classes interleave on a stretch of the path, so each class pair
    hosts at most one linked stretch and unions stay 2K2-free.
    """
    k = chi_2k2_path(n)
    ell = (n + 1) // 3
    trail = _longest_trail(k)
    expected_edges = k * (k - 1) // 2 if k % 2 else k * (k - 1) // 2 - k // 2 + 1
    assert len(trail) - 1 == expected_edges
    assert len(trail) >= ell + 1, "trail too short for the path"
    assign = [0] * n
    seen = [False] * n
    for i in range(1, ell + 2):
        for pos in (3 * i - 4, 3 * i - 2, 3 * i):
            if 1 <= pos <= n:
                assert not seen[pos - 1]
                seen[pos - 1] = True
                assign[pos - 1] = trail[i - 1] - 1
    assert all(seen)
    coloring = Coloring(tuple(assign))
    assert coloring.class_count == k
    assert is_avoiding_coloring(path_graph(n), pattern_from_token("2K2"), coloring)
    return coloring


def chi_2k2_matching(n: int) -> int:
    """Closed form for a perfect matching on n vertices: least k with
    k(k-1) >= n, i.e. enough class pairs to host one edge each."""
    if n < 2 or n % 2:
        raise GraphError("matchings need an even vertex count n >= 2")
    k = 1
    while k * (k - 1) < n:
        k += 1
    return k


def matching_coloring(n: int) -> Coloring:
    """Witness for chi_2k2_matching: the i-th matching edge's endpoints take
    the endpoints of the i-th edge of K_k in lexicographic order."""
    k = chi_2k2_matching(n)
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    assign = []
    for i in range(n // 2):
        a, b = pairs[i]
        assign += [a, b]
    coloring = Coloring(tuple(assign))
    assert coloring.class_count == k
    assert is_avoiding_coloring(
        matching_graph(n), pattern_from_token("2K2"), coloring
    )
    return coloring


def subdivided_star_graph(n: int) -> Graph:
    """The odd-n tree: a star with (n-1)/2 legs, every edge subdivided once."""
    if n < 3 or n % 2 == 0:
        raise GraphError("subdivided stars need odd n >= 3")
    edges = []
    for leg in range(1, (n - 1) // 2 + 1):
        mid, tip = 2 * leg - 1, 2 * leg
        edges += [(0, mid), (mid, tip)]
    return graph_from_edges(n, edges)


def chi_2k2_subdivided_star(n: int) -> int:
    """Closed form for the subdivided star: least k with k(k-1) >= n-1."""
    if n < 3 or n % 2 == 0:
        raise GraphError("subdivided stars need odd n >= 3")
    k = 1
    while k * (k - 1) < n - 1:
        k += 1
    return k


def cube_graph(d: int) -> Graph:
    """The d-dimensional hypercube on 2^d bitmask vertices."""
    if d < 0:
        raise GraphError("dimension must be nonnegative")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return graph_from_edges(n, edges)


def cube_lower_bound(d: int) -> int:
    """Lower bound on the 2K2-avoiding chromatic number of the hypercube.

    Exact for d in {2, 3}; for d >= 4 the ceiling of
    sqrt(d/(2d-1) * 2^d) + 1/2, since any class-pair union is a double-star
    (at most 2d-1 edges) or a 4-cycle.  Evaluated in exact integers via
    (2k-1)^2 * (2d-1) >= 4 * d * 2^d.
    """
    if d < 2:
        raise GraphError("bound needs dimension at least 2")
    if d == 2:
        return 2
    if d == 3:
        return 4
    k = 1
    while (2 * k - 1) ** 2 * (2 * d - 1) < 4 * d * (1 << d):
        k += 1
    return k


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def projective_graph(p: int) -> Graph:
    """Point-line incidence graph of the projective plane over a prime field.

    Points and lines are the projective classes of nonzero triples mod p
    (canonical representative: first nonzero coordinate 1); a point lies on a
    line when their dot product vanishes mod p.  The result is verified
    (p+1)-regular and K_{2,2}-free before being returned.
    """
    if not _is_prime(p):
        raise GraphError("prime required")
    reps = (
        [(1, y, z) for y in range(p) for z in range(p)]
        + [(0, 1, z) for z in range(p)]
        + [(0, 0, 1)]
    )
    count = p * p + p + 1
    assert len(reps) == count
    edges = []
    for i, pt in enumerate(reps):
        for j, ln in enumerate(reps):
            if sum(a * b for a, b in zip(pt, ln)) % p == 0:
                edges.append((i, count + j))
    g = graph_from_edges(2 * count, edges)
    assert all(g.degree(v) == p + 1 for v in range(g.n)), "incidence must be regular"
    for side in (range(count), range(count, 2 * count)):
        for i in side:
            for j in side:
                if j > i:
                    common = g.adj[i] & g.adj[j]
                    assert common.bit_count() <= 1, "two points share one line"
    return g


def projective_lower_bound(p: int) -> int:
    """Ceiling of sqrt(2(p^2+p+1)(p+1)/(2p+1)) + 1/2, in exact integers."""
    if not _is_prime(p):
        raise GraphError("prime required")
    count = p * p + p + 1
    k = 1
    while (2 * k - 1) ** 2 * (2 * p + 1) < 8 * count * (p + 1):
        k += 1
    return k
