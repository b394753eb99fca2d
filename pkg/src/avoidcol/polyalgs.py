"""Polynomial special cases of pattern-avoiding coloring.

Four procedures: the unique optimal coloring for the edge-plus-isolated-vertex
pattern, the triangle-closure reduction for P3, the bounded-degree decision
for chi_P3 <= 3, and the maximal-independent-set procedure deciding
chi_2K2 <= 3.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import ceil
from typing import Optional

from . import _kernels
from ._pykernels import bits
from .graph import Graph, chromatic_number, maximal_independent_sets
from .pattern import make_pattern, pattern_from_token
from .solver import Coloring, is_avoiding_coloring


def k2k1_coloring(g: Graph) -> Coloring:
    """The unique optimal coloring avoiding an edge plus an isolated vertex.

    Classes are the equivalence classes of 'same open neighborhood': inside a
    class every vertex sees exactly the same outside vertices, so any two
    classes induce a complete-or-empty bipartite union, which that pattern
    can never embed into.  Classes are numbered by their smallest member.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    ordered = sorted(groups.values(), key=lambda vs: vs[0])
    assign = [0] * g.n
    for ci, vs in enumerate(ordered):
        for v in vs:
            assign[v] = ci
    return Coloring(tuple(assign))


def p3_closure(g: Graph) -> Graph:
    """Add the missing edge of every induced P3 of g, making it a triangle.

    One pass over the input graph only: chords are added for g's own paths,
    never for paths the new chords create.  Iterating further would overshoot
    (the square of C6 is 3-chromatic, its iterated closure is K6).
    """
    adj = list(g.adj)
    for w in range(g.n):
        hood = g.adj[w]
        for u in bits(hood):
            for v in bits(hood & ~g.adj[u] & ~(1 << u)):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def chi_p3_via_closure(g: Graph) -> int:
    """chi_P3(G) equals the chromatic number of the closure."""
    value = chromatic_number(p3_closure(g))
    assert value is not None
    return value


def decide_p3_at_most_3(g: Graph) -> Optional[Coloring]:
    """A P3-avoiding coloring with at most 3 classes, or None.

    A vertex of degree 3 forces 4 classes (two of its neighbors would share a
    class, giving a two-colored P3 through the center), so candidates have
    max degree 2: paths get the repeating pattern 1,2,3 from an endpoint, and
    cycles take it iff their length is divisible by 3.
    """
    if any(g.degree(v) >= 3 for v in range(g.n)):
        return None
    assign = [-1] * g.n
    seen = 0
    for start in range(g.n):
        if assign[start] != -1:
            continue
        # collect the component by walking; it is a path or a cycle
        comp = [start]
        compset = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in bits(g.adj[u]):
                if w not in compset:
                    compset.add(w)
                    comp.append(w)
                    frontier.append(w)
        size = len(comp)
        is_cycle = all(g.degree(v) == 2 for v in comp) and size >= 3
        if is_cycle and size % 3 != 0:
            return None
        if is_cycle:
            first = min(comp)
        else:
            first = min(v for v in comp if g.degree(v) <= 1)
        prev, cur = -1, first
        pos = 0
        while True:
            assign[cur] = pos % 3
            seen = max(seen, pos % 3)
            pos += 1
            nxt = [w for w in bits(g.adj[cur]) if w != prev and assign[w] == -1]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
    return Coloring(tuple(assign))


# --- the chi_2K2 <= 3 decision procedure ------------------------------------


def _has_induced_4k2(g: Graph) -> bool:
    """Four pairwise independent edges: disjoint endpoints, no cross edges."""
    edges = g.edges()
    m = len(edges)
    if m < 4:
        return False
    emasks = [(1 << u) | (1 << v) for u, v in edges]
    closed = [g.adj[u] | g.adj[v] | em for (u, v), em in zip(edges, emasks)]
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if not (emasks[j] & closed[i]):
                compat[i] |= 1 << j

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            if cand.bit_count() + 1 < need:
                return False
            if extend(compat[i] & cand, need - 1):
                return True
        return False

    return extend((1 << m) - 1, 4)


def _component_orientations(conflicts: dict[int, int], members: list[int]) -> Optional[list[tuple[int, int]]]:
    """2-color each conflict component; per component the two side masks.

    Returns None when some component has an odd cycle.  Components are listed
    by their smallest member, sides with the smallest member on side 0.
    """
    out = []
    color: dict[int, int] = {}
    for start in members:
        if start in color:
            continue
        color[start] = 0
        sides = [1 << start, 0]
        queue = [start]
        while queue:
            u = queue.pop()
            for w in bits(conflicts[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    sides[color[w]] |= 1 << w
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        out.append((sides[0], sides[1]))
    return out


def decide_2k2_at_most_3(g: Graph) -> Optional[Coloring]:
    """A 2K2-avoiding coloring with at most 3 classes, or None.

    Stages: (1) an induced 4K2 is a certificate of impossibility, since any two
    of the four edges would have to share a class pair; (2) with that ruled
    out, the maximal independent sets are polynomially few, and any valid
    triple of classes extends to a triple of them covering the vertices;
    (3) per candidate triple, vertices covered once are committed, vertices
    covered twice are forced to a fixpoint (a vertex blocked from both its
    candidates kills the triple); (4) the still-free vertices of each overlap
    class conflict exactly when their neighborhoods into the third class are
    inclusion-incomparable, so every conflict component admits two placements;
    all component orientation combinations are tried and each fully assembled
    coloring is re-validated before being returned.

    Isolated vertices are stripped first and appended to the first class: they
    can never participate in a violation.
    """
    two_k2 = pattern_from_token("2K2")
    isolated = [v for v in range(g.n) if not g.adj[v]]
    live = [v for v in range(g.n) if g.adj[v]]

    def with_isolated(live_classes: list[int]) -> Coloring:
        masks = [m for m in live_classes if m]
        if isolated:
            if masks:
                masks[0] |= sum(1 << v for v in isolated)
            else:
                masks = [sum(1 << v for v in isolated)]
        assign = [-1] * g.n
        for ci, m in enumerate(masks):
            for v in bits(m):
                assign[v] = ci
        coloring = Coloring(tuple(assign))
        assert is_avoiding_coloring(g, two_k2, coloring)
        return coloring

    if not live:
        return with_isolated([]) if g.n else Coloring(())
    if _has_induced_4k2(g):
        return None

    livemask = sum(1 << v for v in live)
    n_live = len(live)
    cap = ceil((n_live / 3) ** 3) + n_live + 8
    mis_list = maximal_independent_sets(g, cap)
    mis_list = [m & livemask for m in mis_list]
    pair_has = _kernels.bound_detector("TwoK2", g)

    def pair_free(a: int, b: int) -> bool:
        return not pair_has(a, b)

    for i, j, t in combinations_with_replacement(range(len(mis_list)), 3):
        xs = [mis_list[i], mis_list[j], mis_list[t]]
        if xs[0] | xs[1] | xs[2] != livemask:
            continue
        ys = [
            xs[0] & ~xs[1] & ~xs[2],
            xs[1] & ~xs[0] & ~xs[2],
            xs[2] & ~xs[0] & ~xs[1],
        ]
        if not (pair_free(ys[0], ys[1]) and pair_free(ys[0], ys[2]) and pair_free(ys[1], ys[2])):
            continue
        # overlap vertices wait in residue pools keyed by their two candidates
        residues = {(0, 1): xs[0] & xs[1] & ~xs[2],
                    (0, 2): xs[0] & xs[2] & ~xs[1],
                    (1, 2): xs[1] & xs[2] & ~xs[0]}

        # fixpoint: force vertices that fit only one of their two candidates
        dead = False
        changed = True
        while changed and not dead:
            changed = False
            for (a, b), pool in residues.items():
                for v in list(bits(pool)):
                    vbit = 1 << v
                    ok_a = all(pair_free(ys[a] | vbit, ys[o]) for o in range(3) if o != a)
                    ok_b = all(pair_free(ys[b] | vbit, ys[o]) for o in range(3) if o != b)
                    if ok_a and ok_b:
                        continue
                    residues[(a, b)] &= ~vbit
                    if ok_a:
                        ys[a] |= vbit
                    elif ok_b:
                        ys[b] |= vbit
                    else:
                        dead = True
                        break
                    changed = True
                if dead:
                    break
        if dead:
            continue

        # conflict components: free x, y clash iff their neighborhoods into
        # the third class are incomparable (co-placement would complete a 2K2)
        orientations = []
        viable = True
        for (a, b), pool in residues.items():
            third = ys[3 - a - b]
            members = list(bits(pool))
            conflicts = {v: 0 for v in members}
            for ii, x in enumerate(members):
                for y in members[ii + 1 :]:
                    if pair_has((1 << x) | (1 << y), third):
                        conflicts[x] |= 1 << y
                        conflicts[y] |= 1 << x
            comps = _component_orientations(conflicts, members)
            if comps is None:
                viable = False
                break
            orientations.extend(((a, b), s0, s1) for s0, s1 in comps)
        if not viable:
            continue

        for combo in range(1 << len(orientations)):
            final = list(ys)
            for idx, ((a, b), s0, s1) in enumerate(orientations):
                if (combo >> idx) & 1:
                    s0, s1 = s1, s0
                final[a] |= s0
                final[b] |= s1
            probe = [m for m in final if m]
            if all(
                pair_free(probe[x], probe[y])
                for x in range(len(probe))
                for y in range(x + 1, len(probe))
            ):
                return with_isolated(final)
    return None
