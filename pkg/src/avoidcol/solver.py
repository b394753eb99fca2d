"""Exact computation and decision of pattern-avoiding chromatic numbers.

The search assigns vertices in decreasing-degree order; a vertex may join an
existing class or open the next class index, which breaks class-relabeling
symmetry.  Pair validity is re-checked incrementally only for pairs involving
the class that just changed, memoized by the pair's union mask: for disjoint
independent classes, whether the union induces the pattern depends only on the
union, not on the split.  A partition-enumeration oracle with a deliberately
different code path (identity vertex order, generic subgraph containment)
provides independent verification.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .graph import Graph, GraphError, contains_induced, degree_order, greedy_clique, induced_subgraph
from .pattern import PatternGraph, violation_checker


class NoAvoidingColoring(RuntimeError):
    """No valid coloring exists at any class count up to n."""


@dataclass(frozen=True)
class Coloring:
    """A partition of the vertices into labeled classes, as class indices."""

    assignment: tuple[int, ...]

    @cached_property
    def class_count(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @cached_property
    def classes(self) -> tuple[int, ...]:
        masks = [0] * self.class_count
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return tuple(masks)

    def classes_as_lists(self) -> list[list[int]]:
        return [[v for v in range(len(self.assignment)) if self.assignment[v] == c]
                for c in range(self.class_count)]


def make_coloring(values: Iterable[int]) -> Coloring:
    """Validate and wrap an assignment: class ids dense 0..count-1, nonempty."""
    assignment = tuple(values)
    if any(not isinstance(c, int) or c < 0 for c in assignment):
        raise GraphError("class indices must be nonnegative integers")
    if assignment:
        used = set(assignment)
        if used != set(range(max(used) + 1)):
            raise GraphError("class indices must be dense 0..count-1 with no empty class")
    return Coloring(assignment)


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    nodes_explored: int


def is_avoiding_coloring(g: Graph, h: PatternGraph, c: Coloring) -> bool:
    """True iff c is proper and every class pair's union is H-free."""
    if len(c.assignment) != g.n:
        raise GraphError(f"assignment covers {len(c.assignment)} of {g.n} vertices")
    masks = c.classes
    for v, ci in enumerate(c.assignment):
        if g.adj[v] & masks[ci]:
            return False
    check = violation_checker(g, h)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if check(masks[i], masks[j]):
                return False
    return True


# --- backtracking search ----------------------------------------------------


def _pair_free(memo: dict, check, a: int, b: int) -> bool:
    union = a | b
    r = memo.get(union)
    if r is None:
        r = check(a, b)
        memo[union] = r
    return not r


def _search(adj, order, k, check, memo, counter, classes, assign, i) -> bool:
    """Extend the partial coloring from position i; True when complete."""
    if i == len(order):
        return True
    v = order[i]
    av = adj[v]
    bit = 1 << v
    for ci in range(len(classes)):
        cmask = classes[ci]
        if cmask & av:
            continue
        grown = cmask | bit
        if all(_pair_free(memo, check, grown, classes[cj])
               for cj in range(len(classes)) if cj != ci):
            counter[0] += 1
            classes[ci] = grown
            assign[v] = ci
            if _search(adj, order, k, check, memo, counter, classes, assign, i + 1):
                return True
            classes[ci] = cmask
            assign[v] = -1
    if len(classes) < k:
        if all(_pair_free(memo, check, bit, cmask) for cmask in classes):
            counter[0] += 1
            classes.append(bit)
            assign[v] = len(classes) - 1
            if _search(adj, order, k, check, memo, counter, classes, assign, i + 1):
                return True
            classes.pop()
            assign[v] = -1
    return False


def decide_chi_H(
    g: Graph,
    h: PatternGraph,
    k: int,
    threads: int = 1,
    _memo: Optional[dict] = None,
    _counter: Optional[list] = None,
) -> Optional[Coloring]:
    """A valid coloring with at most k classes, or None if none exists.

    With threads > 1 the search splits on the class choice of the first
    branching vertex; every branch runs to its own first success and the
    lexicographically smallest witness (in search order) wins, so the result
    does not depend on thread scheduling.  Node counts do depend on the
    thread setting; keep threads=1 when comparing them.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    if g.n == 0:
        return Coloring(())
    if greedy_clique(g) > k:
        return None
    memo = {} if _memo is None else _memo
    counter = [0] if _counter is None else _counter
    order = degree_order(g)
    check = violation_checker(g, h)

    def finish(assign: list[int]) -> Coloring:
        coloring = Coloring(tuple(assign))
        if coloring.class_count > k or not is_avoiding_coloring(g, h, coloring):
            raise AssertionError("search produced an invalid witness")
        return coloring

    if threads <= 1 or g.n < 2:
        classes: list[int] = []
        assign = [-1] * g.n
        if _search(g.adj, order, k, check, memo, counter, classes, assign, i=0):
            return finish(assign)
        return None

    # Parallel split: vertex order[0] always opens class 0; order[1] either
    # joins it or opens class 1.  Each branch is an independent sequential
    # search over the rest.
    v0, v1 = order[0], order[1]
    branches = []
    # joining leaves a single class, so only properness can object
    if not (g.adj[v1] >> v0) & 1:
        branches.append([(1 << v0) | (1 << v1)])
    if k >= 2 and _pair_free(memo, check, 1 << v0, 1 << v1):
        branches.append([1 << v0, 1 << v1])

    def run_branch(seed_classes: list[int]) -> tuple[Optional[tuple[int, ...]], int]:
        classes = list(seed_classes)
        assign = [-1] * g.n
        assign[v0] = 0
        assign[v1] = len(classes) - 1
        local = [2]
        hit = _search(g.adj, order, k, check, memo, counter=local,
                      classes=classes, assign=assign, i=2)
        return (tuple(assign) if hit else None, local[0])

    results = []
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for found, nodes in pool.map(run_branch, branches):
            counter[0] += nodes
            if found is not None:
                results.append(found)
    if not results:
        return None
    best = min(results, key=lambda a: tuple(a[v] for v in order))
    return finish(list(best))


def chi_H(g: Graph, h: PatternGraph, threads: int = 1) -> SolveResult:
    """Minimum class count with a witness, by incrementing the budget.

    Raises NoAvoidingColoring when even n singleton classes fail.  Only the
    2-vertex patterns can trigger that: with two isolated vertices every class
    pair must induce a complete bipartite graph, and with a single edge the
    host graph must have no edges at all.
    """
    if g.n == 0:
        return SolveResult(0, Coloring(()), 0)
    memo: dict = {}
    counter = [0]
    for k in range(max(1, greedy_clique(g)), g.n + 1):
        witness = decide_chi_H(g, h, k, threads=threads, _memo=memo, _counter=counter)
        if witness is not None:
            if witness.class_count != k:
                raise AssertionError("budget loop skipped a smaller valid count")
            return SolveResult(k, witness, counter[0])
    raise NoAvoidingColoring(
        f"no {h.name}-avoiding coloring exists: even {g.n} singleton classes fail"
    )


# --- independent oracle ------------------------------------------------------


def _union_checker(g: Graph, h: PatternGraph):
    """Memoized 'does this union mask induce H' via generic containment."""
    memo: dict[int, bool] = {}
    hgraph = h.graph

    def union_has(union: int) -> bool:
        r = memo.get(union)
        if r is None:
            sub, _ = induced_subgraph(g, union)
            r = contains_induced(sub, hgraph) is not None
            memo[union] = r
        return r

    return union_has


def _enumerate_partitions(g: Graph, h: PatternGraph, on_complete) -> None:
    """Drive restricted-growth enumeration of valid partitions, with pruning.

    Visits every set partition of the vertices (identity order) whose classes
    are independent and pairwise H-free, pruning any prefix that already
    violates: both properness and induced containment are monotone under
    adding vertices, so no valid completion is ever cut.  on_complete receives
    the class masks of each fully assembled valid partition and returns the
    current pruning bound (partitions with at least that many classes are not
    explored further).
    """
    union_has = _union_checker(g, h)
    n = g.n
    bound = [n + 1]

    def extend(v: int, classes: list[int]) -> None:
        if len(classes) >= bound[0]:
            return
        if v == n:
            bound[0] = on_complete(classes)
            return
        bit = 1 << v
        av = g.adj[v]
        for ci in range(len(classes)):
            cmask = classes[ci]
            if cmask & av:
                continue
            grown = cmask | bit
            if all(not union_has(grown | classes[cj])
                   for cj in range(len(classes)) if cj != ci):
                classes[ci] = grown
                extend(v + 1, classes)
                classes[ci] = cmask
        if all(not union_has(bit | cmask) for cmask in classes):
            classes.append(bit)
            extend(v + 1, classes)
            classes.pop()

    extend(0, [])


def brute_force_chi_H(g: Graph, h: PatternGraph) -> int:
    """Oracle: minimum class count over all set partitions of the vertices.

    Independent of the solver: identity vertex order, no symmetry breaking
    beyond canonical partition enumeration, and generic subgraph containment
    instead of the specialized detectors.
    """
    if g.n > 11:
        raise GraphError("oracle refuses n > 11 (partition count explodes)")
    if g.n == 0:
        return 0
    best = [None]

    def record(classes: list[int]) -> int:
        best[0] = len(classes)
        return len(classes)

    _enumerate_partitions(g, h, record)
    if best[0] is None:
        raise NoAvoidingColoring("oracle found no valid partition")
    return best[0]


def brute_force_optimal_partitions(g: Graph, h: PatternGraph) -> tuple[int, list[tuple[int, ...]]]:
    """Oracle variant returning ALL optimal partitions (as sorted mask tuples)."""
    if g.n > 11:
        raise GraphError("oracle refuses n > 11 (partition count explodes)")
    if g.n == 0:
        return 0, [()]
    found: dict[int, set[tuple[int, ...]]] = {}

    def record(classes: list[int]) -> int:
        size = len(classes)
        found.setdefault(size, set()).add(tuple(sorted(classes)))
        # keep exploring ties: prune only strictly worse partitions
        return size + 1

    _enumerate_partitions(g, h, record)
    if not found:
        raise NoAvoidingColoring("oracle found no valid partition")
    value = min(found)
    return value, sorted(found[value])
