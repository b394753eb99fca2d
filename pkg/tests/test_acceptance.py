"""Acceptance suite: one test per shipped claim, run with `pytest -v` for a
one-line verdict each.

Known red: criterion 1's cross-check leg.  chi_2k2_path implements a closed
form whose reference values overshoot at n in {8, 9, 10}: exhaustive search
finds valid 3-class colorings there while the closed form says 4.  The
mismatch is asserted anyway instead of being special-cased away, so the
failure stays visible until the closed form itself is revised; the solver
side is independently validated by criteria 2 and 4.
"""

from itertools import combinations, combinations_with_replacement

from avoidcol.bounds import (
    chi_2k2_matching,
    chi_2k2_path,
    chi_2k2_subdivided_star,
    cube_graph,
    eulerian_path_coloring,
    projective_graph,
    projective_lower_bound,
    subdivided_star_graph,
)
from avoidcol.catalog import catalog_graphs
from avoidcol.graph import chromatic_number, matching_graph, path_graph
from avoidcol.nestedness import BipartiteInstance, nestedness_number
from avoidcol.pattern import pattern_from_token
from avoidcol.polyalgs import decide_2k2_at_most_3, k2k1_coloring, p3_closure
from avoidcol.randexp import (
    SplitMix64,
    complex_probability_bound,
    q_two_k2,
    random_report,
    report_to_csv,
    sample_gnp,
)
from avoidcol.reductions import (
    hypergraph3,
    hypergraph_2colorable,
    lift_coloring_p4,
    reduce_to_p4,
)
from avoidcol.solver import (
    brute_force_chi_H,
    brute_force_optimal_partitions,
    chi_H,
    decide_chi_H,
    is_avoiding_coloring,
)

TWO_K2 = pattern_from_token("2K2")


def test_criterion_01_path_closed_form_and_solver_cross_check():
    # closed form against its full reference table, n = 2..121
    ranges = [
        (2, 4, 2), (5, 7, 3), (8, 13, 4), (14, 28, 5), (29, 37, 6),
        (38, 61, 7), (62, 73, 8), (74, 106, 9), (107, 121, 10),
    ]
    expected = {n: v for lo, hi, v in ranges for n in range(lo, hi + 1)}
    assert len(expected) == 120
    for n in range(2, 122):
        assert chi_2k2_path(n) == expected[n], f"closed form off at n={n}"
    # independent solver confirmation for n = 2..13; fails at n in {8, 9, 10}
    # where exhaustive search beats the closed form by one class
    mismatches = {}
    for n in range(2, 14):
        exact = chi_H(path_graph(n), TWO_K2).value
        if exact != expected[n]:
            mismatches[n] = (expected[n], exact)
    assert mismatches == {}, f"closed form != exhaustive search: {mismatches}"


def test_criterion_02_solver_matches_brute_force_oracle():
    patterns = [pattern_from_token(t) for t in ("2K2", "P3", "P4", "K2+K1")]
    graphs = []
    for n in range(1, 7):
        graphs.extend(catalog_graphs(n))  # every graph on <= 6 vertices
    assert len(graphs) == 208
    probs = (0.2, 0.35, 0.5, 0.65, 0.8)
    for i in range(504):  # >= 500 random samples, n <= 9
        graphs.append(sample_gnp(4 + i % 6, probs[i % 5], 40_000 + i))
    for g in graphs:
        for h in patterns:
            assert chi_H(g, h).value == brute_force_chi_H(g, h)


def test_criterion_03_p3_closure_identity():
    p3 = pattern_from_token("P3")
    probs = (0.2, 0.35, 0.5, 0.65, 0.8)
    for i in range(300):
        g = sample_gnp(4 + i % 7, probs[i % 5], 41_000 + i)  # n <= 10
        assert chromatic_number(p3_closure(g)) == chi_H(g, p3).value


def test_criterion_04_2k2_three_class_procedure():
    probs = (0.2, 0.5, 0.8)
    cases = [sample_gnp(4 + i % 9, probs[i % 3], 42_000 + i) for i in range(300)]
    cases.extend(path_graph(n) for n in range(2, 14))
    for g in cases:
        fast = decide_2k2_at_most_3(g)
        slow = decide_chi_H(g, TWO_K2, 3)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert is_avoiding_coloring(g, TWO_K2, fast)


def test_criterion_05_k2k1_coloring_valid_optimal_unique():
    h = pattern_from_token("K2+K1")
    # exhaustive n <= 7: valid, optimal, and the unique optimal partition
    for n in range(1, 8):
        for g in catalog_graphs(n):
            c = k2k1_coloring(g)
            assert is_avoiding_coloring(g, h, c)
            value, parts = brute_force_optimal_partitions(g, h)
            assert c.class_count == value
            assert parts == [tuple(sorted(c.classes))]
    # random n = 8: valid and optimal against the brute-force oracle
    probs = (0.2, 0.35, 0.5, 0.65, 0.8)
    for i in range(150):
        g = sample_gnp(8, probs[i % 5], 43_000 + i)
        c = k2k1_coloring(g)
        assert is_avoiding_coloring(g, h, c)
        assert c.class_count == brute_force_chi_H(g, h)


def _comparable(a: int, b: int) -> bool:
    return a & b in (a, b)


def _brute_min_nested_parts(cols: list[int]) -> int:
    """Smallest partition of column masks into pairwise-comparable parts."""
    best = len(cols) if cols else 0

    def grow(i: int, parts: list[list[int]]) -> None:
        nonlocal best
        if len(parts) >= best:
            return
        if i == len(cols):
            best = len(parts)
            return
        c = cols[i]
        for part in parts:
            if all(_comparable(c, o) for o in part):
                part.append(c)
                grow(i + 1, parts)
                part.pop()
        parts.append([c])
        grow(i + 1, parts)
        parts.pop()

    grow(0, [])
    return best


def test_criterion_06_nestedness_matches_brute_force():
    # exhaustive: every column multiset with |X| <= 5 over 5 rows, which
    # covers every instance with |X|, |Y| <= 5 up to relabeling
    total = 0
    for x in range(1, 6):
        for combo in combinations_with_replacement(range(32), x):
            inst = BipartiteInstance(x, 5, combo)
            assert nestedness_number(inst).k == _brute_min_nested_parts(list(combo))
            total += 1
    assert total == 435_896
    # random instances with sizes <= 6
    rng = SplitMix64(606)
    for _ in range(200):
        x = 1 + rng.next_u64() % 6
        y = 1 + rng.next_u64() % 6
        cols = tuple(rng.next_u64() & ((1 << y) - 1) for _ in range(x))
        inst = BipartiteInstance(x, y, cols)
        assert nestedness_number(inst).k == _brute_min_nested_parts(list(cols))


def test_criterion_07_family_closed_forms_match_solver():
    for n in (2, 4, 6, 8, 10, 12):  # matchings with n/2 <= 6 edges
        assert chi_2k2_matching(n) == chi_H(matching_graph(n), TWO_K2).value
    for n in (3, 5, 7, 9, 11):
        expected = chi_H(subdivided_star_graph(n), TWO_K2).value
        assert chi_2k2_subdivided_star(n) == expected
    assert chi_H(cube_graph(2), TWO_K2).value == 2
    assert chi_H(cube_graph(3), TWO_K2).value == 4
    for n in range(2, 301):
        coloring = eulerian_path_coloring(n)
        assert coloring.class_count == chi_2k2_path(n)
        assert is_avoiding_coloring(path_graph(n), TWO_K2, coloring)


def test_criterion_08_projective_plane_construction():
    g = projective_graph(2)
    assert g.n == 14
    assert all(g.degree(v) == 3 for v in range(14))
    # exhaustive 4-subset scan: no four vertices carry a complete 2x2 join
    for quad in combinations(range(14), 4):
        for a, b in ((0, 1), (0, 2), (0, 3)):
            left = [quad[a], quad[b]]
            right = [v for v in quad if v not in left]
            if all((g.adj[u] >> v) & 1 for u in left for v in right):
                raise AssertionError(f"K_2,2 on {quad}")
    assert projective_lower_bound(2) == 4
    # exact value comfortably above the bound (solved directly, well within
    # the allowance; decide_chi_H(g, 2K2, 3) = absent is the slow-path proxy)
    assert chi_H(g, TWO_K2).value >= 4


def test_criterion_09_p4_reduction_round_trip():
    p4 = pattern_from_token("P4")
    triples = list(combinations(range(4), 3))
    instances = [(t,) for t in triples]
    instances += list(combinations(triples, 2))
    assert len(instances) == 10  # every n=4 instance with 1 <= m <= 2
    for edges in instances:
        t = hypergraph3(4, list(edges))
        hcol = hypergraph_2colorable(t)
        g = reduce_to_p4(t)
        witness = decide_chi_H(g, p4, 3)
        assert (hcol is not None) == (witness is not None)
        if witness is not None:
            assert is_avoiding_coloring(g, p4, witness)
        if hcol is not None:
            lifted = lift_coloring_p4(t, hcol)
            assert is_avoiding_coloring(g, p4, lifted)


def test_criterion_10_random_harness():
    rows = random_report(12, 0.5, 50, 7)
    assert len(rows) == 50
    for r in rows:
        assert r.chi_2k2 is not None
        assert r.chi <= r.chi_2k2 <= r.n - r.alpha + 1
        assert r.sandwich_ok
        assert r.q_value == 0.875
    # byte-identical report across two independent runs
    assert report_to_csv(rows) == report_to_csv(random_report(12, 0.5, 50, 7))
    # formula plumbing: nonincreasing in ell once the union penalty dominates
    for p in (0.8, 0.9):
        q = q_two_k2(p)
        values = [complex_probability_bound(12, ell, 3, p, q) for ell in range(1, 6)]
        assert all(a >= b for a, b in zip(values, values[1:]))
