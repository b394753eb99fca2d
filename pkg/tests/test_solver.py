"""Exact solver, decision procedure, coloring type, and the partition oracle."""

import pytest

from avoidcol import (
    GraphError,
    chromatic_number,
    complete_bipartite,
    complete_graph,
    contains_induced,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    path_graph,
)
from avoidcol.bounds import cube_graph
from avoidcol.solver import (
    Coloring,
    NoAvoidingColoring,
    brute_force_chi_H,
    brute_force_optimal_partitions,
    chi_H,
    decide_chi_H,
    is_avoiding_coloring,
    make_coloring,
)

from conftest import graph_stream, pat


def test_coloring_type():
    c = make_coloring([0, 1, 0, 2])
    assert c.class_count == 3
    assert c.classes == (0b0101, 0b0010, 0b1000)
    assert c.classes_as_lists() == [[0, 2], [1], [3]]
    assert make_coloring([]).class_count == 0


@pytest.mark.parametrize("values", [[0, 2], [-1, 0], [1, 1]])
def test_make_coloring_rejections(values):
    with pytest.raises(GraphError):
        make_coloring(values)


def test_is_avoiding_coloring_c5_p3():
    c5 = cycle_graph(5)
    assert is_avoiding_coloring(c5, pat("P3"), make_coloring([0, 1, 2, 3, 4]))
    # two vertices at distance two in one class make a two-colored P3
    assert not is_avoiding_coloring(c5, pat("P3"), make_coloring([0, 1, 2, 0, 3]))


def test_is_avoiding_coloring_small_cases():
    k2 = path_graph(2)
    assert is_avoiding_coloring(k2, pat("2K2"), make_coloring([0, 1]))
    p4 = path_graph(4)
    assert is_avoiding_coloring(p4, pat("2K2"), make_coloring([0, 1, 0, 1]))
    assert not is_avoiding_coloring(p4, pat("2K2"), make_coloring([0, 1, 1, 0]))  # improper
    with pytest.raises(GraphError):
        is_avoiding_coloring(p4, pat("2K2"), make_coloring([0, 1]))


@pytest.mark.parametrize(
    "g,token,expected",
    [
        (cycle_graph(5), "P3", 5),
        (cycle_graph(5), "2K2", 3),  # C5 is 2K2-free, so the value is plain chi
        (complete_bipartite(3, 3), "K2+K1", 2),
        (graph_from_edges(4, [(0, 1), (2, 3)]), "2K2", 3),
        (complete_graph(3), "P4", 3),
        (cube_graph(3), "2K2", 4),
    ],
)
def test_chi_h_known_values(g, token, expected):
    result = chi_H(g, pat(token))
    assert result.value == expected
    assert result.witness.class_count == expected
    assert is_avoiding_coloring(g, pat(token), result.witness)
    assert result.nodes_explored > 0


def test_chi_h_empty_graph():
    r = chi_H(empty_graph(0), pat("2K2"))
    assert r.value == 0 and r.witness.assignment == ()


def test_chi_lower_bound_and_h_free_equality():
    for g in graph_stream(25, (5, 6, 7, 8), (0.2, 0.5, 0.8), seed=501):
        for token in ("2K2", "P4"):
            value = chi_H(g, pat(token)).value
            chi = chromatic_number(g)
            assert chi <= value
            if contains_induced(g, pat(token).graph) is None:
                assert value == chi


def test_decide_chi_h_path_boundary():
    # three classes last through P10 and break at P11
    assert decide_chi_H(path_graph(7), pat("2K2"), 3) is not None
    assert decide_chi_H(path_graph(10), pat("2K2"), 3) is not None
    assert decide_chi_H(path_graph(11), pat("2K2"), 3) is None


def test_decide_chi_h_contract():
    with pytest.raises(GraphError):
        decide_chi_H(path_graph(3), pat("2K2"), 0)
    for g in graph_stream(12, (6, 8), (0.3, 0.6), seed=321):
        for token in ("2K2", "P3"):
            value = chi_H(g, pat(token)).value
            # monotone in k, witness valid, class budget respected
            for k in (value - 1, value, value + 1):
                witness = decide_chi_H(g, pat(token), k) if k >= 1 else None
                if k < value:
                    assert witness is None
                else:
                    assert witness is not None
                    assert witness.class_count <= k
                    assert is_avoiding_coloring(g, pat(token), witness)


def test_singleton_classes_work_for_patterns_on_three_plus_vertices():
    # a pair of singleton classes spans only 2 vertices, too few for these
    for g in graph_stream(8, (5, 7), (0.3, 0.7), seed=77):
        for token in ("K2+K1", "P3", "P4", "2K2"):
            assert decide_chi_H(g, pat(token), g.n) is not None


def test_k2_pattern_needs_an_edgeless_graph():
    # any edge lands inside some class-pair union and embeds the pattern
    assert chi_H(empty_graph(5), pat("K2")).value == 1
    with pytest.raises(NoAvoidingColoring):
        chi_H(path_graph(2), pat("K2"))
    for k in (1, 2, 3):
        assert decide_chi_H(path_graph(3), pat("K2"), k) is None


def test_k1_plus_k1_existence():
    # any two nonadjacent vertices in different classes embed the pattern,
    # so P3 admits no coloring at all while K3 takes singletons
    with pytest.raises(NoAvoidingColoring):
        chi_H(path_graph(3), pat("K1+K1"))
    assert decide_chi_H(path_graph(3), pat("K1+K1"), 3) is None
    assert chi_H(complete_graph(3), pat("K1+K1")).value == 3
    assert chi_H(path_graph(2), pat("K1+K1")).value == 2


def test_parallel_matches_sequential():
    for g in graph_stream(10, (7, 9), (0.3, 0.6), seed=900):
        for token in ("2K2", "P4"):
            seq = chi_H(g, pat(token), threads=1)
            par = chi_H(g, pat(token), threads=2)
            assert (seq.value, seq.witness) == (par.value, par.witness)


def test_node_counts_are_deterministic():
    g = graph_stream(1, (9,), (0.4,), seed=17)[0]
    a = chi_H(g, pat("2K2"))
    b = chi_H(g, pat("2K2"))
    assert a.nodes_explored == b.nodes_explored


@pytest.mark.parametrize(
    "g,token,expected",
    [
        (path_graph(4), "2K2", 2),
        (graph_from_edges(4, [(0, 1), (2, 3)]), "2K2", 3),
        (complete_graph(3), "P3", 3),
        (complete_graph(3), "2K2", 3),
    ],
)
def test_brute_force_known_values(g, token, expected):
    assert brute_force_chi_H(g, pat(token)) == expected


def test_brute_force_refuses_large_inputs():
    with pytest.raises(GraphError):
        brute_force_chi_H(empty_graph(12), pat("2K2"))


def test_brute_force_matches_solver_on_randoms():
    for g in graph_stream(30, (5, 6, 7), (0.2, 0.5, 0.8), seed=606):
        for token in ("2K2", "P3"):
            assert brute_force_chi_H(g, pat(token)) == chi_H(g, pat(token)).value


def test_brute_force_optimal_partitions():
    value, parts = brute_force_optimal_partitions(cycle_graph(4), pat("K2+K1"))
    assert value == 2
    assert parts == [(0b0101, 0b1010)]
    value, parts = brute_force_optimal_partitions(path_graph(4), pat("2K2"))
    assert value == 2
    assert (0b0101, 0b1010) in parts
