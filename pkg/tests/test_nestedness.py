"""Nestedness: chains, conflict graphs, and the optimal column partition."""

from itertools import combinations

import pytest

from avoidcol import GraphError
from avoidcol.nestedness import (
    BipartiteInstance,
    bipartite_from_matrix,
    conflict_graph,
    is_fully_nested,
    nestedness_number,
)
from avoidcol.randexp import SplitMix64


def inst(y_count, *columns):
    return BipartiteInstance(len(columns), y_count, tuple(columns))


def brute_minimum_nested_parts(instance):
    """Smallest number of parts with chain neighborhoods, by brute force."""

    def comparable(a, b):
        ra, rb = instance.rows[a], instance.rows[b]
        return not (ra & ~rb) or not (rb & ~ra)

    cols = list(range(instance.x_count))
    best = [len(cols) if cols else 0]

    def extend(i, parts):
        if len(parts) >= best[0] and i < len(cols):
            return
        if i == len(cols):
            best[0] = min(best[0], len(parts))
            return
        x = cols[i]
        for part in parts:
            if all(comparable(x, y) for y in part):
                part.append(x)
                extend(i + 1, parts)
                part.pop()
        parts.append([x])
        extend(i + 1, parts)
        parts.pop()

    extend(0, [])
    return best[0]


def test_instance_validation():
    with pytest.raises(GraphError):
        BipartiteInstance(2, 2, (0b01,))
    with pytest.raises(GraphError):
        BipartiteInstance(1, 2, (0b100,))
    with pytest.raises(GraphError):
        BipartiteInstance(-1, 2, ())


def test_matrix_parsing():
    parsed = bipartite_from_matrix("1 0\n1 1\n0 1\n")
    assert parsed.x_count == 2 and parsed.y_count == 3
    assert parsed.rows == (0b011, 0b110)
    assert bipartite_from_matrix("").x_count == 0
    with pytest.raises(GraphError):
        bipartite_from_matrix("1 0\n1\n")
    with pytest.raises(GraphError):
        bipartite_from_matrix("1 2\n")


def test_is_fully_nested():
    chain = inst(3, 0b111, 0b011, 0b001)
    assert is_fully_nested(chain) == (0, 1, 2)
    assert is_fully_nested(inst(3, 0b001, 0b011, 0b111)) == (2, 1, 0)
    assert is_fully_nested(inst(2, 0b01, 0b10)) is None
    assert is_fully_nested(inst(2)) == ()
    # duplicates are mutually comparable
    assert is_fully_nested(inst(2, 0b11, 0b11)) is not None


def test_conflict_graph_edges():
    identity = inst(3, 0b001, 0b010, 0b100)
    cg = conflict_graph(identity)
    assert cg.edge_count == 3  # pairwise incomparable
    chain = inst(3, 0b111, 0b011, 0b001)
    assert conflict_graph(chain).edge_count == 0


def test_nestedness_number_small_cases():
    r = nestedness_number(inst(3, 0b001, 0b010, 0b100))
    assert r.k == 3
    r = nestedness_number(inst(3, 0b111, 0b011, 0b001))
    assert r.k == 1 and r.orders == ((0, 1, 2),)
    r = nestedness_number(inst(0))
    assert r.k == 0 and r.parts == ()


def test_nestedness_result_shape():
    r = nestedness_number(inst(2, 0b01, 0b10))
    d = r.to_json_dict()
    assert set(d) == {"k", "parts", "orders"}
    assert d["k"] == 2
    assert sorted(v for part in d["parts"] for v in part) == [0, 1]
    # every part is witnessed by its own chain order
    assert all(sorted(o) == sorted(p) for o, p in zip(d["orders"], d["parts"]))


def test_k_is_one_exactly_for_fully_nested():
    rng = SplitMix64(77)
    for _ in range(200):
        x = 1 + rng.next_u64() % 5
        y = 1 + rng.next_u64() % 5
        cols = tuple(rng.next_u64() & ((1 << y) - 1) for _ in range(x))
        instance = BipartiteInstance(x, y, cols)
        assert (nestedness_number(instance).k == 1) == (
            is_fully_nested(instance) is not None
        )


def test_nestedness_number_matches_brute_force_random():
    rng = SplitMix64(90125)
    for _ in range(300):
        x = 1 + rng.next_u64() % 6
        y = 1 + rng.next_u64() % 6
        cols = tuple(rng.next_u64() & ((1 << y) - 1) for _ in range(x))
        instance = BipartiteInstance(x, y, cols)
        r = nestedness_number(instance)
        assert r.k == brute_minimum_nested_parts(instance)
        # parts partition the columns and each part is a chain
        seen = sorted(v for part in r.parts for v in part)
        assert seen == list(range(x))
        for part in r.parts:
            for a, b in combinations(part, 2):
                ra, rb = instance.rows[a], instance.rows[b]
                assert not (ra & ~rb) or not (rb & ~ra)
