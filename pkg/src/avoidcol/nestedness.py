"""Nestedness of bipartite 0/1 instances.

A bipartite instance is fully nested when its column neighborhoods form a
chain under inclusion.  The nestedness number is the least number of parts in
a partition of the columns such that each part is fully nested; it equals the
chromatic number of the conflict graph whose edges join columns with
inclusion-incomparable neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, chromatic_number, proper_coloring


@dataclass(frozen=True)
class BipartiteInstance:
    """Columns 0..x_count-1, rows 0..y_count-1; rows[x] is a bitmask of rows."""

    x_count: int
    y_count: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.x_count < 0 or self.y_count < 0:
            raise GraphError("side counts must be nonnegative")
        if len(self.rows) != self.x_count:
            raise GraphError("need one row mask per column")
        full = (1 << self.y_count) - 1
        for m in self.rows:
            if m & ~full:
                raise GraphError("row mask out of range")


def bipartite_from_matrix(text: str) -> BipartiteInstance:
    """Parse a 0/1 matrix whose lines are rows and whose columns are columns."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        return BipartiteInstance(0, 0, ())
    width = len(lines[0])
    rows = [0] * width
    for y, tokens in enumerate(lines):
        if len(tokens) != width:
            raise GraphError(f"row {y}: expected {width} entries, got {len(tokens)}")
        for x, tok in enumerate(tokens):
            if tok == "1":
                rows[x] |= 1 << y
            elif tok != "0":
                raise GraphError(f"row {y}: entries must be 0 or 1, got {tok!r}")
    return BipartiteInstance(width, len(lines), tuple(rows))


def is_fully_nested(inst: BipartiteInstance) -> Optional[tuple[int, ...]]:
    """Column order witnessing a chain N(x_1) >= N(x_2) >= ..., else None."""
    order = sorted(range(inst.x_count), key=lambda x: (-inst.rows[x].bit_count(), x))
    for a, b in zip(order, order[1:]):
        if inst.rows[b] & ~inst.rows[a]:
            return None
    return tuple(order)


def conflict_graph(inst: BipartiteInstance) -> Graph:
    """Columns clash when neither neighborhood contains the other."""
    adj = [0] * inst.x_count
    for a in range(inst.x_count):
        for b in range(a + 1, inst.x_count):
            ra, rb = inst.rows[a], inst.rows[b]
            if (ra & ~rb) and (rb & ~ra):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(inst.x_count, tuple(adj))


@dataclass(frozen=True)
class NestednessResult:
    k: int
    parts: tuple[tuple[int, ...], ...]
    orders: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "parts": [list(p) for p in self.parts],
            "orders": [list(o) for o in self.orders],
        }


def nestedness_number(inst: BipartiteInstance) -> NestednessResult:
    """Optimal partition of columns into fully nested parts.

    Colors the conflict graph optimally; each color class is pairwise
    comparable, hence a chain, and the per-part order is re-verified.
    """
    cg = conflict_graph(inst)
    k = chromatic_number(cg)
    assert k is not None
    if inst.x_count == 0:
        return NestednessResult(0, (), ())
    coloring = proper_coloring(cg, k)
    assert coloring is not None
    classes: dict[int, list[int]] = {}
    for x, c in enumerate(coloring):
        classes.setdefault(c, []).append(x)
    parts = tuple(tuple(vs) for _, vs in sorted(classes.items()))
    orders = []
    for part in parts:
        sub = BipartiteInstance(
            len(part), inst.y_count, tuple(inst.rows[x] for x in part)
        )
        local = is_fully_nested(sub)
        assert local is not None, "color class should be a chain"
        orders.append(tuple(part[i] for i in local))
    return NestednessResult(k, parts, tuple(orders))
