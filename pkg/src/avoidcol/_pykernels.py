"""Pure-Python pair detectors over bitmask adjacency.

Each detector answers one question: does the union of two color classes A and B
contain an induced copy of the named pattern?  Callers guarantee that A and B
are disjoint independent sets, so every edge inside the union crosses between
them; the detectors exploit that to avoid general subgraph search.

All arguments are bitmasks: adj is indexable with adj[v] = neighbor mask of v,
and amask/bmask are the class masks.  Masks may be arbitrarily wide ints, so
this module also serves graphs with more than 64 vertices.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_has_k1_k1(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # Two vertices with no edge between them.  A side of size 2 already
    # qualifies (classes are independent); otherwise the only candidate is the
    # single cross pair.
    ca = amask.bit_count()
    cb = bmask.bit_count()
    if ca >= 2 or cb >= 2:
        return True
    if ca == 1 and cb == 1:
        a = amask.bit_length() - 1
        return not (adj[a] & bmask)
    return False


def pair_has_k2(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # Any cross edge.
    for a in bits(amask):
        if adj[a] & bmask:
            return True
    return False


def pair_has_k2_k1(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # A cross edge ab plus a third union vertex adjacent to neither end.
    union = amask | bmask
    for a in bits(amask):
        na = adj[a] & bmask
        if not na:
            continue
        rest_a = union & ~adj[a] & ~(1 << a)
        for b in bits(na):
            if rest_a & ~adj[b] & ~(1 << b):
                return True
    return False


def pair_has_p3(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # A center with two neighbors on the other side; the two ends share the
    # center's opposite class, so they are never adjacent.
    for a in bits(amask):
        if (adj[a] & bmask).bit_count() >= 2:
            return True
    for b in bits(bmask):
        if (adj[b] & amask).bit_count() >= 2:
            return True
    return False


def pair_has_p4(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # Ordered pair (a, a2) in A with a common B-neighbor and a private
    # B-neighbor of a2: a - common - a2 - private is an induced path.  Scanning
    # one side catches both orientations of the path.
    hoods = [adj[a] & bmask for a in bits(amask)]
    for i, na in enumerate(hoods):
        if not na:
            continue
        for j, nb in enumerate(hoods):
            if i != j and na & nb and nb & ~na:
                return True
    return False


def pair_has_two_k2(adj: Sequence[int], amask: int, bmask: int) -> bool:
    # Two A-vertices whose B-neighborhoods are inclusion-incomparable: each
    # private neighbor supplies one edge of the 2K2.
    seen: list[int] = []
    for a in bits(amask):
        na = adj[a] & bmask
        for other in seen:
            if na & ~other and other & ~na:
                return True
        seen.append(na)
    return False


DETECTORS = {
    "K1pK1": pair_has_k1_k1,
    "K2": pair_has_k2,
    "K2pK1": pair_has_k2_k1,
    "P3": pair_has_p3,
    "P4": pair_has_p4,
    "TwoK2": pair_has_two_k2,
}
