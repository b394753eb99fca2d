"""Shared test helpers: a pattern cache, deterministic graph streams, and a
sampler for disjoint independent class pairs."""

from functools import lru_cache

from avoidcol.graph import Graph
from avoidcol.pattern import PatternGraph, pattern_from_token
from avoidcol.randexp import SplitMix64, sample_gnp

NAMED_TOKENS = ("K1+K1", "K2", "K2+K1", "P3", "P4", "2K2")


@lru_cache(maxsize=None)
def pat(token: str) -> PatternGraph:
    return pattern_from_token(token)


def graph_stream(count: int, n_choices, p_choices, seed: int) -> list[Graph]:
    """Deterministic list of G(n,p) samples over the given size/density mix."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = n_choices[rng.next_u64() % len(n_choices)]
        p = p_choices[rng.next_u64() % len(p_choices)]
        out.append(sample_gnp(n, p, rng.next_u64() & 0xFFFFFFFF))
    return out


def random_independent_pair(g: Graph, rng: SplitMix64) -> tuple[int, int]:
    """Disjoint independent sets (amask, bmask), sampled greedily."""
    amask = 0
    bmask = 0
    for v in range(g.n):
        pick = rng.next_u64() % 3
        if pick == 0 and not (g.adj[v] & amask):
            amask |= 1 << v
        elif pick == 1 and not (g.adj[v] & bmask):
            bmask |= 1 << v
    return amask, bmask


def independent_mask_table(g: Graph) -> list[bool]:
    """indep[mask] over all 2^n masks, by peeling the lowest bit."""
    table = [True] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        table[mask] = table[rest] and not (g.adj[v] & rest)
    return table
