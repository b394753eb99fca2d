"""Generate the small-graph catalogs shipped in avoidcol/data/.

One catalog per vertex count n = 1..7, each line the hex upper-triangle code
of one isomorphism class representative (pairs (0,1), (0,2), ..., (n-2,n-1)
from bit 0 upward).  Classes are found by extending the (n-1)-catalog with
every possible neighborhood for a new vertex and deduplicating by canonical
code: the lexicographically least upper-triangle code over all permutations
that respect the sorted degree sequence.

Run from the repository root:  python3 tools/gen_catalog.py
"""

from __future__ import annotations

import sys
from itertools import groupby, permutations
from pathlib import Path

EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def upper_code(n: int, rows: tuple[int, ...], perm: tuple[int, ...]) -> int:
    code = 0
    bit = 0
    for i in range(n):
        ri = rows[perm[i]]
        for j in range(i + 1, n):
            if (ri >> perm[j]) & 1:
                code |= 1 << bit
            bit += 1
    return code


def canonical_code(n: int, rows: tuple[int, ...]) -> int:
    degs = [rows[v].bit_count() for v in range(n)]
    base = sorted(range(n), key=lambda v: (degs[v], v))
    blocks = [
        list(vs) for _, vs in groupby(base, key=lambda v: degs[v])
    ]
    best = None

    def assemble(ix: int, prefix: tuple[int, ...]) -> None:
        nonlocal best
        if ix == len(blocks):
            code = upper_code(n, rows, prefix)
            if best is None or code < best:
                best = code
            return
        for p in permutations(blocks[ix]):
            assemble(ix + 1, prefix + p)

    assemble(0, ())
    assert best is not None
    return best


def rows_from_code(n: int, code: int) -> tuple[int, ...]:
    rows = [0] * n
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> bit) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return tuple(rows)


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "avoidcol" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    catalogs: dict[int, list[int]] = {1: [0]}
    for n in range(2, 8):
        found: set[int] = set()
        for code in catalogs[n - 1]:
            old = rows_from_code(n - 1, code)
            for mask in range(1 << (n - 1)):
                rows = tuple(
                    old[v] | (((mask >> v) & 1) << (n - 1)) for v in range(n - 1)
                ) + (mask,)
                found.add(canonical_code(n, rows))
        catalogs[n] = sorted(found)
        print(f"n={n}: {len(found)} classes", file=sys.stderr)
        assert len(found) == EXPECTED_COUNTS[n], (n, len(found))
    for n, codes in catalogs.items():
        path = out_dir / f"catalog_n{n}.txt"
        path.write_text("".join(f"{c:x}\n" for c in codes), encoding="utf-8")
        print(f"wrote {path} ({len(codes)} lines)", file=sys.stderr)


if __name__ == "__main__":
    main()
