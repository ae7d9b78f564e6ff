"""Exhaustive and random generation of small loops.

Every loop is isomorphic to one with a reduced table: identity 0, row 0 and
column 0 in natural order. ``enumerate_loops`` walks all reduced tables in
lexicographic (row-major) order with a cell-by-cell backtracker; each row and
each column keeps a bitmask of symbols already used, so the free symbols of a
cell are ``~(row_mask | col_mask)``.

Counts of reduced tables: 1, 1, 1, 4, 56, 9408, 16942080 for n = 1..7.

``random_loop`` uses randomized backtracking with restarts. It is *not*
uniform over reduced tables (early cells are chosen uniformly among free
symbols, which over-weights tables with many dead-end-free branches); use it
for counterexample hunting, not for estimating proportions.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .core import FiniteLoop, Table
from .errors import GenerationFailure, OrderTooLarge
from .parallel import default_threads, ordered_map

MAX_ENUMERATION_ORDER = 7
MAX_ISOMORPHISM_ORDER = 6

REDUCED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 56, 6: 9408}


def _cells(n: int) -> list[tuple[int, int]]:
    return [(r, c) for r in range(1, n) for c in range(1, n)]


def _reduced_tables(
    n: int,
    prefix: Sequence[int] = (),
    start_after: Optional[Table] = None,
) -> Iterator[Table]:
    cells = _cells(n)
    K = len(cells)
    grid = [[0] * n for _ in range(n)]
    grid[0] = list(range(n))
    for r in range(n):
        grid[r][0] = r
    rowmask = [1 << r for r in range(n)]
    colmask = [1 << c for c in range(n)]
    full = (1 << n) - 1

    if K == 0:
        if start_after is None:
            yield tuple(tuple(row) for row in grid)
        return

    last = None
    if start_after is not None:
        last = [start_after[r][c] for r, c in cells]

    def place(k, s):
        r, c = cells[k]
        grid[r][c] = s
        rowmask[r] |= 1 << s
        colmask[c] |= 1 << s

    def unplace(k):
        r, c = cells[k]
        s = grid[r][c]
        rowmask[r] &= ~(1 << s)
        colmask[c] &= ~(1 << s)

    placed = [False] * K
    tight = [False] * K
    for k, s in enumerate(prefix):
        r, c = cells[k]
        if (rowmask[r] | colmask[c]) >> s & 1:
            return
        place(k, s)
        placed[k] = True
        tight[k] = last is not None and (k == 0 or tight[k - 1]) and s == last[k]
        if last is not None and (k == 0 or tight[k - 1]) and s < last[k]:
            return
    start = len(prefix)
    if start == K:
        if last is None or not tight[K - 1]:
            yield tuple(tuple(row) for row in grid)
        return

    def allowed(k):
        r, c = cells[k]
        m = full & ~(rowmask[r] | colmask[c])
        if last is not None and (k == 0 or tight[k - 1]):
            m &= ~((1 << last[k]) - 1)
        return m

    cand = [0] * K
    k = start
    cand[k] = allowed(k)
    while True:
        if placed[k]:
            unplace(k)
            placed[k] = False
        m = cand[k]
        if m == 0:
            k -= 1
            if k < start:
                return
            continue
        bit = m & -m
        cand[k] = m ^ bit
        s = bit.bit_length() - 1
        place(k, s)
        placed[k] = True
        if last is not None:
            tight[k] = (k == 0 or tight[k - 1]) and s == last[k]
        if k == K - 1:
            if not (last is not None and tight[k]):
                yield tuple(tuple(row) for row in grid)
            continue
        k += 1
        cand[k] = allowed(k)


def _check_order(n: int, cap: int, allow_large: bool) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > cap and not allow_large:
        raise OrderTooLarge(f"order {n} exceeds the cap of {cap}; pass allow_large=True to override")


def enumerate_loops(n: int, *, allow_large: bool = False, start_after: Optional[Table] = None) -> Iterator[FiniteLoop]:
    """Yield every reduced loop of order ``n`` exactly once, in lexicographic order."""
    _check_order(n, MAX_ENUMERATION_ORDER, allow_large)
    for table in _reduced_tables(n, start_after=start_after):
        yield FiniteLoop._unchecked(table, identity=0)


def first_row_prefixes(n: int) -> list[tuple[int, ...]]:
    """Valid fillings of row 1, columns 1..n-1, in lexicographic order; each
    roots a disjoint subtree of the search."""
    if n <= 1:
        return [()]
    symbols = [s for s in range(n) if s != 1]
    return [p for p in permutations(symbols) if all(p[c - 1] != c for c in range(1, n))]


def enumerate_subtree(n: int, row1: Sequence[int]) -> list[Table]:
    return list(_reduced_tables(n, prefix=row1))


def _subtree_worker(args):
    n, row1 = args
    return enumerate_subtree(n, row1)


def enumerate_loops_parallel(n: int, threads: Optional[int] = None, *, allow_large: bool = False) -> list[FiniteLoop]:
    """Same sequence as ``enumerate_loops``; workers own disjoint row-1 subtrees
    and results are concatenated in subtree order."""
    _check_order(n, MAX_ENUMERATION_ORDER, allow_large)
    threads = default_threads() if threads is None else threads
    if n <= 2 or threads <= 1:
        return list(enumerate_loops(n, allow_large=allow_large))
    chunks = ordered_map(_subtree_worker, [(n, p) for p in first_row_prefixes(n)], threads)
    return [FiniteLoop._unchecked(t, identity=0) for chunk in chunks for t in chunk]


def enumerate_up_to_isomorphism(n: int, *, allow_large: bool = False) -> Iterator[FiniteLoop]:
    """One canonical representative per isomorphism class, in order of first
    appearance in the reduced stream."""
    from .isomorphy import canonical_form

    _check_order(n, MAX_ISOMORPHISM_ORDER, allow_large)
    seen = set()
    for L in enumerate_loops(n, allow_large=True):
        canon = canonical_form(L).loop
        if canon.table not in seen:
            seen.add(canon.table)
            yield canon


@dataclass
class EnumerationCursor:
    """Restartable position in an enumeration stream."""

    n: int
    mode: str = "reduced"
    emitted: int = 0
    last: Optional[Table] = None
    allow_large: bool = False

    def stream(self) -> Iterator[FiniteLoop]:
        if self.mode == "reduced":
            source = enumerate_loops(self.n, allow_large=self.allow_large, start_after=self.last)
            skip = 0
        elif self.mode == "up-to-isomorphism":
            source = enumerate_up_to_isomorphism(self.n, allow_large=self.allow_large)
            skip = self.emitted
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        for i, L in enumerate(source):
            if i < skip:
                continue
            self.emitted += 1
            self.last = L.table
            yield L

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "mode": self.mode,
                "emitted": self.emitted,
                "last": None if self.last is None else [list(r) for r in self.last],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> EnumerationCursor:
        d = json.loads(text)
        last = None if d.get("last") is None else tuple(tuple(r) for r in d["last"])
        return cls(n=d["n"], mode=d.get("mode", "reduced"), emitted=d.get("emitted", 0), last=last)


def random_loop(n: int, seed: int, *, max_restarts: int = 200, node_budget: Optional[int] = None) -> FiniteLoop:
    """A random reduced loop of order ``n``, deterministic in ``(n, seed)``.

    Raises ``GenerationFailure`` if no table is completed within
    ``max_restarts`` attempts of ``node_budget`` search nodes each.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    rng = random.Random(f"{n}:{seed}")
    cells = _cells(n)
    K = len(cells)
    budget = node_budget if node_budget is not None else 50 * n * n
    for _ in range(max_restarts):
        grid = [[0] * n for _ in range(n)]
        grid[0] = list(range(n))
        for r in range(n):
            grid[r][0] = r
        rowmask = [1 << r for r in range(n)]
        colmask = [1 << c for c in range(n)]
        options: list[list[int]] = [[] for _ in range(K)]
        nodes = 0
        k = 0
        fresh = True
        while 0 <= k < K and nodes < budget:
            r, c = cells[k]
            if fresh:
                free = [s for s in range(n) if not (rowmask[r] | colmask[c]) >> s & 1]
                rng.shuffle(free)
                options[k] = free
            else:
                s = grid[r][c]
                rowmask[r] &= ~(1 << s)
                colmask[c] &= ~(1 << s)
            if not options[k]:
                k -= 1
                fresh = False
                continue
            s = options[k].pop()
            grid[r][c] = s
            rowmask[r] |= 1 << s
            colmask[c] |= 1 << s
            nodes += 1
            k += 1
            fresh = True
        if k == K:
            return FiniteLoop._unchecked(tuple(tuple(row) for row in grid), identity=0)
    raise GenerationFailure(f"no loop of order {n} after {max_restarts} restarts (seed {seed})")
