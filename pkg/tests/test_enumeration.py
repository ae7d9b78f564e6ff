import json

import pytest

from loopforge.enumeration import (
    REDUCED_COUNTS,
    EnumerationCursor,
    enumerate_loops,
    enumerate_loops_parallel,
    enumerate_subtree,
    enumerate_up_to_isomorphism,
    first_row_prefixes,
    random_loop,
)
from loopforge.errors import GenerationFailure, OrderTooLarge
from loopforge.core import FiniteLoop
from loopforge.isomorphy import find_isomorphism

from oracles import reduced_latin_squares


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_oracle(n):
    got = [L.table for L in enumerate_loops(n)]
    assert got == sorted(reduced_latin_squares(n))
    assert len(got) == REDUCED_COUNTS[n]


def test_lexicographic_and_distinct(loops6):
    tables = [L.table for L in loops6]
    assert tables == sorted(set(tables))
    assert len(tables) == 9408


def test_caps():
    with pytest.raises(OrderTooLarge):
        next(enumerate_loops(8))
    with pytest.raises(OrderTooLarge):
        next(enumerate_up_to_isomorphism(7))
    with pytest.raises(ValueError):
        next(enumerate_loops(0))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_resume_after_any_table(n):
    tables = [L.table for L in enumerate_loops(n)]
    for i in (0, len(tables) // 3, len(tables) - 1):
        rest = [L.table for L in enumerate_loops(n, start_after=tables[i])]
        assert rest == tables[i + 1:]


def test_subtrees_partition_the_stream(loops6):
    parts = [t for p in first_row_prefixes(6) for t in enumerate_subtree(6, p)]
    assert parts == [L.table for L in loops6]


def test_parallel_is_order_independent():
    serial = [L.table for L in enumerate_loops(5)]
    for threads in (1, 2, 3):
        assert [L.table for L in enumerate_loops_parallel(5, threads)] == serial


def test_up_to_isomorphism():
    # loops of orders 1..5 up to isomorphism: 1, 1, 1, 2, 6
    counts = [len(list(enumerate_up_to_isomorphism(n))) for n in range(1, 6)]
    assert counts == [1, 1, 1, 2, 6]
    reps = list(enumerate_up_to_isomorphism(5))
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert find_isomorphism(a, b) is None


@pytest.mark.parametrize("mode", ["reduced", "up-to-isomorphism"])
def test_cursor_resumes(mode):
    full = [L.table for L in EnumerationCursor(5, mode).stream()]
    cur = EnumerationCursor(5, mode)
    head = []
    for L in cur.stream():
        head.append(L.table)
        if len(head) == 3:
            break
    saved = cur.to_json()
    assert json.loads(saved)["emitted"] == 3
    tail = [L.table for L in EnumerationCursor.from_json(saved).stream()]
    assert head + tail == full


def test_random_loop_is_deterministic_and_valid():
    for seed in range(100):
        L = random_loop(10, seed)
        assert L == random_loop(10, seed)
        assert FiniteLoop(L.table, identity=0) == L
        assert L.table[0] == tuple(range(10))
    assert len({random_loop(10, s).table for s in range(20)}) == 20


def test_random_loop_budget_failure():
    with pytest.raises(GenerationFailure):
        random_loop(12, 0, max_restarts=1, node_budget=3)
