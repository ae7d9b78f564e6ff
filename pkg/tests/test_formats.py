import json

import pytest
from hypothesis import given

from loopforge.core import Permutation, Quasigroup, cyclic_group
from loopforge.errors import LatinViolation, ShapeError
from loopforge.formats import (
    dumps_archive,
    dumps_json,
    dumps_loop,
    iter_archive,
    loads_json,
    loads_loop,
    read_loop,
    triple_from_json,
    triple_to_json,
    write_loop,
)

from conftest import relabeled_loop


def test_dot_loop_layout(z3):
    assert dumps_loop(z3) == "3\n0 1 2\n1 2 0\n2 0 1\n"


@given(relabeled_loop())
def test_text_and_json_round_trip(L):
    assert loads_loop(dumps_loop(L)) == L
    assert loads_json(dumps_json(L)) == L


def test_quasigroup_round_trip():
    q = loads_loop("3\n0 2 1\n2 1 0\n1 0 2\n")
    assert type(q) is Quasigroup
    assert loads_loop(dumps_loop(q)).table == q.table


def test_malformed_text():
    with pytest.raises(ShapeError):
        loads_loop("")
    with pytest.raises(ShapeError):
        loads_loop("3\n0 1 2\n1 2 0\n")
    with pytest.raises(ShapeError):
        loads_loop("2\n0 x\n1 0\n")
    with pytest.raises(LatinViolation):
        loads_loop("2\n0 1\n0 1\n")
    with pytest.raises(ShapeError):
        loads_json('{"n": 3, "table": [[0, 1], [1, 0]]}')
    with pytest.raises(ShapeError):
        loads_json('{"rows": []}')


def test_files_by_suffix(tmp_path, z3):
    for name in ("a.loop", "a.json"):
        path = tmp_path / name
        write_loop(z3, path)
        assert read_loop(path) == z3
    assert json.loads((tmp_path / "a.json").read_text())["n"] == 3
    assert b"\r" not in (tmp_path / "a.loop").read_bytes()


def test_archive(small_loops):
    text = dumps_archive(small_loops)
    assert list(iter_archive(text)) == small_loops


def test_triple_round_trip():
    t = (Permutation((1, 0, 2)), Permutation.identity(3), Permutation((2, 0, 1)))
    data = triple_to_json(t)
    assert data == {"A": [1, 0, 2], "B": [0, 1, 2], "C": [2, 0, 1]}
    assert triple_from_json(data) == t
    assert triple_from_json(json.dumps(data)) == t
    assert triple_from_json([[1, 0, 2], [0, 1, 2], [2, 0, 1]]) == t
    with pytest.raises(ShapeError):
        triple_from_json([[0, 1]])
    with pytest.raises(ValueError):
        triple_from_json({"A": [0, 0], "B": [0, 1], "C": [0, 1]})


def test_cyclic_written_file_is_reloadable(tmp_path):
    path = tmp_path / "z7.loop"
    write_loop(cyclic_group(7), path)
    assert read_loop(path).as_loop() == cyclic_group(7)
