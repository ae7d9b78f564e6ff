"""Reading and writing ``.loop`` text files, their JSON mirror, and archives.

``.loop``: first line ``n``, then ``n`` lines of space-separated integers,
row ``x`` listing ``x*y`` for ``y = 0..n-1``. LF line ends, no trailing
whitespace. Archives are ``.loop`` blocks separated by one blank line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from .core import Permutation, Quasigroup, from_table
from .errors import ShapeError


def dumps_loop(q: Quasigroup) -> str:
    lines = [str(q.n)] + [" ".join(map(str, row)) for row in q.table]
    return "\n".join(lines) + "\n"


def loads_loop(text: str) -> Quasigroup:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ShapeError("empty .loop text")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ShapeError(f"malformed .loop text: {exc}") from exc
    if len(rows) != n:
        raise ShapeError(f"header says {n} rows, found {len(rows)}")
    return from_table(rows)


def dumps_json(q: Quasigroup) -> str:
    return json.dumps({"n": q.n, "table": [list(r) for r in q.table]}, separators=(",", ":")) + "\n"


def loads_json(text: str) -> Quasigroup:
    data = json.loads(text)
    if "table" not in data:
        raise ShapeError("JSON loop needs a 'table' field")
    q = from_table(data["table"])
    if "n" in data and data["n"] != q.n:
        raise ShapeError(f"'n' is {data['n']} but table has order {q.n}")
    return q


def read_loop(path) -> Quasigroup:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return loads_json(text)
    return loads_loop(text)


def write_loop(q: Quasigroup, path) -> None:
    path = Path(path)
    text = dumps_json(q) if path.suffix == ".json" else dumps_loop(q)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def dumps_archive(loops: Iterable[Quasigroup]) -> str:
    return "\n".join(dumps_loop(q) for q in loops)


def iter_archive(text: str) -> Iterator[Quasigroup]:
    for block in text.split("\n\n"):
        if block.strip():
            yield loads_loop(block)


def triple_to_json(triple) -> dict:
    a, b, c = triple
    return {"A": list(a.image), "B": list(b.image), "C": list(c.image)}


def triple_from_json(data) -> tuple[Permutation, Permutation, Permutation]:
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, dict):
        parts = [data["A"], data["B"], data["C"]]
    else:
        parts = list(data)
        if len(parts) != 3:
            raise ShapeError("a triple needs exactly three image arrays")
    return tuple(Permutation(tuple(p)) for p in parts)
