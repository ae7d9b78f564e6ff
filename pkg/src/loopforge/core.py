"""Finite quasigroups and loops stored as Cayley tables, plus permutations.

Permutations act on the right and compose left to right: ``x(pq) = (xp)q``.
So ``p * q`` applies ``p`` first, and a product such as ``R_y J_rho L_y``
is written ``right_translation(L, y) * j_rho * left_translation(L, y)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import DegreeMismatch, LatinViolation, NotALoop, ShapeError

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1``; ``image[x]`` is the image of ``x``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {list(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def _unchecked(cls, image: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        object.__setattr__(p, "image", image)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(3, [(1, 2)])``."""
        image = list(range(n))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                image[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(image))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __len__(self):
        return len(self.image)

    def __getitem__(self, x: int) -> int:
        return self.image[x]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation._unchecked(tuple(inv))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(len(self.image))
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.image[x]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return lcm(*self.cycle_type()) if self.image else 1

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.image) if x == y]

    def __repr__(self):
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return f"Permutation({''.join(parts) or '()'}, n={len(self.image)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``x(pq) = (xp)q``: apply ``p``, then ``q``."""
    if len(p.image) != len(q.image):
        raise DegreeMismatch(f"degrees {len(p.image)} and {len(q.image)}")
    qi = q.image
    return Permutation._unchecked(tuple(qi[y] for y in p.image))


def _check_latin(table: Table) -> None:
    n = len(table)
    for i, row in enumerate(table):
        seen = set()
        for s in row:
            if s in seen:
                raise LatinViolation("row", i, s)
            seen.add(s)
    for j in range(n):
        seen = set()
        for i in range(n):
            s = table[i][j]
            if s in seen:
                raise LatinViolation("column", j, s)
            seen.add(s)


def _find_identity(table: Table) -> Optional[int]:
    n = len(table)
    natural = tuple(range(n))
    for e in range(n):
        if table[e] == natural and all(table[x][e] == x for x in range(n)):
            return e
    return None


@dataclass(frozen=True)
class Quasigroup:
    """A Latin square read as a multiplication table: ``table[x][y] = x*y``."""

    table: Table

    def __post_init__(self):
        table = _normalize(self.table)
        _check_latin(table)
        object.__setattr__(self, "table", table)

    @classmethod
    def _unchecked(cls, table: Table, **fields):
        obj = object.__new__(cls)
        object.__setattr__(obj, "table", table)
        for k, v in fields.items():
            object.__setattr__(obj, k, v)
        return obj

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> Optional[int]:
        return _find_identity(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def to_table(self) -> list[list[int]]:
        return [list(row) for row in self.table]

    def as_loop(self) -> Optional[FiniteLoop]:
        e = _find_identity(self.table)
        return None if e is None else FiniteLoop._unchecked(self.table, identity=e)

    def relabel(self, p: Permutation):
        """Isomorphic copy in which element ``x`` is renamed ``xp``."""
        if len(p) != self.n:
            raise DegreeMismatch(f"relabeling of degree {len(p)} on order {self.n}")
        inv = p.inverse().image
        img = p.image
        t = self.table
        table = tuple(tuple(img[t[inv[a]][inv[b]]] for b in range(self.n)) for a in range(self.n))
        return _promote(table)


@dataclass(frozen=True)
class FiniteLoop(Quasigroup):
    """A quasigroup with a two-sided identity element."""

    identity: int = 0

    def __post_init__(self):
        super().__post_init__()
        e = self.identity
        if not 0 <= e < self.n:
            raise NotALoop(f"identity {e} out of range")
        if self.table[e] != tuple(range(self.n)) or any(self.table[x][e] != x for x in range(self.n)):
            raise NotALoop(f"{e} is not a two-sided identity")

    def as_loop(self) -> FiniteLoop:
        return self

    @cached_property
    def inverse_maps(self) -> tuple[Permutation, Permutation]:
        return inverse_maps(self)

    @property
    def j_rho(self) -> Permutation:
        return self.inverse_maps[0]

    @property
    def j_lambda(self) -> Permutation:
        return self.inverse_maps[1]


def _normalize(rows) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except TypeError as exc:
        raise ShapeError("table must be a sequence of rows") from exc
    n = len(table)
    if n == 0:
        raise ShapeError("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ShapeError(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ShapeError(f"entry {v} in row {i} outside 0..{n - 1}")
    return table


def _promote(table: Table):
    e = _find_identity(table)
    if e is None:
        return Quasigroup._unchecked(table)
    return FiniteLoop._unchecked(table, identity=e)


def from_table(rows) -> Quasigroup:
    """Validate a square grid and return a ``FiniteLoop`` if it has an identity,
    otherwise a plain ``Quasigroup``.

    Raises ``ShapeError`` for non-square grids or out-of-range entries and
    ``LatinViolation`` when a row or column repeats a symbol.
    """
    table = _normalize(rows)
    _check_latin(table)
    return _promote(table)


def loop_from_table(rows) -> FiniteLoop:
    q = from_table(rows)
    if not isinstance(q, FiniteLoop):
        raise NotALoop("table has no two-sided identity")
    return q


def left_translation(q: Quasigroup, x: int) -> Permutation:
    """``L_x : y -> xy``."""
    return Permutation._unchecked(q.table[x])


def right_translation(q: Quasigroup, x: int) -> Permutation:
    """``R_x : y -> yx``."""
    t = q.table
    return Permutation._unchecked(tuple(t[y][x] for y in range(len(t))))


def inverse_maps(L: FiniteLoop) -> tuple[Permutation, Permutation]:
    """Return ``(J_rho, J_lambda)`` where ``x * xJ_rho = e = xJ_lambda * x``."""
    t, n, e = L.table, L.n, L.identity
    rho = [0] * n
    lam = [0] * n
    for x in range(n):
        row = t[x]
        for y in range(n):
            if row[y] == e:
                rho[x] = y
                # x * y = e means x is the left inverse of y
                lam[y] = x
    return Permutation._unchecked(tuple(rho)), Permutation._unchecked(tuple(lam))


def cyclic_group(n: int) -> FiniteLoop:
    return FiniteLoop._unchecked(tuple(tuple((x + y) % n for y in range(n)) for x in range(n)), identity=0)


def direct_product(a: FiniteLoop, b: FiniteLoop) -> FiniteLoop:
    """Product loop on pairs ``(i, j)`` encoded as ``i * b.n + j``."""
    n = a.n * b.n
    table = tuple(
        tuple(a.table[x // b.n][y // b.n] * b.n + b.table[x % b.n][y % b.n] for y in range(n))
        for x in range(n)
    )
    return FiniteLoop._unchecked(table, identity=a.identity * b.n + b.identity)


def symmetric_group_3() -> FiniteLoop:
    """S3 with elements listed as permutation images, identity first."""
    elems = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(
        tuple(index[tuple(q[p[k]] for k in range(3))] for q in elems) for p in elems
    )
    return FiniteLoop._unchecked(table, identity=0)


def dihedral_group(m: int) -> FiniteLoop:
    """Symmetries of an m-gon: ``r^i`` is ``i`` and ``s r^i`` is ``m + i``."""
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m

    def mul(x, y):
        a, i = divmod(x, m)
        b, j = divmod(y, m)
        # s^a r^i s^b r^j = s^(a+b) r^(+-i + j) since s r s = r^-1
        return (a ^ b) * m + ((-i if b else i) + j) % m

    table = tuple(tuple(mul(x, y) for y in range(n)) for x in range(n))
    return FiniteLoop._unchecked(table, identity=0)
