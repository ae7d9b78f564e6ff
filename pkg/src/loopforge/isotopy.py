"""Isotopes, isotopisms and the T-conditions between a loop and an isotope.

A triple ``(A, B, C)`` is an isotopism from ``(G, .)`` to ``(H, o)`` when
``xA o yB = (x.y)C`` for all ``x, y``. The f,g-principal isotope uses
``(R_g, L_f, I)``, so ``x o y = (x R_g^-1).(y L_f^-1)`` with identity ``f.g``.

The isotope's inverse maps ``J'_rho``, ``J'_lambda`` are always read off the
isotope's own table; the T-conditions compare them with products built from
``G``'s inverse maps and the triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional

from .core import (
    FiniteLoop,
    Permutation,
    Quasigroup,
    Table,
    _promote,
    left_translation,
    right_translation,
)
from .errors import DegreeMismatch, NotALoop, NotAnIsotopism


class IsotopismTriple(NamedTuple):
    A: Permutation
    B: Permutation
    C: Permutation

    @classmethod
    def identity(cls, n: int) -> IsotopismTriple:
        i = Permutation.identity(n)
        return cls(i, i, i)

    @classmethod
    def principal(cls, L: Quasigroup, f: int, g: int) -> IsotopismTriple:
        return cls(right_translation(L, g), left_translation(L, f), Permutation.identity(L.n))

    def to_json(self) -> dict:
        return {"A": list(self.A.image), "B": list(self.B.image), "C": list(self.C.image)}


@dataclass(frozen=True)
class PrincipalIsotopeSpec:
    f: int
    g: int

    def triple(self, L: Quasigroup) -> IsotopismTriple:
        return IsotopismTriple.principal(L, self.f, self.g)


def _check_degree(n: int, triple) -> None:
    for name, p in zip("ABC", triple):
        if len(p) != n:
            raise DegreeMismatch(f"{name} has degree {len(p)}, expected {n}")


def apply_isotopism(L: Quasigroup, triple) -> Quasigroup:
    """Isotope with ``a o b = ((a A^-1).(b B^-1)) C``; a ``FiniteLoop`` when
    the result has a two-sided identity, else a ``Quasigroup``."""
    A, B, C = triple
    _check_degree(L.n, triple)
    ai, bi, c, t = A.inverse().image, B.inverse().image, C.image, L.table
    n = L.n
    table = tuple(tuple(c[t[ai[a]][bi[b]]] for b in range(n)) for a in range(n))
    return _promote(table)


def principal_table(t: Table, f: int, g: int) -> Table:
    n = len(t)
    rg_inv = [0] * n
    lf_inv = [0] * n
    for x in range(n):
        rg_inv[t[x][g]] = x
        lf_inv[t[f][x]] = x
    return tuple(tuple(t[rg_inv[x]][lf_inv[y]] for y in range(n)) for x in range(n))


def principal_isotope(L: FiniteLoop, f: int, g: int) -> FiniteLoop:
    """The f,g-principal isotope; its identity is ``f.g``."""
    if not (0 <= f < L.n and 0 <= g < L.n):
        raise IndexError(f"translation elements ({f}, {g}) outside 0..{L.n - 1}")
    table = principal_table(L.table, f, g)
    e = L.table[f][g]
    # f.g must be a two-sided identity of the isotope
    if table[e] != tuple(range(L.n)) or any(table[x][e] != x for x in range(L.n)):
        raise NotALoop(f"principal isotope ({f}, {g}) has no identity at {e}")
    return FiniteLoop._unchecked(table, identity=e)


def is_isotopism(G: Quasigroup, H: Quasigroup, triple) -> bool:
    if G.n != H.n:
        raise DegreeMismatch(f"orders {G.n} and {H.n}")
    _check_degree(G.n, triple)
    a, b, c = (p.image for p in triple)
    tg, th = G.table, H.table
    return all(th[a[x]][b[y]] == c[tg[x][y]] for x, y in product(range(G.n), repeat=2))


def is_autotopism(L: Quasigroup, triple) -> bool:
    return is_isotopism(L, L, triple)


@dataclass(frozen=True)
class TConditionReport:
    t1: bool
    t21: bool
    t22: bool
    t31: bool
    t32: bool

    @property
    def t2(self) -> bool:
        return self.t21 and self.t22

    @property
    def t3(self) -> bool:
        return self.t31 and self.t32

    @property
    def t(self) -> bool:
        return self.t1 and (self.t2 or self.t3)

    def to_json(self) -> dict:
        return {
            "t1": self.t1, "t21": self.t21, "t22": self.t22, "t31": self.t31, "t32": self.t32,
            "t2": self.t2, "t3": self.t3, "t": self.t,
        }


def t_conditions(G: FiniteLoop, H: FiniteLoop, triple, *, verify: bool = True) -> TConditionReport:
    """Evaluate every T sub-condition for an isotopism ``(A, B, C): G -> H``.

    T1: ``A = B``; T21: ``J'_rho = C^-1 J_rho B``; T22: ``J'_rho = A^-1 J_rho C``;
    T31: ``J'_lambda = C^-1 J_lambda A``; T32: ``J'_lambda = B^-1 J_lambda C``.
    """
    A, B, C = triple
    if verify and not is_isotopism(G, H, triple):
        raise NotAnIsotopism("triple is not an isotopism from G to H")
    jr, jl = G.j_rho, G.j_lambda
    hr, hl = H.j_rho, H.j_lambda
    Ai, Bi, Ci = A.inverse(), B.inverse(), C.inverse()
    return TConditionReport(
        t1=A == B,
        t21=hr == Ci * jr * B,
        t22=hr == Ai * jr * C,
        t31=hl == Ci * jl * A,
        t32=hl == Bi * jl * C,
    )


def principal_t_conditions(L: FiniteLoop, f: int, g: int) -> TConditionReport:
    H = principal_isotope(L, f, g)
    return t_conditions(L, H, IsotopismTriple.principal(L, f, g), verify=False)


def satisfies_t1(L: FiniteLoop, f: int, g: int) -> bool:
    """``R_g = L_f`` checked directly on the table."""
    t = L.table
    return all(t[x][g] == t[f][x] for x in range(L.n))


def weak_t21(G: FiniteLoop, H: FiniteLoop, A: Permutation) -> bool:
    """``J'_rho = A^-1 J_rho A`` or ``J'_lambda = A^-1 J_lambda A`` for a
    bijection ``A: G -> H``; ``G`` and ``H`` need not be isotopic."""
    if G.n != H.n or len(A) != G.n:
        raise DegreeMismatch(f"orders {G.n}, {H.n} with a bijection of degree {len(A)}")
    Ai = A.inverse()
    return H.j_rho == Ai * G.j_rho * A or H.j_lambda == Ai * G.j_lambda * A


class TWitness(NamedTuple):
    f: int
    g: int
    report: TConditionReport

    def to_json(self) -> dict:
        return {"f": self.f, "g": self.g, "conditions": self.report.to_json()}


def find_t_witnesses(L: FiniteLoop) -> list[TWitness]:
    """All ``(f, g)`` whose principal isotope satisfies the full T condition,
    ``f``-major. The full report is computed for every pair; no pruning."""
    out = []
    for f, g in product(range(L.n), repeat=2):
        report = principal_t_conditions(L, f, g)
        if report.t:
            out.append(TWitness(f, g, report))
    return out


def autotopism_triples(L: FiniteLoop, f: int, g: int) -> dict[str, IsotopismTriple]:
    """The eight triples built from translations by ``f`` and ``g`` that are
    claimed to be autotopisms of a CIP loop with the T condition."""
    Rg, Lg = right_translation(L, g), left_translation(L, g)
    Lf = left_translation(L, f)
    gg, ff = L.table[g][g], L.table[f][f]
    return {
        "(R_g, L_g, L_gg)": IsotopismTriple(Rg, Lg, left_translation(L, gg)),
        "(R_g, L_g, R_g^2)": IsotopismTriple(Rg, Lg, Rg * Rg),
        "(R_g, L_g, L_g R_g)": IsotopismTriple(Rg, Lg, Lg * Rg),
        "(L_f, L_g, L_f R_g)": IsotopismTriple(Lf, Lg, Lf * Rg),
        "(L_f, L_g, L_g L_f)": IsotopismTriple(Lf, Lg, Lg * Lf),
        "(L_f, L_g, R_g L_f)": IsotopismTriple(Lf, Lg, Rg * Lf),
        "(L_f, L_g, L_f^2)": IsotopismTriple(Lf, Lg, Lf * Lf),
        "(L_f, L_g, L_ff)": IsotopismTriple(Lf, Lg, left_translation(L, ff)),
    }


def isotope_of(L: FiniteLoop, triple) -> Optional[FiniteLoop]:
    q = apply_isotopism(L, triple)
    return q.as_loop()
