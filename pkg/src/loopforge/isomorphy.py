"""Isomorphism, automorphisms, isotopy and canonical forms of small loops.

``find_isomorphism`` and ``canonical_form`` are separate code paths on
purpose: each is used to check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .core import FiniteLoop, Permutation, left_translation, right_translation
from .isotopy import IsotopismTriple, is_isotopism, principal_isotope


def element_invariants(L: FiniteLoop) -> list[tuple]:
    """Per-element data preserved by every isomorphism."""
    t, e = L.table, L.identity
    rho, lam = L.j_rho.image, L.j_lambda.image
    out = []
    for x in range(L.n):
        lx = left_translation(L, x)
        rx = right_translation(L, x)
        out.append(
            (
                x == e,
                lx.cycle_type(),
                rx.cycle_type(),
                t[x][x] == x,
                t[x][x] == e,
                rho[x] == lam[x],
                rho[x] == x,
            )
        )
    return out


def _isomorphisms(G: FiniteLoop, H: FiniteLoop) -> Iterator[Permutation]:
    n = G.n
    if n != H.n:
        return
    if G.j_rho.cycle_type() != H.j_rho.cycle_type():
        return
    inv_g = element_invariants(G)
    inv_h = element_invariants(H)
    if sorted(inv_g) != sorted(inv_h):
        return
    tg, th = G.table, H.table
    m = [-1] * n
    mi = [-1] * n
    assigned: list[int] = []

    def assign(x, y, trail) -> bool:
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            if m[x] != -1:
                if m[x] != y:
                    return False
                continue
            if mi[y] != -1 or inv_g[x] != inv_h[y]:
                return False
            m[x] = y
            mi[y] = x
            trail.append(x)
            assigned.append(x)
            for z in assigned:
                queue.append((tg[x][z], th[y][m[z]]))
                queue.append((tg[z][x], th[m[z]][y]))
        return True

    def undo(trail):
        for x in trail:
            mi[m[x]] = -1
            m[x] = -1
        del assigned[len(assigned) - len(trail):]

    def rec():
        if len(assigned) == n:
            yield Permutation._unchecked(tuple(m))
            return
        x = m.index(-1)
        for y in range(n):
            if mi[y] == -1 and inv_g[x] == inv_h[y]:
                trail: list[int] = []
                if assign(x, y, trail):
                    yield from rec()
                undo(trail)

    trail: list[int] = []
    if assign(G.identity, H.identity, trail):
        yield from rec()


def find_isomorphism(G: FiniteLoop, H: FiniteLoop) -> Optional[Permutation]:
    """A bijection ``A`` with ``xA o yA = (x.y)A``, or ``None``."""
    for A in _isomorphisms(G, H):
        assert is_isotopism(G, H, (A, A, A))
        return A
    return None


def automorphisms(G: FiniteLoop) -> list[Permutation]:
    auts = sorted(_isomorphisms(G, G), key=lambda p: p.image)
    found = set(auts)
    assert Permutation.identity(G.n) in found
    assert all(a * b in found for a in auts for b in auts)
    return auts


def are_isotopic(G: FiniteLoop, H: FiniteLoop) -> Optional[IsotopismTriple]:
    """Every isotope of ``G`` is isomorphic to some f,g-principal isotope, so
    scan those; on success return ``(R_g A, L_f A, A)`` with ``A`` the
    isomorphism from the principal isotope onto ``H``."""
    if G.n != H.n:
        return None
    for f, g in product(range(G.n), repeat=2):
        P = principal_isotope(G, f, g)
        A = find_isomorphism(P, H)
        if A is not None:
            triple = IsotopismTriple(right_translation(G, g) * A, left_translation(G, f) * A, A)
            assert is_isotopism(G, H, triple)
            return triple
    return None


@dataclass(frozen=True)
class CanonicalForm:
    loop: FiniteLoop
    relabeling: Permutation


def canonical_form(G: FiniteLoop) -> CanonicalForm:
    """Lexicographically least table over all relabelings sending the identity
    to 0, with the relabeling that produces it.

    Cells are filled row-major. Once the row and column elements of a cell
    have labels, the cell's value is forced: an element without a label gets
    the smallest free one, since any other choice gives a larger table. The
    search branches only when a row or column label is still unassigned, and
    prunes any prefix already larger than the best table found.
    """
    n, t, e = G.n, G.table, G.identity
    if n == 1:
        return CanonicalForm(G.relabel(Permutation.identity(1)).as_loop(), Permutation.identity(1))
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]
    K = len(cells)
    best: list = [None, None]

    def compare_prefix(cur):
        b = best[0]
        if b is None:
            return -1
        k = len(cur)
        pre = b[:k]
        return -1 if cur < pre else (0 if cur == pre else 1)

    def rec(k, lab, orig, nxt, cur, cmp):
        while k < K:
            r, c = cells[k]
            if orig[r] == -1 or orig[c] == -1:
                for x in range(n):
                    if lab[x] == -1:
                        cmp2 = compare_prefix(cur)
                        if cmp2 > 0:
                            return
                        lab2, orig2 = lab[:], orig[:]
                        lab2[x] = nxt
                        orig2[nxt] = x
                        rec(k, lab2, orig2, nxt + 1, cur[:], cmp2)
                return
            z = t[orig[r]][orig[c]]
            if lab[z] == -1:
                lab[z] = nxt
                orig[nxt] = z
                nxt += 1
            v = lab[z]
            if cmp == 0 and best[0] is not None:
                bv = best[0][k]
                if v > bv:
                    return
                if v < bv:
                    cmp = -1
            cur.append(v)
            k += 1
        if best[0] is None or cur < best[0]:
            best[0] = cur
            best[1] = lab

    lab0 = [-1] * n
    orig0 = [-1] * n
    lab0[e] = 0
    orig0[0] = e
    rec(0, lab0, orig0, 1, [], -1)

    flat, lab = best
    p = Permutation._unchecked(tuple(lab))
    rows = [tuple(range(n))]
    for r in range(1, n):
        rows.append((r,) + tuple(flat[(r - 1) * (n - 1):r * (n - 1)]))
    table = tuple(rows)
    return CanonicalForm(FiniteLoop._unchecked(table, identity=0), p)


def canonical_table(G: FiniteLoop):
    return canonical_form(G).loop.table
