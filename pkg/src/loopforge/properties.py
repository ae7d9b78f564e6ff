"""Inverse-property predicates and element-wise traits of finite loops.

Every global predicate is an all-tuples scan over the Cayley table and
reports the lexicographically first violating tuple as its witness.
``recheck`` re-evaluates a witness independently of the scan that found it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .core import FiniteLoop, Permutation, left_translation, right_translation
from .errors import DegreeMismatch, NotCommuting, NotWeakInverse


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "witness": None if self.witness is None else list(self.witness),
        }


# Pointwise forms. Each returns True when the identity holds at the tuple.

def _wip_definitional(L, x, y):
    t, rho = L.table, L.j_rho.image
    return t[y][rho[t[x][y]]] == rho[x]


def _wip_lambda(L, x, y):
    t, lam = L.table, L.j_lambda.image
    return t[lam[t[x][y]]][x] == lam[y]


def _wip_implication(L, x, y, z):
    t, e = L.table, L.identity
    return t[t[x][y]][z] != e or t[x][t[y][z]] == e


def _wip_translational(L, y, x):
    return (right_translation(L, y) * L.j_rho * left_translation(L, y))[x] == L.j_rho[x]


def _wip_translational_left(L, x, y):
    return (left_translation(L, x) * L.j_lambda * right_translation(L, x))[y] == L.j_lambda[y]


def _cip(L, x, y):
    t = L.table
    return t[t[x][y]][L.j_rho[x]] == y


def _lip(L, x, y):
    t = L.table
    return t[L.j_lambda[x]][t[x][y]] == y


def _rip(L, x, y):
    t = L.table
    return t[t[x][y]][L.j_rho[y]] == x


def _ip(L, x, y):
    return _lip(L, x, y) and _rip(L, x, y)


def _aip(L, x, y=None):
    if y is None:
        return L.j_rho[x] == L.j_lambda[x]
    t, inv = L.table, L.j_rho.image
    return inv[t[x][y]] == t[inv[x]][inv[y]]


POINTWISE = {
    "wip": _wip_definitional,
    "wip:definitional": _wip_definitional,
    "wip:lambda": _wip_lambda,
    "wip:implication": _wip_implication,
    "wip:translational": _wip_translational,
    "wip:translational-left": _wip_translational_left,
    "cip": _cip,
    "lip": _lip,
    "rip": _rip,
    "ip": _ip,
    "aip": _aip,
}


def recheck(L: FiniteLoop, report: PropertyReport) -> bool:
    """True iff ``report.witness`` really violates ``report.property`` in ``L``."""
    if report.witness is None:
        return False
    name = report.property
    if name.startswith("m-inverse:"):
        m = int(name.split(":", 1)[1])
        return not _m_inverse_at(L, m, *report.witness)
    return not POINTWISE[name](L, *report.witness)


def _scan(L: FiniteLoop, name: str, arity: int = 2) -> PropertyReport:
    pred = POINTWISE[name]
    for w in product(range(L.n), repeat=arity):
        if not pred(L, *w):
            return PropertyReport(name, False, w)
    return PropertyReport(name, True)


WIP_METHODS = ("definitional", "lambda", "implication", "translational", "translational-left")


def has_wip(L: FiniteLoop, method: str = "definitional") -> PropertyReport:
    """Weak inverse property.

    ``definitional`` scans ``y(xy)^rho = x^rho`` over pairs ``(x, y)``;
    ``translational`` compares ``R_y J_rho L_y`` with ``J_rho`` for each ``y``
    (witness ``(y, x)`` with ``x`` the first point where they differ).
    ``lambda`` and ``translational-left`` are the mirror forms and
    ``implication`` is ``xy.z = e => x.yz = e`` itself.
    """
    if method == "implication":
        t, rho = L.table, L.j_rho.image
        for x, y in product(range(L.n), repeat=2):
            z = rho[t[x][y]]
            if not _wip_implication(L, x, y, z):
                return PropertyReport("wip", False, (x, y, z))
        return PropertyReport("wip", True)
    if method == "translational":
        rho = L.j_rho
        for y in range(L.n):
            p = right_translation(L, y) * rho * left_translation(L, y)
            if p != rho:
                x = next(i for i in range(L.n) if p[i] != rho[i])
                return PropertyReport("wip", False, (y, x))
        return PropertyReport("wip", True)
    if method == "translational-left":
        lam = L.j_lambda
        for x in range(L.n):
            p = left_translation(L, x) * lam * right_translation(L, x)
            if p != lam:
                y = next(i for i in range(L.n) if p[i] != lam[i])
                return PropertyReport("wip", False, (x, y))
        return PropertyReport("wip", True)
    if method not in ("definitional", "lambda"):
        raise ValueError(f"unknown WIP method {method!r}")
    r = _scan(L, f"wip:{method}")
    return PropertyReport("wip", r.holds, r.witness)


def wip_report_method(report: PropertyReport, method: str) -> PropertyReport:
    """Tag a WIP report with its method so ``recheck`` uses the matching form."""
    return PropertyReport(f"wip:{method}", report.holds, report.witness)


def has_cip(L: FiniteLoop) -> PropertyReport:
    """Cross inverse property ``xy . x^rho = y``."""
    return _scan(L, "cip")


def has_cip_translational(L: FiniteLoop) -> bool:
    """CIP as ``R_{x^rho} = L_x^{-1}`` for every ``x``."""
    return all(right_translation(L, L.j_rho[x]) == left_translation(L, x).inverse() for x in range(L.n))


def has_lip(L: FiniteLoop) -> PropertyReport:
    return _scan(L, "lip")


def has_rip(L: FiniteLoop) -> PropertyReport:
    return _scan(L, "rip")


def has_ip(L: FiniteLoop) -> PropertyReport:
    for w in product(range(L.n), repeat=2):
        if not _lip(L, *w) or not _rip(L, *w):
            return PropertyReport("ip", False, w)
    return PropertyReport("ip", True)


def has_aip(L: FiniteLoop) -> PropertyReport:
    """Automorphic inverse property ``(xy)^-1 = x^-1 y^-1``.

    Needs two-sided inverses; a one-element witness ``(x,)`` marks an element
    whose left and right inverses differ.
    """
    for x in range(L.n):
        if not _aip(L, x):
            return PropertyReport("aip", False, (x,))
    return _scan(L, "aip")


def _m_inverse_at(L, m, x, y, side="right"):
    t = L.table
    if side == "left":
        jm = L.j_lambda ** m
        jm1 = L.j_lambda ** (m + 1)
        return t[jm1[x]][jm[t[y][x]]] == jm[y]
    jm = L.j_rho ** m
    jm1 = L.j_rho ** (m + 1)
    return t[jm[t[x][y]]][jm1[x]] == jm[y]


def m_inverse_check(L: FiniteLoop, m: int, side: str = "right") -> PropertyReport:
    """``(xy)J^m . xJ^(m+1) = yJ^m`` with ``J = J_rho`` (``side="left"`` uses
    the mirror ``xJ^(m+1) . (yx)J^m = yJ^m`` with ``J = J_lambda``).
    Negative powers use ``J_rho^-1 = J_lambda``."""
    name = f"m-inverse:{m}"
    t = L.table
    J = L.j_rho if side == "right" else L.j_lambda
    jm = (J ** m).image
    jm1 = (J ** (m + 1)).image
    for x, y in product(range(L.n), repeat=2):
        if side == "right":
            ok = t[jm[t[x][y]]][jm1[x]] == jm[y]
        else:
            ok = t[jm1[x]][jm[t[y][x]]] == jm[y]
        if not ok:
            return PropertyReport(name, False, (x, y))
    return PropertyReport(name, True)


def centrum(L: FiniteLoop) -> frozenset[int]:
    t = L.table
    return frozenset(x for x in range(L.n) if all(t[x][y] == t[y][x] for y in range(L.n)))


def nuclei(L: FiniteLoop) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Left, middle and right nucleus.

    ``a`` is in the left nucleus when ``a.xy = ax.y``, middle when
    ``x.ay = xa.y``, right when ``x.ya = xy.a``, for all ``x, y``.
    """
    t, n = L.table, L.n
    pairs = list(product(range(n), repeat=2))
    left = frozenset(a for a in range(n) if all(t[a][t[x][y]] == t[t[a][x]][y] for x, y in pairs))
    middle = frozenset(a for a in range(n) if all(t[x][t[a][y]] == t[t[x][a]][y] for x, y in pairs))
    right = frozenset(a for a in range(n) if all(t[x][t[y][a]] == t[t[x][y]][a] for x, y in pairs))
    return left, middle, right


@dataclass(frozen=True)
class ElementTraits:
    """Per-element identities. The four inverse-property flags are ``None``
    when the loop lacks two-sided inverses (``J_rho != J_lambda``)."""

    element: int
    flexible: bool
    left_alternative: bool
    right_alternative: bool
    centrum: bool
    rho_aipe: Optional[bool]
    lambda_aipe: Optional[bool]
    rho_aaipe: Optional[bool]
    lambda_aaipe: Optional[bool]

    def to_json(self) -> dict:
        return dict(self.__dict__)


def element_traits(L: FiniteLoop, g: int) -> ElementTraits:
    t, n = L.table, L.n
    ys = range(n)
    flexible = all(t[g][t[y][g]] == t[t[g][y]][g] for y in ys)
    left_alt = all(t[t[g][g]][y] == t[g][t[g][y]] for y in ys)
    right_alt = all(t[y][t[g][g]] == t[t[y][g]][g] for y in ys)
    central = all(t[g][y] == t[y][g] for y in ys)
    if L.j_rho != L.j_lambda:
        flags = (None, None, None, None)
    else:
        inv = L.j_rho.image
        gi = inv[g]
        flags = (
            all(inv[t[y][g]] == t[inv[y]][gi] for y in ys),
            all(inv[t[g][y]] == t[gi][inv[y]] for y in ys),
            all(inv[t[y][g]] == t[gi][inv[y]] for y in ys),
            all(inv[t[g][y]] == t[inv[y]][gi] for y in ys),
        )
    return ElementTraits(g, flexible, left_alt, right_alt, central, *flags)


def is_weak_inverse_permutation(L: FiniteLoop, alpha: Permutation) -> tuple[bool, bool]:
    """Return ``(right, left)``: whether ``J_rho = alpha J_rho alpha`` and
    ``J_lambda = alpha J_lambda alpha``. The two always agree."""
    if len(alpha) != L.n:
        raise DegreeMismatch(f"permutation of degree {len(alpha)} on a loop of order {L.n}")
    right = alpha * L.j_rho * alpha == L.j_rho
    left = alpha * L.j_lambda * alpha == L.j_lambda
    assert right == left, f"weak right/left inverse disagreement for {alpha!r}"
    return right, left


def weak_inverse_permutations(L: FiniteLoop) -> list[Permutation]:
    """All weak inverse permutations of ``L``, in lexicographic order.

    Fixing ``x -> a`` forces ``a^rho -> x^rho``; the search follows that chain
    and backtracks on conflicts.
    """
    n = L.n
    rho = L.j_rho.image
    alpha = [-1] * n
    used = [False] * n
    out = []

    def assign_chain(x, a, trail):
        while True:
            if alpha[x] != -1:
                return alpha[x] == a
            if used[a]:
                return False
            alpha[x] = a
            used[a] = True
            trail.append(x)
            x, a = rho[a], rho[x]

    def rec():
        try:
            x = alpha.index(-1)
        except ValueError:
            out.append(Permutation._unchecked(tuple(alpha)))
            return
        for a in range(n):
            if used[a]:
                continue
            trail = []
            if assign_chain(x, a, trail):
                rec()
            for z in trail:
                used[alpha[z]] = False
                alpha[z] = -1

    rec()
    return out


@dataclass(frozen=True)
class PermutationGroup:
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.elements for b in self.elements)

    def cayley_table(self) -> list[list[int]]:
        index = {p: i for i, p in enumerate(self.elements)}
        return [[index[a * b] for b in self.elements] for a in self.elements]


def generated_group(gens: Iterable[Permutation], n: int) -> PermutationGroup:
    gens = list(gens)
    identity = Permutation.identity(n)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermutationGroup(tuple(sorted(seen, key=lambda p: p.image)))


def weak_inverse_closure(L: FiniteLoop, gens: Iterable[Permutation]) -> PermutationGroup:
    """Group generated by pairwise-commuting weak inverse permutations.

    Raises ``NotWeakInverse`` or ``NotCommuting`` when a generator fails the
    precondition; asserts the result is abelian and lies inside the set of
    weak inverse permutations.
    """
    gens = list(gens)
    for g in gens:
        if not is_weak_inverse_permutation(L, g)[0]:
            raise NotWeakInverse(g)
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if a * b != b * a:
                raise NotCommuting((a, b))
    group = generated_group(gens, L.n)
    assert group.is_abelian()
    assert all(is_weak_inverse_permutation(L, p)[0] for p in group.elements)
    return group
