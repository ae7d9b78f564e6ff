"""Registry of executable claims about loops, isotopes and isomorphs.

Each claim lists hypotheses (checked in order; the first failure ends the
instance and is tallied as a filter stage) and conclusions (all evaluated
once every hypothesis holds). A conclusion returns ``True``/``False`` or
``(ok, detail)`` where ``detail`` is extra JSON-able reproduction data.

Claim ids are stable strings. An id such as ``lem3.4c`` selects only the
conclusions of ``lem3.4`` whose label starts with ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Optional

from ..core import FiniteLoop, Permutation
from ..errors import UnknownClaim
from ..isomorphy import find_isomorphism
from ..isotopy import autotopism_triples, is_autotopism, weak_t21
from ..properties import m_inverse_check, generated_group, has_wip
from .. import properties as props

Check = Callable[[object], object]


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    domain: str  # "loop", "principal" or "pair"
    hypotheses: tuple[tuple[str, Check], ...]
    conclusions: tuple[tuple[str, Check], ...]
    pair_filter: Optional[Callable[[object], bool]] = None
    notes: str = ""

    @property
    def hypothesis_names(self) -> list[str]:
        return [name for name, _ in self.hypotheses]

    @property
    def conclusion_names(self) -> list[str]:
        return [name for name, _ in self.conclusions]


def _first_x(n, pred):
    for x in range(n):
        if not pred(x):
            return False, {"x": x}
    return True


def _first_xy(n, pred):
    for x, y in product(range(n), repeat=2):
        if not pred(x, y):
            return False, {"x": x, "y": y}
    return True


def _all_equal(values):
    return all(v == values[0] for v in values)


# Hypotheses shared by many claims.

def _g_wip(c):
    return c.G.wip


def _h_wip(c):
    return c.H.wip


def _t(c):
    return c.t


def _t1(c):
    return c.t1


def _g_cip(c):
    return c.G.cip


CLAIMS: dict[str, Claim] = {}


def register(claim: Claim) -> Claim:
    CLAIMS[claim.id] = claim
    return claim


# -- loop-level characterisations -------------------------------------------

register(Claim(
    "lem2.2",
    "WIP as an implication, as y(xy)^rho = x^rho and as (xy)^lambda x = y^lambda agree",
    "loop",
    (),
    (
        ("implication=rho-form", lambda c: has_wip(c.L, "implication").holds == has_wip(c.L, "definitional").holds),
        ("implication=lambda-form", lambda c: has_wip(c.L, "implication").holds == has_wip(c.L, "lambda").holds),
    ),
))

register(Claim(
    "lem2.3",
    "WIP iff R_y J_rho L_y = J_rho for all y iff L_x J_lambda R_x = J_lambda for all x",
    "loop",
    (),
    (
        ("right-translational", lambda c: has_wip(c.L, "translational").holds == has_wip(c.L, "implication").holds),
        ("left-translational", lambda c: has_wip(c.L, "translational-left").holds == has_wip(c.L, "implication").holds),
    ),
))


def _weak_right_set(c):
    return c.weak_inverse_set


def _weak_left_set(c):
    # the opposite loop (transposed table) has J_lambda as its right inverse map
    mirrored = FiniteLoop._unchecked(tuple(zip(*c.t)), identity=c.e)
    return frozenset(props.weak_inverse_permutations(mirrored))


register(Claim(
    "def2.2",
    "weak right inverse permutations coincide with weak left inverse permutations",
    "loop",
    (),
    (("S_rho=S_lambda", lambda c: _weak_right_set(c) == _weak_left_set(c)),),
))


def _involutions_commuting_with_rho(c):
    n = c.n
    rho = c.rho
    out = []
    for p in _involutions(n):
        if p * rho == rho * p:
            out.append(p)
    return out


_INVOLUTIONS: dict[int, list[Permutation]] = {}


def _involutions(n):
    if n not in _INVOLUTIONS:
        from itertools import permutations

        _INVOLUTIONS[n] = [
            Permutation._unchecked(p) for p in permutations(range(n))
            if all(p[p[x]] == x for x in range(n)) and any(p[x] != x for x in range(n))
        ]
    return _INVOLUTIONS[n]


def _rem21(c):
    for p in _involutions_commuting_with_rho(c):
        if not c.is_weak_inverse(p):
            return False, {"alpha": list(p.image)}
    return True


register(Claim(
    "rem2.1",
    "an involution commuting with J_rho (preserving right inverses) is a weak inverse permutation",
    "loop",
    (("has-involution-commuting-with-J_rho", lambda c: bool(_involutions_commuting_with_rho(c))),),
    (("weak-inverse", _rem21),),
    notes="'preserves the right inverse' read as (x alpha)^rho = x^rho alpha",
))


def _lem21(c):
    S = c.weak_inverse_set
    elems = sorted(S, key=lambda p: p.image)
    for p in elems:
        if p.inverse() not in S:
            return False, {"alpha": list(p.image), "reason": "inverse not weak-inverse"}
    for i, a in enumerate(elems):
        for b in elems[i:]:
            if a * b != b * a:
                continue
            group = generated_group([a, b], c.n)
            if not group.is_abelian() or not all(p in S for p in group.elements):
                return False, {"alpha": list(a.image), "beta": list(b.image)}
    return True


register(Claim(
    "lem2.1",
    "commuting weak inverse permutations generate an abelian group of weak inverse permutations",
    "loop",
    (("non-trivial-S'", lambda c: len(c.weak_inverse_set) >= 2),),
    (("closure", _lem21),),
))

register(Claim(
    "lem3.5",
    "a LIP loop is WIP iff RIP; a RIP loop is WIP iff LIP",
    "loop",
    (("LIP-or-RIP", lambda c: c.lip or c.rip),),
    (
        ("LIP:WIP<=>RIP", lambda c: not c.lip or c.wip == c.rip),
        ("RIP:WIP<=>LIP", lambda c: not c.rip or c.wip == c.lip),
    ),
))


def _rem33(nucleus_index, trait):
    def check(c):
        nucleus = c.nuclei[nucleus_index]
        for a in sorted(nucleus):
            if not getattr(c.traits(a), trait):
                return False, {"a": a}
        return True

    return check


register(Claim(
    "rem3.3",
    "in a RIP (LIP) loop, right (left) nuclear elements are rho- and lambda-AAIPEs",
    "loop",
    (("RIP-or-LIP", lambda c: c.rip or c.lip),),
    (
        ("i:RIP:N_rho-rho-AAIPE", lambda c: not c.rip or _rem33(2, "rho_aaipe")(c)),
        ("ii:RIP:N_rho-lambda-AAIPE", lambda c: not c.rip or _rem33(2, "lambda_aaipe")(c)),
        ("i:LIP:N_lambda-rho-AAIPE", lambda c: not c.lip or _rem33(0, "rho_aaipe")(c)),
        ("ii:LIP:N_lambda-lambda-AAIPE", lambda c: not c.lip or _rem33(0, "lambda_aaipe")(c)),
    ),
))

register(Claim(
    "minv-1",
    "the m-inverse identity with m = -1 is exactly WIP",
    "loop",
    (),
    (("m=-1<=>WIP", lambda c: m_inverse_check(c.L, -1).holds == c.wip),),
))

register(Claim(
    "minv0",
    "the m-inverse identity with m = 0 is exactly CIP",
    "loop",
    (),
    (("m=0<=>CIP", lambda c: m_inverse_check(c.L, 0).holds == c.cip),),
))


def _lem33(kind):
    def check(c):
        seen = {}
        for f, g in product(range(c.n), repeat=2):
            p = c.principal(f, g)
            if not p.tc.t2:
                continue
            key = p.H.rho if kind == "rho" else p.H.lam
            if key in seen:
                return False, {"pairs": [list(seen[key]), [f, g]]}
            seen[key] = (f, g)
        return True

    return check


def _count_t2(c):
    return sum(1 for f, g in product(range(c.n), repeat=2) if c.principal(f, g).tc.t2)


register(Claim(
    "lem3.3",
    "in a WIP loop, distinct T2 principal isotopes have distinct right (left) inverse maps",
    "loop",
    (("G-WIP", lambda c: c.wip), ("two-T2-isotopes", lambda c: _count_t2(c) >= 2)),
    (("distinct-J'_rho", _lem33("rho")), ("distinct-J'_lambda", _lem33("lambda"))),
    notes="uniqueness read as: (f,g) -> J'_rho is injective on T2 pairs",
))


# -- quantifier readings of the J_rho cancellation claim ---------------------

def _forall_reading(c):
    # A = B = I, C = (0 1), D = J_lambda C^-1 A J_rho B gives A J B = C J D with A != C, B != D
    n = c.n
    I = c.I
    C = Permutation.from_cycles(n, [(0, 1)])
    D = c.lam * C.inverse() * I * c.rho * I
    lhs, rhs = I * c.rho * I, C * c.rho * D
    if lhs == rhs and I != C and I != D:
        return False, {"A": list(I.image), "B": list(I.image), "C": list(C.image), "D": list(D.image)}
    return True


register(Claim(
    "thm3.4-forall",
    "universal reading: A J_rho B = C J_rho D forces A = C or B = D for all A, B, C, D",
    "loop",
    (("G-WIP", lambda c: c.wip), ("order>=2", lambda c: c.n >= 2)),
    (("implication", _forall_reading),),
))

register(Claim(
    "thm3.4-exists",
    "existential reading: some A, B, C, D satisfy the implication",
    "loop",
    (("G-WIP", lambda c: c.wip),),
    # A = B = C = D = I satisfies both sides of the implication
    (("implication", lambda c: c.I * c.rho * c.I == c.I * c.rho * c.I),),
))


# -- principal-isotope claims -------------------------------------------------

register(Claim(
    "thm3.1a",
    "under the T condition a loop is WIP iff its isotope is WIP",
    "principal",
    (("T", _t),),
    (("WIP(G)<=>WIP(H)", lambda c: c.G.wip == c.H.wip),),
))


def _right_conjugate(c):
    G, H = c.G, c.H
    for x in range(G.n):
        xA = c.A[x]
        lhs = G.lam * G.Rt[x] * G.rho * c.B
        rhs = c.C * H.lam * H.Rt[xA] * H.rho
        if lhs != rhs:
            return False, {"x": x}
    return True


def _left_conjugate(c):
    G, H = c.G, c.H
    for x in range(G.n):
        xB = c.B[x]
        lhs = G.rho * G.Lt[x] * G.lam * c.A
        rhs = c.C * H.rho * H.Lt[xB] * H.lam
        if lhs != rhs:
            return False, {"x": x}
    return True


register(Claim(
    "thm3.1b",
    "for WIP loop and WIP isotope: J_lambda R_x J_rho B = C J'_lambda R'_xA J'_rho and the mirror",
    "principal",
    (("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    (("J_lambda R_x J_rho B", _right_conjugate), ("J_rho L_x J_lambda A", _left_conjugate)),
))


def _alpha(c):
    return c.C * c.A.inverse()


def _beta(c):
    return c.C * c.B.inverse()


register(Claim(
    "cor3.1",
    "WIP loop with T: isotope is WIP, CA^-1 and CB^-1 are weak inverse permutations, J'_rho = J'_lambda iff J_rho = J_lambda",
    "principal",
    (("G-WIP", _g_wip), ("T", _t)),
    (
        ("H-WIP", _h_wip),
        ("1:alpha-in-S'", lambda c: c.G.is_weak_inverse(_alpha(c))),
        ("1:beta-in-S'", lambda c: c.G.is_weak_inverse(_beta(c))),
        ("2:two-sided", lambda c: c.H.two_sided == c.G.two_sided),
    ),
))

register(Claim(
    "lem3.1",
    "WIP loop with T: isotope is WIP and CA^-1 = CB^-1 is a weak inverse permutation",
    "principal",
    (("G-WIP", _g_wip), ("T", _t)),
    (
        ("H-WIP", _h_wip),
        ("alpha=beta", lambda c: _alpha(c) == _beta(c)),
        ("alpha-in-S'", lambda c: c.G.is_weak_inverse(_alpha(c))),
    ),
))

register(Claim(
    "thm3.2",
    "WIP loop and WIP isotope under T are isomorphic",
    "principal",
    (("T", _t), ("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    (("isomorphic", lambda c: find_isomorphism(c.G.L, c.H.L) is not None),),
))


def _mech(c):
    from ..isotopy import is_isotopism

    return is_isotopism(c.G.L, c.H.L, (c.A, c.A, c.A))


register(Claim(
    "thm3.2-mech",
    "the principal isotopism itself has A = C and is an isomorphism (A, A, A)",
    "principal",
    (("T", _t), ("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    (("A=C", lambda c: c.A == c.C), ("(A,A,A)-isomorphism", _mech)),
))


def _lem32(c, printed=False):
    G, H, f, g = c.G, c.H, c.f, c.g
    Lf, Rf, Lg, Rg = G.Lt[f], G.Rt[f], G.Lt[g], G.Rt[g]
    Hr, Hl = H.rho, H.lam
    HRg, HLf = H.Rt[g], H.Lt[f]
    checks = {
        "1a": G.lam * Rf * G.rho == Lf.inverse(),
        "1b": G.rho * Lg * G.lam == Rg.inverse(),
        "1c": Hl * HRg * Hr == Lf,
        "1d": Hr * HLf * Hl == Rg,
        "2a": G.rho * Lf == Rf.inverse() * G.rho,
        "2b": Hr * Lf == HRg * Hr,
        "2c": G.lam * Rg == Lg.inverse() * G.lam,
        "2d": Hl * Rg == (Lf if printed else HLf) * Hl,
        "3a": G.lam * Rf.inverse() * G.rho == Hl * HRg * Hr,
        "3b": G.rho * Lg.inverse() * G.lam == Hr * HLf * Hl,
        "4a": (G.rho * Lg.inverse() * G.lam, G.lam * Rf.inverse() * G.rho, G.I) == c.triple,
        "4b": (Hr * HLf * Hl, Hl * HRg * Hr, G.I) == c.triple,
    }
    return checks


def _lem32_conclusion(label, printed=False):
    return label, lambda c: _lem32(c, printed)[label]


register(Claim(
    "lem3.2",
    "identities tying translations by f, g to the inverse maps of a WIP loop and its WIP isotope",
    "principal",
    (("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    tuple(_lem32_conclusion(k) for k in ("1a", "1b", "1c", "1d", "2a", "2b", "2c", "2d", "3a", "3b", "4a", "4b")),
    notes="2d uses the isotope's L'_f, the form that follows from 1d",
))

register(Claim(
    "lem3.2-printed",
    "identity 2d of lem3.2 with G's own L_f in place of the isotope's L'_f",
    "principal",
    (("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    (_lem32_conclusion("2d", printed=True),),
))


def _principal_right_conjugate(c):
    G, H, f, g = c.G, c.H, c.f, c.g
    for x in range(G.n):
        if G.lam * G.Rt[x] * G.rho * G.Lt[f] != H.lam * H.Rt[G.t[x][g]] * H.rho:
            return False, {"x": x}
    return True


def _principal_left_conjugate(c):
    G, H, f, g = c.G, c.H, c.f, c.g
    for x in range(G.n):
        if G.rho * G.Lt[x] * G.lam * G.Rt[g] != H.rho * H.Lt[G.t[f][x]] * H.lam:
            return False, {"x": x}
    return True


def _in_s_prime(c):
    return c.G.is_weak_inverse(c.B) and c.G.is_weak_inverse(c.A)


register(Claim(
    "cor3.2a",
    "WIP loop with T: the principal isotope is WIP and L_f, R_g are weak inverse permutations",
    "principal",
    (("G-WIP", _g_wip), ("T", _t)),
    (("H-WIP", _h_wip), ("L_f,R_g-in-S'", _in_s_prime)),
))

register(Claim(
    "cor3.2b",
    "WIP loop with WIP isotope, T1 and T21 or T22: full T holds and L_f, R_g are weak inverse permutations",
    "principal",
    (("G-WIP", _g_wip), ("T1", _t1), ("T21-or-T22", lambda c: c.tc.t21 or c.tc.t22), ("H-WIP", _h_wip)),
    (("T", _t), ("L_f,R_g-in-S'", _in_s_prime)),
))

register(Claim(
    "cor3.3",
    "WIP loop with WIP principal isotope: J_lambda R_x J_rho L_f = J'_lambda R'_xg J'_rho and J_rho L_x J_lambda R_g = J'_rho L'_fx J'_lambda",
    "principal",
    (("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    (("J_lambda R_x J_rho L_f", _principal_right_conjugate), ("J_rho L_x J_lambda R_g", _principal_left_conjugate)),
))

register(Claim(
    "cor3.4",
    "WIP loop with T2 or T3: the principal isotopism is (J_rho J'_lambda, J_lambda J'_rho, I)",
    "principal",
    (("G-WIP", _g_wip), ("T2-or-T3", lambda c: c.tc.t2 or c.tc.t3)),
    (
        ("R_g=J_rho J'_lambda", lambda c: c.A == c.G.rho * c.H.lam),
        ("L_f=J_lambda J'_rho", lambda c: c.B == c.G.lam * c.H.rho),
    ),
))


def _lem34_hyp(c):
    if c.tc.t2 or c.tc.t3:
        return True
    return (c.tc.t21 or c.tc.t22) and c.H.wip


def _central(c, x):
    return x in c.G.centrum


register(Claim(
    "lem3.4",
    "WIP loop with T (or T1, T21/T22 and WIP isotope): xg = fx, f,g central, J'_rho = J_rho L_f, J'_lambda = J_lambda R_g, gg = ff = fg = gf, f^rho' = g^lambda' = e",
    "principal",
    (("G-WIP", _g_wip), ("T1", _t1), ("T2|T3|(T21|T22)&H-WIP", _lem34_hyp)),
    (
        ("a:xg=fx", lambda c: _first_x(c.G.n, lambda x: c.G.t[x][c.g] == c.G.t[c.f][x])),
        ("a:f,g-central", lambda c: _central(c, c.f) and _central(c, c.g)),
        ("b:x^rho'=f x^rho", lambda c: _first_x(c.G.n, lambda x: c.H.rho[x] == c.G.t[c.f][c.G.rho[x]])),
        ("c:x^lambda'=x^lambda g", lambda c: _first_x(c.G.n, lambda x: c.H.lam[x] == c.G.t[c.G.lam[x]][c.g])),
        ("d:gg=ff=fg=gf", lambda c: _all_equal([c.G.t[c.g][c.g], c.G.t[c.f][c.f], c.G.t[c.f][c.g], c.G.t[c.g][c.f]])),
        ("e:f^rho'=g^lambda'=e", lambda c: c.H.rho[c.f] == c.G.e and c.H.lam[c.g] == c.G.e),
    ),
))


def _trait_pair(c, *names):
    for x in (c.f, c.g):
        tr = c.G.traits(x)
        if not all(getattr(tr, n) for n in names):
            return False, {"element": x}
    return True


register(Claim(
    "cor3.5",
    "CIP loop with T whose principal isotope is AIP: f, g are alternative, flexible, central and equal",
    "principal",
    (("G-CIP", _g_cip), ("T", _t), ("H-AIP", lambda c: c.H.aip)),
    (
        ("1:alternative", lambda c: _trait_pair(c, "left_alternative", "right_alternative")),
        ("2:flexible", lambda c: _trait_pair(c, "flexible")),
        ("3:centrum", lambda c: _trait_pair(c, "centrum")),
        ("4:f=g", lambda c: c.f == c.g),
    ),
))


def _rem32_line1(c):
    t, f, g = c.G.t, c.f, c.g
    gg, ff = t[g][g], t[f][f]

    def row(x, y):
        xy = t[x][y]
        return [
            t[t[x][g]][t[g][y]],
            t[gg][xy],
            t[t[xy][g]][g],
            t[t[g][xy]][g],
            t[ff][xy],
            t[f][t[xy][g]],
            t[f][t[f][xy]],
        ]

    return _first_xy(c.G.n, lambda x, y: _all_equal(row(x, y)))


def _rem32_line2(c):
    t, f, g = c.G.t, c.f, c.g
    gg, ff = t[g][g], t[f][f]

    def row(x):
        return [
            t[t[x][g]][g],
            t[g][t[g][x]],
            t[gg][x],
            t[t[g][x]][g],
            t[ff][x],
            t[f][t[x][g]],
            t[f][t[f][x]],
        ]

    return _first_x(c.G.n, lambda x: _all_equal(row(x)))


def _rem32_autotopism(name):
    return f"autotopism{name}", lambda c: is_autotopism(c.G.L, autotopism_triples(c.G.L, c.f, c.g)[name])


_AUTOTOPISM_NAMES = (
    "(R_g, L_g, L_gg)", "(R_g, L_g, R_g^2)", "(R_g, L_g, L_g R_g)", "(L_f, L_g, L_f R_g)",
    "(L_f, L_g, L_g L_f)", "(L_f, L_g, R_g L_f)", "(L_f, L_g, L_f^2)", "(L_f, L_g, L_ff)",
)

register(Claim(
    "rem3.2",
    "CIP loop with T: translation-element identities and eight autotopisms",
    "principal",
    (("G-CIP", _g_cip), ("T", _t)),
    (("identities-xy", _rem32_line1), ("identities-x", _rem32_line2))
    + tuple(_rem32_autotopism(name) for name in _AUTOTOPISM_NAMES),
))

register(Claim(
    "cor3.6",
    "WIP loop with T: f^rho' = g^lambda', and gg = ff equals the isotope's identity fg",
    "principal",
    (("G-WIP", _g_wip), ("T", _t)),
    (
        ("a:f^rho'=g^lambda'", lambda c: c.H.rho[c.f] == c.H.lam[c.g]),
        ("b:gg=ff=e'", lambda c: c.G.t[c.g][c.g] == c.G.t[c.f][c.f] == c.e_prime),
    ),
    notes="products gg, ff taken in G, compared with the isotope identity f.g",
))

register(Claim(
    "cor3.6-circ",
    "reading with products in the isotope: g o g = f o f = e'",
    "principal",
    (("G-WIP", _g_wip), ("T", _t)),
    (("b:gog=fof=e'", lambda c: c.H.t[c.g][c.g] == c.H.t[c.f][c.f] == c.e_prime),),
))


def _thm33_conclusions():
    return (
        ("a:g-rho-AIPE", lambda c: bool(c.G.traits(c.g).rho_aipe)),
        ("b:f-lambda-AIPE", lambda c: bool(c.G.traits(c.f).lambda_aipe)),
        ("c:f,g-central", lambda c: _central(c, c.f) and _central(c, c.g)),
    )


register(Claim(
    "thm3.3",
    "LIP or RIP WIP loop with a WIP principal isotope: g is a rho-AIPE, f a lambda-AIPE, both central",
    "principal",
    (("G-LIP-or-RIP", lambda c: c.G.lip or c.G.rip), ("G-WIP", _g_wip), ("H-WIP", _h_wip)),
    _thm33_conclusions(),
))

register(Claim(
    "thm3.3-t",
    "as thm3.3 with the T condition added to the hypotheses",
    "principal",
    (("G-LIP-or-RIP", lambda c: c.G.lip or c.G.rip), ("G-WIP", _g_wip), ("T", _t), ("H-WIP", _h_wip)),
    _thm33_conclusions(),
))

register(Claim(
    "def2.3",
    "under T1, T2 holds iff T3 holds",
    "principal",
    (("T1", _t1),),
    (
        ("T2<=>T3", lambda c: c.tc.t2 == c.tc.t3),
        ("T21<=>T32", lambda c: c.tc.t21 == c.tc.t32),
        ("T22<=>T31", lambda c: c.tc.t22 == c.tc.t31),
    ),
))


# -- isomorphic pairs ---------------------------------------------------------

def _thm34_replay(c):
    G, H, A = c.G, c.H, c.A
    Ai = A.inverse()
    for x in range(G.n):
        y = A[x]
        B = A * H.Rt[y] * Ai
        C = A * H.Lt[y] * Ai
        D, E = G.Rt[x], G.Lt[x]
        if not (B * G.rho * C == G.rho and D * G.rho * E == G.rho and (B == D or C == E)):
            return False, {"x": x}
    return True


register(Claim(
    "thm3.4",
    "replay of the construction B = A R'_y A^-1, C = A L'_y A^-1, D = R_x, E = L_x on isomorphic WIP loops",
    "pair",
    (("G-WIP", _g_wip),),
    (("weak-T21", lambda c: weak_t21(c.G.L, c.H.L, c.A)), ("replay", _thm34_replay)),
    pair_filter=lambda L: props.has_wip(L).holds,
))

register(Claim(
    "thm3.5",
    "for a CIP loop and an isomorph under A: C J'_rho = J_rho C with C = J_lambda A, D J'_lambda = J_lambda D with D = J_rho A",
    "pair",
    (("G-CIP", _g_cip),),
    (
        ("H-CIP", lambda c: c.H.cip),
        ("C J'_rho = J_rho C", lambda c: (c.G.lam * c.A) * c.H.rho == c.G.rho * (c.G.lam * c.A)),
        ("D J'_lambda = J_lambda D", lambda c: (c.G.rho * c.A) * c.H.lam == c.G.lam * (c.G.rho * c.A)),
    ),
    pair_filter=lambda L: props.has_cip(L).holds,
))

register(Claim(
    "cor3.7",
    "a CIP loop and an isomorph satisfy the weak T21 condition",
    "pair",
    (("G-CIP", _g_cip),),
    (("weak-T21", lambda c: weak_t21(c.G.L, c.H.L, c.A)),),
    pair_filter=lambda L: props.has_cip(L).holds,
))


def _lem36(c):
    C = c.G.lam * c.A
    D = c.G.rho * c.A
    return C, D


register(Claim(
    "lem3.6",
    "CIP loop: D = J_rho^2 C and C = J_lambda^2 D; with RIP or LIP also C = D and J_rho = J_lambda",
    "pair",
    (("G-CIP", _g_cip),),
    (
        ("D=J_rho^2 C", lambda c: _lem36(c)[1] == c.G.rho * c.G.rho * _lem36(c)[0]),
        ("C=J_lambda^2 D", lambda c: _lem36(c)[0] == c.G.lam * c.G.lam * _lem36(c)[1]),
        ("RIP|LIP:C=D", lambda c: not (c.G.rip or c.G.lip) or _lem36(c)[0] == _lem36(c)[1]),
        ("RIP|LIP:J_rho=J_lambda", lambda c: not (c.G.rip or c.G.lip) or c.G.two_sided),
    ),
    pair_filter=lambda L: props.has_cip(L).holds,
))


def get_claim(claim_id: str) -> Claim:
    """Look up a claim; ``<id><label-prefix>`` selects a subset of conclusions."""
    if claim_id in CLAIMS:
        return CLAIMS[claim_id]
    for base in sorted(CLAIMS, key=len, reverse=True):
        if claim_id.startswith(base) and len(claim_id) > len(base):
            suffix = claim_id[len(base):]
            claim = CLAIMS[base]
            kept = tuple((n, f) for n, f in claim.conclusions if n.split(":")[0] == suffix)
            if kept:
                return replace(claim, id=claim_id, conclusions=kept)
    raise UnknownClaim(claim_id)


def claim_ids() -> list[str]:
    return list(CLAIMS)
