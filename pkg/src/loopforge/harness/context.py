"""Lazily evaluated facts about the objects a claim is checked on.

A scan touches hundreds of thousands of (loop, f, g) instances, and most
hypotheses fail at the first cheap test. Everything here is computed on
first access and cached.
"""

from __future__ import annotations

from functools import cached_property

from ..core import FiniteLoop, Permutation, left_translation, right_translation
from ..isotopy import TConditionReport, principal_isotope, satisfies_t1
from .. import properties as props


class LoopContext:
    def __init__(self, L: FiniteLoop):
        self.L = L
        self.n = L.n
        self.t = L.table
        self.e = L.identity

    @cached_property
    def rho(self) -> Permutation:
        return self.L.j_rho

    @cached_property
    def lam(self) -> Permutation:
        return self.L.j_lambda

    @cached_property
    def I(self) -> Permutation:
        return Permutation.identity(self.n)

    @cached_property
    def Lt(self) -> list[Permutation]:
        return [left_translation(self.L, x) for x in range(self.n)]

    @cached_property
    def Rt(self) -> list[Permutation]:
        return [right_translation(self.L, x) for x in range(self.n)]

    @cached_property
    def wip(self) -> bool:
        return props.has_wip(self.L, "translational").holds

    @cached_property
    def cip(self) -> bool:
        return props.has_cip(self.L).holds

    @cached_property
    def lip(self) -> bool:
        return props.has_lip(self.L).holds

    @cached_property
    def rip(self) -> bool:
        return props.has_rip(self.L).holds

    @cached_property
    def aip(self) -> bool:
        return props.has_aip(self.L).holds

    @cached_property
    def two_sided(self) -> bool:
        return self.rho == self.lam

    @cached_property
    def centrum(self) -> frozenset[int]:
        return props.centrum(self.L)

    @cached_property
    def nuclei(self):
        return props.nuclei(self.L)

    @cached_property
    def weak_inverse_set(self) -> frozenset[Permutation]:
        return frozenset(props.weak_inverse_permutations(self.L))

    def is_weak_inverse(self, alpha: Permutation) -> bool:
        return props.is_weak_inverse_permutation(self.L, alpha)[0]

    def traits(self, x: int) -> props.ElementTraits:
        return props.element_traits(self.L, x)

    @cached_property
    def principal_cache(self) -> dict:
        return {}

    def principal(self, f: int, g: int) -> PrincipalContext:
        key = (f, g)
        if key not in self.principal_cache:
            self.principal_cache[key] = PrincipalContext(self, f, g)
        return self.principal_cache[key]


class PrincipalContext:
    """A loop ``G`` together with its f,g-principal isotope ``H``."""

    def __init__(self, G: LoopContext, f: int, g: int):
        self.G = G
        self.f = f
        self.g = g

    @cached_property
    def A(self) -> Permutation:
        return self.G.Rt[self.g]

    @cached_property
    def B(self) -> Permutation:
        return self.G.Lt[self.f]

    @cached_property
    def C(self) -> Permutation:
        return self.G.I

    @property
    def triple(self):
        return (self.A, self.B, self.C)

    @cached_property
    def t1(self) -> bool:
        return satisfies_t1(self.G.L, self.f, self.g)

    @cached_property
    def H(self) -> LoopContext:
        return LoopContext(principal_isotope(self.G.L, self.f, self.g))

    @cached_property
    def tc(self) -> TConditionReport:
        G, H = self.G, self.H
        A, B, C = self.triple
        Ai, Bi, Ci = A.inverse(), B.inverse(), C.inverse()
        return TConditionReport(
            t1=A == B,
            t21=H.rho == Ci * G.rho * B,
            t22=H.rho == Ai * G.rho * C,
            t31=H.lam == Ci * G.lam * A,
            t32=H.lam == Bi * G.lam * C,
        )

    @cached_property
    def t(self) -> bool:
        return self.t1 and self.tc.t

    @cached_property
    def e_prime(self) -> int:
        return self.G.t[self.f][self.g]


class PairContext:
    """Loops ``G`` and ``H`` with an isomorphism ``A: G -> H``."""

    def __init__(self, G: LoopContext, H: LoopContext, A: Permutation):
        self.G = G
        self.H = H
        self.A = A
