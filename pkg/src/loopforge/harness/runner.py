"""Run claims over enumerated or sampled loops and collect reports."""

from __future__ import annotations

import json
import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from ..core import FiniteLoop, Permutation, cyclic_group, dihedral_group, direct_product, loop_from_table
from ..enumeration import (
    MAX_ENUMERATION_ORDER,
    enumerate_loops,
    random_loop,
)
from ..errors import OrderTooLarge
from ..isomorphy import canonical_table, find_isomorphism
from ..parallel import default_threads, ordered_map, stripes
from .claims import Claim, get_claim
from .context import LoopContext, PairContext

log = logging.getLogger(__name__)

MAX_WITNESSES = 10

STATUS_EXHAUSTIVE = "confirmed-exhaustive"
STATUS_SAMPLED = "confirmed-sampled"
STATUS_COUNTEREXAMPLE = "counterexample"
STATUS_VACUOUS = "vacuous"


@dataclass(frozen=True)
class Scope:
    """What to scan.

    ``orders`` lists loop orders. ``loops`` replaces enumeration with explicit
    loops; ``pairs`` restricts principal-isotope claims to given ``(f, g)``.
    """

    orders: tuple[int, ...] = (1, 2, 3, 4, 5)
    loops: Optional[tuple[FiniteLoop, ...]] = None
    pairs: Optional[tuple[tuple[int, int], ...]] = None
    allow_large: bool = False

    @classmethod
    def up_to(cls, max_order: int, **kw) -> Scope:
        return cls(orders=tuple(range(1, max_order + 1)), **kw)

    def describe(self) -> dict:
        d = {"mode": "explicit" if self.loops is not None else "reduced"}
        if self.loops is None:
            d["orders"] = list(self.orders)
        else:
            d["loops"] = len(self.loops)
        if self.pairs is not None:
            d["pairs"] = [list(p) for p in self.pairs]
        return d


@dataclass
class Tally:
    stage_names: list[str]
    conclusion_names: list[str]
    instances: int = 0
    stage_failures: list[int] = field(default_factory=list)
    passed: int = 0
    counterexamples: int = 0
    conclusion_failures: dict[str, int] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)
    per_order: dict[int, dict[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.stage_failures:
            self.stage_failures = [0] * len(self.stage_names)
        if not self.conclusion_failures:
            self.conclusion_failures = {n: 0 for n in self.conclusion_names}

    def _order(self, n):
        return self.per_order.setdefault(n, {"instances": 0, "passed": 0, "counterexamples": 0})

    def merge(self, other: Tally) -> None:
        self.instances += other.instances
        self.passed += other.passed
        self.counterexamples += other.counterexamples
        for i, v in enumerate(other.stage_failures):
            self.stage_failures[i] += v
        for k, v in other.conclusion_failures.items():
            self.conclusion_failures[k] += v
        room = MAX_WITNESSES - len(self.witnesses)
        self.witnesses.extend(other.witnesses[:max(room, 0)])
        for n, d in other.per_order.items():
            mine = self._order(n)
            for k, v in d.items():
                mine[k] += v

    def survivors(self) -> list[tuple[str, int]]:
        out = [("instances", self.instances)]
        alive = self.instances
        for name, failed in zip(self.stage_names, self.stage_failures):
            alive -= failed
            out.append((name, alive))
        return out


@dataclass
class VerificationReport:
    claim: str
    statement: str
    scope: dict
    instances: int
    stages: list[tuple[str, int]]
    passed: int
    vacuity: int
    status: str
    counterexamples: int
    conclusion_failures: dict[str, int]
    witnesses: list[dict]
    per_order: dict[int, dict[str, int]]

    @property
    def ok(self) -> bool:
        return self.status in (STATUS_EXHAUSTIVE, STATUS_SAMPLED)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "scope": self.scope,
            "status": self.status,
            "instances": self.instances,
            "hypotheses_held": self.passed,
            "vacuity": self.vacuity,
            "stages": [{"name": n, "survivors": s} for n, s in self.stages],
            "counterexamples": self.counterexamples,
            "conclusion_failures": self.conclusion_failures,
            "witnesses": self.witnesses,
            "per_order": {str(k): v for k, v in sorted(self.per_order.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def render(self) -> str:
        lines = [
            f"claim      {self.claim}: {self.statement}",
            f"scope      {json.dumps(self.scope)}",
            f"status     {self.status}",
            f"instances  {self.instances} checked, {self.passed} met all hypotheses, {self.vacuity} filtered out",
            "stages:",
        ]
        width = max(len(n) for n, _ in self.stages)
        for name, alive in self.stages:
            lines.append(f"  {name.ljust(width)}  {alive}")
        if self.counterexamples:
            lines.append(f"counterexamples: {self.counterexamples}")
            for k, v in self.conclusion_failures.items():
                if v:
                    lines.append(f"  {k}: {v}")
            w = self.witnesses[0]
            lines.append(f"first witness: {json.dumps(w)}")
        if self.per_order:
            lines.append("per order:")
            for n, d in sorted(self.per_order.items()):
                lines.append(f"  n={n}: {d['instances']} instances, {d['passed']} held, {d['counterexamples']} counterexamples")
        return "\n".join(lines)


def _evaluate(claim: Claim, ctx, tally: Tally, bundle) -> Optional[list[str]]:
    """Run one instance; returns failed conclusion labels or None if a
    hypothesis failed."""
    tally.instances += 1
    n = _order_of(ctx)
    od = tally._order(n)
    od["instances"] += 1
    for i, (_, hyp) in enumerate(claim.hypotheses):
        if not hyp(ctx):
            tally.stage_failures[i] += 1
            return None
    tally.passed += 1
    od["passed"] += 1
    failed = []
    details = {}
    for name, concl in claim.conclusions:
        result = concl(ctx)
        if isinstance(result, tuple):
            ok, detail = result
        else:
            ok, detail = bool(result), None
        if not ok:
            failed.append(name)
            if detail:
                details[name] = detail
    if failed:
        tally.counterexamples += 1
        od["counterexamples"] += 1
        for name in failed:
            tally.conclusion_failures[name] += 1
        if len(tally.witnesses) < MAX_WITNESSES:
            w = bundle()
            w["failed"] = failed
            if details:
                w["details"] = details
            tally.witnesses.append(w)
    return failed


def _order_of(ctx) -> int:
    return ctx.n if isinstance(ctx, LoopContext) else ctx.G.n


def _table(L) -> list[list[int]]:
    return [list(r) for r in L.table]


def _loop_bundle(G: LoopContext):
    return lambda: {"order": G.n, "table": _table(G.L)}


def _principal_bundle(p):
    def make():
        return {
            "order": p.G.n,
            "table": _table(p.G.L),
            "f": p.f,
            "g": p.g,
            "triple": {"A": list(p.A.image), "B": list(p.B.image), "C": list(p.C.image)},
            "isotope": _table(p.H.L),
        }

    return make


def _pair_bundle(c: PairContext):
    return lambda: {"order": c.G.n, "G": _table(c.G.L), "H": _table(c.H.L), "A": list(c.A.image)}


def _scan_loops(claim: Claim, loops: Iterable[FiniteLoop], tally: Tally, pairs=None) -> None:
    for L in loops:
        G = LoopContext(L)
        if claim.domain == "loop":
            _evaluate(claim, G, tally, _loop_bundle(G))
        else:
            fg = pairs if pairs is not None else product(range(L.n), repeat=2)
            for f, g in fg:
                p = G.principal(f, g)
                _evaluate(claim, p, tally, _principal_bundle(p))


def _isomorphic_pairs(loops: Sequence[FiniteLoop]) -> Iterator[PairContext]:
    """All ordered pairs (G, H) of isomorphic loops from ``loops``, grouped by
    canonical form, each with an isomorphism found by search."""
    classes: dict = defaultdict(list)
    for L in loops:
        classes[canonical_table(L)].append(L)
    for members in classes.values():
        ctxs = [LoopContext(L) for L in members]
        for G in ctxs:
            for H in ctxs:
                A = find_isomorphism(G.L, H.L)
                assert A is not None, "canonical forms agree but no isomorphism found"
                yield PairContext(G, H, A)


def _worker(args):
    claim_id, tables, pairs = args
    claim = get_claim(claim_id)
    tally = Tally(claim.hypothesis_names, claim.conclusion_names)
    loops = [FiniteLoop._unchecked(t, identity=0) for t in tables]
    _scan_loops(claim, loops, tally, pairs)
    return tally


def _status(tally: Tally, exhaustive: bool) -> str:
    if tally.counterexamples:
        return STATUS_COUNTEREXAMPLE
    if tally.passed == 0:
        return STATUS_VACUOUS
    return STATUS_EXHAUSTIVE if exhaustive else STATUS_SAMPLED


def _report(claim: Claim, tally: Tally, scope: dict, exhaustive: bool) -> VerificationReport:
    status = _status(tally, exhaustive)
    if status == STATUS_VACUOUS:
        log.warning("claim %s is vacuous on %s: no instance met every hypothesis", claim.id, scope)
    return VerificationReport(
        claim=claim.id,
        statement=claim.statement,
        scope=scope,
        instances=tally.instances,
        stages=tally.survivors(),
        passed=tally.passed,
        vacuity=tally.instances - tally.passed,
        status=status,
        counterexamples=tally.counterexamples,
        conclusion_failures=tally.conclusion_failures,
        witnesses=tally.witnesses,
        per_order=tally.per_order,
    )


def verify(claim_id: str, scope: Optional[Scope] = None, *, threads: Optional[int] = None) -> VerificationReport:
    """Check a claim on every instance in ``scope`` (default: all loops of
    order at most 5)."""
    claim = get_claim(claim_id)
    scope = scope or Scope()
    threads = default_threads() if threads is None else threads
    tally = Tally(claim.hypothesis_names, claim.conclusion_names)

    if scope.loops is not None:
        groups = [list(scope.loops)]
    else:
        for n in scope.orders:
            if n > MAX_ENUMERATION_ORDER and not scope.allow_large:
                raise OrderTooLarge(f"order {n} exceeds the exhaustive cap {MAX_ENUMERATION_ORDER}")
        groups = None

    def loops_of_order(n):
        return list(enumerate_loops(n, allow_large=scope.allow_large))

    if claim.domain == "pair":
        for loops in groups or (loops_of_order(n) for n in scope.orders):
            kept = [L for L in loops if claim.pair_filter is None or claim.pair_filter(L)]
            for ctx in _isomorphic_pairs(kept):
                _evaluate(claim, ctx, tally, _pair_bundle(ctx))
    elif groups is not None:
        _scan_loops(claim, groups[0], tally, scope.pairs)
    else:
        for n in scope.orders:
            loops = loops_of_order(n)
            if threads > 1 and len(loops) > threads:
                jobs = [(claim_id, [L.table for L in chunk], scope.pairs) for chunk in stripes(loops, threads)]
                for part in ordered_map(_worker, jobs, threads):
                    tally.merge(part)
            else:
                _scan_loops(claim, loops, tally, scope.pairs)
    return _report(claim, tally, scope.describe(), exhaustive=True)


def _random_relabeling(n: int, rng: random.Random) -> Permutation:
    image = list(range(n))
    rng.shuffle(image)
    return Permutation(tuple(image))


def _structured_loops(n: int) -> list[FiniteLoop]:
    """Groups of order ``n``: cyclic, products of two cyclic groups, the
    elementary abelian 2-group and the dihedral group."""
    out = [cyclic_group(n)]
    for a in range(2, n):
        if n % a == 0 and a <= n // a:
            out.append(direct_product(cyclic_group(a), cyclic_group(n // a)))
    if n >= 8 and n & (n - 1) == 0:
        E = cyclic_group(2)
        while E.n < n:
            E = direct_product(E, cyclic_group(2))
        out.append(E)
    if n % 2 == 0 and n >= 6:
        out.append(dihedral_group(n // 2))
    return out


def _sampled_instances(claim: Claim, orders: Sequence[int], seed: int) -> Iterator[tuple]:
    # Random Latin-square loops of order 7 or more are almost never WIP, so
    # every other draw is a randomly relabeled group to keep WIP hypotheses
    # reachable.
    rng = random.Random(seed)
    i = 0
    while True:
        n = orders[i % len(orders)]
        if i % 2:
            L = rng.choice(_structured_loops(n)).relabel(_random_relabeling(n, rng))
        else:
            L = random_loop(n, rng.randrange(2**32))
        i += 1
        G = LoopContext(L)
        if claim.domain == "loop":
            yield G, _loop_bundle(G)
        elif claim.domain == "principal":
            for f, g in product(range(n), repeat=2):
                p = G.principal(f, g)
                yield p, _principal_bundle(p)
        else:
            A = _random_relabeling(n, rng)
            H = L.relabel(A)
            ctx = PairContext(G, LoopContext(H), A)
            yield ctx, _pair_bundle(ctx)


def sample(claim_id: str, budget: int, seed: int, orders: Sequence[int] = (7, 8)) -> VerificationReport:
    """Check a claim on ``budget`` randomly generated instances."""
    claim = get_claim(claim_id)
    tally = Tally(claim.hypothesis_names, claim.conclusion_names)
    if budget > 0:
        for ctx, bundle in _sampled_instances(claim, orders, seed):
            _evaluate(claim, ctx, tally, bundle)
            if tally.instances >= budget:
                break
    scope = {"mode": "sampled", "orders": list(orders), "budget": budget, "seed": seed}
    return _report(claim, tally, scope, exhaustive=False)


def find_counterexample(claim_id: str, budget: int, seed: int, orders: Sequence[int] = (7, 8)) -> Optional[dict]:
    """First sampled instance that meets every hypothesis and breaks a
    conclusion, as a reproduction bundle; ``None`` within ``budget``."""
    claim = get_claim(claim_id)
    tally = Tally(claim.hypothesis_names, claim.conclusion_names)
    if budget <= 0:
        return None
    for ctx, bundle in _sampled_instances(claim, orders, seed):
        failed = _evaluate(claim, ctx, tally, bundle)
        if failed:
            return tally.witnesses[0]
        if tally.instances >= budget:
            return None
    return None


def replay(claim_id: str, witness: dict) -> list[str]:
    """Re-evaluate a witness bundle from scratch; returns the failed
    conclusion labels (empty if the instance no longer fails)."""
    claim = get_claim(claim_id)
    if claim.domain == "pair":
        G = LoopContext(loop_from_table(witness["G"]))
        H = LoopContext(loop_from_table(witness["H"]))
        ctx = PairContext(G, H, Permutation(tuple(witness["A"])))
    else:
        G = LoopContext(loop_from_table(witness["table"]))
        ctx = G if claim.domain == "loop" else G.principal(witness["f"], witness["g"])
    tally = Tally(claim.hypothesis_names, claim.conclusion_names)
    failed = _evaluate(claim, ctx, tally, lambda: {})
    return failed or []
