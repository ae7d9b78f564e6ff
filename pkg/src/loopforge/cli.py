"""Command-line front end.

Exit codes: 0 success, property true or claim confirmed; 1 property false,
not isomorphic or counterexample found; 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import properties as props
from .enumeration import (
    MAX_ENUMERATION_ORDER,
    MAX_ISOMORPHISM_ORDER,
    enumerate_loops,
    enumerate_loops_parallel,
    enumerate_up_to_isomorphism,
)
from .errors import LoopforgeError, NotALoop, UnknownClaim
from .formats import dumps_loop, read_loop, triple_from_json, write_loop
from .isomorphy import canonical_form, find_isomorphism
from .isotopy import find_t_witnesses, principal_isotope, t_conditions
from .harness import Scope, claim_ids, get_claim, sample, verify
from .harness.runner import STATUS_COUNTEREXAMPLE, STATUS_VACUOUS

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

MAX_WITNESS_ORDER = 8

# Reduced Latin squares of order n, i.e. reduced loop tables.
KNOWN_REDUCED_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 4, 5: 56, 6: 9408, 7: 16942080,
    8: 535281401856, 9: 377597570964258816,
}

# Rough single-core throughput measured on a desktop.
TABLES_PER_SECOND = 2e4
INSTANCES_PER_SECOND = 6e4


class UsageError(Exception):
    pass


def _duration(seconds: float) -> str:
    for unit, size in (("years", 3.15e7), ("days", 86400), ("hours", 3600), ("minutes", 60)):
        if seconds >= size:
            return f"{seconds / size:.3g} {unit}"
    return f"{seconds:.3g} seconds"


def cost_model(kind: str, n: int) -> str:
    """One-line estimate of the work an over-cap request implies."""
    tables = KNOWN_REDUCED_COUNTS.get(n)
    if kind == "twitness":
        return f"cost model: {n * n} principal isotopes, O(n^4) = {n ** 4} table cells"
    if tables is None:
        return f"cost model: reduced tables of order {n} unknown, enumeration is infeasible"
    seconds = tables / TABLES_PER_SECOND
    line = f"cost model: {tables} reduced tables of order {n}, about {_duration(seconds)} to enumerate"
    if kind == "up-to-iso":
        line += ", plus one canonical-form search per table"
    if kind == "verify":
        line += f"; principal claims check {tables * n * n} instances, about {_duration(tables * n * n / INSTANCES_PER_SECOND)}"
    return line


def _emit_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load(path: str):
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return read_loop(p)


def _load_loop(path: str):
    q = _load(path)
    L = q.as_loop()
    if L is None:
        raise NotALoop(f"{path} is a quasigroup without a two-sided identity")
    return L


def _guard(n: int, cap: int, args, kind: str) -> None:
    if n > cap:
        if not args.allow_large:
            raise UsageError(f"order {n} is above the cap of {cap}; pass --allow-large to proceed")
        print(cost_model(kind, n), file=sys.stderr)


def cmd_enumerate(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("-n must be at least 1")
    if args.up_to_iso:
        _guard(n, MAX_ISOMORPHISM_ORDER, args, "up-to-iso")
        loops = enumerate_up_to_isomorphism(n, allow_large=True)
    else:
        _guard(n, MAX_ENUMERATION_ORDER, args, "enumerate")
        if args.threads and args.threads > 1:
            loops = iter(enumerate_loops_parallel(n, args.threads, allow_large=True))
        else:
            loops = enumerate_loops(n, allow_large=True)
    out = Path(args.output) if args.output else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    count = 0
    for i, L in enumerate(loops):
        count += 1
        if out is not None:
            suffix = ".json" if args.json else ".loop"
            write_loop(L, out / f"loop_{n}_{i:06d}{suffix}")
        elif args.json:
            _emit_json({"index": i, "n": n, "table": [list(r) for r in L.table]})
        else:
            if i:
                print()
            sys.stdout.write(dumps_loop(L))
    if out is not None:
        print(f"wrote {count} loops to {out}", file=sys.stderr)
    return EXIT_OK


def _parse_props(spec: str) -> list[tuple[str, Optional[int]]]:
    out = []
    for item in (s.strip() for s in spec.split(",")):
        if not item:
            continue
        name, _, arg = item.partition(":")
        if name in ("wip", "cip", "lip", "rip", "ip", "aip", "centrum", "nuclei") and not arg:
            out.append((name, None))
        elif name in ("m-inverse", "traits") and arg:
            try:
                out.append((name, int(arg)))
            except ValueError:
                raise UsageError(f"{name} needs an integer argument, got {arg!r}") from None
        else:
            raise UsageError(f"unknown property {item!r}")
    if not out:
        raise UsageError("--props is empty")
    return out


def cmd_check(args) -> int:
    L = _load_loop(args.file)
    requested = _parse_props(args.props)
    checks = {
        "wip": props.has_wip, "cip": props.has_cip, "lip": props.has_lip,
        "rip": props.has_rip, "ip": props.has_ip, "aip": props.has_aip,
    }
    for name, arg in requested:
        if name == "traits" and not 0 <= arg < L.n:
            raise UsageError(f"traits element {arg} outside 0..{L.n - 1}")
    all_hold = True
    for name, arg in requested:
        if name in checks:
            report = checks[name](L)
            all_hold &= report.holds
            data = report.to_json()
        elif name == "m-inverse":
            report = props.m_inverse_check(L, arg)
            all_hold &= report.holds
            data = report.to_json()
        elif name == "centrum":
            data = {"property": "centrum", "elements": sorted(props.centrum(L))}
        elif name == "nuclei":
            left, middle, right = props.nuclei(L)
            data = {"property": "nuclei", "left": sorted(left), "middle": sorted(middle), "right": sorted(right)}
        else:
            data = {"property": f"traits:{arg}", **props.element_traits(L, arg).to_json()}
        _emit_json(data)
    return EXIT_OK if all_hold else EXIT_FALSE


def cmd_isotope(args) -> int:
    L = _load_loop(args.file)
    for name, v in (("-f", args.f), ("-g", args.g)):
        if not 0 <= v < L.n:
            raise UsageError(f"{name} {v} outside 0..{L.n - 1}")
    H = principal_isotope(L, args.f, args.g)
    if args.output:
        write_loop(H, args.output)
    elif args.json:
        _emit_json({"n": H.n, "identity": H.identity, "table": [list(r) for r in H.table]})
    else:
        sys.stdout.write(dumps_loop(H))
    return EXIT_OK


def cmd_tcheck(args) -> int:
    G, H = _load_loop(args.file1), _load_loop(args.file2)
    p = Path(args.triple)
    if not p.is_file():
        raise UsageError(f"no such file: {args.triple}")
    try:
        triple = triple_from_json(p.read_text())
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed triple file: {exc}") from None
    report = t_conditions(G, H, triple)
    if args.json:
        _emit_json(report.to_json())
    else:
        for key, value in report.to_json().items():
            print(f"{key:4s} {'yes' if value else 'no'}")
    return EXIT_OK if report.t else EXIT_FALSE


def cmd_twitness(args) -> int:
    L = _load_loop(args.file)
    _guard(L.n, MAX_WITNESS_ORDER, args, "twitness")
    witnesses = find_t_witnesses(L)
    if args.json:
        _emit_json([w.to_json() for w in witnesses])
    else:
        print(f"{len(witnesses)} witnesses")
        for w in witnesses:
            r = w.report
            print(f"f={w.f} g={w.g}  T2={'yes' if r.t2 else 'no'} T3={'yes' if r.t3 else 'no'}")
    return EXIT_OK


def cmd_iso(args) -> int:
    G, H = _load_loop(args.file1), _load_loop(args.file2)
    A = find_isomorphism(G, H) if G.n == H.n else None
    if args.json:
        _emit_json({"isomorphic": A is not None, "map": None if A is None else list(A.image)})
    elif A is None:
        print("not isomorphic")
    else:
        print("isomorphic: " + " ".join(f"{x}->{y}" for x, y in enumerate(A.image)))
    return EXIT_OK if A is not None else EXIT_FALSE


def cmd_canon(args) -> int:
    L = _load_loop(args.file)
    cf = canonical_form(L)
    if args.json:
        _emit_json({"n": L.n, "table": [list(r) for r in cf.loop.table], "relabeling": list(cf.relabeling.image)})
    else:
        sys.stdout.write(dumps_loop(cf.loop))
        print("relabeling: " + " ".join(f"{x}->{y}" for x, y in enumerate(cf.relabeling.image)), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        get_claim(args.claim)
    except UnknownClaim:
        raise UsageError(f"unknown claim {args.claim!r}; known claims: {', '.join(claim_ids())}") from None
    if args.max_order < 1:
        raise UsageError("--max-order must be at least 1")
    if args.budget is not None and args.budget < 0:
        raise UsageError("--budget must be non-negative")
    _guard(args.max_order, MAX_ISOMORPHISM_ORDER, args, "verify")
    reports = [verify(args.claim, Scope.up_to(args.max_order, allow_large=args.allow_large), threads=args.threads)]
    if args.budget is not None:
        reports.append(sample(args.claim, args.budget, args.seed))
    for i, r in enumerate(reports):
        if args.json:
            _emit_json(r.to_json())
        else:
            if i:
                print()
            print(r.render())
        if r.status == STATUS_VACUOUS:
            print(f"warning: {args.claim} is vacuous in this scope; no instance met the hypotheses", file=sys.stderr)
    failed = any(r.status == STATUS_COUNTEREXAMPLE for r in reports)
    return EXIT_FALSE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: LOOPFORGE_THREADS or 1)")
    common.add_argument("--allow-large", action="store_true", help="permit orders above the caps")

    parser = argparse.ArgumentParser(prog="loopforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list reduced loops of order N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("-o", "--output", metavar="DIR", help="write one file per loop into DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="test properties of a loop")
    p.add_argument("file")
    p.add_argument("--props", required=True, help="comma list: wip,cip,lip,rip,ip,aip,m-inverse:M,centrum,nuclei,traits:X")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("isotope", parents=[common], help="build the f,g-principal isotope")
    p.add_argument("file")
    p.add_argument("-f", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=cmd_isotope)

    p = sub.add_parser("tcheck", parents=[common], help="evaluate the T conditions for an isotopism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--triple", required=True, help="JSON file {\"A\":[...],\"B\":[...],\"C\":[...]}")
    p.set_defaults(func=cmd_tcheck)

    p = sub.add_parser("twitness", parents=[common], help="list (f, g) whose principal isotope satisfies T")
    p.add_argument("file")
    p.set_defaults(func=cmd_twitness)

    p = sub.add_parser("iso", parents=[common], help="find an isomorphism between two loops")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("canon", parents=[common], help="canonical form of a loop")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("verify", parents=[common], help="check a registered claim")
    p.add_argument("claim")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="also sample this many random instances")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, LoopforgeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
