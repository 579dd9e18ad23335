"""Command-line interface.

Exit codes: 0 success, 2 validation/verification failure, 3 timeout,
4 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from multiprocessing import Pool
from typing import Optional

from . import bounds as bounds_mod
from . import constructive, formats, generators as gen, naive, solvers
from .errors import (BadInput, BadParameter, CoverlabError, Disconnected,
                     DisconnectedMember, FormatError, FreenessViolated,
                     IndexOutOfRange, InternalInvariantBroken, ParseError,
                     PathTooLong, SelfLoop, StarTooLarge)
from .graph import Graph, PieceKind, is_connected
from .iso import (INVARIANTS, ForbiddenFamily, characterize, family_leq,
                  freeness_witness, target_family)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_TIMEOUT = 3
EXIT_INPUT = 4

_INPUT_ERRORS = (ParseError, FormatError, BadParameter, BadInput,
                 IndexOutOfRange, SelfLoop)
_CHECK_ERRORS = (FreenessViolated, InternalInvariantBroken, Disconnected,
                 DisconnectedMember, PathTooLong, StarTooLarge)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str) -> Graph:
    return formats.read_graph(_read_text(path), fmt)


def _parse_family(spec: str) -> ForbiddenFamily:
    head = spec.split(":", 1)[0].strip().lower()
    if head in INVARIANTS:
        try:
            n = int(spec.split(":", 1)[1])
        except (IndexError, ValueError):
            raise ParseError(f"bad target family spec {spec!r}") from None
        return target_family(head, n)
    members = tuple(gen.generate(part.strip()) for part in spec.split("+"))
    return ForbiddenFamily(members, name=spec)


# -- commands ----------------------------------------------------------


def cmd_gen(args) -> int:
    g = gen.generate(args.spec)
    _write_out(formats.write_graph(g, args.format), args.out)
    return EXIT_OK


_CHAIN_PAIRS = [
    ("inspc", "insc"), ("insc", "insp"), ("inspp", "insp"),
    ("inspc", "inpc"), ("inpc", "inpp"), ("inspp", "inpp"),
    ("inspc", "inspp"), ("inpc", "ispc"), ("inpp", "ispp"),
]


def cmd_solve(args) -> int:
    g = _load_graph(args.graph, args.format)
    names = [s.strip() for s in args.invariants.split(",")]
    for name in names:
        if name not in solvers.INVARIANT_SPECS:
            raise ParseError(f"unknown invariant {name!r}")
    cfg = solvers.SolveConfig(timeout=args.timeout)
    report = {
        "graph": {"order": g.order, "edges": g.edge_count(),
                  "graph6": formats.to_graph6(g)},
        "invariants": {},
        "cross_checks": {},
    }
    timed_out = False
    values = {}
    for name in names:
        cert = solvers.invariant_value(g, name, cfg)
        if cert.optimal and not solvers.validate_certificate(g, cert):
            raise InternalInvariantBroken(f"{name}: certificate failed validation")
        timed_out |= not cert.optimal
        values[name] = cert.value
        report["invariants"][name] = {
            "value": cert.value,
            "optimal": cert.optimal,
            "lower_bound": cert.lower_bound,
            "pieces": [list(p) for p in cert.pieces],
        }
    for lo, hi in _CHAIN_PAIRS:
        if lo in values and hi in values:
            report["cross_checks"][f"{lo}<={hi}"] = values[lo] <= values[hi]
    if "inspc" in values:
        chi = solvers.chromatic_number(g)
        report["cross_checks"]["chi<=2*inspc"] = chi <= 2 * values["inspc"]
        report["cross_checks"]["chi"] = chi
    _write_out(json.dumps(report, sort_keys=True, indent=2), args.out)
    if timed_out:
        return EXIT_TIMEOUT
    if not all(v is True for k, v in report["cross_checks"].items()
               if k != "chi"):
        return EXIT_FAIL
    return EXIT_OK


def cmd_check_free(args) -> int:
    g = _load_graph(args.graph, args.format)
    family = _parse_family(args.family)
    hit = freeness_witness(g, family)
    if hit is None:
        print("free")
        return EXIT_OK
    member, emb = hit
    print(f"not free: {member.label or 'member'} at {sorted(emb.image())}")
    return EXIT_FAIL


def cmd_check_order(args) -> int:
    f1 = _parse_family(args.family1)
    f2 = _parse_family(args.family2)
    le = family_leq(f1, f2)
    ge = family_leq(f2, f1)
    rel = {(True, True): "equivalent", (True, False): "<=",
           (False, True): ">=", (False, False): "incomparable"}[(le, ge)]
    print(f"{args.family1} {rel} {args.family2}")
    return EXIT_OK


def cmd_characterize(args) -> int:
    family = _parse_family(args.family)
    n = characterize(family, args.invariant)
    print("none" if n is None else str(n))
    return EXIT_OK


def cmd_construct(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.mode == "cover":
        trace = constructive.sp_cover_construct(g, args.n, root=args.root)
    else:
        trace = constructive.sp_partition_construct(g, args.n, root=args.root)
    _write_out(trace.to_json(), args.out)
    return EXIT_OK


def cmd_convert_cover(args) -> int:
    g = _load_graph(args.graph, args.format)
    cert = solvers.min_cover(g, PieceKind.SP_ANY,
                             solvers.SolveConfig(timeout=args.timeout))
    if args.to == "star":
        out = constructive.cover_to_star_cover(g, cert, args.n)
    else:
        out = constructive.cover_to_path_cover(g, cert, args.n)
    report = {
        "from": [list(p) for p in cert.pieces],
        "to": [list(p) for p in out.pieces],
        "kind": out.kind.value,
        "mode": out.mode,
        "value": out.value,
    }
    _write_out(json.dumps(report, sort_keys=True, indent=2), args.out)
    return EXIT_OK if cert.optimal else EXIT_TIMEOUT


def cmd_bounds(args) -> int:
    if args.what == "ramsey":
        bv = bounds_mod.ramsey(args.a, args.b,
                               max_search_order=args.search_order)
        print(f"R({args.a},{args.b}) = {bv}")
        return EXIT_OK
    table = bounds_mod.paper_constants(args.a, max_digits=args.max_digits,
                                       c_chi=args.c_chi)
    for key in sorted(table):
        print(f"{key} = {table[key]}")
    return EXIT_OK


# -- verification suites -----------------------------------------------


def _suite_lemma41():
    out = []
    for n in range(2, 9):
        v = solvers.invariant_value(gen.complete(n), "inspc").value
        out.append((f"inspc(K_{n}) == {math.ceil(n/2)}", v == math.ceil(n / 2)))
        v = solvers.invariant_value(gen.s_star(n), "inspc").value
        out.append((f"inspc(S*_{n}) == {math.ceil(n/2)}", v == math.ceil(n / 2)))
    for n in range(2, 7):
        v = solvers.invariant_value(gen.s_tilde(n), "inspp").value
        out.append((f"inspp(S~_{n}) == {n+1}", v == n + 1))
    for n in range(2, 11):
        v = solvers.invariant_value(gen.star(n), "inpc").value
        out.append((f"inpc(K_1,{n}) == {math.ceil(n/2)}", v == math.ceil(n / 2)))
    for n in range(2, 13):
        v = solvers.invariant_value(gen.path(n), "insc").value
        out.append((f"insc(P_{n}) == {math.ceil(n/3)}", v == math.ceil(n / 3)))
    return out


def _suite_lemma42():
    out = []
    for m in (2, 3, 4):
        for n in (3, 4):
            checks = [
                (gen.h1(m, n), "inspc", (m + 1 + 1) // 2),
                (gen.h2(m, n), "inspc", (m + 1 + 1) // 2),
                (gen.h3(m, n), "inspc", m),
                (gen.h4(m, n), "inspp", m),
                (gen.h5(m, n), "inspp", m),
            ]
            for g, inv, lower in checks:
                v = solvers.invariant_value(g, inv).value
                out.append((f"{inv}({g.label}) = {v} >= {lower}", v >= lower))
    return out


def _suite_theorems():
    out = []
    for inv in INVARIANTS:
        for n in (4, 5):
            got = characterize(target_family(inv, n), inv)
            out.append((f"characterize(target({inv},{n})) == {n}", got == n))
    fam_p4 = ForbiddenFamily((gen.path(4),), name="P_4")
    out.append(("characterize({P_4}, inspc) is none",
                characterize(fam_p4, "inspc") is None))
    for inv in INVARIANTS:
        for n in range(4, 7):
            ok = family_leq(target_family(inv, n), target_family(inv, n + 1))
            out.append((f"target({inv},{n}) <= target({inv},{n+1})", ok))
    return out


def _random_graph(seed: int, lo: int, hi: int) -> Graph:
    rng = random.Random(seed)
    order = rng.randint(lo, hi)
    p = rng.uniform(0.25, 0.75)
    return gen.random_connected(order, p, rng)


def _chain_check(seed: int) -> tuple[str, bool]:
    g = _random_graph(seed, 4, 10)
    vals = {name: solvers.invariant_value(g, name).value
            for name in INVARIANTS}
    ok = all(vals[lo] <= vals[hi] for lo, hi in _CHAIN_PAIRS)
    chi = solvers.chromatic_number(g)
    ok = ok and chi <= 2 * vals["inspc"] <= 2 * vals["inspp"]
    return f"chains(seed={seed}, order={g.order})", ok


def _oracle_check(seed: int) -> tuple[str, bool]:
    g = _random_graph(seed, 4, 7)
    ok = True
    for kind in PieceKind:
        ok &= solvers.min_cover(g, kind).value == naive.naive_min_cover(g, kind)
        ok &= (solvers.min_partition(g, kind).value
               == naive.naive_min_partition(g, kind))
    return f"oracle(seed={seed}, order={g.order})", ok


def _run_many(fn, seeds, jobs: int):
    if jobs > 1:
        with Pool(jobs) as pool:
            return pool.map(fn, seeds)
    return [fn(s) for s in seeds]


def cmd_verify(args) -> int:
    if args.suite == "lemma41":
        results = _suite_lemma41()
    elif args.suite == "lemma42":
        results = _suite_lemma42()
    elif args.suite == "theorems":
        results = _suite_theorems()
    elif args.suite == "chains":
        seeds = [args.seed + i for i in range(args.count or 200)]
        results = _run_many(_chain_check, seeds, args.jobs)
    elif args.suite == "oracle":
        seeds = [args.seed + i for i in range(args.count or 200)]
        results = _run_many(_oracle_check, seeds, args.jobs)
    else:
        raise ParseError(f"unknown suite {args.suite!r}")
    failed = 0
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- argument parsing --------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="coverlab",
        description="Induced star/path cover and partition invariants.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, graph=False):
        p.add_argument("--format", choices=("g6", "edges"), default="edges",
                       help="graph file format (default: edges)")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        if graph:
            p.add_argument("graph", help="graph file, or - for stdin")

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("spec", help="family:params, e.g. sstar:3 or h1:2,3")
    add_common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("solve", help="compute invariants exactly")
    add_common(p, graph=True)
    p.add_argument("--invariants", default="inspc,inspp",
                   help="comma-separated invariant names")
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("check-free", help="test forbidden-family freeness")
    add_common(p, graph=True)
    p.add_argument("family", help="target spec like inspc:4, or specs joined by +")
    p.set_defaults(fn=cmd_check_free)

    p = sub.add_parser("check-order",
                       help="compare two forbidden families under containment")
    p.add_argument("family1")
    p.add_argument("family2")
    p.set_defaults(fn=cmd_check_order)

    p = sub.add_parser("characterize",
                       help="least target size dominating a family")
    p.add_argument("family")
    p.add_argument("--invariant", choices=INVARIANTS, required=True)
    p.set_defaults(fn=cmd_characterize)

    p = sub.add_parser("construct", help="run a constructive cover/partition")
    add_common(p, graph=True)
    p.add_argument("--mode", choices=("cover", "partition"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("convert-cover",
                       help="solve an SP cover and convert it to pure stars/paths")
    add_common(p, graph=True)
    p.add_argument("--to", choices=("star", "path"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(fn=cmd_convert_cover)

    p = sub.add_parser("bounds", help="Ramsey values and derived constants")
    p.add_argument("what", choices=("ramsey", "constants"))
    p.add_argument("a", type=int, help="s (ramsey) or n (constants)")
    p.add_argument("b", type=int, nargs="?", default=None, help="t (ramsey)")
    p.add_argument("--search-order", type=int, default=6)
    p.add_argument("--max-digits", type=int, default=100_000)
    p.add_argument("--c-chi", type=int, default=None)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite",
                   choices=("lemma41", "lemma42", "theorems", "chains", "oracle"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds" and args.what == "ramsey" and args.b is None:
        parser.error("bounds ramsey needs two arguments")
    try:
        return args.fn(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _CHECK_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
