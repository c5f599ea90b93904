"""Command-line front end.

Exit codes: 0 success, 1 nonexistent design or failed verification,
2 usage error, 3 kernel unavailable, 4 search budget exhausted.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from . import oracle, solver
from .core import components, verify_design, verify_orthogonal
from .errors import DesignError, KernelUnavailable, NonExistent, NoSuchPair, ParseError
from .fixtures import FIXTURE_NAMES, get_fixture
from .formats import FORMATS, SeedCache, atomic_write, read_design, write_design

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_KERNEL, EXIT_TIMEOUT = 0, 1, 2, 3, 4


def _emit(text: str, out: str | None) -> None:
    if out:
        atomic_write(Path(out), text)
    else:
        sys.stdout.write(text)


def _provider(args) -> solver.KernelProvider:
    designs = [read_design(Path(p).read_text()) for p in (args.seed or [])]
    return solver.KernelProvider(SeedCache(), designs, search_time=args.search_time)


def cmd_exists(args) -> int:
    verdict = solver.exists(args.k, args.m, args.n, args.q)
    print(verdict.message)
    return EXIT_OK if verdict else EXIT_NO


def cmd_generate(args) -> int:
    D, plan = solver.generate(args.k, args.m, args.n, args.q, _provider(args))
    _emit(write_design(D, args.format), args.out)
    if args.plan:
        atomic_write(Path(args.plan), plan.to_json() + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    D = read_design(Path(args.path).read_text(), args.format, q=args.q)
    report = verify_design(D)
    print(report.summary(limit=args.limit))
    parts = components(D)
    ok = report.passed
    if D.k >= 2:
        for a, b in itertools.combinations(range(D.k), 2):
            orth = verify_orthogonal(parts[a], parts[b])
            ok = ok and orth
            print(f"coordinates {a},{b}: {'orthogonal' if orth else 'NOT orthogonal'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_oracle(args) -> int:
    outcome = oracle.exhaustive_exists(args.k, args.m, args.n, args.q,
                                       max_nodes=args.nodes, time_limit=args.time)
    print(f"{outcome.status.value} after {outcome.nodes_explored} nodes")
    if outcome.found:
        _emit(write_design(outcome.design, args.format), args.out)
        return EXIT_OK
    return EXIT_NO if outcome.status is oracle.Status.EXHAUSTED else EXIT_TIMEOUT


def cmd_mols(args) -> int:
    D = solver.mols_pair(args.v, _provider(args))
    _emit(write_design(D, args.format), args.out)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.name is None:
        print("\n".join(FIXTURE_NAMES))
        return EXIT_OK
    _emit(write_design(get_fixture(args.name), args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rcfd", description="Regular row-column factorial designs I_k(m,n;q).")
    sub = ap.add_subparsers(dest="command", required=True)

    def kmnq(p):
        for name in ("k", "m", "n", "q"):
            p.add_argument(name, type=int)

    def output(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    def kernel(p):
        p.add_argument("--seed", metavar="FILE", action="append",
                       help="design file supplying an I_2(v,v;v) kernel (repeatable)")
        p.add_argument("--search-time", type=float, metavar="S",
                       help="allow a kernel search of at most S seconds")

    p = sub.add_parser("exists", help="decide existence")
    kmnq(p)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("generate", help="construct a verified design")
    kmnq(p)
    output(p)
    kernel(p)
    p.add_argument("--plan", metavar="PATH", help="write the construction plan as JSON")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a design file")
    p.add_argument("path")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--q", type=int, help="number of levels (CSV input only)")
    p.add_argument("--limit", type=int, default=20, help="violations to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search")
    kmnq(p)
    output(p)
    p.add_argument("--nodes", type=int, default=oracle.DEFAULT_MAX_NODES)
    p.add_argument("--time", type=float, default=oracle.DEFAULT_TIME_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mols", help="pair of orthogonal Latin squares of order v")
    p.add_argument("v", type=int)
    output(p)
    kernel(p)
    p.set_defaults(func=cmd_mols)

    p = sub.add_parser("fixtures", help="print an embedded design (omit NAME to list)")
    p.add_argument("name", nargs="?", choices=FIXTURE_NAMES)
    output(p)
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonExistent as exc:
        print(exc.verdict.message, file=sys.stderr)
        return EXIT_NO
    except NoSuchPair as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    except KernelUnavailable as exc:
        print(f"KernelUnavailable: {exc}", file=sys.stderr)
        return EXIT_KERNEL
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DesignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
