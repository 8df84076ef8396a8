"""Command-line front end.

Subcommands: ``field info``, ``build``, ``invariants``, ``verify``.
Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error, 3 resource limit (ring, graph, or field over the configured cap).
The vertex cap comes from ``--cap`` or the UCT_VERTEX_CAP environment
variable, hard ceiling 2^20.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import FieldTooLarge, GraphTooLarge, RingTooLarge, WrongField
from .finite_field import make_field
from .graph_core import (all_pairs_distances, clique_number,
                         connected_components, triameter)
from .graphio import dump_json, to_dot, to_edge_list
from .constructors import unitary_cayley
from .theorem_checker import (CHECKS, checks_for, report_json, run_check,
                              run_suite)
from .tri_ring import DEFAULT_VERTEX_CAP, HARD_VERTEX_CAP, RingSpec

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _resolve_cap(args) -> int:
    cap = args.cap
    if cap is None:
        env = os.environ.get("UCT_VERTEX_CAP")
        cap = int(env) if env else DEFAULT_VERTEX_CAP
    if not 1 <= cap <= HARD_VERTEX_CAP:
        raise ValueError(f"cap must be between 1 and {HARD_VERTEX_CAP}")
    return cap


def _ring_spec(args) -> RingSpec:
    if args.ring == "tri":
        if args.n is None or args.p is None:
            raise ValueError("tri rings need --n and --p (and optionally --k)")
        return RingSpec.triangular(args.n, args.p, args.k)
    if args.modulus is None:
        raise ValueError("zn rings need --modulus")
    return RingSpec.integers_mod(args.modulus)


def _write_output(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_ring_flags(parser):
    parser.add_argument("--ring", choices=["tri", "zn"], required=True)
    parser.add_argument("--n", type=int, help="matrix dimension (tri)")
    parser.add_argument("--p", type=int, help="field characteristic (tri)")
    parser.add_argument("--k", type=int, default=1, help="extension degree (tri)")
    parser.add_argument("--modulus", type=int, help="modulus (zn)")


def _add_common_flags(parser):
    parser.add_argument("--cap", type=int, default=None,
                        help=f"vertex cap (default {DEFAULT_VERTEX_CAP}, "
                             f"env UCT_VERTEX_CAP, ceiling {HARD_VERTEX_CAP})")
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uct",
        description="Build unitary Cayley graphs of upper-triangular matrix "
                    "rings and Z_n, compute exact invariants, and verify "
                    "their structural identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="finite field utilities")
    field_sub = p_field.add_subparsers(dest="field_command", required=True)
    p_info = field_sub.add_parser("info", help="print field parameters")
    p_info.add_argument("--p", type=int, required=True)
    p_info.add_argument("--k", type=int, default=1)
    p_info.add_argument("--table", action="store_true",
                        help="also print the multiplication table as CSV")

    p_build = sub.add_parser("build", help="build a unitary Cayley graph")
    _add_ring_flags(p_build)
    p_build.add_argument("--format", choices=["json", "dot", "edges", "text"],
                         default="edges")
    _add_common_flags(p_build)

    p_inv = sub.add_parser("invariants", help="exact invariants of the graph")
    _add_ring_flags(p_inv)
    p_inv.add_argument("--format", choices=["json", "text"], default="json")
    _add_common_flags(p_inv)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--spec", action="append", default=None,
                          metavar="SPEC", help="ring spec tri:N,P,K or zn:M "
                          "(repeatable; default: the built-in suite)")
    p_verify.add_argument("--check", choices=sorted(CHECKS), default=None,
                          help="run only this check")
    p_verify.add_argument("--threads", type=int, default=None,
                          help="worker threads across specs (default: cores)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for randomized spot checks")
    _add_common_flags(p_verify)
    return parser


def cmd_field_info(args) -> int:
    f = make_field(args.p, args.k)
    print(f"q={f.q}")
    print("modulus=" + ",".join(str(c) for c in f.modulus))
    if args.table:
        for row in f.mul_table:
            print(",".join(str(int(x)) for x in row))
    return EXIT_OK


def cmd_build(args) -> int:
    cap = _resolve_cap(args)
    spec = _ring_spec(args)
    g = unitary_cayley(spec, cap)
    print(f"{g.vertex_count} vertices, {g.edge_count()} edges")
    if args.format == "edges":
        text = to_edge_list(g)
    elif args.format == "dot":
        text = to_dot(g)
    elif args.format == "json":
        text = dump_json(g)
    else:
        text = f"ring {spec}\nvertices {g.vertex_count}\nedges {g.edge_count()}\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    cap = _resolve_cap(args)
    spec = _ring_spec(args)
    g = unitary_cayley(spec, cap)
    degrees = g.degrees()
    comps = connected_components(g)
    connected = len(comps) == 1
    if connected:
        diam = int(all_pairs_distances(g).max())
        triam = (triameter(g) if g.vertex_count >= 3
                 else "undefined: fewer than 3 vertices")
    else:
        diam = triam = "undefined: disconnected"
    result = {
        "degree": int(degrees.max()),
        "components": len(comps),
        "diameter": diam,
        "triameter": triam,
        "clique": clique_number(g),
    }
    if args.format == "json":
        text = json.dumps(result, indent=2) + "\n"
    else:
        text = "".join(f"{k} {v}\n" for k, v in result.items())
    _write_output(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = _resolve_cap(args)
    specs = None
    if args.spec:
        specs = [RingSpec.parse(s) for s in args.spec]
    if args.check is not None:
        if specs is None:
            raise ValueError("--check needs explicit --spec arguments")
        for spec in specs:
            if args.check not in checks_for(spec):
                raise WrongField(
                    f"check {args.check!r} is not applicable to {spec}")
        verdicts = [run_check(args.check, spec, cap, args.seed) for spec in specs]
    else:
        verdicts = run_suite(specs, cap=cap, threads=args.threads, seed=args.seed)
    _write_output(report_json(verdicts), args.out)
    for v in verdicts:
        status = "PASS" if v.passed else "FAIL"
        print(f"{status} {v.claim_id} @ {v.spec}", file=sys.stderr)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "field":
            return cmd_field_info(args)
        if args.command == "build":
            return cmd_build(args)
        if args.command == "invariants":
            return cmd_invariants(args)
        return cmd_verify(args)
    except (RingTooLarge, GraphTooLarge, FieldTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, WrongField) as exc:
        return _usage_error(str(exc))


def _entry():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    _entry()
