"""Command line tool: verify surfaces, generate instances, run the scaling bench.

Exit codes for `verify`: 0 convex, 1 not convex, 2 invalid input or
parse failure.
"""

from __future__ import annotations

import argparse
import sys
import time

from .formats import NonManifoldError, ParseError, SemanticError, emit_pls, parse_off, parse_pls
from .instances import (
    GenSpec,
    build_instance,
    gen_prism,
    rigid_motion,
)
from .oracle import FlatSurfaceError, oracle_verdict
from .poset import Face
from .verifier import CONVEX, INVALID, NOT_CONVEX, verify

_FACE_LETTER = {0: "v", 1: "e", 2: "f"}


def face_label(face: Face) -> str:
    letter = _FACE_LETTER.get(face.dim)
    return f"{letter}{face.index}" if letter else f"d{face.dim}.{face.index}"


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    head = text.lstrip()[:4]
    if path.endswith(".off") or head.startswith("OFF"):
        return parse_off(text)
    return parse_pls(text)


def _cmd_verify(args) -> int:
    try:
        surface = _load(args.file)
    except OSError as exc:
        print(f"INVALID PARSE_ERROR: {exc}")
        return 2
    except (ParseError, SemanticError, NonManifoldError) as exc:
        print(f"INVALID {exc.code}: {exc}")
        return 2
    verdict = verify(surface, parallel=args.parallel, collect_all=args.all)
    if verdict.kind == CONVEX:
        print("YES")
        code = 0
    elif verdict.kind == NOT_CONVEX:
        line = "NO"
        if args.witness:
            line += f" witness={face_label(verdict.witness)} reason={verdict.reason}"
        print(line)
        if args.all:
            for face, reason in verdict.failures:
                print(f"  failing {face_label(face)} {reason}")
        code = 1
    else:
        suffix = f" at {face_label(verdict.witness)}" if verdict.witness else ""
        print(f"INVALID {verdict.reason}{suffix}")
        code = 2
    if args.oracle:
        if verdict.kind == INVALID or surface.mode != "vertices":
            print("oracle=skipped")
        else:
            try:
                o = oracle_verdict(surface)
            except FlatSurfaceError:
                print("oracle=FLAT_SURFACE agreement=no")
            else:
                agree = o.convex == verdict.convex
                print(
                    f"oracle={'convex' if o.convex else 'not-convex'}"
                    f" agreement={'yes' if agree else 'no'}"
                )
    return code


def _cmd_gen(args) -> int:
    if args.family == "rigid_motion":
        if not args.input:
            print("gen rigid_motion needs -i/--input", file=sys.stderr)
            return 2
        try:
            surface = rigid_motion(_load(args.input), args.seed)
        except (ParseError, SemanticError, NonManifoldError, OSError) as exc:
            print(f"INVALID: {exc}", file=sys.stderr)
            return 2
    else:
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.m is not None:
            params["m"] = args.m
        if args.dents is not None:
            params["dents"] = args.dents
        try:
            surface = build_instance(GenSpec(args.family, params, args.seed))
        except (KeyError, ValueError) as exc:
            print(f"bad generator parameters: {exc}", file=sys.stderr)
            return 2
    text = emit_pls(surface)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_bench(args) -> int:
    if args.family != "prism":
        print("only --family prism is benchmarked", file=sys.stderr)
        return 2
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = ["m,incidences,entries,seconds"]
    for m in sizes:
        surface = gen_prism(m)
        poset = surface.poset
        incidences = sum(len(poset.up(f)) for f in poset.faces(poset.dim_low))
        best = None
        verdict = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            verdict = verify(surface)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        assert verdict is not None and verdict.kind == CONVEX
        rows.append(f"{m},{incidences},{verdict.entries_checked},{best:.6f}")
    table = "\n".join(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(table + "\n")
    else:
        print(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plconvex",
        description="Decide whether a PL-realized closed surface bounds a convex polyhedron.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify a .pls or .off file")
    p_verify.add_argument("file")
    p_verify.add_argument("--oracle", action="store_true", help="cross-run the brute-force oracle")
    p_verify.add_argument("--parallel", action="store_true", help="check stars concurrently")
    p_verify.add_argument("--witness", action="store_true", help="print the failing face")
    p_verify.add_argument("--all", action="store_true", help="list every failing face")
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a test surface")
    p_gen.add_argument(
        "family",
        choices=["hypercube", "cross_polytope", "simplex", "prism", "schonhardt", "dented", "rigid_motion"],
    )
    p_gen.add_argument("--n", type=int, help="ambient dimension (hypercube/cross_polytope/simplex)")
    p_gen.add_argument("--m", type=int, help="base polygon size (prism)")
    p_gen.add_argument("--dents", type=int, help="number of dented facets (dented)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-i", "--input", help="input surface (rigid_motion)")
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="incidence-linear scaling table (CSV)")
    p_bench.add_argument("--family", default="prism")
    p_bench.add_argument("--sizes", required=True, help="comma-separated prism sizes")
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.add_argument("-o", "--output")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main() -> int:
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
