"""Command-line front end: verify, construct, search, catalog, reproduce.

Exit codes: 0 success (for verify: the pair is a CZCP; for reproduce: all
checks match), 1 negative result (not a CZCP / reproduction mismatch),
2 input or precondition error. With --json every command emits a single
report object conforming to report.schema.json; progress goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, reproduce as repro
from .correlation import aacs_profile, accs_profile
from .search import SearchSpec, merge_results, run_search, run_search_parallel
from .sequences import SequenceFormatError, SequencePair, parse_pair
from .turyn import (
    ConstructionError,
    construct_gcp,
    construct_lemma8,
    construct_theorem1,
)
from .verify import classify


def _pair_json(pair):
    return {"first": str(pair.first), "second": str(pair.second)}


def _profiles_json(pair):
    return {
        "aacs": [int(v) for v in aacs_profile(pair)],
        "accs": [int(v) for v in accs_profile(pair)],
    }


def _verdict_json(v):
    return {
        "n": v.n,
        "zcp_width": v.zcp_width,
        "czcp_width": v.czcp_width,
        "is_gcp": v.is_gcp,
        "is_perfect": v.is_perfect,
        "is_optimal": v.is_optimal,
        "czc_ratio": None
        if v.czc_ratio is None
        else {
            "numerator": v.czc_ratio.numerator,
            "denominator": v.czc_ratio.denominator,
        },
        "z_max": v.z_max,
        "mid_aacs": v.mid_aacs,
        "golay": None
        if v.golay is None
        else {"alpha": v.golay.alpha, "beta": v.golay.beta, "gamma": v.golay.gamma},
    }


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(report):
    print(json.dumps(report, indent=2 if sys.stdout.isatty() else None))


def _fail(args, code, message, exit_code=2):
    if args.json:
        print(json.dumps({"command": args.cmd, "error": {"code": code, "message": message}}))
    else:
        print(f"error ({code}): {message}", file=sys.stderr)
    return exit_code


def _vector(values):
    return " ".join(str(int(v)) for v in values)


def _print_verdict(v):
    ratio = "n/a" if v.czc_ratio is None else str(v.czc_ratio)
    golay = (
        "no"
        if v.golay is None
        else f"2^{v.golay.alpha} * 10^{v.golay.beta} * 26^{v.golay.gamma}"
    )
    print(f"length:      {v.n}")
    print(f"zcp width:   {v.zcp_width}")
    print(f"czcp width:  {v.czcp_width}")
    print(f"gcp:         {'yes' if v.is_gcp else 'no'}")
    print(f"perfect:     {'yes' if v.is_perfect else 'no'}")
    print(f"optimal:     {'yes' if v.is_optimal else 'no'}")
    print(f"czc ratio:   {ratio} (z_max {v.z_max if v.z_max is not None else 'n/a'})")
    print(f"mid aacs:    {v.mid_aacs if v.mid_aacs is not None else 'n/a'}")
    print(f"golay length: {golay}")


def _load_pair_arg(args):
    if len(args.inputs) == 2:
        return SequencePair.from_texts(args.inputs[0], args.inputs[1])
    if len(args.inputs) != 1:
        raise SequenceFormatError(
            "give a pair file ('-' for stdin) or two inline sequences"
        )
    source = args.inputs[0]
    if source == "-":
        return parse_pair(sys.stdin.read())
    return parse_pair(Path(source).read_text())


def cmd_verify(args):
    try:
        pair = _load_pair_arg(args)
    except (OSError, ValueError) as exc:
        return _fail(args, "bad_input", str(exc))
    verdict = classify(pair)
    if args.json:
        _emit(
            {
                "command": "verify",
                "pair": _pair_json(pair),
                "profiles": _profiles_json(pair),
                "verdict": _verdict_json(verdict),
            },
        )
    else:
        print(f"first:       {pair.first}")
        print(f"second:      {pair.second}")
        print(f"aacs:        {_vector(aacs_profile(pair))}")
        print(f"accs:        {_vector(accs_profile(pair))}")
        _print_verdict(verdict)
    return 0 if verdict.czcp_width >= 1 else 1


def _resolve_pair(token):
    """A catalog id, or a path to a two-line pair file."""
    try:
        return catalog.get(token).pair
    except KeyError:
        pass
    path = Path(token)
    if path.exists():
        return parse_pair(path.read_text())
    raise SequenceFormatError(f"{token!r} is neither a catalog id nor a pair file")


def cmd_construct(args):
    try:
        gcp = _resolve_pair(args.gcp)
        seed = _resolve_pair(args.seed)
    except (OSError, ValueError) as exc:
        return _fail(args, "bad_input", str(exc))
    try:
        if args.mode == "theorem1":
            rep = construct_theorem1(gcp, seed, auto_normalize=args.auto_normalize)
        elif args.mode == "lemma8":
            rep = construct_lemma8(gcp, seed)
        else:
            rep = construct_gcp(gcp, seed)
    except ConstructionError as exc:
        return _fail(args, exc.code, str(exc))
    if args.json:
        _emit(
            {
                "command": "construct",
                "construction": {
                    "mode": args.mode,
                    "gcp": _pair_json(gcp),
                    "seed": _pair_json(seed),
                    "output": _pair_json(rep.pair),
                    "profiles": _profiles_json(rep.pair),
                    "verdict": _verdict_json(rep.verdict),
                    "guaranteed_width": rep.guaranteed_width,
                    "measured_width": rep.measured_width,
                    "basis": rep.basis,
                    "condition_eq4": rep.condition_eq4,
                    "normalized": rep.normalized,
                    "warnings": list(rep.warnings),
                },
            },
        )
    else:
        print(f"mode:        {args.mode} (guarantee backed by {rep.basis})")
        print(f"output s:    {rep.pair.first}")
        print(f"output t:    {rep.pair.second}")
        print(f"aacs:        {_vector(aacs_profile(rep.pair))}")
        print(f"accs:        {_vector(accs_profile(rep.pair))}")
        print(f"guaranteed:  {rep.guaranteed_width}")
        print(f"measured:    {rep.measured_width}")
        print(f"sign cond:   {rep.condition_eq4}")
        print(f"normalized:  {'yes' if rep.normalized else 'no'}")
        for w in rep.warnings:
            print(f"warning:     {w}")
        _print_verdict(rep.verdict)
    return 0


def cmd_search(args):
    if args.length % 2:
        return _fail(args, "odd_length", "search length must be even")
    space = 1 << (args.length + 1)
    if space > (1 << 24) and not args.allow_large:
        return _fail(
            args,
            "large_search_gated",
            f"length {args.length} scans {space:,} candidates "
            f"(roughly {space // 3_000_000} s single-threaded); rerun with --allow-large",
        )
    shards = args.shards
    spec = SearchSpec(
        m=args.length,
        mid_abs=args.mid_abs,
        shards=shards,
        shard_index=args.shard if args.shard is not None else 0,
        allow_large=args.allow_large,
    )

    def progress(done, total):
        print(f"progress: {done:,}/{total:,} candidates", file=sys.stderr, flush=True)

    try:
        if args.shard is None and args.jobs > 1:
            result = run_search_parallel(spec, args.jobs)
        elif args.shard is None and shards > 1:
            parts = [
                run_search(
                    SearchSpec(
                        m=args.length,
                        mid_abs=args.mid_abs,
                        shards=shards,
                        shard_index=i,
                        allow_large=args.allow_large,
                    ),
                    progress=progress,
                )
                for i in range(shards)
            ]
            result = merge_results(parts)
        else:
            result = run_search(spec, progress=progress)
    except ValueError as exc:
        return _fail(args, "bad_search", str(exc))

    if args.json:
        _emit(
            {
                "command": "search",
                "search": {
                    "length": args.length,
                    "mid_abs": args.mid_abs,
                    "shards": shards,
                    "shard": args.shard,
                    "classes": result.classes,
                    "candidates_scanned": result.candidates_scanned,
                    "elapsed_s": result.elapsed,
                    "warnings": list(result.warnings),
                    "results": [_pair_json(p) for p in result.pairs],
                },
            },
        )
    else:
        for pair in result.pairs:
            print(pair.first)
            print(pair.second)
            print()
        for w in result.warnings:
            print(f"warning: {w}", file=sys.stderr)
        print(
            f"classes: {result.classes}  scanned: {result.candidates_scanned:,}  "
            f"elapsed: {result.elapsed:.2f}s"
        )
    return 0


def cmd_catalog(args):
    try:
        entries = [catalog.get(args.id)] if args.id else [
            catalog.get(eid) for eid in catalog.ids()
        ]
    except KeyError as exc:
        return _fail(args, "unknown_id", str(exc.args[0]))
    if args.json:
        payload = []
        for e in entries:
            item = {
                "id": e.id,
                "pair": _pair_json(e.pair),
                "source": e.source,
                "claimed_width": e.width,
                "claimed_optimal": e.optimal,
                "aacs": list(e.aacs) if e.aacs is not None else None,
                "accs": list(e.accs) if e.accs is not None else None,
                "verdict": _verdict_json(classify(e.pair)),
            }
            payload.append(item)
        _emit({"command": "catalog", "catalog": payload})
    else:
        for e in entries:
            v = classify(e.pair)
            print(
                f"{e.id:7s} n={e.pair.n:<4d} width={v.czcp_width:<3d} "
                f"optimal={'yes' if v.is_optimal else 'no ':3s} gcp={'yes' if v.is_gcp else 'no'}"
                f"  [{e.source}]"
            )
            print(f"        {e.pair.first}")
            print(f"        {e.pair.second}")
    return 0


def cmd_reproduce(args):
    try:
        report = repro.reproduce(args.target)
    except ValueError as exc:
        return _fail(args, "bad_target", str(exc))
    if args.json:
        _emit(
            {
                "command": "reproduce",
                "reproduce": {
                    "target": report.target,
                    "ok": report.ok,
                    "checks": [
                        {
                            "name": c.name,
                            "ok": c.ok,
                            "expected": _jsonable(c.expected),
                            "actual": _jsonable(c.actual),
                        }
                        for c in report.checks
                    ],
                },
            },
        )
    else:
        for c in report.checks:
            mark = "ok " if c.ok else "FAIL"
            line = f"{mark} {c.name}"
            if not c.ok:
                line += f"  expected={c.expected!r} actual={c.actual!r}"
            print(line)
        print(f"{report.target}: {'all checks passed' if report.ok else 'MISMATCH'}")
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="czcp",
        description="Verify, construct and search binary cross Z-complementary pairs.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="classify a pair from a file, stdin or inline")
    p.add_argument(
        "inputs",
        nargs="*",
        metavar="PAIR",
        help="pair file (two +/- lines; '-' for stdin), or two inline "
        "sequences (prefix with -- when they start with a minus)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="compose pairs by Turyn's method")
    p.add_argument("--gcp", required=True, help="catalog id or pair file for the GCP")
    p.add_argument("--seed", required=True, help="catalog id or pair file for the seed")
    p.add_argument(
        "--mode", choices=("theorem1", "lemma8", "gcp"), default="theorem1"
    )
    p.add_argument(
        "--auto-normalize",
        action="store_true",
        help="flip the GCP's second member if that makes the sign condition hold",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive optimal-seed search")
    p.add_argument("--length", type=int, required=True, metavar="M")
    p.add_argument(
        "--mid-abs",
        type=int,
        default=None,
        help="keep only pairs with |AACS(M/2)| equal to this (2 for seeds)",
    )
    p.add_argument("--shards", type=int, default=1)
    p.add_argument(
        "--shard",
        type=int,
        default=None,
        help="run only this shard (default: all shards)",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="dump embedded pairs")
    p.add_argument("id", nargs="?", help="a single catalog id")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("reproduce", help="regenerate a published table or the example")
    p.add_argument("target", choices=repro.TARGETS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
