"""Command-line front end.

Subcommands: enumerate, count, series, verify, identify, bijection.
Exit status: 0 on success / all checks passed, 1 when a verification
check fails (the failure witness is in the output, machine-readable
under --json), 2 for usage or parse errors.

With --json every command emits a single JSON object; numeric values are
decimal strings so arbitrarily large counts survive any JSON reader, and
re-emitting a parsed object reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import verify_counts
from .families import BadParams, FAMILY_IDS, build
from .grammar import Grammar, lower
from .intsets import (BadProgression, NonPositiveValue, RestrictionQuad,
                      SetSyntaxError, parse_set)
from .oracle import (DEFAULT_ENUMERATION_CAP, ResourceLimit, count_brute,
                     count_dp, enumerate_paths)
from .sequences import identify
from .series import DEFAULT_ORDER, solve
from .verify import DEFAULT_MAX_LEN, DEFAULT_N_MAX, verify_family

DEFAULT_BIJECTION_MAX = 8


def _set_arg(text: str):
    try:
        return parse_set(text)
    except (SetSyntaxError, NonPositiveValue, BadProgression) as e:
        raise argparse.ArgumentTypeError(f"bad set {text!r}: {e}")


def _params_arg(text: str) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        if not sep or not value.lstrip("-").isdigit():
            raise argparse.ArgumentTypeError(f"bad parameter {piece!r}, want NAME=INT")
        out[name.strip()] = int(value)
    return out


def _terms_arg(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad terms {text!r}, want INT,INT,...")


def _quad_from(args) -> RestrictionQuad:
    return RestrictionQuad(args.peaks, args.valleys, args.upruns, args.downruns)


def _quad_json(quad: RestrictionQuad) -> dict:
    return {"peaks": str(quad.peaks), "valleys": str(quad.valleys),
            "up_runs": str(quad.up_runs), "down_runs": str(quad.down_runs)}


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_enumerate(args) -> int:
    quad = _quad_from(args)
    paths = [p.text for p in enumerate_paths(args.n, quad, cap=args.cap)]
    payload = {"command": "enumerate", "n": str(args.n),
               "quad": _quad_json(quad), "paths": paths}
    _emit(payload, args.json, paths)
    return 0


def _cmd_count(args) -> int:
    quad = _quad_from(args)
    methods = ("brute", "dp") if args.method == "both" else (args.method,)
    tables = {}
    for m in methods:
        table = count_brute(args.n_max, quad, args.cap) if m == "brute" \
            else count_dp(args.n_max, quad)
        tables[m] = table.sequence(args.n_max)
    mismatch = next((n for n in range(args.n_max + 1)
                     if len({tables[m][n] for m in methods}) != 1), None)
    payload = {"command": "count", "n_max": str(args.n_max),
               "quad": _quad_json(quad), "methods": list(methods),
               "counts": {m: [str(c) for c in tables[m]] for m in methods},
               "passed": mismatch is None,
               "witness": None if mismatch is None else {
                   "n": str(mismatch),
                   **{m: str(tables[m][mismatch]) for m in methods}}}
    lines = ["n\t" + "\t".join(methods)]
    lines += [f"{n}\t" + "\t".join(str(tables[m][n]) for m in methods)
              for n in range(args.n_max + 1)]
    if mismatch is not None:
        lines.append(f"FAIL: methods disagree at n={mismatch}")
    _emit(payload, args.json, lines)
    return 0 if mismatch is None else 1


def _build_instance(args, parser):
    try:
        return build(args.family, **(args.param or {}))
    except BadParams as e:
        parser.error(str(e))


def _cmd_series(args, parser) -> int:
    instance = _build_instance(args, parser)
    system = lower(instance.body)
    solution = solve(system, args.order)
    coeffs = {name: solution[name].require_counts().coeffs
              for name in system.unknowns}
    payload = {"command": "series", "family": instance.family,
               "params": {k: str(v) for k, v in instance.params.items()},
               "order": str(args.order),
               "system": str(system).splitlines(),
               "coefficients": {n: [str(c) for c in cs] for n, cs in coeffs.items()}}
    lines = str(system).splitlines()
    lines += [f"{name}: " + ", ".join(str(c) for c in cs)
              for name, cs in coeffs.items()]
    if args.dump_grammar:
        body_text = instance.body.to_text()
        payload["body"] = body_text.splitlines()
        lines = body_text.splitlines() + [""] + lines
    _emit(payload, args.json, lines)
    return 0


def _cmd_verify(args, parser) -> int:
    instance = _build_instance(args, parser)
    report = verify_family(instance, max_len=args.max_len, n_max=args.n_max,
                           order=args.order)
    failing = [c for c in report.checks if not c.passed]
    payload = {"command": "verify", "family": instance.family,
               "params": {k: str(v) for k, v in instance.params.items()},
               "max_len": str(args.max_len), "n_max": str(args.n_max),
               "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                          for c in report.checks],
               "counts": {m: [str(c) for c in report.counts.counts[m]]
                          for m in report.counts.methods},
               "passed": report.passed,
               "witness": None if report.passed else {
                   "check": failing[0].name if failing else "counts",
                   "detail": failing[0].detail if failing else ""}}
    lines = [f"{str(instance)}: {instance.quad}"]
    lines += [("PASS " if c.passed else "FAIL ") + c.name
              + (f" ({c.detail})" if c.detail else "") for c in report.checks]
    lines.append("PASS" if report.passed else "FAIL")
    _emit(payload, args.json, lines)
    return 0 if report.passed else 1


def _cmd_identify(args) -> int:
    matches = [sid.value for sid in identify(args.terms)]
    payload = {"command": "identify",
               "terms": [str(t) for t in args.terms], "matches": matches}
    _emit(payload, args.json, matches)
    return 0


def _cmd_bijection(args) -> int:
    report = verify_counts(args.semilength, cap=args.cap)
    payload = {"command": "bijection", "max_semilength": str(args.semilength),
               "rows": [{"semilength": str(r.semilength),
                         "paths": str(r.path_count), "walks": str(r.walk_count),
                         "expected": str(r.expected),
                         "round_trip": r.round_trip_ok} for r in report.rows],
               "passed": report.passed}
    lines = [f"m={r.semilength}\tpaths={r.path_count}\twalks={r.walk_count}"
             f"\texpected={r.expected}\troundtrip={'ok' if r.round_trip_ok else 'BAD'}"
             for r in report.rows]
    lines.append("PASS" if report.passed else "FAIL")
    _emit(payload, args.json, lines)
    return 0 if report.passed else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckgram",
        description="Exact enumeration and generating functions for restricted Dyck paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--json", action="store_true", help="emit one JSON object")

    quad = argparse.ArgumentParser(add_help=False)
    empty = parse_set("")
    quad.add_argument("--peaks", type=_set_arg, default=empty,
                      help="peak heights to avoid, e.g. 'ap(2,3)' or '2,5..7'")
    quad.add_argument("--valleys", type=_set_arg, default=empty,
                      help="valley heights to avoid")
    quad.add_argument("--upruns", type=_set_arg, default=empty,
                      help="up-run lengths to avoid, e.g. '3..'")
    quad.add_argument("--downruns", type=_set_arg, default=empty,
                      help="down-run lengths to avoid")
    quad.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                      help="enumeration cap on the semilength")

    p = sub.add_parser("enumerate", parents=[flags, quad],
                       help="list satisfying paths of one semilength")
    p.add_argument("-n", type=int, required=True, help="semilength")

    p = sub.add_parser("count", parents=[flags, quad],
                       help="count satisfying paths for each semilength")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=("brute", "dp", "both"), default="both")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", required=True, choices=FAMILY_IDS)
    fam.add_argument("--param", type=_params_arg, default={},
                     help="family parameters, e.g. 'A=2,B=1'")

    p = sub.add_parser("series", parents=[flags, fam],
                       help="lower a family and solve its series system")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--dump-grammar", action="store_true",
                   help="also print the grammar or equation")

    p = sub.add_parser("verify", parents=[flags, fam],
                       help="run every cross-check for a family instance")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN,
                   help="word-check length bound")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX,
                   help="count-check semilength bound")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("identify", parents=[flags],
                       help="match a count prefix against the reference sequences")
    p.add_argument("--terms", type=_terms_arg, required=True,
                   help="at least 4 leading terms, e.g. '1,1,2,5,14'")

    p = sub.add_parser("bijection", parents=[flags],
                       help="certify the walk correspondence by full enumeration")
    p.add_argument("--semilength", type=int, default=DEFAULT_BIJECTION_MAX)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "series":
            return _cmd_series(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "identify":
            return _cmd_identify(args)
        return _cmd_bijection(args)
    except (ResourceLimit, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
