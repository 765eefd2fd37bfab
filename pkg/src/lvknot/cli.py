"""Command-line front end: every command is a thin wrapper over the library.

Results go to stdout as JSON, one object per line; diagnostics go to stderr.
Exit codes: 0 success, 1 usage error, 2 bad input data, 3 verification failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from . import acceptance
from .diagram import (
    DiagramError,
    closure,
    concatenate,
    inverse,
    parse_gauss_code,
)
from .equivalence import (
    CertificateError,
    ConfigCase,
    bounded_equivalence,
    dumps_certificate,
    generate_band_pass_pair,
    loads_certificate,
    ribbon_certificate,
    trivialize_inverse_pair,
    verify_certificate,
)
from .invariants import report
from .moves import MoveError, MoveEvent, MoveKind, apply, enumerate_moves

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(obj) -> None:
    print(json.dumps(obj))


def read_codes(inline: Sequence[str], files: Sequence[str]) -> list[str]:
    """Inline codes first, then non-comment lines of each file in order."""
    codes = list(inline)
    for path in files:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    codes.append(line)
    return codes


def _invariant_record(code: str) -> dict:
    return {"code": code, **report(parse_gauss_code(code)).as_record()}


def _map(fn, items: list, jobs: int) -> Iterable:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map keeps input order
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_invariants(args) -> int:
    codes = read_codes(args.codes, args.file)
    if not codes:
        raise UsageError("no input codes")
    records = _map(_invariant_record, codes, args.jobs)
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["code", "v21", "v22", "beta", "w"])
        for r in records:
            w = " ".join(f"{e}:{c}" for e, c in r["w"])
            writer.writerow([r["code"], r["v21"], r["v22"], r["beta"], w])
    else:
        for r in records:
            _emit(r)
    return EXIT_OK


def cmd_move(args) -> int:
    d = parse_gauss_code(args.code)
    if args.list:
        kinds = [MoveKind(k) for k in args.kinds] if args.kinds else list(MoveKind)
        for m in enumerate_moves(d, kinds):
            _emit({"move": m.to_text()})
        return EXIT_OK
    if not args.event:
        raise UsageError("give a move such as 'R1_remove 1', or --list")
    for text in args.event:
        d = apply(d, MoveEvent.from_text(text))
    _emit({"code": str(d)})
    return EXIT_OK


def cmd_closure(args) -> int:
    for code in read_codes(args.codes, args.file):
        _emit({"code": code, "closed": closure(parse_gauss_code(code)).canonical()})
    return EXIT_OK


def cmd_concat(args) -> int:
    _emit({"code": str(concatenate(parse_gauss_code(args.a), parse_gauss_code(args.b)))})
    return EXIT_OK


def cmd_inverse(args) -> int:
    for code in read_codes(args.codes, args.file):
        _emit({"code": code, "inverse": str(inverse(parse_gauss_code(code)))})
    return EXIT_OK


def cmd_pair_gen(args) -> int:
    case = ConfigCase(args.configuration, args.base_arc, args.variant)
    d1, d2, site = generate_band_pass_pair(case, args.extra, args.seed)
    _emit({"d1": str(d1), "d2": str(d2), "site": list(site.arrows),
           "beta": [report(d1).beta, report(d2).beta]})
    return EXIT_OK


def cmd_certify(args) -> int:
    k = parse_gauss_code(args.code)
    if args.saddle:
        cert = ribbon_certificate(k, [((c1, g1), (c2, g2)) for c1, g1, c2, g2 in args.saddle])
    else:
        cert = trivialize_inverse_pair(k)
    text = dumps_certificate(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    mode = "ribbon" if args.ribbon else "concordance"
    status = EXIT_OK
    for path in args.files:
        with open(path, encoding="utf-8") as fh:
            cert = loads_certificate(fh.read())
        v = verify_certificate(cert, mode)
        _emit({"file": path, "mode": mode, "accepted": v.accepted,
               "failed_step": v.failed_step, "reason": v.reason})
        if not v:
            status = EXIT_VERIFY
    return status


def cmd_search(args) -> int:
    a, b = parse_gauss_code(args.a), parse_gauss_code(args.b)
    path = bounded_equivalence(a, b, args.max_arrows, args.max_steps, band_pass=args.band_pass)
    _emit({"found": path is not None,
           "path": None if path is None else [m.to_text() for m in path]})
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = acceptance.run_all()
    print(acceptance.format_table(results, timings=not args.no_timings))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lvknot", description="Gauss diagram invariants, moves and certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def codes_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("codes", nargs="*", help="inline Gauss codes")
        s.add_argument("-f", "--file", action="append", default=[], help="file with one code per line")
        s.set_defaults(fn=fn)
        return s

    s = codes_cmd("invariants", cmd_invariants, "v21, v22, beta and w for each code")
    s.add_argument("--csv", action="store_true", help="flat CSV instead of JSON")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (output order is kept)")

    s = sub.add_parser("move", help="apply moves, or list the legal ones")
    s.add_argument("code")
    s.add_argument("event", nargs="*", help="move in text form, e.g. 'R2_remove 1 2'")
    s.add_argument("--list", action="store_true")
    s.add_argument("--kind", dest="kinds", action="append", choices=[k.value for k in MoveKind])
    s.set_defaults(fn=cmd_move)

    codes_cmd("closure", cmd_closure, "canonical closed diagram")
    codes_cmd("inverse", cmd_inverse, "reverse the word and negate the signs")

    s = sub.add_parser("concat", help="concatenate two long diagrams")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(fn=cmd_concat)

    s = sub.add_parser("pair-gen", help="two diagrams differing by one band-pass")
    s.add_argument("--configuration", type=int, default=1, choices=range(1, 6))
    s.add_argument("--base-arc", type=int, default=1, choices=range(1, 5))
    s.add_argument("--variant", type=int, default=1, choices=(1, 2))
    s.add_argument("--extra", type=int, default=0, help="random extra arrows")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(fn=cmd_pair_gen)

    s = sub.add_parser("certify", help="ribbon certificate for K # K^-1, or for K with given saddles")
    s.add_argument("code")
    s.add_argument("--saddle", nargs=4, type=int, action="append", metavar=("C1", "G1", "C2", "G2"))
    s.add_argument("-o", "--out")
    s.set_defaults(fn=cmd_certify)

    s = sub.add_parser("verify", help="replay and check certificate files")
    s.add_argument("files", nargs="+")
    s.add_argument("--ribbon", action="store_true", help="also forbid births")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("search", help="bounded Reidemeister search between two diagrams")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-arrows", type=int, default=6)
    s.add_argument("--max-steps", type=int, default=4)
    s.add_argument("--band-pass", action="store_true")
    s.set_defaults(fn=cmd_search)

    s = sub.add_parser("selftest", help="run the acceptance checks")
    s.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    s.set_defaults(fn=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"lvknot: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DiagramError, MoveError, CertificateError, ValueError, OSError) as e:
        print(f"lvknot: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
