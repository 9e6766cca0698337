"""Command-line interface: ``ltsig {l2,profile,introplot,slice,verify}``.

Records go to stdout (or ``--output``) as JSON lines or RFC 4180 CSV; every
rational is written as an exact ``numerator/denominator`` string next to a
``*_decimal`` approximation.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction

from ltsig import torus
from ltsig.knots import DomainError, TorusKnotParams, circle_breakpoints, torus_seifert_matrix
from ltsig.l2 import ROUTES, l2_from_profile, l2_torus
from ltsig.signature import DEFAULT_PRECISION_BITS, signature_profile
from ltsig.slice import double_candidates, twist_verdict

SCHEMA = "ltsig/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("ltsig")


class UsageError(Exception):
    pass


def rational(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def decimal(v) -> str:
    return f"{float(Fraction(v)):.12g}"


def _rational_fields(name: str, v) -> dict:
    return {name: rational(v), f"{name}_decimal": decimal(v)}


def _params(p: int, q: int) -> TorusKnotParams:
    try:
        return TorusKnotParams(p, q)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed rational {text!r}") from None


def _to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    return buf.getvalue()


def _to_jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=False, ensure_ascii=False) + "\n" for r in records)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_l2(args) -> int:
    params = _params(args.p, args.q)
    routes = ROUTES if args.route == "all" else (args.route,)
    values = {r: l2_torus(params, r, precision_bits=args.precision_bits) for r in routes}
    agreement = len(set(values.values())) == 1
    value = values[routes[0]]
    record = {
        "schema": SCHEMA,
        "command": "l2",
        "p": params.p,
        "q": params.q,
        **_rational_fields("value", value),
        "routes": {r: rational(v) for r, v in values.items()},
        "agreement": agreement,
    }
    text = _to_csv([record]) if args.format == "csv" else _to_jsonl([record])
    _emit(text, args.output)
    return EXIT_OK if agreement else EXIT_FAIL


def cmd_profile(args) -> int:
    params = _params(args.p, args.q)
    if args.source == "matrix":
        profile = signature_profile(
            torus_seifert_matrix(params), circle_breakpoints(params), precision_bits=args.precision_bits
        )
    else:
        profile = torus.jump_profile(params)
    sectors = profile.sector_values()
    circle_sectors = sectors[:-1] if len(sectors) > 1 else sectors
    record = {
        "schema": SCHEMA,
        "command": "profile",
        "p": params.p,
        "q": params.q,
        "source": args.source,
        "breakpoints": [rational(x) for x in profile.points],
        "jumps": profile.jumps,
        "sectors": circle_sectors,
        **_rational_fields("l2", l2_from_profile(profile)),
    }
    if args.format == "csv":
        cuts = [Fraction(0)] + profile.points + [Fraction(1)]
        rows = [
            {"start": rational(a), "end": rational(b), "signature": s, "jump_at_start": (0 if i == 0 else profile.jumps[i - 1])}
            for i, (a, b, s) in enumerate(zip(cuts, cuts[1:], sectors))
        ]
        text = _to_csv(rows)
    else:
        text = _to_jsonl([record])
    _emit(text, args.output)
    return EXIT_OK


def render_svg(series: list[int], title: str) -> str:
    """Minimal static SVG polyline of (n, 2s(n)) with axes."""
    width, height, pad = 640, 360, 40
    n_max = max(len(series), 1)
    lo, hi = min(series + [0]), max(series + [0])
    span = max(hi - lo, 1)

    def px(n: int) -> str:
        return f"{pad + (width - 2 * pad) * n / n_max:.2f}"

    def py(v: int) -> str:
        return f"{height - pad - (height - 2 * pad) * (v - lo) / span:.2f}"

    points = " ".join(f"{px(n)},{py(v)}" for n, v in enumerate(series, start=1))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f"  <title>{title}</title>\n"
        f'  <line x1="{pad}" y1="{py(0)}" x2="{width - pad}" y2="{py(0)}" stroke="black" stroke-width="1"/>\n'
        f'  <line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black" stroke-width="1"/>\n'
        f'  <text x="{pad}" y="{pad - 10}" font-size="12">2s(n), min {lo}, max {hi}</text>\n'
        f'  <text x="{width - pad}" y="{height - 10}" font-size="12" text-anchor="end">n = 1..{len(series)}</text>\n'
        f'  <polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>\n'
        "</svg>\n"
    )


def cmd_introplot(args) -> int:
    params = _params(args.p, args.q)
    series = torus.doubled_partial_sums(params)
    if args.format == "svg":
        text = render_svg(series, f"2s(n) for p={params.p}, q={params.q}")
    elif args.format == "json":
        text = _to_jsonl([{"schema": SCHEMA, "command": "introplot", "p": params.p, "q": params.q,
                           "n": list(range(1, len(series) + 1)), "two_s": series}])
    else:
        text = _to_csv([{"n": n, "two_s": v} for n, v in enumerate(series, start=1)])
    _emit(text, args.output)
    return EXIT_OK


def _jsonable(v):
    if isinstance(v, Fraction):
        return rational(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def cmd_slice(args) -> int:
    if args.subject == "twist":
        try:
            n = int(args.value)
        except ValueError:
            raise UsageError(f"twist knot index must be an integer, got {args.value!r}") from None
        verdict = twist_verdict(n)
        witness = {k: _jsonable(v) for k, v in verdict.witness.items()}
        for key in ("l2", "x"):
            if key in verdict.witness:
                witness[f"{key}_decimal"] = decimal(verdict.witness[key])
        record = {
            "schema": SCHEMA,
            "command": "slice",
            "subject": "twist",
            "n": n,
            "verdict": verdict.verdict.value,
            "witness": witness,
            "reason": verdict.reason,
        }
    else:
        s_k = _parse_rational(args.value)
        record = {
            "schema": SCHEMA,
            "command": "slice",
            "subject": "double",
            **_rational_fields("s_K", s_k),
            "candidates": double_candidates(s_k),
        }
    text = _to_csv([record]) if args.format == "csv" else _to_jsonl([record])
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    from ltsig import verify

    if args.max < 0:
        raise UsageError("--max must be non-negative")
    start = time.perf_counter()
    report = verify.run(args.max, jobs=args.jobs, precision_bits=args.precision_bits,
                        inject_fault=args.inject_fault)
    elapsed = time.perf_counter() - start
    _emit(_to_jsonl([report]), args.output)
    print(f"verify: {report['status']}, {report['total_checks']} checks, {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ltsig", description=__doc__.splitlines()[0])
    parser.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS,
                        help="precision ceiling for certified inertia (default %(default)s)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("-o", "--output", help="write to file instead of stdout")
        p.add_argument("--precision-bits", type=int, default=argparse.SUPPRESS)
        p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    p = sub.add_parser("l2", help="L2 signature of T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--route", choices=ROUTES + ("all",), default="all")
    add_common(p, ("json", "csv"), "json")
    p.set_defaults(func=cmd_l2)

    p = sub.add_parser("profile", help="signature step profile of T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--source", choices=("jumps", "matrix"), default="jumps")
    add_common(p, ("json", "csv"), "json")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("introplot", help="series (n, 2s(n)) for n = 1..pq-1")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_common(p, ("csv", "svg", "json"), "csv")
    p.set_defaults(func=cmd_introplot)

    p = sub.add_parser("slice", help="slice obstructions for twist knots and twisted doubles")
    p.add_argument("subject", choices=("twist", "double"))
    p.add_argument("value", help="n for 'twist'; the companion's L2 signature for 'double'")
    add_common(p, ("json", "csv"), "json")
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("verify", help="run the cross-route verification sweeps")
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    add_common(p, ("json",), "json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ltsig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
