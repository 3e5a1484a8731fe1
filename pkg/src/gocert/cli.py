"""Command line front end: analyze a configuration, verify a certificate, run self checks.

Exit codes: 0 for a finite verdict or a successful verification, 2 for an
inconclusive verdict, 1 for errors (including rejected certificates and
failed self checks).  Certificates go to stdout or --out; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .certificate import (
    build_certificate,
    error_document,
    serialize_certificate,
    serialize_document,
    verify_document,
)
from .places import make_ramification
from .rigidity import CurveType
from .selfcheck import selfcheck


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _parse_curve(text: str) -> tuple[int, int]:
    parts = _parse_int_list(text)
    if len(parts) != 2:
        raise ValueError(f"curve must be 'g,n', got {text!r}")
    return parts[0], parts[1]


def _load_config_file(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise ValueError("config file must hold a JSON object")
    allowed = {"p", "f", "ram_inf", "ram_fin", "curve"}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ValueError(f"unknown config keys {unknown}; allowed: {sorted(allowed)}")
    return doc


def _analyze_inputs(args: argparse.Namespace) -> tuple[int, int, list[int], int, tuple[int, int]]:
    if args.config is not None:
        doc = _load_config_file(args.config)
        try:
            p = int(doc["p"])
            f = int(doc["f"])
        except KeyError as exc:
            raise ValueError(f"config file is missing {exc}") from None
        ram_inf = [int(v) for v in doc.get("ram_inf", [])]
        ram_fin = int(doc.get("ram_fin", 0))
        curve = doc.get("curve")
        if not (isinstance(curve, list) and len(curve) == 2):
            raise ValueError("config curve must be a two-element list [g, n]")
        return p, f, ram_inf, ram_fin, (int(curve[0]), int(curve[1]))
    missing = [flag for flag, value in (("--p", args.p), ("--f", args.f), ("--curve", args.curve)) if value is None]
    if missing:
        raise ValueError(f"missing {', '.join(missing)} (or use --config)")
    return args.p, args.f, _parse_int_list(args.ram_inf), args.ram_fin, _parse_curve(args.curve)


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        p, f, ram_inf, ram_fin, (g, n) = _analyze_inputs(args)
        rd = make_ramification(f=f, p=p, s_inf=ram_inf, s_fin_count=ram_fin)
        ct = CurveType(g=g, n=n)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(serialize_document(error_document(str(exc))), args.out)
        return 1
    cert = build_certificate(rd, ct)
    _emit(serialize_certificate(cert), args.out)
    print(
        f"verdict: {cert.verdict} (nodes={len(cert.nodes)}, "
        f"root degree bound={cert.nodes[0].degree_bound})",
        file=sys.stderr,
    )
    return 0 if cert.verdict == "finite" else 2


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.infile, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = verify_document(doc)
    if result:
        print("verified", file=sys.stderr)
        return 0
    for failure in result.failures:
        print(f"rejected: {failure}", file=sys.stderr)
    return 1


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    report = selfcheck(args.max_f, _parse_int_list(args.primes))
    if not report.suites:
        print(f"no suites to run for max_f={args.max_f}")
        return 0
    for suite in report.suites:
        status = "PASS" if suite.passed else "FAIL"
        line = f"{status} {suite.name} (checked {suite.checked}, {suite.seconds:.2f}s)"
        if suite.counterexample is not None:
            line += f" counterexample: {suite.counterexample}"
        print(line)
    total = sum(suite.seconds for suite in report.suites)
    print(f"{'all suites passed' if report.ok else 'FAILURES PRESENT'} in {total:.2f}s")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gocert",
        description="Stratum recursion, Hasse degree bounds, and finiteness certificates "
        "for quaternionic Shimura data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="build a finiteness certificate")
    analyze.add_argument("--p", type=int, help="inert prime")
    analyze.add_argument("--f", type=int, help="number of archimedean places")
    analyze.add_argument("--ram-inf", default="", help="comma list of ramified archimedean places")
    analyze.add_argument("--ram-fin", type=int, default=0, help="count of ramified finite places")
    analyze.add_argument("--curve", help="curve type as 'g,n'")
    analyze.add_argument("--config", help="JSON config file instead of flags")
    analyze.add_argument("--out", help="write the certificate to this path instead of stdout")
    analyze.set_defaults(run=_cmd_analyze)

    verify = sub.add_parser("verify", help="replay and check a certificate document")
    verify.add_argument("--in", dest="infile", required=True, help="certificate path")
    verify.set_defaults(run=_cmd_verify)

    check = sub.add_parser("selfcheck", help="run the exhaustive invariant suites")
    check.add_argument("--max-f", type=int, default=4, help="largest place count to enumerate")
    check.add_argument("--primes", default="2,3", help="comma list of primes")
    check.set_defaults(run=_cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    raise SystemExit(main())
