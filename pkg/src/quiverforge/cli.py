"""Command-line interface.

Exit codes: 0 success, 1 negative result (invalid certificate or refuted
search), 2 usage error, 3 unknown verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import membership as mb
from . import serialization as ser
from .errors import InvalidInputCertificateError, QuiverError
from .quiver import Quiver, apply_sequence
from .search import SearchBudget, explore_class
from .canonical import canonical_form

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-classes", type=int, default=None, dest="max_classes")
    parser.add_argument("--max-depth", type=int, default=None, dest="max_depth")
    parser.add_argument("--max-entry", type=int, default=None, dest="max_entry")
    parser.add_argument("--max-ms", type=int, default=None, dest="max_ms")


def _budget_from_args(args: argparse.Namespace) -> SearchBudget:
    defaults = SearchBudget()
    return SearchBudget(
        max_iso_classes=args.max_classes if args.max_classes is not None else defaults.max_iso_classes,
        max_depth=args.max_depth if args.max_depth is not None else defaults.max_depth,
        max_abs_entry=args.max_entry if args.max_entry is not None else defaults.max_abs_entry,
        max_millis=args.max_ms if args.max_ms is not None else defaults.max_millis,
    )


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_quiver(path: str) -> Quiver:
    return ser.quiver_from_dict(_load_json(path))


def _emit(payload) -> None:
    print(ser.dumps_canonical(payload))


def _parse_sequence(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        raise QuiverError(f"bad mutation sequence {raw!r}; expected comma-separated integers")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverforge",
        description="Quiver mutation, covering pairs, class exploration, and membership certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mutate = sub.add_parser("mutate", help="apply mutations to a quiver")
    p_mutate.add_argument("file")
    p_mutate.add_argument("-k", action="append", type=int, default=[], dest="vertices")
    p_mutate.add_argument("-w", default=None, dest="sequence", help="comma-separated vertex list")

    p_analyze = sub.add_parser("analyze", help="acyclicity, sources, sinks, cycles, covering pairs")
    p_analyze.add_argument("file")

    p_canon = sub.add_parser("canon", help="canonical form and witnessing permutation")
    p_canon.add_argument("file")

    p_search = sub.add_parser("search", help="explore the mutation class up to isomorphism")
    p_search.add_argument("file")
    _add_budget_flags(p_search)

    p_certify = sub.add_parser("certify", help="search for a class-membership certificate")
    p_certify.add_argument("file")
    p_certify.add_argument(
        "--class",
        dest="class_id",
        required=True,
        choices=[c.value for c in mb.ClassId],
    )
    _add_budget_flags(p_certify)

    p_check = sub.add_parser("checkcert", help="verify a certificate against a quiver")
    p_check.add_argument("quiver")
    p_check.add_argument("cert")
    p_check.add_argument("--class", dest="class_id", default=None,
                         choices=[c.value for c in mb.ClassId])

    p_transform = sub.add_parser("transform", help="rewrite a certificate into another class")
    p_transform.add_argument("quiver")
    p_transform.add_argument("cert")
    p_transform.add_argument("--to", dest="target", required=True,
                             choices=["bprime", "lprime", "pprime"])

    p_scan = sub.add_parser("scan", help="scan for Banff-certified, Louise-uncertified quivers")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--samples", type=int, default=100)
    p_scan.add_argument("--max-mult", type=int, default=2, dest="max_mult")
    p_scan.add_argument("--exhaustive", action="store_true")
    _add_budget_flags(p_scan)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _load_certificate_doc(path: str, override: Optional[str]) -> tuple[mb.ClassId, mb.Certificate]:
    doc = _load_json(path)
    if isinstance(doc, dict) and "certificate" in doc:
        cert = ser.certificate_from_dict(doc["certificate"])
        raw_class = override if override is not None else doc.get("class")
    else:
        cert = ser.certificate_from_dict(doc)
        raw_class = override
    if raw_class is None:
        raise QuiverError('no class given: use --class or a {"class", "certificate"} document')
    return ser.class_id_from_string(raw_class), cert


_TRANSFORMS = {
    ("banff", "bprime"): lambda q, c: mb.bprime_from_banff(q, c),
    ("banff", "pprime"): lambda q, c: mb.pprime_from_bprime(mb.bprime_from_banff(q, c)),
    ("louise", "lprime"): lambda q, c: mb.lprime_from_louise(q, c),
    ("louise", "bprime"): lambda q, c: mb.bprime_from_banff(q, mb.louise_cert_to_banff_cert(c)),
    ("louise", "pprime"): lambda q, c: mb.pprime_from_bprime(
        mb.bprime_from_banff(q, mb.louise_cert_to_banff_cert(c))
    ),
    ("bprime", "pprime"): lambda q, c: mb.pprime_from_bprime(c),
    ("lprime", "bprime"): lambda q, c: mb.lprime_cert_to_bprime_cert(c),
    ("lprime", "pprime"): lambda q, c: mb.pprime_from_bprime(mb.lprime_cert_to_bprime_cert(c)),
}


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args)
    except (QuiverError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "mutate":
        q = _load_quiver(args.file)
        steps = (_parse_sequence(args.sequence) if args.sequence else []) + list(args.vertices)
        result = apply_sequence(q, steps)
        _emit(ser.quiver_to_dict(result))
        return EXIT_OK

    if args.command == "analyze":
        q = _load_quiver(args.file)
        _emit(ser.analysis_report(q))
        return EXIT_OK

    if args.command == "canon":
        q = _load_quiver(args.file)
        canon, sigma = canonical_form(q)
        _emit({"quiver": ser.quiver_to_dict(canon), "permutation": list(sigma.image)})
        return EXIT_OK

    if args.command == "search":
        q = _load_quiver(args.file)
        exploration = explore_class(q, _budget_from_args(args))
        _emit(ser.exploration_to_dict(exploration))
        return EXIT_OK

    if args.command == "certify":
        q = _load_quiver(args.file)
        class_id = ser.class_id_from_string(args.class_id)
        verdict = mb.derive_certificate(q, class_id, _budget_from_args(args))
        _emit(ser.certify_result_to_dict(class_id, verdict))
        if verdict.is_certified:
            return EXIT_OK
        if verdict.is_refuted:
            return EXIT_NEGATIVE
        return EXIT_UNKNOWN

    if args.command == "checkcert":
        q = _load_quiver(args.quiver)
        class_id, cert = _load_certificate_doc(args.cert, args.class_id)
        try:
            valid = mb.check_certificate(q, cert, class_id)
        except QuiverError:
            valid = False
        _emit({"class": class_id.value, "valid": valid})
        return EXIT_OK if valid else EXIT_NEGATIVE

    if args.command == "transform":
        q = _load_quiver(args.quiver)
        class_id, cert = _load_certificate_doc(args.cert, None)
        transform = _TRANSFORMS.get((class_id.value, args.target))
        if transform is None:
            print(
                f"error: no transformation from {class_id.value} to {args.target}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        try:
            result = transform(q, cert)
        except InvalidInputCertificateError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
        _emit({"class": args.target, "certificate": ser.certificate_to_dict(result)})
        return EXIT_OK

    if args.command == "scan":
        report = mb.scan_opac033(
            n=args.n,
            max_mult=args.max_mult,
            mode="exhaustive" if args.exhaustive else "sample",
            budget=_budget_from_args(args),
            seed=args.seed,
            samples=args.samples,
        )
        _emit(ser.scan_report_to_dict(report))
        return EXIT_OK

    if args.command == "serve":
        from .service import create_app
        import uvicorn

        uvicorn.run(create_app(), host=args.host, port=_resolve_port(args.port))
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command!r}")


def _resolve_port(flag_value: Optional[int]) -> int:
    """--port wins over QUIVERFORGE_PORT, which wins over 8000."""
    if flag_value is not None:
        return flag_value
    return int(os.environ.get("QUIVERFORGE_PORT", "8000"))


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
