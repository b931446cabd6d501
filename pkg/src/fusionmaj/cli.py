"""Command line entry point: ``fusionmaj suite|verify|table|list``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .checks import CHECKS, SuiteConfig, reports_document, reports_tsv, run_suite, timings_document
from .tables import KINDS, UsageError, emit_table

log = logging.getLogger("fusionmaj")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _add_suite_flags(p):
    p.add_argument("--config", help="flat JSON key/value file; keys mirror flag names")
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--k-max", type=_positive)
    p.add_argument("--degree-max", type=_positive)
    p.add_argument("--z-points", choices=["consecutive", "geometric"])
    p.add_argument("--jobs", type=_positive)
    p.add_argument("--out", help="directory for reports.json / timings.json")
    p.add_argument("--format", choices=["json", "tsv"])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fusionmaj", description="Exact checks of the major-index / fusion-product identities.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    suite = sub.add_parser("suite", help="run every registered check")
    _add_suite_flags(suite)

    verify = sub.add_parser("verify", help="run one named check")
    verify.add_argument("check", choices=sorted(CHECKS))
    verify.add_argument("--N", type=_positive, dest="n_max_alias", help="alias for --n-max")
    _add_suite_flags(verify)

    table = sub.add_parser("table", help="emit a table")
    table.add_argument("kind", choices=KINDS)
    table.add_argument("--N", type=int)
    table.add_argument("--k", type=int)
    table.add_argument("--z-points", default="consecutive")
    table.add_argument("--format", choices=["json", "tsv"])
    table.add_argument("--out", help="output file (default: stdout)")

    sub.add_parser("list", help="list check names")
    return parser


def _config(args) -> SuiteConfig:
    data = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
        if not isinstance(data, dict) or any(isinstance(v, (dict, list)) for v in data.values()):
            raise ValueError("configuration must be a flat JSON object")
    for key in ("n_max", "k_max", "degree_max", "z_points", "jobs", "out", "format"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    if getattr(args, "n_max_alias", None) is not None:
        data["n_max"] = args.n_max_alias
    if getattr(args, "check", None):
        data["only"] = [args.check]
    return SuiteConfig.from_mapping(data)


def _prepare_out(path: str) -> None:
    os.makedirs(path, exist_ok=True)
    probe = os.path.join(path, ".write-probe")
    with open(probe, "w") as fh:
        fh.write("")
    os.remove(probe)


def _run(cfg: SuiteConfig) -> int:
    if cfg.out:
        try:
            _prepare_out(cfg.out)
        except OSError as exc:
            print(f"fusionmaj: cannot write to --out {cfg.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    reports = run_suite(cfg)
    for r in reports:
        print(r.to_json())
    if cfg.out:
        if cfg.format == "tsv":
            with open(os.path.join(cfg.out, "reports.tsv"), "w") as fh:
                fh.write(reports_tsv(reports))
        else:
            with open(os.path.join(cfg.out, "reports.json"), "w") as fh:
                fh.write(reports_document(reports))
        with open(os.path.join(cfg.out, "timings.json"), "w") as fh:
            fh.write(timings_document(reports))
    failed = [r.check for r in reports if r.status == "fail"]
    log.info("%d checks, %d failed", len(reports), len(failed))
    return EXIT_FAIL if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.command == "list":
        print("\n".join(sorted(CHECKS)))
        return EXIT_OK
    if args.command == "table":
        try:
            text = emit_table(args.kind, N=args.N, k=args.k, z_points=args.z_points, fmt=args.format)
        except UsageError as exc:
            print(f"fusionmaj: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    try:
        cfg = _config(args)
    except (ValueError, OSError) as exc:
        print(f"fusionmaj: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return _run(cfg)


if __name__ == "__main__":
    sys.exit(main())
