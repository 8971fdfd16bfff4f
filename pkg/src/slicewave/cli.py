"""Command-line entry point.

Subcommands:
  run           execute verification suites against a config
  list-catalog  print the closed-form catalog
  oracle-check  run only the catalog self-checks

Exit codes: 0 all checks pass, 1 check failures, 2 usage or configuration
errors, 3 catalog oracle self-check failure.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import OracleCheckError, catalog_lookup, catalog_names, oracle_check
from .config import ConfigError, apply_overrides, load_config
from .report import emit

EXIT_OK = 0
EXIT_CHECK_FAILURES = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicewave",
        description="Verification harness for slice-plane Clifford Fourier analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification suites")
    run.add_argument("--config", default=None, help="JSON config file (defaults apply if omitted)")
    run.add_argument("--set", dest="overrides", action="append", default=[],
                     metavar="KEY=VALUE", help="override a config key, e.g. grids.line_count=2049")
    run.add_argument("--out", default=None, metavar="PATH", help="write the JSON report here")
    run.add_argument("--csv", default=None, metavar="PATH", help="write the CSV report here")
    run.add_argument("--figures", default=None, metavar="DIR",
                     help="render report figures into this directory")
    run.add_argument("--parallel", action="store_true", help="run suites concurrently")

    sub.add_parser("list-catalog", help="list closed-form catalog entries")
    sub.add_parser("oracle-check", help="run catalog oracle self-checks only")
    return parser


def _cmd_run(args) -> int:
    try:
        cfg = load_config(args.config)
        cfg = apply_overrides(cfg, args.overrides)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    from .suites import run_suite  # deferred: heavy import

    try:
        report = run_suite(cfg, parallel=args.parallel)
    except OracleCheckError as exc:
        print(f"oracle self-check failed: {exc}", file=sys.stderr)
        return EXIT_ORACLE

    for r in report.records:
        status = "pass" if r.passed else "FAIL"
        print(f"[{status}] {r.suite:10s} {r.check:40s} value={r.value:.6g} "
              f"threshold={r.threshold:.6g}")
    s = report.summary()
    print(f"{s['passed']}/{s['total']} checks passed")

    if args.out:
        emit(report, "json", args.out)
        print(f"wrote {args.out}")
    if args.csv:
        emit(report, "csv", args.csv)
        print(f"wrote {args.csv}")
    if args.figures:
        from .figures import render_report_figures

        for path in render_report_figures(report, args.figures):
            print(f"wrote {path}")
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILURES


def _cmd_list_catalog() -> int:
    for name in catalog_names():
        entry, _, _ = catalog_lookup(name)
        print(entry.describe())
    return EXIT_OK


def _cmd_oracle_check() -> int:
    code = EXIT_OK
    for name in catalog_names():
        try:
            dev = oracle_check(name)
            print(f"[pass] {name}: max deviation {dev:.3e}")
        except OracleCheckError as exc:
            print(f"[FAIL] {name}: {exc}", file=sys.stderr)
            code = EXIT_ORACLE
    return code


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "list-catalog":
        return _cmd_list_catalog()
    return _cmd_oracle_check()


if __name__ == "__main__":
    sys.exit(main())
