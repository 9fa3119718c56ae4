"""Command-line sweep driver.

    partition-identity verify [--max-n N] [--s LO..HI] [--checks main,rewrite,...]
                              [--series-order N] [--oracle-cap N]
                              [--format text|json] [--jobs N|auto] [--output PATH]

Exit status is 0 when every cell passes, 1 when any cell fails and 2 on a
usage or configuration error.  The report body is deterministic; the text
format appends the wall-clock duration after a ``# non-canonical`` marker and
the json format writes it to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from partition_identity import identity
from partition_identity.comb import DEFAULT_ORACLE_CAP, compositions_of, partitions_of
from partition_identity.identity import CheckResult, MainParams

CHECKS = ("main", "rewrite", "transform", "chu", "reduced", "genfunc", "pbin-oracle")

CHU_MAX_N = 10
CHU_MAX_PARTS = 4
PBIN_ORACLE_MAX_SIZE = 8

NON_CANONICAL_MARKER = "# non-canonical"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 12
    s_range: tuple[int, int] = (1, 6)
    checks: tuple[str, ...] = CHECKS
    series_order: int = 16
    oracle_cap: int = DEFAULT_ORACLE_CAP
    format: str = "text"
    jobs: int = 1

    def validate(self) -> None:
        if self.max_n < 1:
            raise ConfigError("--max-n must be >= 1")
        lo, hi = self.s_range
        if lo < 1 or hi < lo:
            raise ConfigError("--s must be a nonempty range of positive integers")
        if not self.checks:
            raise ConfigError("--checks must name at least one check")
        unknown = sorted(set(self.checks) - set(CHECKS))
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        if self.series_order < 0:
            raise ConfigError("--series-order must be >= 0")
        if self.oracle_cap < 1:
            raise ConfigError("--oracle-cap must be >= 1")
        if self.format not in ("text", "json"):
            raise ConfigError("--format must be text or json")
        if self.jobs < 1:
            raise ConfigError("--jobs must be >= 1 or auto")

    def echo(self) -> dict[str, Any]:
        # only the fields that determine the report content
        return {
            "checks": [c for c in CHECKS if c in self.checks],
            "max_n": self.max_n,
            "oracle_cap": self.oracle_cap,
            "s_range": list(self.s_range),
            "series_order": self.series_order,
        }


@dataclass
class RunReport:
    config: dict[str, Any]
    results: list[CheckResult]
    totals: dict[str, int]
    duration: float = 0.0

    @property
    def all_passed(self) -> bool:
        return self.totals["fail"] == 0


def _cells(config: SweepConfig) -> list[tuple[str, tuple]]:
    s_values = range(config.s_range[0], config.s_range[1] + 1)
    cells: list[tuple[str, tuple]] = []
    checks = set(config.checks)
    for name in ("main", "rewrite"):
        if name in checks:
            cells += [
                (name, (n, r, s))
                for n in range(1, config.max_n + 1)
                for r in range(1, n + 1)
                for s in s_values
            ]
    if "transform" in checks:
        cells += [
            ("transform", (m, k, s))
            for m in range(1, config.max_n + 1)
            for k in range(1, config.max_n + 1)
            for s in s_values
        ]
    if "chu" in checks:
        for n in range(1, min(config.max_n, CHU_MAX_N) + 1):
            for l in range(1, min(n, CHU_MAX_PARTS) + 1):
                for r in range(l, n + 1):
                    for rcomp in compositions_of(r, l):
                        cells += [("chu", (n, rcomp, i, s)) for i in range(1, l + 1) for s in s_values]
    if "reduced" in checks:
        cells += [("reduced", (r, s)) for r in range(1, config.max_n + 1) for s in s_values]
    if "genfunc" in checks:
        for s in s_values:
            cells.append(("genfunc-chain", (s, config.series_order)))
            cells.append(("genfunc-row", (s, config.series_order)))
        cells.append(("genfunc-exp", (config.series_order,)))
    if "pbin-oracle" in checks:
        for size in range(0, min(config.oracle_cap, PBIN_ORACLE_MAX_SIZE) + 1):
            for mu in partitions_of(size):
                cells += [("pbin-oracle", (mu, r, config.oracle_cap)) for r in range(size + 1)]
    return cells


def run_cell(cell: tuple[str, tuple]) -> CheckResult:
    name, args = cell
    # looked up at call time so tests can patch the identity module
    dispatch: dict[str, Callable[..., CheckResult]] = {
        "main": lambda n, r, s: identity.verify_main(MainParams(n, r, s)),
        "rewrite": lambda n, r, s: identity.verify_rewrite(MainParams(n, r, s)),
        "transform": identity.verify_binomial_transform,
        "chu": identity.verify_chu_vandermonde,
        "reduced": identity.verify_reduced,
        "genfunc-chain": identity.verify_genfunc_chain,
        "genfunc-row": identity.verify_single_row_genfunc,
        "genfunc-exp": identity.verify_exp_log,
        "pbin-oracle": identity.verify_pbin_oracle,
    }
    return dispatch[name](*args)


def run_sweep(config: SweepConfig) -> RunReport:
    config.validate()
    start = time.perf_counter()
    cells = _cells(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run_cell, cells, chunksize=16))
    else:
        results = [run_cell(c) for c in cells]
    results.sort(key=CheckResult.sort_key)
    passed = sum(r.passed for r in results)
    return RunReport(
        config=config.echo(),
        results=results,
        totals={"pass": passed, "fail": len(results) - passed},
        duration=time.perf_counter() - start,
    )


def report_document(report: RunReport) -> dict[str, Any]:
    return {
        "config": report.config,
        "results": [
            {
                "check": r.check_name,
                "params": {k: list(v) if isinstance(v, tuple) else v for k, v in r.params.items()},
                "status": r.status,
                "lhs": r.lhs_value,
                "rhs": r.rhs_value,
                "witness": r.witness,
            }
            for r in report.results
        ],
        "totals": report.totals,
    }


def render_json_document(doc: dict[str, Any]) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _format_params(params: dict[str, Any]) -> str:
    parts = []
    for k, v in params.items():
        if isinstance(v, (list, tuple)):
            v = "(" + ",".join(map(str, v)) + ")"
        parts.append(f"{k}={v}")
    return " ".join(parts)


def _render_text(report: RunReport) -> str:
    cfg = report.config
    lines = [
        "partition identity verification",
        "config: " + " ".join(f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in cfg.items()),
        "",
    ]
    rows = [("check", "params", "status", "witness", "values")]
    for r in report.results:
        rows.append((
            r.check_name,
            _format_params(r.params),
            r.status,
            r.witness or "-",
            f"lhs={r.lhs_value} rhs={r.rhs_value}",
        ))
    widths = [max(len(row[c]) for row in rows) for c in range(4)]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row[:4], widths)) + "  " + row[4])
    lines.append("")
    lines.append(f"totals: pass={report.totals['pass']} fail={report.totals['fail']}")
    return "\n".join(lines) + "\n"


def render_report(report: RunReport, fmt: str = "text", trailer: bool = True) -> bytes:
    if fmt == "json":
        return render_json_document(report_document(report))
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = _render_text(report)
    if trailer:
        out += f"{NON_CANONICAL_MARKER}\nduration_seconds: {report.duration:.3f}\n"
    return out.encode("utf-8")


def canonical_section(rendered: bytes) -> bytes:
    """Strip the non-canonical trailer from a text report."""
    marker = ("\n" + NON_CANONICAL_MARKER + "\n").encode()
    head, sep, _ = rendered.partition(marker)
    return head + b"\n" if sep else rendered


def _parse_s_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            v = int(text)
            return (v, v)
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _parse_jobs(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


def _parse_checks(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partition-identity")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the verification sweep")
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--s", dest="s_range", type=_parse_s_range, default=(1, 6), metavar="LO..HI")
    v.add_argument("--checks", type=_parse_checks, default=CHECKS,
                   help="comma list from: " + ",".join(CHECKS))
    v.add_argument("--series-order", type=int, default=16)
    v.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=_parse_jobs, default=1, metavar="N|auto")
    v.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = SweepConfig(
        max_n=args.max_n,
        s_range=args.s_range,
        checks=args.checks,
        series_order=args.series_order,
        oracle_cap=args.oracle_cap,
        format=args.format,
        jobs=args.jobs,
    )
    try:
        report = run_sweep(config)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"partition-identity: error: {exc}", file=sys.stderr)
        return 2
    data = render_report(report, config.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    if config.format == "json":
        print(f"duration_seconds: {report.duration:.3f}", file=sys.stderr)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
