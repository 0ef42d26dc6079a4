"""Command-line surface: series, ideal-dump, table, and verify.

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 resource
limit, 4 integrity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import catalog, verify
from .errors import (EXIT_INTEGRITY, EXIT_LIMIT, EXIT_OK, EXIT_USAGE,
                     IntegrityError, LimitExceeded, SpecParseError)
from .poly import LEX


@dataclass
class RunConfig:
    max_degree: int = 8
    timeout: float = 300.0
    gb_max_degree: int = 12
    fmt: str = "text"
    force: bool = False
    stretch: bool = False

    def __post_init__(self):
        if self.max_degree < 0:
            raise SpecParseError("max degree must be >= 0")
        if self.timeout <= 0:
            raise SpecParseError("timeout must be positive")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecParseError(message)


def _add_common(parser):
    parser.add_argument("--max-degree", type=int, default=8,
                        help="expansion depth D (default 8)")
    parser.add_argument("--timeout", type=float, default=300.0,
                        help="groebner timeout in seconds (default 300)")
    parser.add_argument("--gb-max-degree", type=int, default=12,
                        help="groebner pair-degree cap (default 12)")
    parser.add_argument("--format", dest="fmt", default="text",
                        choices=("text", "json", "csv", "markdown"))
    parser.add_argument("--force", action="store_true",
                        help="override catalog parameter caps")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="symtensor",
                             description="Exact Hilbert series of symmetric-tensor algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="graded dimensions for one spec")
    p_series.add_argument("spec")
    _add_common(p_series)

    p_dump = sub.add_parser("ideal-dump", help="print the generators of a groebner-backed spec")
    p_dump.add_argument("spec")

    p_table = sub.add_parser("table", help="one row per spec")
    p_table.add_argument("specs", nargs="+")
    _add_common(p_table)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--max-degree", type=int, default=8)
    p_verify.add_argument("--timeout", type=float, default=300.0)
    p_verify.add_argument("--gb-max-degree", type=int, default=12)
    p_verify.add_argument("--stretch", action="store_true",
                          help="also run the heavy Gr(2,4) item")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(max_degree=args.max_degree, timeout=args.timeout,
                     gb_max_degree=args.gb_max_degree,
                     fmt=getattr(args, "fmt", "text"),
                     force=getattr(args, "force", False),
                     stretch=getattr(args, "stretch", False))


def _evaluate(spec_text: str, config: RunConfig) -> catalog.SeriesReport:
    spec = catalog.parse_spec(spec_text)
    return catalog.evaluate(spec, max_degree=config.max_degree,
                            gb_timeout=config.timeout,
                            gb_max_degree=config.gb_max_degree,
                            force=config.force)


def _render_text(report: catalog.SeriesReport) -> str:
    lines = [f"spec: {report.spec_text}",
             "coefficients: " + " ".join(str(c) for c in report.coefficients)]
    if report.series is not None:
        lines.append(f"rational form: {report.series.render()}")
    lines.append(f"krull dim: {report.krull if report.krull is not None else 'unknown'}")
    lines.append(f"provenance: {report.provenance}")
    lines.append("flags: " + (", ".join(report.flags) if report.flags else "(none)"))
    if report.klein is not None:
        m = report.klein
        lines.append(f"molien recovered (d1,d2,d3,e): {m.molien.matched}")
        row_state = "consistent" if m.row_consistent else "inconsistent"
        lines.append(f"table row {m.row.name}: degrees {m.row.degrees}, "
                     f"relation {m.row.relation_text} [{row_state}]")
        if m.match is not None:
            lines.append(f"matches stated row: {m.match}")
        lines.append("matching table rows: "
                     + ("+".join(m.matching_rows) if m.matching_rows else "none"))
    return "\n".join(lines)


def _table_rows(reports, max_degree):
    header = ["spec"] + [f"c{i}" for i in range(max_degree + 1)] + ["krull", "provenance"]
    rows = [header]
    for r in reports:
        coeffs = list(r.coefficients[: max_degree + 1])
        coeffs += [""] * (max_degree + 1 - len(coeffs))
        rows.append([r.spec_text] + [str(c) for c in coeffs]
                    + [str(r.krull) if r.krull is not None else "", r.provenance])
    return rows


def _render_markdown(rows) -> str:
    out = ["| " + " | ".join(rows[0]) + " |",
           "|" + "|".join(" --- " for _ in rows[0]) + "|"]
    for row in rows[1:]:
        out.append("| " + " | ".join(row) + " |")
    return "\n".join(out)


def _render_csv(rows) -> str:
    return "\n".join(",".join(_csv_cell(c) for c in row) for row in rows)


def _csv_cell(value: str) -> str:
    if any(ch in value for ch in ",\"\n"):
        return '"' + value.replace('"', '""') + '"'
    return value


def cmd_series(args) -> int:
    config = _config_from_args(args)
    report = _evaluate(args.spec, config)
    if config.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    elif config.fmt in ("csv", "markdown"):
        rows = _table_rows([report], config.max_degree)
        print(_render_csv(rows) if config.fmt == "csv" else _render_markdown(rows))
    else:
        print(_render_text(report))
    return EXIT_OK


def cmd_ideal_dump(args) -> int:
    spec = catalog.parse_spec(args.spec)
    presentation = catalog.ideal_presentation_for(spec)
    if presentation is None:
        raise SpecParseError(
            f"{spec.text()} is a closed-form entry; it has no ideal presentation")
    for g in presentation.generators:
        print(g.render(LEX))
    return EXIT_OK


def cmd_table(args) -> int:
    config = _config_from_args(args)
    reports = [_evaluate(s, config) for s in args.specs]
    if config.fmt == "json":
        print(json.dumps([r.to_json_dict() for r in reports]))
    elif config.fmt == "csv":
        print(_render_csv(_table_rows(reports, config.max_degree)))
    else:
        print(_render_markdown(_table_rows(reports, config.max_degree)))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = verify.VerifyConfig(max_degree=args.max_degree,
                                 gb_timeout=args.timeout,
                                 gb_max_degree=args.gb_max_degree,
                                 stretch=args.stretch)
    results, _ = verify.run_verification(config)
    for r in results:
        tag = {verify.PASS: "PASS", verify.FAIL: "FAIL",
               verify.SKIP: "SKIP", verify.LIMIT: "LIMIT"}[r.status]
        print(f"[{tag}] {r.name} ({r.elapsed:.2f}s): {r.detail}")
    code = verify.exit_code(results)
    passed = sum(1 for r in results if r.status == verify.PASS)
    print(f"{passed}/{len(results)} checks passed; exit code {code}")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "series":
            return cmd_series(args)
        if args.command == "ideal-dump":
            return cmd_ideal_dump(args)
        if args.command == "table":
            return cmd_table(args)
        if args.command == "verify":
            return cmd_verify(args)
        raise SpecParseError(f"unknown command {args.command!r}")
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc} (pairs processed: {exc.pairs_processed}, "
              f"max degree reached: {exc.max_degree_reached}, "
              f"elapsed: {exc.elapsed:.2f}s)", file=sys.stderr)
        return EXIT_LIMIT
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
