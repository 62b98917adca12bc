"""Command-line front end: validate, check, diff, scaffold.

Exit code contract:
  0  success (validate: no Error findings; check: not Incompatible;
     diff: completed; scaffold: file written)
  1  domain negative (Error findings / Incompatible verdict / breaking
     changes under --fail-on-breaking / --strict escalation)
  2  usage errors, unreadable files, or parse failures
"""

from __future__ import annotations

import argparse
import os
import sys

from .compat import InvalidDocumentError, Verdict, assess_compatibility
from .docio.parse import ParseMode, ParseResult, parse_context, parse_document
from .docio.scaffold import TemplateKind, scaffold_template, write_document
from .docio.diff import diff_documents
from .findings import Severity
from .render import render_report, render_validation
from .validator import score_completeness, validate_document

_FORMATS = ("text", "markdown", "json")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aicd",
        description="Work with machine-readable interface control documents "
        "(.aicd.json) for AI-enabled components.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="check one document for semantic problems")
    p.add_argument("file", help="document to validate (.aicd.json)")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.add_argument(
        "--strict-parse",
        action="store_true",
        help="treat unknown fields as errors instead of warnings",
    )

    p = sub.add_parser("check", help="assess a component against a system context")
    p.add_argument("--component", required=True, help="component document")
    p.add_argument("--context", required=True, help="system context document")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.add_argument(
        "--strict",
        action="store_true",
        help="treat ConditionallyCompatible as a failure (exit 1)",
    )

    p = sub.add_parser("diff", help="compare two document revisions")
    p.add_argument("old", help="older document")
    p.add_argument("new", help="newer document")
    p.add_argument(
        "--fail-on-breaking",
        action="store_true",
        help="exit 1 when any breaking change is found",
    )
    p.add_argument("--format", choices=_FORMATS, default="text")

    p = sub.add_parser("scaffold", help="write a skeleton document")
    p.add_argument("--kind", required=True, choices=[k.value for k in TemplateKind])
    p.add_argument("--out", required=True, help="output path")

    return parser


def _color_enabled() -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _read_text(path: str) -> str | None:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except FileNotFoundError:
        print(f"error: cannot read '{path}': file not found", file=sys.stderr)
    except IsADirectoryError:
        print(f"error: cannot read '{path}': is a directory", file=sys.stderr)
    except PermissionError:
        print(f"error: cannot read '{path}': permission denied", file=sys.stderr)
    except UnicodeDecodeError:
        print(f"error: cannot read '{path}': not valid UTF-8", file=sys.stderr)
    return None


def _report_diagnostics(path: str, result: ParseResult) -> None:
    for diag in result.diagnostics:
        where = f"{path}:{diag.line}:{diag.column}"
        location = f" [{diag.path}]" if diag.path else ""
        print(
            f"{where}: {diag.severity.value.lower()}: {diag.message}{location}",
            file=sys.stderr,
        )


def _load(path: str, parse, mode: ParseMode = ParseMode.LAX):
    """Read and parse one file; returns the bound value or None after
    reporting the failure to stderr."""
    text = _read_text(path)
    if text is None:
        return None
    result = parse(text, mode)
    _report_diagnostics(path, result)
    if result.document is None:
        return None
    return result.document


def _cmd_validate(args) -> int:
    mode = ParseMode.STRICT if args.strict_parse else ParseMode.LAX
    doc = _load(args.file, parse_document, mode)
    if doc is None:
        return 2
    findings = validate_document(doc)
    score = score_completeness(doc)
    sys.stdout.write(render_validation(findings, score, args.format, _color_enabled()))
    has_error = any(f.severity is Severity.ERROR for f in findings)
    return 1 if has_error else 0


def _cmd_check(args) -> int:
    doc = _load(args.component, parse_document)
    if doc is None:
        return 2
    context = _load(args.context, parse_context)
    if context is None:
        return 2
    try:
        report = assess_compatibility(doc, context)
    except InvalidDocumentError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        for finding in exc.findings:
            print(
                f"  {finding.severity.value}: {finding.code}: "
                f"{finding.path or '-'}: {finding.message}",
                file=sys.stderr,
            )
        return 1
    sys.stdout.write(render_report(report, args.format, _color_enabled()))
    if report.verdict is Verdict.INCOMPATIBLE:
        return 1
    if report.verdict is Verdict.CONDITIONALLY_COMPATIBLE and args.strict:
        return 1
    return 0


def _cmd_diff(args) -> int:
    old = _load(args.old, parse_document)
    if old is None:
        return 2
    new = _load(args.new, parse_document)
    if new is None:
        return 2
    diff = diff_documents(old, new)
    sys.stdout.write(render_report(diff, args.format, _color_enabled()))
    if args.fail_on_breaking and diff.has_breaking:
        return 1
    return 0


def _cmd_scaffold(args) -> int:
    doc = scaffold_template(TemplateKind(args.kind))
    try:
        write_document(args.out, doc)
    except OSError as exc:
        print(f"error: cannot write '{args.out}': {exc.strerror or exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "check": _cmd_check,
    "diff": _cmd_diff,
    "scaffold": _cmd_scaffold,
}


def dispatch(argv: list[str]) -> int:
    """Run one invocation; returns the process exit code instead of exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    return _HANDLERS[args.command](args)


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
