"""Report rendering: text tables, markdown tables, canonical JSON.

All three formats carry the same information; only layout differs.  The
JSON form is re-parseable into equal values via the from_json helpers.
"""

from __future__ import annotations

import json

from .compat import CompatibilityReport, Verdict
from .docio.diff import ChangeKind, DiffEntry, DocumentDiff
from .findings import Dimension, Finding, Severity
from .validator import CompletenessScore, TemplateScore

_RESET = "\x1b[0m"
_SEVERITY_COLOR = {
    Severity.ERROR: "\x1b[31m",
    Severity.WARNING: "\x1b[33m",
    Severity.INFO: "\x1b[36m",
}
_VERDICT_COLOR = {
    Verdict.COMPATIBLE: "\x1b[32m",
    Verdict.CONDITIONALLY_COMPATIBLE: "\x1b[33m",
    Verdict.INCOMPATIBLE: "\x1b[31m",
}


def _paint(text: str, code: str, color: bool) -> str:
    return f"{code}{text}{_RESET}" if color else text


def _table(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]

    def fmt(cells: tuple[str, ...]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return [fmt(header)] + [fmt(r) for r in rows]


def _md_table(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    def esc(cell: str) -> str:
        return cell.replace("|", "\\|")

    lines = ["| " + " | ".join(header) + " |", "| " + " | ".join("---" for _ in header) + " |"]
    lines += ["| " + " | ".join(esc(c) for c in row) + " |" for row in rows]
    return lines


def _summary(findings) -> str:
    errors = sum(1 for f in findings if f.severity is Severity.ERROR)
    warnings = sum(1 for f in findings if f.severity is Severity.WARNING)
    return f"{errors} errors, {warnings} warnings"


def _finding_json(f: Finding) -> dict:
    return {
        "severity": f.severity.value,
        "code": f.code,
        "path": f.path,
        "message": f.message,
        "dimension": f.dimension.value,
    }


def finding_from_json(value: dict) -> Finding:
    return Finding(
        Severity(value["severity"]),
        value["code"],
        value["path"],
        value["message"],
        Dimension(value["dimension"]),
    )


def _dump(value) -> str:
    return json.dumps(value, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# per-value renderers


def _render_findings_text(findings, color: bool) -> list[str]:
    if not findings:
        return ["OK: 0 errors, 0 warnings"]
    lines = _table(
        ("SEVERITY", "CODE", "PATH", "MESSAGE"),
        [(f.severity.value, f.code, f.path or "-", f.message) for f in findings],
    )
    if color:
        # repaint the first cell of each data row
        painted = [lines[0]]
        for f, line in zip(findings, lines[1:]):
            token = f.severity.value
            painted.append(
                _paint(token, _SEVERITY_COLOR[f.severity], True) + line[len(token):]
            )
        lines = painted
    lines.append(_summary(findings))
    return lines


def _render_findings_markdown(findings) -> list[str]:
    if not findings:
        return ["OK: 0 errors, 0 warnings"]
    lines = _md_table(
        ("Severity", "Code", "Path", "Message"),
        [(f.severity.value, f.code, f.path or "-", f.message) for f in findings],
    )
    lines += ["", _summary(findings)]
    return lines


def _render_diff_text(diff: DocumentDiff) -> list[str]:
    if not diff.entries:
        return ["no differences"]
    lines = _table(
        ("CHANGE", "BREAKING", "PATH", "DETAIL"),
        [
            (e.change.value, "yes" if e.breaking else "no", e.path, e.detail)
            for e in diff.entries
        ],
    )
    breaking = sum(1 for e in diff.entries if e.breaking)
    lines.append(f"{len(diff.entries)} changes, {breaking} breaking")
    return lines


def _render_diff_markdown(diff: DocumentDiff) -> list[str]:
    if not diff.entries:
        return ["no differences"]
    lines = _md_table(
        ("Change", "Breaking", "Path", "Detail"),
        [
            (e.change.value, "yes" if e.breaking else "no", e.path, e.detail)
            for e in diff.entries
        ],
    )
    breaking = sum(1 for e in diff.entries if e.breaking)
    lines += ["", f"{len(diff.entries)} changes, {breaking} breaking"]
    return lines


def _diff_json(diff: DocumentDiff) -> dict:
    return {
        "entries": [
            {
                "path": e.path,
                "change": e.change.value,
                "breaking": e.breaking,
                "detail": e.detail,
            }
            for e in diff.entries
        ],
        "breaking": diff.has_breaking,
    }


def diff_from_json(value: dict) -> DocumentDiff:
    return DocumentDiff(
        tuple(
            DiffEntry(e["path"], ChangeKind(e["change"]), e["breaking"], e["detail"])
            for e in value["entries"]
        )
    )


_TEMPLATE_ORDER = ("model_card", "hardware", "software", "autonomy", "considerations")


def _render_completeness_rows(score: CompletenessScore) -> list[tuple[str, str, str, str]]:
    rows = []
    for name, template in score.templates():
        if template is None:
            continue
        rows.append(
            (name, str(template.present), str(template.required), repr(template.ratio))
        )
    return rows


def _completeness_json(score: CompletenessScore) -> dict:
    templates = {}
    for name, template in score.templates():
        templates[name] = (
            None
            if template is None
            else {
                "present": template.present,
                "required": template.required,
                "ratio": template.ratio,
            }
        )
    return {"templates": templates, "overall": score.overall}


def completeness_from_json(value: dict) -> CompletenessScore:
    def template(entry) -> TemplateScore | None:
        return None if entry is None else TemplateScore(entry["present"], entry["required"])

    t = value["templates"]
    return CompletenessScore(
        template(t["model_card"]),
        template(t["hardware"]),
        template(t["software"]),
        template(t["autonomy"]),
        template(t["considerations"]),
        value["overall"],
    )


def _render_report_text(report: CompatibilityReport, color: bool) -> list[str]:
    lines = [f"Component {report.component_id!r} vs context {report.context_id!r}", ""]
    lines += _render_findings_text(report.findings, color)
    if report.dimension_scores:
        scores = "  ".join(
            f"{dim.value}={report.dimension_scores[dim]!r}"
            for dim in Dimension
            if dim in report.dimension_scores
        )
        lines += ["", f"Dimension scores: {scores}"]
    verdict = _paint(report.verdict.value, _VERDICT_COLOR[report.verdict], color)
    lines += ["", f"Verdict: {verdict}"]
    return lines


def _render_report_markdown(report: CompatibilityReport) -> list[str]:
    lines = [
        f"## Compatibility: {report.component_id} vs {report.context_id}",
        "",
    ]
    lines += _render_findings_markdown(report.findings)
    if report.dimension_scores:
        lines += ["", "| Dimension | Score |", "| --- | --- |"]
        lines += [
            f"| {dim.value} | {report.dimension_scores[dim]!r} |"
            for dim in Dimension
            if dim in report.dimension_scores
        ]
    lines += ["", f"**Verdict:** {report.verdict.value}"]
    return lines


def _report_json(report: CompatibilityReport) -> dict:
    return {
        "component_id": report.component_id,
        "context_id": report.context_id,
        "verdict": report.verdict.value,
        "dimension_scores": {
            dim.value: report.dimension_scores[dim]
            for dim in Dimension
            if dim in report.dimension_scores
        },
        "findings": [_finding_json(f) for f in report.findings],
    }


def report_from_json(value: dict) -> CompatibilityReport:
    return CompatibilityReport(
        Verdict(value["verdict"]),
        tuple(finding_from_json(f) for f in value["findings"]),
        {Dimension(k): v for k, v in value["dimension_scores"].items()},
        value["component_id"],
        value["context_id"],
    )


# ---------------------------------------------------------------------------
# entry point


def render_report(value, format: str = "text", color: bool = False) -> str:
    """Render findings, a compatibility report, a diff, or a completeness
    score in the requested format ("text", "markdown", or "json")."""
    if format not in ("text", "markdown", "json"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(value, CompatibilityReport):
        if format == "json":
            return _dump(_report_json(value))
        lines = (
            _render_report_text(value, color)
            if format == "text"
            else _render_report_markdown(value)
        )
    elif isinstance(value, DocumentDiff):
        if format == "json":
            return _dump(_diff_json(value))
        lines = _render_diff_text(value) if format == "text" else _render_diff_markdown(value)
    elif isinstance(value, CompletenessScore):
        if format == "json":
            return _dump(_completeness_json(value))
        rows = _render_completeness_rows(value)
        if format == "text":
            lines = _table(("TEMPLATE", "PRESENT", "REQUIRED", "RATIO"), rows)
            lines.append(f"Overall completeness: {value.overall!r}")
        else:
            lines = _md_table(("Template", "Present", "Required", "Ratio"), rows)
            lines += ["", f"**Overall completeness:** {value.overall!r}"]
    else:
        findings = list(value)
        if format == "json":
            return _dump({"findings": [_finding_json(f) for f in findings]})
        lines = (
            _render_findings_text(findings, color)
            if format == "text"
            else _render_findings_markdown(findings)
        )
    return "\n".join(lines) + "\n"


def render_validation(findings, score: CompletenessScore, format: str, color: bool = False) -> str:
    """Combined output of the validate command: findings plus completeness."""
    if format == "json":
        return _dump(
            {
                "findings": [_finding_json(f) for f in findings],
                "completeness": _completeness_json(score),
            }
        )
    return (
        render_report(findings, format, color)
        + "\n"
        + render_report(score, format, color)
    )
