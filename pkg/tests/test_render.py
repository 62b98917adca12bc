"""Rendering of findings, diffs, completeness, and compatibility reports."""

import json
import random

import pytest

from aicd.compat import Verdict, assess_compatibility
from aicd.docio.diff import diff_documents
from aicd.findings import Dimension, Finding, Severity
from aicd.render import (
    completeness_from_json,
    diff_from_json,
    finding_from_json,
    render_report,
    render_validation,
    report_from_json,
)
from aicd.validator import CompletenessScore, TemplateScore, score_completeness, validate_document

from genlib import ERROR_MUTATIONS, gen_context, gen_document, pristine_document


F1 = Finding(Severity.ERROR, "BAD_RANGE", "signals[0]", "min 5.0 exceeds max 1.0", Dimension.SIGNAL)
F2 = Finding(Severity.WARNING, "PLACEHOLDER_TEXT", "meta.name", "placeholder text", Dimension.META)


def test_no_findings_renders_ok_line():
    assert render_report([], "text") == "OK: 0 errors, 0 warnings\n"
    assert render_report([], "markdown") == "OK: 0 errors, 0 warnings\n"


def test_text_table_alignment_and_summary():
    out = render_report([F1, F2], "text")
    lines = out.splitlines()
    assert lines[0].startswith("SEVERITY  CODE")
    assert lines[1].startswith("Error     BAD_RANGE")
    assert lines[2].startswith("Warning   PLACEHOLDER_TEXT")
    assert lines[-1] == "1 errors, 1 warnings"
    assert "\x1b[" not in out


def test_color_paints_severity_cell_only():
    out = render_report([F1], "text", color=True)
    assert "\x1b[31mError\x1b[0m" in out
    # header and message stay unpainted
    assert out.splitlines()[0] == render_report([F1], "text").splitlines()[0]


def test_markdown_one_row_per_finding():
    out = render_report([F1, F2], "markdown")
    lines = out.splitlines()
    assert lines[0] == "| Severity | Code | Path | Message |"
    assert lines[1] == "| --- | --- | --- | --- |"
    assert lines[2] == "| Error | BAD_RANGE | signals[0] | min 5.0 exceeds max 1.0 |"
    assert len([l for l in lines if l.startswith("| ")]) == 4
    assert lines[-1] == "1 errors, 1 warnings"


def test_markdown_escapes_pipes():
    f = Finding(Severity.INFO, "X", "p", "a | b", Dimension.META)
    out = render_report([f], "markdown")
    assert "a \\| b" in out


def test_findings_json_round_trip():
    out = render_report([F1, F2], "json")
    data = json.loads(out)
    back = [finding_from_json(v) for v in data["findings"]]
    assert back == [F1, F2]
    assert out.endswith("\n")


def test_unknown_format_rejected():
    with pytest.raises(ValueError, match="unknown format 'yaml'"):
        render_report([], "yaml")


def test_diff_rendering_and_round_trip():
    old = pristine_document()
    new = ERROR_MUTATIONS["BAD_RANGE"](random.Random(3), old)
    diff = diff_documents(old, new)
    assert diff.entries

    text = render_report(diff, "text")
    assert text.splitlines()[0].split() == ["CHANGE", "BREAKING", "PATH", "DETAIL"]
    assert text.splitlines()[-1].endswith("breaking")

    md = render_report(diff, "markdown")
    assert md.splitlines()[0] == "| Change | Breaking | Path | Detail |"

    back = diff_from_json(json.loads(render_report(diff, "json")))
    assert back == diff
    assert json.loads(render_report(diff, "json"))["breaking"] == diff.has_breaking


def test_empty_diff_rendering():
    d = diff_documents(pristine_document(), pristine_document())
    assert render_report(d, "text") == "no differences\n"
    assert render_report(d, "markdown") == "no differences\n"


def test_completeness_rendering_skips_inapplicable():
    score = CompletenessScore(
        model_card=None,
        hardware=TemplateScore(7, 14),
        software=None,
        autonomy=None,
        considerations=None,
        overall=0.5,
    )
    text = render_report(score, "text")
    assert "model_card" not in text
    assert "hardware  7        14        0.5" in text
    assert text.splitlines()[-1] == "Overall completeness: 0.5"

    md = render_report(score, "markdown")
    assert "| hardware | 7 | 14 | 0.5 |" in md
    assert "**Overall completeness:** 0.5" in md


def test_completeness_json_round_trip():
    score = score_completeness(pristine_document())
    back = completeness_from_json(json.loads(render_report(score, "json")))
    assert back == score

    partial = score_completeness(gen_document(random.Random(11)))
    back = completeness_from_json(json.loads(render_report(partial, "json")))
    assert back == partial


def test_report_rendering_and_round_trip():
    doc = pristine_document()
    ctx = gen_context(random.Random(5), doc)
    report = assess_compatibility(doc, ctx)

    text = render_report(report, "text")
    assert text.splitlines()[0] == (
        f"Component {report.component_id!r} vs context {report.context_id!r}"
    )
    assert f"Verdict: {report.verdict.value}" in text
    assert "Dimension scores: " in text

    md = render_report(report, "markdown")
    assert md.splitlines()[0].startswith("## Compatibility: ")
    assert f"**Verdict:** {report.verdict.value}" in md

    back = report_from_json(json.loads(render_report(report, "json")))
    assert back == report


def test_report_verdict_colored_when_asked():
    doc = pristine_document()
    report = assess_compatibility(doc, gen_context(random.Random(5), doc))
    colored = render_report(report, "text", color=True)
    plain = render_report(report, "text", color=False)
    code = {
        Verdict.COMPATIBLE: "\x1b[32m",
        Verdict.CONDITIONALLY_COMPATIBLE: "\x1b[33m",
        Verdict.INCOMPATIBLE: "\x1b[31m",
    }[report.verdict]
    assert f"Verdict: {code}{report.verdict.value}\x1b[0m" in colored
    assert "\x1b[" not in plain


def test_render_validation_combines_findings_and_completeness():
    from dataclasses import replace

    doc = pristine_document()
    doc = replace(doc, meta=replace(doc.meta, name="TBD"))
    findings = validate_document(doc)
    score = score_completeness(doc)

    text = render_validation(findings, score, "text")
    assert "PLACEHOLDER_TEXT" in text
    assert "Overall completeness:" in text

    data = json.loads(render_validation(findings, score, "json"))
    assert [finding_from_json(v) for v in data["findings"]] == list(findings)
    assert completeness_from_json(data["completeness"]) == score


def test_json_outputs_are_stable_across_calls():
    doc = pristine_document()
    ctx = gen_context(random.Random(9), doc)
    report = assess_compatibility(doc, ctx)
    assert render_report(report, "json") == render_report(report, "json")
    diff = diff_documents(doc, gen_document(random.Random(1)))
    assert render_report(diff, "json") == render_report(diff, "json")
