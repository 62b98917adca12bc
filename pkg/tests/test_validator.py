"""Semantic checks and completeness scoring.

The Error rules are exercised through seeded fault injection: start from a
document with zero findings, break exactly one rule, and require the
validator to report exactly that code.
"""

import datetime as dt
import random
from dataclasses import replace

from aicd.findings import Dimension, Severity
from aicd.model import (
    AutonomySpec,
    ConsiderationsSpec,
    Direction,
    DocumentMeta,
    INFORMATION,
    InterfaceDescription,
    Interval,
    Likelihood,
    PropertySpec,
    QuantityEnvelope,
    RiskEntry,
    RiskStatus,
    SignalSpec,
    SoftwareInterfaceSpec,
    Version,
    Visibility,
)
from aicd.registry import (
    AUTONOMY_REQUIRED,
    BY_CODE,
    CONSIDERATIONS_REQUIRED,
    HARDWARE_REQUIRED,
    MODEL_CARD_REQUIRED,
    SOFTWARE_REQUIRED,
)
from aicd.validator import TemplateScore, score_completeness, validate_document

from genlib import ERROR_MUTATIONS, enrich, gen_document, pristine_document


def errors_of(findings):
    return [f for f in findings if f.severity is Severity.ERROR]


def test_pristine_document_has_zero_findings():
    assert validate_document(pristine_document()) == []


def test_pristine_document_is_fully_complete():
    score = score_completeness(pristine_document())
    assert score.model_card == TemplateScore(9, 9)
    assert score.hardware == TemplateScore(14, 14)
    assert score.software == TemplateScore(6, 6)
    assert score.autonomy == TemplateScore(14, 14)
    assert score.considerations == TemplateScore(7, 7)
    assert score.overall == 1.0


def test_mutation_registry_covers_every_error_rule():
    assert len(ERROR_MUTATIONS) == 16
    assert set(ERROR_MUTATIONS) == {
        code for code, info in BY_CODE.items()
        if info.source == "validate" and info.severity is Severity.ERROR
    }


def test_each_mutation_fires_exactly_its_own_code():
    base = pristine_document()
    for code, mutate in ERROR_MUTATIONS.items():
        for seed in range(6):
            mutated = mutate(random.Random(seed), base)
            assert mutated != base, code
            got = {f.code for f in errors_of(validate_document(mutated))}
            assert got == {code}, (code, seed, got)


def test_mutations_add_no_stray_warnings():
    base = pristine_document()
    for code, mutate in ERROR_MUTATIONS.items():
        mutated = mutate(random.Random(0), base)
        warnings = [f for f in validate_document(mutated) if f.severity is Severity.WARNING]
        assert warnings == [], (code, warnings)


def test_emitted_findings_match_registry():
    base = pristine_document()
    for code, mutate in ERROR_MUTATIONS.items():
        for finding in validate_document(mutate(random.Random(1), base)):
            info = BY_CODE[finding.code]
            assert info.source == "validate"
            assert finding.severity is info.severity
            assert finding.dimension in info.dimensions, finding.code


def test_error_paths_are_addressable():
    base = pristine_document()
    dup_sig = ERROR_MUTATIONS["DUP_SIGNAL_ID"](random.Random(0), base)
    (finding,) = errors_of(validate_document(dup_sig))
    assert finding.path == "signals[1].signal_id"

    missing = ERROR_MUTATIONS["MISSING_RISK_ENTRY"](random.Random(3), base)
    (finding,) = errors_of(validate_document(missing))
    assert finding.path.startswith("considerations.")

    empty_ctx = ERROR_MUTATIONS["EMPTY_SUPPORTED_CONTEXTS"](random.Random(0), base)
    (finding,) = errors_of(validate_document(empty_ctx))
    assert finding.path == "software.packaging.supported_contexts"


def test_bad_range_message_carries_bounds():
    base = pristine_document()
    mutated = ERROR_MUTATIONS["BAD_RANGE"](random.Random(2), base)
    (finding,) = errors_of(validate_document(mutated))
    assert finding.code == "BAD_RANGE"
    assert "exceeds max" in finding.message


def test_unmitigated_high_risk_warning():
    base = pristine_document()
    hot = RiskEntry(RiskStatus.ASSESSED, Likelihood.HIGH, "")
    doc = replace(base, considerations=replace(base.considerations, goal_deviation=hot))
    findings = validate_document(doc)
    assert errors_of(findings) == []
    (warning,) = findings
    assert warning.code == "UNMITIGATED_HIGH_RISK"
    assert warning.path == "considerations.goal_deviation.mitigation"
    # a filled-in mitigation silences it
    cool = RiskEntry(RiskStatus.ASSESSED, Likelihood.HIGH, "hand back to operator")
    doc = replace(base, considerations=replace(base.considerations, goal_deviation=cool))
    assert validate_document(doc) == []


def test_placeholder_warning_with_path():
    base = pristine_document()
    doc = replace(base, meta=replace(base.meta, name="TBD"))
    (warning,) = validate_document(doc)
    assert warning.code == "PLACEHOLDER_TEXT"
    assert warning.path == "meta.name"
    assert warning.severity is Severity.WARNING


def test_no_verification_declared_warning():
    base = pristine_document()
    doc = replace(base, autonomy=replace(base.autonomy, verification_strategies=frozenset()))
    (warning,) = validate_document(doc)
    assert warning.code == "NO_VERIFICATION_DECLARED"
    assert warning.dimension is Dimension.VERIFICATION


def test_findings_sorted_by_dimension_then_severity_then_path():
    base = pristine_document()
    doc = base
    doc = ERROR_MUTATIONS["BAD_LATENCY"](random.Random(0), doc)
    doc = ERROR_MUTATIONS["DUP_SIGNAL_ID"](random.Random(0), doc)
    doc = replace(doc, meta=replace(doc.meta, name="TBD"))
    findings = validate_document(doc)
    keys = [f.sort_key() for f in findings]
    assert keys == sorted(keys)
    # Signal findings come before Autonomy findings, which precede Meta
    codes = [f.code for f in findings]
    assert codes.index("DUP_SIGNAL_ID") < codes.index("BAD_LATENCY") < codes.index("PLACEHOLDER_TEXT")


def test_multiple_faults_all_reported():
    base = pristine_document()
    doc = ERROR_MUTATIONS["BAD_METRIC_VALUE"](random.Random(0), base)
    doc = ERROR_MUTATIONS["NO_CHANGE_TYPES"](random.Random(0), doc)
    got = {f.code for f in errors_of(validate_document(doc))}
    assert got == {"BAD_METRIC_VALUE", "NO_CHANGE_TYPES"}


# ---------------------------------------------------------------------------
# completeness


def test_template_denominators():
    assert MODEL_CARD_REQUIRED == 9
    assert AUTONOMY_REQUIRED == 14
    assert CONSIDERATIONS_REQUIRED == 7
    assert HARDWARE_REQUIRED == 14
    assert SOFTWARE_REQUIRED == 6


def test_missing_model_card_section_scores_eight_ninths():
    base = pristine_document()
    doc = replace(base, model_card=replace(base.model_card, ethical_considerations=None))
    score = score_completeness(doc)
    assert score.model_card == TemplateScore(8, 9)
    assert score.model_card.ratio == 8 / 9


def test_placeholder_sections_do_not_count():
    base = pristine_document()
    doc = replace(base, model_card=replace(base.model_card, caveats="TBD"))
    assert score_completeness(doc).model_card == TemplateScore(8, 9)


def test_empty_autonomy_scores_zero():
    meta = DocumentMeta("c1", "n", Version(1, 0, 0), dt.date(2024, 1, 1), ai_enabled=True)
    doc = InterfaceDescription(
        meta=meta,
        signals=(SignalSpec("s1", INFORMATION, Direction.IN,
                            (QuantityEnvelope("x", "", Interval(0.0, 1.0)),)),),
        software=SoftwareInterfaceSpec(
            properties=(PropertySpec("p", Visibility.OBSERVABLE, "d"),)
        ),
        autonomy=AutonomySpec(),
    )
    score = score_completeness(doc)
    assert score.autonomy == TemplateScore(0, 14)
    assert score.autonomy.ratio == 0.0


def test_software_catalogs_count_toward_autonomy():
    base = pristine_document()
    # pristine: 12 own features + operations + events = 14
    doc = replace(base, autonomy=AutonomySpec())
    assert score_completeness(doc).autonomy == TemplateScore(2, 14)


def test_applicability_follows_sections_and_ai_flag():
    meta = DocumentMeta("c1", "n", Version(1, 0, 0), dt.date(2024, 1, 1))
    doc = InterfaceDescription(
        meta=meta,
        signals=(SignalSpec("s1", INFORMATION, Direction.IN, ()),),
        software=SoftwareInterfaceSpec(
            properties=(PropertySpec("p", Visibility.OBSERVABLE, "d"),)
        ),
    )
    score = score_completeness(doc)
    assert score.model_card is None
    assert score.hardware is None
    assert score.autonomy is None
    assert score.considerations is None
    assert score.software == TemplateScore(1, 6)
    assert score.overall == score.software.ratio

    flagged = replace(doc, meta=replace(meta, ai_enabled=True))
    score = score_completeness(flagged)
    # ai components are scored on the ai templates even before the
    # sections exist, so the gaps show up as zeros instead of blanks
    assert score.model_card == TemplateScore(0, 9)
    assert score.autonomy == TemplateScore(0, 14)
    assert score.considerations == TemplateScore(0, 7)


def test_overall_is_mean_of_applicable_templates():
    base = pristine_document()
    doc = replace(base, model_card=replace(base.model_card, caveats=None, factors=None))
    score = score_completeness(doc)
    expected = (7 / 9 + 1.0 + 1.0 + 1.0 + 1.0) / 5
    assert abs(score.overall - expected) < 1e-12


def test_enrichment_never_lowers_template_scores():
    for seed in range(80):
        rng = random.Random(seed)
        doc = gen_document(rng)
        richer = enrich(rng, doc)
        before = dict(score_completeness(doc).templates())
        after = dict(score_completeness(richer).templates())
        for name, b in before.items():
            a = after[name]
            if b is None or a is None:
                continue
            assert a.required == b.required, name
            assert a.present >= b.present, (seed, name, b, a)


def test_enrichment_saturates_at_full_score():
    rng = random.Random(9)
    doc = pristine_document()
    assert enrich(rng, doc) == doc
