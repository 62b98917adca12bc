"""Semantic validation and template completeness scoring.

Validation never raises: every violation becomes a Finding, so one run
reports everything at once.  Completeness is a separate read on the same
document: how much of each template is actually filled in with substance
(placeholders do not count).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, is_dataclass
from enum import Enum

from .findings import Dimension, Finding, Severity, sort_findings
from .model import (
    InterfaceDescription,
    Interval,
    LabelSet,
    Likelihood,
    MODEL_CARD_SECTIONS,
    PLACEHOLDER,
    QuantityEnvelope,
    RiskStatus,
    SignalSpec,
)
from .registry import (
    AUTONOMY_REQUIRED,
    CONSIDERATIONS_REQUIRED,
    HARDWARE_REQUIRED,
    MODEL_CARD_REQUIRED,
    SOFTWARE_REQUIRED,
)


def _finding(severity: Severity, code: str, path: str, message: str, dim: Dimension) -> Finding:
    return Finding(severity, code, path, message, dim)


# ---------------------------------------------------------------------------
# validation rules


def _check_envelope(env: QuantityEnvelope, path: str, dim: Dimension, out: list) -> None:
    if isinstance(env.bounds, Interval):
        if env.bounds.lo > env.bounds.hi:
            out.append(
                _finding(
                    Severity.ERROR,
                    "BAD_RANGE",
                    path,
                    f"min {env.bounds.lo!r} exceeds max {env.bounds.hi!r}",
                    dim,
                )
            )
    else:
        assert isinstance(env.bounds, LabelSet)
        labels = env.bounds.labels
        if not labels:
            out.append(
                _finding(
                    Severity.ERROR,
                    "BAD_ENUM_BOUNDS",
                    path,
                    "enumerated bound lists no values",
                    dim,
                )
            )
        elif len(set(labels)) != len(labels):
            out.append(
                _finding(
                    Severity.ERROR,
                    "BAD_ENUM_BOUNDS",
                    path,
                    "enumerated bound lists duplicate values",
                    dim,
                )
            )


def _check_signals(signals: tuple[SignalSpec, ...], out: list) -> None:
    if not signals:
        out.append(
            _finding(
                Severity.ERROR,
                "NO_SIGNALS",
                "signals",
                "document declares no signals",
                Dimension.SIGNAL,
            )
        )
        return
    seen_ids: set[str] = set()
    for i, sig in enumerate(signals):
        if sig.signal_id in seen_ids:
            out.append(
                _finding(
                    Severity.ERROR,
                    "DUP_SIGNAL_ID",
                    f"signals[{i}].signal_id",
                    f"signal_id {sig.signal_id!r} already used",
                    Dimension.SIGNAL,
                )
            )
        seen_ids.add(sig.signal_id)
        seen_names: set[str] = set()
        for j, char in enumerate(sig.characteristics):
            if char.name in seen_names:
                out.append(
                    _finding(
                        Severity.ERROR,
                        "DUP_CHARACTERISTIC",
                        f"signals[{i}].characteristics[{j}].name",
                        f"characteristic {char.name!r} already declared on this signal",
                        Dimension.SIGNAL,
                    )
                )
            seen_names.add(char.name)
            _check_envelope(char, f"signals[{i}].characteristics[{j}]", Dimension.SIGNAL, out)


def _check_hardware(doc: InterfaceDescription, out: list) -> None:
    hw = doc.hardware
    if hw is None:
        return
    for side, group in (("in", hw.physical_layer.inbound), ("out", hw.physical_layer.outbound)):
        for category, envelopes in group.items():
            for i, env in enumerate(envelopes):
                _check_envelope(
                    env,
                    f"hardware.physical_layer.{side}.{category}[{i}]",
                    Dimension.PHYSICAL,
                    out,
                )


def _check_software(doc: InterfaceDescription, out: list) -> None:
    sw = doc.software
    if sw is None:
        return
    for list_name in ("properties", "operations", "events", "ilities"):
        members = getattr(sw, list_name)
        seen: set[str] = set()
        for i, member in enumerate(members):
            if member.name in seen:
                out.append(
                    _finding(
                        Severity.ERROR,
                        "DUP_NAME",
                        f"software.{list_name}[{i}].name",
                        f"name {member.name!r} already used in {list_name}",
                        Dimension.SOFTWARE,
                    )
                )
            seen.add(member.name)
    if sw.packaging is not None and not sw.packaging.supported_contexts:
        out.append(
            _finding(
                Severity.ERROR,
                "EMPTY_SUPPORTED_CONTEXTS",
                "software.packaging.supported_contexts",
                "packaging declared but no supported context listed",
                Dimension.SOFTWARE,
            )
        )


def _check_sections(doc: InterfaceDescription, out: list) -> None:
    if doc.hardware is None and doc.software is None:
        out.append(
            _finding(
                Severity.ERROR,
                "NO_INTERFACE_SECTION",
                "",
                "document has neither a hardware nor a software interface section",
                Dimension.META,
            )
        )
    if doc.meta.ai_enabled:
        for section, code in (
            ("model_card", "MISSING_MODEL_CARD"),
            ("autonomy", "MISSING_AUTONOMY"),
            ("considerations", "MISSING_CONSIDERATIONS"),
        ):
            if getattr(doc, section) is None:
                out.append(
                    _finding(
                        Severity.ERROR,
                        code,
                        section,
                        f"ai_enabled component must document {section}",
                        Dimension.META,
                    )
                )


def _check_model_card(doc: InterfaceDescription, out: list) -> None:
    mc = doc.model_card
    if mc is None or mc.metrics is None:
        return
    for i, metric in enumerate(mc.metrics):
        if not math.isfinite(metric.value):
            out.append(
                _finding(
                    Severity.ERROR,
                    "BAD_METRIC_VALUE",
                    f"model_card.metrics[{i}].value",
                    f"metric {metric.name!r} has non-finite value {metric.value!r}",
                    Dimension.META,
                )
            )


def _check_autonomy(doc: InterfaceDescription, out: list) -> None:
    a = doc.autonomy
    if a is None:
        return
    for i, cycle in enumerate(a.feedback_cycles):
        if not (cycle.latency_bound > 0):
            out.append(
                _finding(
                    Severity.ERROR,
                    "BAD_LATENCY",
                    f"autonomy.feedback_cycles[{i}].latency_bound",
                    f"latency bound must be positive, got {cycle.latency_bound!r}",
                    Dimension.AUTONOMY,
                )
            )
    if doc.meta.ai_enabled and not a.change_types_handled:
        out.append(
            _finding(
                Severity.ERROR,
                "NO_CHANGE_TYPES",
                "autonomy.change_types_handled",
                "adaptive component declares no handled change classes",
                Dimension.AUTONOMY,
            )
        )
    if not a.verification_strategies:
        out.append(
            _finding(
                Severity.WARNING,
                "NO_VERIFICATION_DECLARED",
                "autonomy.verification_strategies",
                "no verification strategy declared",
                Dimension.VERIFICATION,
            )
        )


def _check_considerations(doc: InterfaceDescription, out: list) -> None:
    cons = doc.considerations
    if cons is None:
        return
    for name, entry in cons.entries():
        path = f"considerations.{name}"
        if entry is None:
            out.append(
                _finding(
                    Severity.ERROR,
                    "MISSING_RISK_ENTRY",
                    path,
                    f"consideration {name!r} has no entry",
                    Dimension.CONSIDERATION,
                )
            )
            continue
        if entry.status is RiskStatus.ASSESSED and entry.likelihood is Likelihood.UNKNOWN:
            out.append(
                _finding(
                    Severity.ERROR,
                    "INCONSISTENT_RISK",
                    path,
                    "risk marked Assessed but likelihood is Unknown",
                    Dimension.CONSIDERATION,
                )
            )
        if entry.likelihood is Likelihood.HIGH and not entry.mitigation.strip():
            out.append(
                _finding(
                    Severity.WARNING,
                    "UNMITIGATED_HIGH_RISK",
                    f"{path}.mitigation",
                    f"high-likelihood risk {name!r} has no mitigation",
                    Dimension.CONSIDERATION,
                )
            )


def _walk_placeholders(value, path: str, out: list) -> None:
    if isinstance(value, str):
        if value == PLACEHOLDER:
            out.append(
                _finding(
                    Severity.WARNING,
                    "PLACEHOLDER_TEXT",
                    path,
                    "placeholder text remains",
                    Dimension.META,
                )
            )
    elif isinstance(value, dict):
        for key, child in value.items():
            _walk_placeholders(child, f"{path}.{key}" if path else key, out)
    elif isinstance(value, list):
        for i, child in enumerate(value):
            _walk_placeholders(child, f"{path}[{i}]", out)


def validate_document(doc: InterfaceDescription) -> list[Finding]:
    """All semantic findings for one document, deterministically ordered."""
    from .docio.serialize import _document_value

    out: list[Finding] = []
    _check_signals(doc.signals, out)
    _check_hardware(doc, out)
    _check_software(doc, out)
    _check_sections(doc, out)
    _check_model_card(doc, out)
    _check_autonomy(doc, out)
    _check_considerations(doc, out)
    _walk_placeholders(_document_value(doc), "", out)
    return sort_findings(out)


# ---------------------------------------------------------------------------
# completeness


def _substantive(value) -> bool:
    """Does this value carry real content (not empty, not a placeholder)?"""
    if value is None:
        return False
    if isinstance(value, str):
        return value != "" and value != PLACEHOLDER
    if isinstance(value, bool) or isinstance(value, (int, float)):
        return True
    if isinstance(value, Enum):
        return True
    if isinstance(value, (tuple, list, frozenset, set)):
        return any(_substantive(v) for v in value)
    if is_dataclass(value):
        return any(_substantive(getattr(value, f.name)) for f in fields(value))
    return True


@dataclass(frozen=True, slots=True)
class TemplateScore:
    present: int
    required: int

    @property
    def ratio(self) -> float:
        return self.present / self.required if self.required else 1.0


@dataclass(frozen=True, slots=True)
class CompletenessScore:
    model_card: TemplateScore | None
    hardware: TemplateScore | None
    software: TemplateScore | None
    autonomy: TemplateScore | None
    considerations: TemplateScore | None
    overall: float

    def templates(self):
        for name in ("model_card", "hardware", "software", "autonomy", "considerations"):
            yield name, getattr(self, name)


def _score_model_card(doc: InterfaceDescription) -> TemplateScore:
    mc = doc.model_card
    present = 0
    if mc is not None:
        present = sum(
            1 for section in MODEL_CARD_SECTIONS if _substantive(getattr(mc, section))
        )
    return TemplateScore(present, MODEL_CARD_REQUIRED)


def _score_hardware(doc: InterfaceDescription) -> TemplateScore:
    hw = doc.hardware
    present = 0
    if hw is not None:
        for group in (hw.physical_layer.inbound, hw.physical_layer.outbound):
            for _category, envelopes in group.items():
                present += 1 if _substantive(envelopes) else 0
        for field_name in ("encoding", "protocol_name", "protocol_version", "mapping_description"):
            present += 1 if _substantive(getattr(hw.transport_layer, field_name)) else 0
    return TemplateScore(present, HARDWARE_REQUIRED)


def _score_software(doc: InterfaceDescription) -> TemplateScore:
    sw = doc.software
    present = 0
    if sw is not None:
        for field_name in ("properties", "operations", "events", "constraints", "packaging", "ilities"):
            present += 1 if _substantive(getattr(sw, field_name)) else 0
    return TemplateScore(present, SOFTWARE_REQUIRED)


def _score_autonomy(doc: InterfaceDescription) -> TemplateScore:
    a = doc.autonomy
    present = 0
    if a is not None:
        own_features = (
            a.exploration_exploitation,
            a.flexibility_degree,
            a.sensitivity_level,
            a.spatial_connectivity,
            a.change_types_handled,
            a.feedback_cycles,
            a.interactions,
            a.noise_handling,
            a.cooperation_trigger,
            a.local_interaction_rules,
            a.human_interaction_rules,
            a.verification_strategies,
        )
        present += sum(1 for feature in own_features if _substantive(feature))
    # the operations and events catalogs count as autonomy features but live
    # in the software section
    if doc.software is not None and (a is not None or doc.meta.ai_enabled):
        present += 1 if _substantive(doc.software.operations) else 0
        present += 1 if _substantive(doc.software.events) else 0
    return TemplateScore(present, AUTONOMY_REQUIRED)


def _score_considerations(doc: InterfaceDescription) -> TemplateScore:
    cons = doc.considerations
    present = 0
    if cons is not None:
        present = sum(1 for _name, entry in cons.entries() if entry is not None)
    return TemplateScore(present, CONSIDERATIONS_REQUIRED)


def score_completeness(doc: InterfaceDescription) -> CompletenessScore:
    ai = doc.meta.ai_enabled
    model_card = _score_model_card(doc) if (ai or doc.model_card is not None) else None
    hardware = _score_hardware(doc) if doc.hardware is not None else None
    software = _score_software(doc) if doc.software is not None else None
    autonomy = _score_autonomy(doc) if (ai or doc.autonomy is not None) else None
    considerations = (
        _score_considerations(doc) if (ai or doc.considerations is not None) else None
    )
    applicable = [
        t.ratio
        for t in (model_card, hardware, software, autonomy, considerations)
        if t is not None
    ]
    overall = sum(applicable) / len(applicable) if applicable else 0.0
    return CompletenessScore(model_card, hardware, software, autonomy, considerations, overall)
