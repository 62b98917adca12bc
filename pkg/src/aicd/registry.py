"""Registry of every finding code the toolkit can emit.

One table, one place.  Validation and compatibility code must only emit
codes listed here, with a severity and dimension the registry allows; a
test enforces that, and the published docs table is generated from this
module so it cannot drift.
"""

from __future__ import annotations

from dataclasses import dataclass

from .findings import Dimension, Severity

D = Dimension
S = Severity


@dataclass(frozen=True, slots=True)
class CodeInfo:
    code: str
    severity: Severity
    dimensions: frozenset[Dimension]
    source: str  # "validate" or "check"
    summary: str


def _info(code: str, severity: Severity, dims, source: str, summary: str) -> CodeInfo:
    return CodeInfo(code, severity, frozenset(dims), source, summary)


VALIDATOR_CODES: tuple[CodeInfo, ...] = (
    _info("NO_SIGNALS", S.ERROR, {D.SIGNAL}, "validate",
          "Document declares no signals at all."),
    _info("DUP_SIGNAL_ID", S.ERROR, {D.SIGNAL}, "validate",
          "Two signals share the same signal_id."),
    _info("DUP_CHARACTERISTIC", S.ERROR, {D.SIGNAL}, "validate",
          "One signal lists two characteristics with the same name."),
    _info("BAD_RANGE", S.ERROR, {D.SIGNAL, D.PHYSICAL}, "validate",
          "Interval bound with min greater than max."),
    _info("BAD_ENUM_BOUNDS", S.ERROR, {D.SIGNAL, D.PHYSICAL}, "validate",
          "Enumerated bound with no values or with duplicates."),
    _info("NO_INTERFACE_SECTION", S.ERROR, {D.META}, "validate",
          "Neither a hardware nor a software interface section is present."),
    _info("MISSING_MODEL_CARD", S.ERROR, {D.META}, "validate",
          "AI-enabled component without a model card."),
    _info("MISSING_AUTONOMY", S.ERROR, {D.META}, "validate",
          "AI-enabled component without an autonomy section."),
    _info("MISSING_CONSIDERATIONS", S.ERROR, {D.META}, "validate",
          "AI-enabled component without a risk considerations section."),
    _info("MISSING_RISK_ENTRY", S.ERROR, {D.CONSIDERATION}, "validate",
          "Considerations section present but one of the seven entries is absent."),
    _info("INCONSISTENT_RISK", S.ERROR, {D.CONSIDERATION}, "validate",
          "Risk marked Assessed while its likelihood is Unknown."),
    _info("BAD_METRIC_VALUE", S.ERROR, {D.META}, "validate",
          "Model card metric with a non-finite value."),
    _info("BAD_LATENCY", S.ERROR, {D.AUTONOMY}, "validate",
          "Feedback cycle with a non-positive latency bound."),
    _info("NO_CHANGE_TYPES", S.ERROR, {D.AUTONOMY}, "validate",
          "AI-enabled component whose autonomy section handles no change classes."),
    _info("DUP_NAME", S.ERROR, {D.SOFTWARE}, "validate",
          "Duplicate name within one software member list."),
    _info("EMPTY_SUPPORTED_CONTEXTS", S.ERROR, {D.SOFTWARE}, "validate",
          "Packaging declared without any supported context."),
    _info("UNMITIGATED_HIGH_RISK", S.WARNING, {D.CONSIDERATION}, "validate",
          "High-likelihood risk with an empty mitigation."),
    _info("PLACEHOLDER_TEXT", S.WARNING, {D.META}, "validate",
          "A 'TBD' placeholder survives in the document."),
    _info("NO_VERIFICATION_DECLARED", S.WARNING, {D.VERIFICATION}, "validate",
          "Autonomy section declares no verification strategy."),
)

COMPAT_CODES: tuple[CodeInfo, ...] = (
    _info("SIGNAL_KIND_MISMATCH", S.ERROR, {D.SIGNAL}, "check",
          "Paired signals carry different kinds."),
    _info("RANGE_EXCEEDED", S.ERROR, {D.SIGNAL}, "check",
          "A characteristic range is not contained in its counterpart; the "
          "message reports the overlap fraction."),
    _info("UNMATCHED_SIGNAL", S.WARNING, {D.SIGNAL}, "check",
          "Component signal with no counterpart in the context."),
    _info("ENV_OUT_OF_ENVELOPE", S.ERROR, {D.PHYSICAL}, "check",
          "Context environment quantity exceeds the tolerated envelope, or an "
          "emission exceeds what the context accepts."),
    _info("ENV_UNSPECIFIED", S.WARNING, {D.PHYSICAL}, "check",
          "Component tolerates a quantity the context says nothing about."),
    _info("EMISSION_UNCHECKED", S.WARNING, {D.PHYSICAL}, "check",
          "Component emission with no matching context acceptance."),
    _info("TRANSPORT_VERSION_MISMATCH", S.WARNING, {D.TRANSPORT}, "check",
          "Protocol available in a different version only."),
    _info("TRANSPORT_UNAVAILABLE", S.ERROR, {D.TRANSPORT}, "check",
          "Required transport protocol not offered by the context."),
    _info("CHANGE_CLASS_UNCOVERED", S.ERROR, {D.AUTONOMY}, "check",
          "Context demands a change-uncertainty class the component does not cover."),
    _info("DRIFT_UNASSESSED", S.WARNING, {D.CONSIDERATION}, "check",
          "Context exposes the component to unknowns while concept drift is "
          "not assessed."),
    _info("CATASTROPHIC_INFERENCE_UNMITIGATED", S.ERROR, {D.CONSIDERATION}, "check",
          "Online adaptation demanded while catastrophic inference is likely "
          "and unmitigated."),
    _info("COOPERATION_INTERFACES_INSUFFICIENT", S.WARNING, {D.AUTONOMY}, "check",
          "Context has more peers than the component declares interactions."),
    _info("HUMAN_RULES_MISSING", S.WARNING, {D.AUTONOMY}, "check",
          "Human interaction expected but no human interaction rules declared."),
    _info("DECENTRALIZATION_COMPLEXITY", S.INFO, {D.CONSIDERATION}, "check",
          "High decentralization risk in a multi-peer context."),
    _info("GOAL_DEVIATION_UNASSESSED", S.WARNING, {D.CONSIDERATION}, "check",
          "Goal deviation not assessed although peers are present."),
    _info("VERIFICATION_GAP", S.WARNING, {D.VERIFICATION}, "check",
          "A verification strategy the context requires was not performed."),
    _info("INVALID_INPUT", S.ERROR, {D.META}, "check",
          "Compatibility assessment refused: the document fails validation."),
)

ALL_CODES: tuple[CodeInfo, ...] = VALIDATOR_CODES + COMPAT_CODES

BY_CODE = {info.code: info for info in ALL_CODES}

# Required feature counts per template section.
MODEL_CARD_REQUIRED = 9
AUTONOMY_REQUIRED = 14
CONSIDERATIONS_REQUIRED = 7
HARDWARE_REQUIRED = 14  # 5 inbound categories + 5 outbound + 4 transport fields
SOFTWARE_REQUIRED = 6  # properties, operations, events, constraints, packaging, ilities

# The 14 autonomy features.  Twelve live in the autonomy section itself; the
# operations and events catalogs live in the software section but count here
# because an adaptive component is expected to document both.
AUTONOMY_FEATURES = (
    "exploration_exploitation",
    "flexibility_degree",
    "sensitivity_level",
    "operations",
    "events",
    "spatial_connectivity",
    "change_types_handled",
    "feedback_cycles",
    "interactions",
    "noise_handling",
    "cooperation_trigger",
    "local_interaction_rules",
    "human_interaction_rules",
    "verification_strategies",
)

assert len(AUTONOMY_FEATURES) == AUTONOMY_REQUIRED


def registry_markdown() -> str:
    """The published finding-code table (docs/finding-codes.md)."""
    lines = [
        "# Finding codes",
        "",
        "Generated from `aicd.registry`; do not edit by hand.",
        "",
        "| Code | Severity | Dimensions | Emitted by | Meaning |",
        "| --- | --- | --- | --- | --- |",
    ]
    for info in ALL_CODES:
        dims = ", ".join(sorted(d.value for d in info.dimensions))
        lines.append(
            f"| {info.code} | {info.severity.value} | {dims} | {info.source} | {info.summary} |"
        )
    lines.append("")
    return "\n".join(lines)
