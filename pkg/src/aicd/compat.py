"""Compatibility assessment of one component document against a system context.

Every check is a pure function returning findings; assess_compatibility
composes the applicable ones, derives per-dimension scores, and reduces
the findings to a verdict: any Error means Incompatible, otherwise any
Warning means ConditionallyCompatible, otherwise Compatible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .findings import Dimension, Finding, Severity, sort_findings
from .model import (
    AutonomySpec,
    ConsiderationsSpec,
    Direction,
    HardwareInterfaceSpec,
    InterfaceDescription,
    QuantityEnvelope,
    RiskEntry,
    RiskStatus,
    Likelihood,
    SignalSpec,
    SystemContext,
    VerificationStrategy,
    bounds_contains,
    bounds_overlap_fraction,
    describe_bounds,
)
from .taxonomy import covers_uncertainty
from .validator import validate_document

_STRATEGY_ORDER = {s: i for i, s in enumerate(VerificationStrategy)}


class Verdict(Enum):
    COMPATIBLE = "Compatible"
    CONDITIONALLY_COMPATIBLE = "ConditionallyCompatible"
    INCOMPATIBLE = "Incompatible"


@dataclass(frozen=True, slots=True)
class CompatibilityReport:
    verdict: Verdict
    findings: tuple[Finding, ...]
    dimension_scores: dict[Dimension, float]
    component_id: str
    context_id: str


class InvalidDocumentError(Exception):
    """The component document fails validation; assessment is refused."""

    code = "INVALID_INPUT"

    def __init__(self, findings: list[Finding]) -> None:
        self.findings = tuple(findings)
        super().__init__(
            f"document fails validation with {len(self.findings)} error(s); "
            "fix it before assessing compatibility"
        )


def _verdict_for(findings: list[Finding]) -> Verdict:
    severities = {f.severity for f in findings}
    if Severity.ERROR in severities:
        return Verdict.INCOMPATIBLE
    if Severity.WARNING in severities:
        return Verdict.CONDITIONALLY_COMPATIBLE
    return Verdict.COMPATIBLE


# ---------------------------------------------------------------------------
# signal matching


def _env_finding(
    code: str,
    path: str,
    message: str,
    severity: Severity,
    dimension: Dimension,
) -> Finding:
    return Finding(severity, code, path, message, dimension)


def _containment_error(
    path: str,
    producer: QuantityEnvelope,
    consumer: QuantityEnvelope,
    producer_label: str,
    consumer_label: str,
    dimension: Dimension,
    code: str,
) -> Finding | None:
    """Error when the producer envelope is not fully inside the consumer one.

    A unit disagreement can never be contained; its overlap is reported as 0.
    """
    if producer.unit == consumer.unit and bounds_contains(producer.bounds, consumer.bounds):
        return None
    if producer.unit != consumer.unit:
        fraction = 0.0
        detail = f"unit mismatch ({producer.unit!r} vs {consumer.unit!r})"
    else:
        fraction = bounds_overlap_fraction(producer.bounds, consumer.bounds)
        detail = (
            f"{producer_label} {describe_bounds(producer.bounds)} {producer.unit} but "
            f"{consumer_label} {describe_bounds(consumer.bounds)} {consumer.unit}"
        )
    return _env_finding(
        code,
        path,
        f"{detail}; overlap fraction {fraction!r}",
        Severity.ERROR,
        dimension,
    )


def _match_one_side(
    signal: SignalSpec,
    pool: tuple[SignalSpec, ...],
    emitting: bool,
    side_label: str,
    out: list[Finding],
) -> None:
    base = f"signals[signal_id='{signal.signal_id}']"
    # a bidirectional signal is checked once per side; the tag keeps the two
    # sides' findings at distinct paths
    if signal.direction is Direction.BIDIRECTIONAL:
        base += "@out" if emitting else "@in"
    name = signal.pairing_name
    if name is None:
        out.append(
            _env_finding(
                "UNMATCHED_SIGNAL",
                base,
                "signal has no characteristics to pair by",
                Severity.WARNING,
                Dimension.SIGNAL,
            )
        )
        return
    exact = [s for s in pool if s.pairing_name == name and s.kind == signal.kind]
    if not exact:
        by_name = [s for s in pool if s.pairing_name == name]
        if by_name:
            other = by_name[0]
            out.append(
                _env_finding(
                    "SIGNAL_KIND_MISMATCH",
                    f"{base}.kind",
                    f"component kind {signal.kind.token!r} but context counterpart "
                    f"carries {other.kind.token!r}",
                    Severity.ERROR,
                    Dimension.SIGNAL,
                )
            )
        else:
            out.append(
                _env_finding(
                    "UNMATCHED_SIGNAL",
                    base,
                    f"context {side_label} no signal with characteristic {name!r} "
                    f"of kind {signal.kind.token!r}",
                    Severity.WARNING,
                    Dimension.SIGNAL,
                )
            )
        return
    counterpart = exact[0]
    comp_by_name = {c.name: c for c in signal.characteristics}
    ctx_by_name = {c.name: c for c in counterpart.characteristics}
    if emitting:
        # component emits: every component range must fit what the context accepts
        for char in signal.characteristics:
            accepted = ctx_by_name.get(char.name)
            if accepted is None:
                continue  # context does not constrain this quantity
            finding = _containment_error(
                f"{base}.characteristics[name='{char.name}']",
                char,
                accepted,
                "component emits",
                "context accepts",
                Dimension.SIGNAL,
                "RANGE_EXCEEDED",
            )
            if finding is not None:
                out.append(finding)
    else:
        # component accepts: every offered range must fit the accepted range
        for offered in counterpart.characteristics:
            accepted = comp_by_name.get(offered.name)
            if accepted is None:
                continue  # component does not constrain this quantity
            finding = _containment_error(
                f"{base}.characteristics[name='{offered.name}']",
                offered,
                accepted,
                "context offers",
                "component accepts",
                Dimension.SIGNAL,
                "RANGE_EXCEEDED",
            )
            if finding is not None:
                out.append(finding)


def match_signal(component_signal: SignalSpec, context: SystemContext) -> list[Finding]:
    """Pair one component signal with its context counterpart and check ranges."""
    out: list[Finding] = []
    if component_signal.direction in (Direction.IN, Direction.BIDIRECTIONAL):
        _match_one_side(component_signal, context.offered_signals, False, "offers", out)
    if component_signal.direction in (Direction.OUT, Direction.BIDIRECTIONAL):
        _match_one_side(component_signal, context.accepted_signals, True, "accepts", out)
    return out


# ---------------------------------------------------------------------------
# physical and transport


def check_physical_envelope(
    hw: HardwareInterfaceSpec, context: SystemContext
) -> list[Finding]:
    out: list[Finding] = []
    env_by_name = {e.name: e for e in context.environment}
    for category, envelopes in hw.physical_layer.inbound.items():
        for env in envelopes:
            path = f"hardware.physical_layer.in.{category}[name='{env.name}']"
            guaranteed = env_by_name.get(env.name)
            if guaranteed is None:
                out.append(
                    _env_finding(
                        "ENV_UNSPECIFIED",
                        path,
                        f"context does not specify {env.name!r}",
                        Severity.WARNING,
                        Dimension.PHYSICAL,
                    )
                )
                continue
            finding = _containment_error(
                path,
                guaranteed,
                env,
                "context guarantees",
                "component tolerates",
                Dimension.PHYSICAL,
                "ENV_OUT_OF_ENVELOPE",
            )
            if finding is not None:
                out.append(finding)
    for category, envelopes in hw.physical_layer.outbound.items():
        for env in envelopes:
            path = f"hardware.physical_layer.out.{category}[name='{env.name}']"
            accepted = env_by_name.get(env.name)
            if accepted is None:
                out.append(
                    _env_finding(
                        "EMISSION_UNCHECKED",
                        path,
                        f"context does not state an acceptance for emission {env.name!r}",
                        Severity.WARNING,
                        Dimension.PHYSICAL,
                    )
                )
                continue
            finding = _containment_error(
                path,
                env,
                accepted,
                "component emits",
                "context accepts",
                Dimension.PHYSICAL,
                "ENV_OUT_OF_ENVELOPE",
            )
            if finding is not None:
                out.append(finding)
    return out


def check_transport_compat(
    hw: HardwareInterfaceSpec, context: SystemContext
) -> list[Finding]:
    tl = hw.transport_layer
    if not tl.protocol_name:
        return []
    path = "hardware.transport_layer.protocol_name"
    same_name = [t for t in context.available_transports if t.protocol_name == tl.protocol_name]
    if any(t.protocol_version == tl.protocol_version for t in same_name):
        return []
    if same_name:
        versions = ", ".join(sorted(t.protocol_version for t in same_name))
        return [
            _env_finding(
                "TRANSPORT_VERSION_MISMATCH",
                path,
                f"protocol {tl.protocol_name!r} available only in version(s) {versions}, "
                f"component speaks {tl.protocol_version!r}",
                Severity.WARNING,
                Dimension.TRANSPORT,
            )
        ]
    return [
        _env_finding(
            "TRANSPORT_UNAVAILABLE",
            path,
            f"context offers no transport named {tl.protocol_name!r}",
            Severity.ERROR,
            Dimension.TRANSPORT,
        )
    ]


# ---------------------------------------------------------------------------
# change coverage, risk rules, verification


def check_change_coverage(autonomy: AutonomySpec, context: SystemContext) -> list[Finding]:
    out: list[Finding] = []
    handled = autonomy.change_types_handled
    for demanded in sorted(context.change_profile, key=lambda c: c.index):
        if not covers_uncertainty(handled, demanded):
            out.append(
                _env_finding(
                    "CHANGE_CLASS_UNCOVERED",
                    f"autonomy.change_types_handled[{demanded.index}]",
                    f"context demands {demanded} which the handled classes do not cover",
                    Severity.ERROR,
                    Dimension.AUTONOMY,
                )
            )
    return out


def _change_coverage_score(autonomy: AutonomySpec | None, context: SystemContext) -> float:
    if not context.change_profile:
        return 1.0
    handled = autonomy.change_types_handled if autonomy is not None else frozenset()
    covered = sum(1 for c in context.change_profile if covers_uncertainty(handled, c))
    return covered / len(context.change_profile)


def _entry(entry: RiskEntry | None) -> RiskEntry:
    return entry if entry is not None else RiskEntry()


def assess_autonomy_risks(
    considerations: ConsiderationsSpec,
    autonomy: AutonomySpec,
    context: SystemContext,
) -> list[Finding]:
    out: list[Finding] = []
    drift = _entry(considerations.drift_of_concept)
    catastrophic = _entry(considerations.catastrophic_inference)
    decentral = _entry(considerations.decentralization)
    goal = _entry(considerations.goal_deviation)
    peers = context.peer_interface_count

    profile_has_unknowns = any(c.unknown_dimensions for c in context.change_profile)
    if profile_has_unknowns and drift.status is RiskStatus.NOT_ASSESSED:
        out.append(
            _env_finding(
                "DRIFT_UNASSESSED",
                "considerations.drift_of_concept",
                "context exposes the component to unknown change dimensions but "
                "concept drift was never assessed",
                Severity.WARNING,
                Dimension.CONSIDERATION,
            )
        )
    if (
        context.requires_online_adaptation
        and catastrophic.likelihood is Likelihood.HIGH
        and not catastrophic.mitigation.strip()
    ):
        out.append(
            _env_finding(
                "CATASTROPHIC_INFERENCE_UNMITIGATED",
                "considerations.catastrophic_inference",
                "online adaptation is required while catastrophic inference is "
                "likely and has no mitigation",
                Severity.ERROR,
                Dimension.CONSIDERATION,
            )
        )
    if peers > len(autonomy.interactions):
        out.append(
            _env_finding(
                "COOPERATION_INTERFACES_INSUFFICIENT",
                "autonomy.interactions",
                f"context has {peers} peer interface(s) but only "
                f"{len(autonomy.interactions)} interaction(s) are declared",
                Severity.WARNING,
                Dimension.AUTONOMY,
            )
        )
    if context.human_interaction_expected and not autonomy.human_interaction_rules.strip():
        out.append(
            _env_finding(
                "HUMAN_RULES_MISSING",
                "autonomy.human_interaction_rules",
                "context expects human interaction but no rules are declared",
                Severity.WARNING,
                Dimension.AUTONOMY,
            )
        )
    if decentral.likelihood is Likelihood.HIGH and peers >= 2:
        out.append(
            _env_finding(
                "DECENTRALIZATION_COMPLEXITY",
                "considerations.decentralization",
                f"high decentralization risk with {peers} peers",
                Severity.INFO,
                Dimension.CONSIDERATION,
            )
        )
    if goal.status is RiskStatus.NOT_ASSESSED and peers >= 1:
        out.append(
            _env_finding(
                "GOAL_DEVIATION_UNASSESSED",
                "considerations.goal_deviation",
                "goal deviation was never assessed although peers are present",
                Severity.WARNING,
                Dimension.CONSIDERATION,
            )
        )
    return out


def score_verification_coverage(
    autonomy: AutonomySpec, context: SystemContext
) -> tuple[float, list[Finding]]:
    required = context.required_verification
    if not required:
        return 1.0, []
    declared = autonomy.verification_strategies
    findings = [
        _env_finding(
            "VERIFICATION_GAP",
            f"autonomy.verification_strategies[{strategy.value}]",
            f"context requires {strategy.value} which was not performed",
            Severity.WARNING,
            Dimension.VERIFICATION,
        )
        for strategy in sorted(required - declared, key=_STRATEGY_ORDER.get)
    ]
    return len(required & declared) / len(required), findings


# ---------------------------------------------------------------------------
# composition


def assess_compatibility(
    doc: InterfaceDescription, context: SystemContext
) -> CompatibilityReport:
    """Full assessment.  Raises InvalidDocumentError when the document itself
    fails validation (assessing a broken document would be meaningless)."""
    errors = [f for f in validate_document(doc) if f.severity is Severity.ERROR]
    if errors:
        raise InvalidDocumentError(errors)

    findings: list[Finding] = []
    scores: dict[Dimension, float] = {}

    if doc.signals:
        clean = 0
        for sig in doc.signals:
            sig_findings = match_signal(sig, context)
            findings.extend(sig_findings)
            if not any(f.severity is Severity.ERROR for f in sig_findings):
                clean += 1
        scores[Dimension.SIGNAL] = clean / len(doc.signals)

    if doc.hardware is not None:
        phys_findings = check_physical_envelope(doc.hardware, context)
        findings.extend(phys_findings)
        total = sum(
            len(envs)
            for group in (
                doc.hardware.physical_layer.inbound,
                doc.hardware.physical_layer.outbound,
            )
            for _cat, envs in group.items()
        )
        if total:
            failed_paths = {
                f.path for f in phys_findings if f.severity is Severity.ERROR
            }
            scores[Dimension.PHYSICAL] = (total - len(failed_paths)) / total

        transport_findings = check_transport_compat(doc.hardware, context)
        findings.extend(transport_findings)
        if doc.hardware.transport_layer.protocol_name:
            failed = any(f.severity is Severity.ERROR for f in transport_findings)
            scores[Dimension.TRANSPORT] = 0.0 if failed else 1.0

    autonomy = doc.autonomy
    if context.change_profile:
        findings.extend(
            check_change_coverage(autonomy if autonomy is not None else AutonomySpec(), context)
        )
        scores[Dimension.AUTONOMY] = _change_coverage_score(autonomy, context)

    if autonomy is not None and doc.considerations is not None:
        findings.extend(assess_autonomy_risks(doc.considerations, autonomy, context))

    if autonomy is not None or context.required_verification:
        score, ver_findings = score_verification_coverage(
            autonomy if autonomy is not None else AutonomySpec(), context
        )
        findings.extend(ver_findings)
        scores[Dimension.VERIFICATION] = score

    ordered = sort_findings(findings)
    return CompatibilityReport(
        verdict=_verdict_for(ordered),
        findings=tuple(ordered),
        dimension_scores=scores,
        component_id=doc.meta.component_id,
        context_id=context.context_id,
    )
