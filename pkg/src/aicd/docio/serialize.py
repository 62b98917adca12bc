"""Canonical document and context serialization.

One valid value has exactly one textual form: fields in declaration order,
2-space indentation, LF line endings, floats in their shortest round-trip
form, sets in a fixed sort order, absent optional sections omitted.  Golden
files and diffs rely on this byte-stability.
"""

from __future__ import annotations

import json

from ..model import (
    AutonomySpec,
    ConsiderationsSpec,
    HardwareInterfaceSpec,
    InterfaceDescription,
    Interval,
    LabelSet,
    ModelCardReport,
    PHYSICAL_CATEGORIES,
    QuantityEnvelope,
    SignalSpec,
    SoftwareInterfaceSpec,
    SystemContext,
    VerificationStrategy,
)

_STRATEGY_ORDER = {s: i for i, s in enumerate(VerificationStrategy)}


def _envelope(env: QuantityEnvelope) -> dict:
    out: dict = {"name": env.name, "unit": env.unit}
    if isinstance(env.bounds, Interval):
        out["min"] = env.bounds.lo
        out["max"] = env.bounds.hi
    else:
        assert isinstance(env.bounds, LabelSet)
        out["values"] = list(env.bounds.labels)
    return out


def _signal(sig: SignalSpec) -> dict:
    return {
        "signal_id": sig.signal_id,
        "kind": sig.kind.token,
        "direction": sig.direction.value,
        "characteristics": [_envelope(c) for c in sig.characteristics],
    }


def _hardware(hw: HardwareInterfaceSpec) -> dict:
    def group(g) -> dict:
        return {cat: [_envelope(e) for e in envs] for cat, envs in g.items()}

    return {
        "physical_layer": {
            "in": group(hw.physical_layer.inbound),
            "out": group(hw.physical_layer.outbound),
        },
        "transport_layer": {
            "encoding": hw.transport_layer.encoding,
            "protocol_name": hw.transport_layer.protocol_name,
            "protocol_version": hw.transport_layer.protocol_version,
            "mapping_description": hw.transport_layer.mapping_description,
        },
    }


def _software(sw: SoftwareInterfaceSpec) -> dict:
    out: dict = {
        "properties": [
            {"name": p.name, "visibility": p.visibility.value, "description": p.description}
            for p in sw.properties
        ],
        "operations": [
            {
                "name": o.name,
                "inputs": o.inputs,
                "outputs": o.outputs,
                "description": o.description,
            }
            for o in sw.operations
        ],
        "events": [
            {"name": e.name, "payload": e.payload, "trigger": e.trigger} for e in sw.events
        ],
    }
    if sw.constraints is not None:
        out["constraints"] = {
            "element_constraints": list(sw.constraints.element_constraints),
            "relationship_constraints": list(sw.constraints.relationship_constraints),
        }
    if sw.packaging is not None:
        out["packaging"] = {
            "role": sw.packaging.role,
            "supported_contexts": list(sw.packaging.supported_contexts),
        }
    out["ilities"] = [
        {"name": i.name, "level": i.level.value, "characterization": i.characterization}
        for i in sw.ilities
    ]
    return out


def _model_card(mc: ModelCardReport) -> dict:
    out: dict = {}
    if mc.model_details is not None:
        details = {}
        for key in ("date", "version", "model_type", "training_info"):
            value = getattr(mc.model_details, key)
            if value is not None:
                details[key] = value
        out["model_details"] = details
    if mc.intended_use is not None:
        out["intended_use"] = list(mc.intended_use)
    if mc.factors is not None:
        out["factors"] = list(mc.factors)
    if mc.metrics is not None:
        out["metrics"] = [
            {"name": m.name, "value": m.value, "threshold_note": m.threshold_note}
            for m in mc.metrics
        ]
    if mc.evaluation_data is not None:
        block = {}
        for key in ("datasets", "motivation", "preprocessing"):
            value = getattr(mc.evaluation_data, key)
            if value is not None:
                block[key] = value
        out["evaluation_data"] = block
    if mc.training_data is not None:
        out["training_data"] = mc.training_data
    if mc.quantitative_analyses is not None:
        out["quantitative_analyses"] = {
            "unitary": list(mc.quantitative_analyses.unitary),
            "intersectional": list(mc.quantitative_analyses.intersectional),
        }
    if mc.ethical_considerations is not None:
        out["ethical_considerations"] = mc.ethical_considerations
    if mc.caveats is not None:
        out["caveats"] = mc.caveats
    return out


def _autonomy(a: AutonomySpec) -> dict:
    out: dict = {}
    if a.exploration_exploitation is not None:
        out["exploration_exploitation"] = {
            "mode": a.exploration_exploitation.mode.value,
            "mechanism": a.exploration_exploitation.mechanism,
        }
    if a.flexibility_degree is not None:
        out["flexibility_degree"] = a.flexibility_degree.value
    if a.sensitivity_level is not None:
        out["sensitivity_level"] = a.sensitivity_level.value
    out["spatial_connectivity"] = a.spatial_connectivity
    out["change_types_handled"] = sorted(c.index for c in a.change_types_handled)
    out["feedback_cycles"] = [
        {"source": f.source, "latency_bound": f.latency_bound, "purpose": f.purpose}
        for f in a.feedback_cycles
    ]
    out["interactions"] = [
        {"peer": i.peer, "filter_transform": i.filter_transform} for i in a.interactions
    ]
    out["noise_handling"] = a.noise_handling
    out["cooperation_trigger"] = a.cooperation_trigger
    out["local_interaction_rules"] = a.local_interaction_rules
    out["human_interaction_rules"] = a.human_interaction_rules
    out["verification_strategies"] = [
        s.value for s in sorted(a.verification_strategies, key=_STRATEGY_ORDER.get)
    ]
    return out


def _considerations(c: ConsiderationsSpec) -> dict:
    out: dict = {}
    for name, entry in c.entries():
        if entry is not None:
            out[name] = {
                "status": entry.status.value,
                "likelihood": entry.likelihood.value,
                "mitigation": entry.mitigation,
            }
    return out


def _document_value(doc: InterfaceDescription) -> dict:
    out: dict = {
        "meta": {
            "component_id": doc.meta.component_id,
            "name": doc.meta.name,
            "version": doc.meta.version.render(),
            "date": doc.meta.date.isoformat(),
            "authors": list(doc.meta.authors),
            "schema_version": doc.meta.schema_version.render(),
            "ai_enabled": doc.meta.ai_enabled,
        },
        "signals": [_signal(s) for s in doc.signals],
    }
    if doc.hardware is not None:
        out["hardware"] = _hardware(doc.hardware)
    if doc.software is not None:
        out["software"] = _software(doc.software)
    if doc.model_card is not None:
        out["model_card"] = _model_card(doc.model_card)
    if doc.autonomy is not None:
        out["autonomy"] = _autonomy(doc.autonomy)
    if doc.considerations is not None:
        out["considerations"] = _considerations(doc.considerations)
    return out


def _dump(value: dict) -> str:
    return json.dumps(value, indent=2, ensure_ascii=False) + "\n"


def serialize_document(doc: InterfaceDescription) -> str:
    return _dump(_document_value(doc))


def serialize_context(ctx: SystemContext) -> str:
    value = {
        "context_id": ctx.context_id,
        "offered_signals": [_signal(s) for s in ctx.offered_signals],
        "accepted_signals": [_signal(s) for s in ctx.accepted_signals],
        "environment": [_envelope(e) for e in ctx.environment],
        "available_transports": [
            {"protocol_name": t.protocol_name, "protocol_version": t.protocol_version}
            for t in ctx.available_transports
        ],
        "change_profile": sorted(c.index for c in ctx.change_profile),
        "required_ilities": [
            {"name": r.name, "minimum_level": r.minimum_level.value}
            for r in ctx.required_ilities
        ],
        "required_verification": [
            s.value for s in sorted(ctx.required_verification, key=_STRATEGY_ORDER.get)
        ],
        "requires_online_adaptation": ctx.requires_online_adaptation,
        "peer_interface_count": ctx.peer_interface_count,
        "human_interaction_expected": ctx.human_interaction_expected,
    }
    return _dump(value)
