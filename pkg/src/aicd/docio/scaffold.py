"""Skeleton documents for the three component kinds.

Scaffolds are deterministic: fixed placeholder date, fixed example signal,
"TBD" in every free-text slot.  Every scaffold passes validation with zero
Errors; remaining placeholders surface as Warnings, which is the point of
a skeleton.
"""

from __future__ import annotations

import datetime as _dt
import os
import tempfile
from enum import Enum

from ..model import (
    AutonomySpec,
    ConsiderationsSpec,
    ConstraintSet,
    Direction,
    DocumentMeta,
    EnergySubkind,
    HardwareInterfaceSpec,
    INFORMATION,
    InterfaceDescription,
    Interval,
    Likelihood,
    ModelCardReport,
    ModelDetails,
    OperationSpec,
    Packaging,
    PhysicalGroup,
    PhysicalLayer,
    PLACEHOLDER,
    QuantityEnvelope,
    RISK_NAMES,
    RiskEntry,
    RiskStatus,
    SignalSpec,
    SoftwareInterfaceSpec,
    TransportLayer,
    Version,
    energy,
)
from ..taxonomy import from_index
from .serialize import serialize_document


class TemplateKind(Enum):
    HW = "hw"
    SW = "sw"
    AI = "ai"


_SCAFFOLD_DATE = _dt.date(2024, 1, 1)


def _meta(kind: TemplateKind) -> DocumentMeta:
    return DocumentMeta(
        component_id=f"example-{kind.value}-component",
        name=PLACEHOLDER,
        version=Version(0, 1, 0),
        date=_SCAFFOLD_DATE,
        authors=(PLACEHOLDER,),
        ai_enabled=(kind is TemplateKind.AI),
    )


def _hw_signal() -> SignalSpec:
    return SignalSpec(
        signal_id="power-in",
        kind=energy(EnergySubkind.ELECTRICAL),
        direction=Direction.IN,
        characteristics=(
            QuantityEnvelope("supply_voltage", "V", Interval(4.5, 5.5)),
        ),
    )


def _info_signal() -> SignalSpec:
    return SignalSpec(
        signal_id="telemetry-out",
        kind=INFORMATION,
        direction=Direction.OUT,
        characteristics=(
            QuantityEnvelope("update_rate", "Hz", Interval(1.0, 100.0)),
        ),
    )


def _hardware_section() -> HardwareInterfaceSpec:
    return HardwareInterfaceSpec(
        physical_layer=PhysicalLayer(
            inbound=PhysicalGroup(
                electrical_emc=(
                    QuantityEnvelope("esd_contact", "kV", Interval(0.0, 4.0)),
                ),
                thermal=(
                    QuantityEnvelope("ambient_temperature", "degC", Interval(-20.0, 60.0)),
                ),
            ),
            outbound=PhysicalGroup(
                thermal=(
                    QuantityEnvelope("dissipated_heat", "W", Interval(0.0, 2.0)),
                ),
            ),
        ),
        transport_layer=TransportLayer(
            encoding=PLACEHOLDER,
            protocol_name=PLACEHOLDER,
            protocol_version=PLACEHOLDER,
            mapping_description=PLACEHOLDER,
        ),
    )


def _software_section() -> SoftwareInterfaceSpec:
    return SoftwareInterfaceSpec(
        operations=(
            OperationSpec(
                name="example_operation",
                inputs=PLACEHOLDER,
                outputs=PLACEHOLDER,
                description=PLACEHOLDER,
            ),
        ),
        constraints=ConstraintSet((PLACEHOLDER,), ()),
        packaging=Packaging(role=PLACEHOLDER, supported_contexts=(PLACEHOLDER,)),
    )


def _ai_sections() -> tuple[ModelCardReport, AutonomySpec, ConsiderationsSpec]:
    model_card = ModelCardReport(
        model_details=ModelDetails(
            date=PLACEHOLDER,
            version=PLACEHOLDER,
            model_type=PLACEHOLDER,
            training_info=PLACEHOLDER,
        ),
        intended_use=(PLACEHOLDER,),
        caveats=PLACEHOLDER,
    )
    autonomy = AutonomySpec(
        spatial_connectivity=PLACEHOLDER,
        change_types_handled=frozenset({from_index(1)}),
        noise_handling=PLACEHOLDER,
        cooperation_trigger=PLACEHOLDER,
        local_interaction_rules=PLACEHOLDER,
        human_interaction_rules=PLACEHOLDER,
    )
    entries = {
        name: RiskEntry(RiskStatus.NOT_ASSESSED, Likelihood.UNKNOWN, "")
        for name in RISK_NAMES
    }
    return model_card, autonomy, ConsiderationsSpec(**entries)


def scaffold_template(kind: TemplateKind) -> InterfaceDescription:
    if kind is TemplateKind.HW:
        return InterfaceDescription(
            meta=_meta(kind),
            signals=(_hw_signal(),),
            hardware=_hardware_section(),
        )
    if kind is TemplateKind.SW:
        return InterfaceDescription(
            meta=_meta(kind),
            signals=(_info_signal(),),
            software=_software_section(),
        )
    model_card, autonomy, considerations = _ai_sections()
    return InterfaceDescription(
        meta=_meta(kind),
        signals=(_info_signal(),),
        software=_software_section(),
        model_card=model_card,
        autonomy=autonomy,
        considerations=considerations,
    )


def write_document(path: str, doc: InterfaceDescription) -> None:
    """Serialize to path atomically (write a sibling temp file, then rename)."""
    text = serialize_document(doc)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".aicd-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
