"""Binding of positioned JSON trees to interface documents and contexts.

Binding collects every diagnostic it can find in one pass rather than
stopping at the first problem.  A document value is returned only when no
Error-severity diagnostic was produced; Warnings (unknown fields in lax
mode) never block.
"""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass
from enum import Enum
from typing import Callable, TypeVar

from ..findings import Severity
from ..model import (
    AutonomySpec,
    ConsiderationsSpec,
    ConstraintSet,
    DocumentMeta,
    EvaluationData,
    EventSpec,
    ExplorationMode,
    ExplorationProfile,
    FeedbackCycle,
    HardwareInterfaceSpec,
    IlityRequirement,
    IlitySpec,
    InteractionSpec,
    InterfaceDescription,
    Interval,
    LabelSet,
    Level,
    Likelihood,
    MetricSpec,
    ModelCardReport,
    ModelDetails,
    OperationSpec,
    Packaging,
    PhysicalGroup,
    PhysicalLayer,
    PropertySpec,
    QuantityEnvelope,
    RISK_NAMES,
    RiskEntry,
    RiskStatus,
    SensitivityLevel,
    SignalSpec,
    SoftwareInterfaceSpec,
    SystemContext,
    TransportLayer,
    TransportOption,
    QuantitativeAnalyses,
    Version,
    Visibility,
    Direction,
    PHYSICAL_CATEGORIES,
    parse_kind_token,
)
from ..taxonomy import UncertaintyClass, from_code, from_index
from .syntax import (
    JArray,
    JBool,
    JNull,
    JNumber,
    JObject,
    JString,
    JsonSyntaxError,
    Node,
    parse_json,
)

T = TypeVar("T")


class ParseMode(Enum):
    STRICT = "Strict"
    LAX = "Lax"


@dataclass(frozen=True, slots=True)
class ParseDiagnostic:
    severity: Severity
    line: int
    column: int
    message: str
    path: str


@dataclass(frozen=True, slots=True)
class ParseResult:
    document: object | None
    diagnostics: tuple[ParseDiagnostic, ...]

    @property
    def ok(self) -> bool:
        return self.document is not None


_TYPE_NAMES = {
    JString: "string",
    JNumber: "number",
    JBool: "boolean",
    JNull: "null",
    JArray: "array",
    JObject: "object",
}


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


class _Binder:
    def __init__(self, mode: ParseMode) -> None:
        self.mode = mode
        self.diags: list[ParseDiagnostic] = []
        self.failed = False

    # -- diagnostics -------------------------------------------------------

    def error(self, node: Node, path: str, message: str) -> None:
        self.failed = True
        self.diags.append(
            ParseDiagnostic(Severity.ERROR, node.line, node.column, message, path)
        )

    def warning(self, node: Node, path: str, message: str) -> None:
        self.diags.append(
            ParseDiagnostic(Severity.WARNING, node.line, node.column, message, path)
        )

    def unknown_field(self, node: Node, path: str) -> None:
        if self.mode is ParseMode.STRICT:
            self.error(node, path, "unknown field")
        else:
            self.warning(node, path, "unknown field (ignored)")

    # -- structural accessors ------------------------------------------------

    def check_keys(self, node: JObject, path: str, known: frozenset[str]) -> None:
        for m in node.members:
            if m.key not in known:
                probe = JString(m.key_line, m.key_column, m.key)
                self.unknown_field(probe, _join(path, m.key))

    def require(self, node: JObject, key: str, path: str) -> Node | None:
        value = node.get(key)
        if value is None:
            self.error(node, _join(path, key), "missing required field")
        return value

    def typed(self, node: Node, path: str, want: type, name: str) -> Node | None:
        if isinstance(node, want):
            return node
        got = _TYPE_NAMES.get(type(node), "value")
        self.error(node, path, f"expected {name}, found {got}")
        return None

    def str_at(self, node: Node, path: str) -> str | None:
        n = self.typed(node, path, JString, "string")
        return None if n is None else n.value  # type: ignore[union-attr]

    def float_at(self, node: Node, path: str) -> float | None:
        n = self.typed(node, path, JNumber, "number")
        return None if n is None else n.value  # type: ignore[union-attr]

    def int_at(self, node: Node, path: str) -> int | None:
        n = self.typed(node, path, JNumber, "number")
        if n is None:
            return None
        if not n.is_integer:  # type: ignore[union-attr]
            self.error(node, path, "expected integer, found real number")
            return None
        return int(n.value)  # type: ignore[union-attr]

    def bool_at(self, node: Node, path: str) -> bool | None:
        n = self.typed(node, path, JBool, "boolean")
        return None if n is None else n.value  # type: ignore[union-attr]

    # -- field readers (return default when the key is absent) --------------

    def str_field(self, obj: JObject, key: str, path: str, default: str = "") -> str:
        node = obj.get(key)
        if node is None:
            return default
        return self.str_at(node, _join(path, key)) or default

    def bool_field(self, obj: JObject, key: str, path: str, default: bool = False) -> bool:
        node = obj.get(key)
        if node is None:
            return default
        got = self.bool_at(node, _join(path, key))
        return default if got is None else got

    def int_field(self, obj: JObject, key: str, path: str, default: int = 0) -> int:
        node = obj.get(key)
        if node is None:
            return default
        got = self.int_at(node, _join(path, key))
        return default if got is None else got

    def enum_field(
        self,
        obj: JObject,
        key: str,
        path: str,
        enum_cls: type,
        required: bool = False,
    ):
        node = obj.get(key)
        fpath = _join(path, key)
        if node is None:
            if required:
                self.error(obj, fpath, "missing required field")
            return None
        text = self.str_at(node, fpath)
        if text is None:
            return None
        try:
            return enum_cls(text)
        except ValueError:
            allowed = ", ".join(m.value for m in enum_cls)
            self.error(node, fpath, f"expected one of: {allowed}")
            return None

    def str_tuple_field(self, obj: JObject, key: str, path: str) -> tuple[str, ...]:
        node = obj.get(key)
        if node is None:
            return ()
        fpath = _join(path, key)
        arr = self.typed(node, fpath, JArray, "array")
        if arr is None:
            return ()
        out: list[str] = []
        for i, item in enumerate(arr.items):  # type: ignore[union-attr]
            text = self.str_at(item, f"{fpath}[{i}]")
            if text is not None:
                out.append(text)
        return tuple(out)

    def list_field(
        self,
        obj: JObject,
        key: str,
        path: str,
        bind_item: Callable[[JObject, str], T | None],
    ) -> tuple[T, ...]:
        node = obj.get(key)
        if node is None:
            return ()
        fpath = _join(path, key)
        arr = self.typed(node, fpath, JArray, "array")
        if arr is None:
            return ()
        out: list[T] = []
        for i, item in enumerate(arr.items):  # type: ignore[union-attr]
            ipath = f"{fpath}[{i}]"
            inode = self.typed(item, ipath, JObject, "object")
            if inode is None:
                continue
            bound = bind_item(inode, ipath)  # type: ignore[arg-type]
            if bound is not None:
                out.append(bound)
        return tuple(out)

    def object_field(
        self,
        obj: JObject,
        key: str,
        path: str,
        bind: Callable[[JObject, str], T | None],
    ) -> T | None:
        node = obj.get(key)
        if node is None:
            return None
        fpath = _join(path, key)
        inner = self.typed(node, fpath, JObject, "object")
        if inner is None:
            return None
        return bind(inner, fpath)  # type: ignore[arg-type]

    # -- domain-specific pieces ---------------------------------------------

    def version_field(
        self, obj: JObject, key: str, path: str, required: bool, default: Version
    ) -> Version:
        node = obj.get(key)
        fpath = _join(path, key)
        if node is None:
            if required:
                self.error(obj, fpath, "missing required field")
            return default
        text = self.str_at(node, fpath)
        if text is None:
            return default
        try:
            return Version.parse(text)
        except ValueError as exc:
            self.error(node, fpath, str(exc))
            return default

    def date_field(self, obj: JObject, key: str, path: str) -> _dt.date:
        fallback = _dt.date(1970, 1, 1)
        node = self.require(obj, key, path)
        if node is None:
            return fallback
        fpath = _join(path, key)
        text = self.str_at(node, fpath)
        if text is None:
            return fallback
        try:
            return _dt.date.fromisoformat(text)
        except ValueError:
            self.error(node, fpath, f"expected ISO date 'YYYY-MM-DD', got {text!r}")
            return fallback

    def uncertainty_set_field(
        self, obj: JObject, key: str, path: str
    ) -> frozenset[UncertaintyClass]:
        node = obj.get(key)
        if node is None:
            return frozenset()
        fpath = _join(path, key)
        arr = self.typed(node, fpath, JArray, "array")
        if arr is None:
            return frozenset()
        out: set[UncertaintyClass] = set()
        for i, item in enumerate(arr.items):  # type: ignore[union-attr]
            ipath = f"{fpath}[{i}]"
            try:
                if isinstance(item, JNumber):
                    if not item.is_integer:
                        raise ValueError("class index must be an integer")
                    out.add(from_index(int(item.value)))
                elif isinstance(item, JString):
                    out.add(from_code(item.value))
                else:
                    raise ValueError(
                        "expected a class index (1-8) or a Known/Unknown code like 'UUK'"
                    )
            except ValueError as exc:
                self.error(item, ipath, str(exc))
        return frozenset(out)

    def verification_set_field(self, obj, key, path):
        from ..model import VerificationStrategy

        node = obj.get(key)
        if node is None:
            return frozenset()
        fpath = _join(path, key)
        arr = self.typed(node, fpath, JArray, "array")
        if arr is None:
            return frozenset()
        out = set()
        for i, item in enumerate(arr.items):
            ipath = f"{fpath}[{i}]"
            text = self.str_at(item, ipath)
            if text is None:
                continue
            try:
                out.add(VerificationStrategy(text))
            except ValueError:
                allowed = ", ".join(m.value for m in VerificationStrategy)
                self.error(item, ipath, f"expected one of: {allowed}")
        return frozenset(out)

    # -- envelopes -----------------------------------------------------------

    def bind_envelope(self, obj: JObject, path: str) -> QuantityEnvelope | None:
        self.check_keys(obj, path, frozenset({"name", "unit", "min", "max", "values"}))
        name_node = self.require(obj, "name", path)
        unit_node = self.require(obj, "unit", path)
        name = "" if name_node is None else (self.str_at(name_node, _join(path, "name")) or "")
        unit = "" if unit_node is None else (self.str_at(unit_node, _join(path, "unit")) or "")
        has_interval = obj.get("min") is not None or obj.get("max") is not None
        has_values = obj.get("values") is not None
        if has_interval and has_values:
            self.error(obj, path, "bounds must be either min/max or values, not both")
            return None
        if has_values:
            labels = self.str_tuple_field(obj, "values", path)
            return QuantityEnvelope(name, unit, LabelSet(labels))
        lo_node = self.require(obj, "min", path)
        hi_node = self.require(obj, "max", path)
        if lo_node is None or hi_node is None:
            return None
        lo = self.float_at(lo_node, _join(path, "min"))
        hi = self.float_at(hi_node, _join(path, "max"))
        if lo is None or hi is None:
            return None
        return QuantityEnvelope(name, unit, Interval(lo, hi))

    def envelope_list_field(
        self, obj: JObject, key: str, path: str
    ) -> tuple[QuantityEnvelope, ...]:
        return self.list_field(obj, key, path, self.bind_envelope)

    # -- meta & signals --------------------------------------------------------

    def bind_meta(self, obj: JObject, path: str) -> DocumentMeta:
        known = frozenset(
            {"component_id", "name", "version", "date", "authors", "schema_version", "ai_enabled"}
        )
        self.check_keys(obj, path, known)
        component_id = name = ""
        node = self.require(obj, "component_id", path)
        if node is not None:
            component_id = self.str_at(node, _join(path, "component_id")) or ""
        node = self.require(obj, "name", path)
        if node is not None:
            name = self.str_at(node, _join(path, "name")) or ""
        version = self.version_field(obj, "version", path, True, Version(0, 0, 0))
        date = self.date_field(obj, "date", path)
        authors = self.str_tuple_field(obj, "authors", path)
        schema_version = self.version_field(
            obj, "schema_version", path, False, Version(1, 0, 0)
        )
        ai_enabled = self.bool_field(obj, "ai_enabled", path)
        return DocumentMeta(
            component_id, name, version, date, authors, schema_version, ai_enabled
        )

    def bind_signal(self, obj: JObject, path: str) -> SignalSpec | None:
        known = frozenset({"signal_id", "kind", "direction", "characteristics"})
        self.check_keys(obj, path, known)
        node = self.require(obj, "signal_id", path)
        signal_id = "" if node is None else (self.str_at(node, _join(path, "signal_id")) or "")
        kind = None
        node = self.require(obj, "kind", path)
        if node is not None:
            text = self.str_at(node, _join(path, "kind"))
            if text is not None:
                try:
                    kind = parse_kind_token(text)
                except ValueError as exc:
                    self.error(node, _join(path, "kind"), str(exc))
        direction = self.enum_field(obj, "direction", path, Direction, required=True)
        characteristics = self.envelope_list_field(obj, "characteristics", path)
        if kind is None or direction is None:
            return None
        return SignalSpec(signal_id, kind, direction, characteristics)

    # -- hardware ---------------------------------------------------------------

    def bind_physical_group(self, obj: JObject, path: str) -> PhysicalGroup:
        self.check_keys(obj, path, frozenset(PHYSICAL_CATEGORIES))
        groups = {
            cat: self.envelope_list_field(obj, cat, path) for cat in PHYSICAL_CATEGORIES
        }
        return PhysicalGroup(**groups)

    def bind_physical_layer(self, obj: JObject, path: str) -> PhysicalLayer:
        self.check_keys(obj, path, frozenset({"in", "out"}))
        inbound = self.object_field(obj, "in", path, self.bind_physical_group)
        outbound = self.object_field(obj, "out", path, self.bind_physical_group)
        return PhysicalLayer(inbound or PhysicalGroup(), outbound or PhysicalGroup())

    def bind_transport(self, obj: JObject, path: str) -> TransportLayer:
        known = frozenset(
            {"encoding", "protocol_name", "protocol_version", "mapping_description"}
        )
        self.check_keys(obj, path, known)
        return TransportLayer(
            self.str_field(obj, "encoding", path),
            self.str_field(obj, "protocol_name", path),
            self.str_field(obj, "protocol_version", path),
            self.str_field(obj, "mapping_description", path),
        )

    def bind_hardware(self, obj: JObject, path: str) -> HardwareInterfaceSpec:
        self.check_keys(obj, path, frozenset({"physical_layer", "transport_layer"}))
        physical = self.object_field(obj, "physical_layer", path, self.bind_physical_layer)
        transport = self.object_field(obj, "transport_layer", path, self.bind_transport)
        return HardwareInterfaceSpec(
            physical or PhysicalLayer(), transport or TransportLayer()
        )

    # -- software ---------------------------------------------------------------

    def bind_property(self, obj: JObject, path: str) -> PropertySpec | None:
        self.check_keys(obj, path, frozenset({"name", "visibility", "description"}))
        node = self.require(obj, "name", path)
        name = "" if node is None else (self.str_at(node, _join(path, "name")) or "")
        visibility = self.enum_field(obj, "visibility", path, Visibility, required=True)
        if visibility is None:
            return None
        return PropertySpec(name, visibility, self.str_field(obj, "description", path))

    def bind_operation(self, obj: JObject, path: str) -> OperationSpec | None:
        self.check_keys(obj, path, frozenset({"name", "inputs", "outputs", "description"}))
        node = self.require(obj, "name", path)
        if node is None:
            return None
        name = self.str_at(node, _join(path, "name")) or ""
        return OperationSpec(
            name,
            self.str_field(obj, "inputs", path),
            self.str_field(obj, "outputs", path),
            self.str_field(obj, "description", path),
        )

    def bind_event(self, obj: JObject, path: str) -> EventSpec | None:
        self.check_keys(obj, path, frozenset({"name", "payload", "trigger"}))
        node = self.require(obj, "name", path)
        if node is None:
            return None
        name = self.str_at(node, _join(path, "name")) or ""
        return EventSpec(
            name, self.str_field(obj, "payload", path), self.str_field(obj, "trigger", path)
        )

    def bind_constraints(self, obj: JObject, path: str) -> ConstraintSet:
        self.check_keys(
            obj, path, frozenset({"element_constraints", "relationship_constraints"})
        )
        return ConstraintSet(
            self.str_tuple_field(obj, "element_constraints", path),
            self.str_tuple_field(obj, "relationship_constraints", path),
        )

    def bind_packaging(self, obj: JObject, path: str) -> Packaging:
        self.check_keys(obj, path, frozenset({"role", "supported_contexts"}))
        return Packaging(
            self.str_field(obj, "role", path),
            self.str_tuple_field(obj, "supported_contexts", path),
        )

    def bind_ility(self, obj: JObject, path: str) -> IlitySpec | None:
        self.check_keys(obj, path, frozenset({"name", "level", "characterization"}))
        node = self.require(obj, "name", path)
        name = "" if node is None else (self.str_at(node, _join(path, "name")) or "")
        level = self.enum_field(obj, "level", path, Level, required=True)
        if level is None:
            return None
        return IlitySpec(name, level, self.str_field(obj, "characterization", path))

    def bind_software(self, obj: JObject, path: str) -> SoftwareInterfaceSpec:
        known = frozenset(
            {"properties", "operations", "events", "constraints", "packaging", "ilities"}
        )
        self.check_keys(obj, path, known)
        return SoftwareInterfaceSpec(
            self.list_field(obj, "properties", path, self.bind_property),
            self.list_field(obj, "operations", path, self.bind_operation),
            self.list_field(obj, "events", path, self.bind_event),
            self.object_field(obj, "constraints", path, self.bind_constraints),
            self.object_field(obj, "packaging", path, self.bind_packaging),
            self.list_field(obj, "ilities", path, self.bind_ility),
        )

    # -- model card ---------------------------------------------------------------

    def opt_str_field(self, obj: JObject, key: str, path: str) -> str | None:
        node = obj.get(key)
        if node is None:
            return None
        return self.str_at(node, _join(path, key))

    def bind_model_details(self, obj: JObject, path: str) -> ModelDetails:
        self.check_keys(
            obj, path, frozenset({"date", "version", "model_type", "training_info"})
        )
        return ModelDetails(
            self.opt_str_field(obj, "date", path),
            self.opt_str_field(obj, "version", path),
            self.opt_str_field(obj, "model_type", path),
            self.opt_str_field(obj, "training_info", path),
        )

    def bind_metric(self, obj: JObject, path: str) -> MetricSpec | None:
        self.check_keys(obj, path, frozenset({"name", "value", "threshold_note"}))
        name_node = self.require(obj, "name", path)
        value_node = self.require(obj, "value", path)
        if name_node is None or value_node is None:
            return None
        name = self.str_at(name_node, _join(path, "name")) or ""
        value = self.float_at(value_node, _join(path, "value"))
        if value is None:
            return None
        return MetricSpec(name, value, self.str_field(obj, "threshold_note", path))

    def bind_eval_data(self, obj: JObject, path: str) -> EvaluationData:
        self.check_keys(obj, path, frozenset({"datasets", "motivation", "preprocessing"}))
        return EvaluationData(
            self.opt_str_field(obj, "datasets", path),
            self.opt_str_field(obj, "motivation", path),
            self.opt_str_field(obj, "preprocessing", path),
        )

    def bind_quantitative(self, obj: JObject, path: str) -> QuantitativeAnalyses:
        self.check_keys(obj, path, frozenset({"unitary", "intersectional"}))
        return QuantitativeAnalyses(
            self.str_tuple_field(obj, "unitary", path),
            self.str_tuple_field(obj, "intersectional", path),
        )

    def bind_model_card(self, obj: JObject, path: str) -> ModelCardReport:
        known = frozenset(
            {
                "model_details",
                "intended_use",
                "factors",
                "metrics",
                "evaluation_data",
                "training_data",
                "quantitative_analyses",
                "ethical_considerations",
                "caveats",
            }
        )
        self.check_keys(obj, path, known)
        intended = (
            self.str_tuple_field(obj, "intended_use", path)
            if obj.get("intended_use") is not None
            else None
        )
        factors = (
            self.str_tuple_field(obj, "factors", path)
            if obj.get("factors") is not None
            else None
        )
        metrics = (
            self.list_field(obj, "metrics", path, self.bind_metric)
            if obj.get("metrics") is not None
            else None
        )
        return ModelCardReport(
            self.object_field(obj, "model_details", path, self.bind_model_details),
            intended,
            factors,
            metrics,
            self.object_field(obj, "evaluation_data", path, self.bind_eval_data),
            self.opt_str_field(obj, "training_data", path),
            self.object_field(obj, "quantitative_analyses", path, self.bind_quantitative),
            self.opt_str_field(obj, "ethical_considerations", path),
            self.opt_str_field(obj, "caveats", path),
        )

    # -- autonomy ---------------------------------------------------------------

    def bind_exploration(self, obj: JObject, path: str) -> ExplorationProfile | None:
        self.check_keys(obj, path, frozenset({"mode", "mechanism"}))
        mode = self.enum_field(obj, "mode", path, ExplorationMode, required=True)
        if mode is None:
            return None
        return ExplorationProfile(mode, self.str_field(obj, "mechanism", path))

    def bind_feedback(self, obj: JObject, path: str) -> FeedbackCycle | None:
        self.check_keys(obj, path, frozenset({"source", "latency_bound", "purpose"}))
        source_node = self.require(obj, "source", path)
        latency_node = self.require(obj, "latency_bound", path)
        if source_node is None or latency_node is None:
            return None
        source = self.str_at(source_node, _join(path, "source")) or ""
        latency = self.float_at(latency_node, _join(path, "latency_bound"))
        if latency is None:
            return None
        return FeedbackCycle(source, latency, self.str_field(obj, "purpose", path))

    def bind_interaction(self, obj: JObject, path: str) -> InteractionSpec | None:
        self.check_keys(obj, path, frozenset({"peer", "filter_transform"}))
        node = self.require(obj, "peer", path)
        if node is None:
            return None
        peer = self.str_at(node, _join(path, "peer")) or ""
        return InteractionSpec(peer, self.str_field(obj, "filter_transform", path))

    def bind_autonomy(self, obj: JObject, path: str) -> AutonomySpec:
        known = frozenset(
            {
                "exploration_exploitation",
                "flexibility_degree",
                "sensitivity_level",
                "spatial_connectivity",
                "change_types_handled",
                "feedback_cycles",
                "interactions",
                "noise_handling",
                "cooperation_trigger",
                "local_interaction_rules",
                "human_interaction_rules",
                "verification_strategies",
            }
        )
        self.check_keys(obj, path, known)
        return AutonomySpec(
            self.object_field(obj, "exploration_exploitation", path, self.bind_exploration),
            self.enum_field(obj, "flexibility_degree", path, Level),
            self.enum_field(obj, "sensitivity_level", path, SensitivityLevel),
            self.str_field(obj, "spatial_connectivity", path),
            self.uncertainty_set_field(obj, "change_types_handled", path),
            self.list_field(obj, "feedback_cycles", path, self.bind_feedback),
            self.list_field(obj, "interactions", path, self.bind_interaction),
            self.str_field(obj, "noise_handling", path),
            self.str_field(obj, "cooperation_trigger", path),
            self.str_field(obj, "local_interaction_rules", path),
            self.str_field(obj, "human_interaction_rules", path),
            self.verification_set_field(obj, "verification_strategies", path),
        )

    # -- considerations ------------------------------------------------------------

    def bind_risk_entry(self, obj: JObject, path: str) -> RiskEntry:
        self.check_keys(obj, path, frozenset({"status", "likelihood", "mitigation"}))
        status = self.enum_field(obj, "status", path, RiskStatus)
        likelihood = self.enum_field(obj, "likelihood", path, Likelihood)
        return RiskEntry(
            status or RiskStatus.NOT_ASSESSED,
            likelihood or Likelihood.UNKNOWN,
            self.str_field(obj, "mitigation", path),
        )

    def bind_considerations(self, obj: JObject, path: str) -> ConsiderationsSpec:
        self.check_keys(obj, path, frozenset(RISK_NAMES))
        entries = {
            name: self.object_field(obj, name, path, self.bind_risk_entry)
            for name in RISK_NAMES
        }
        return ConsiderationsSpec(**entries)

    # -- roots ---------------------------------------------------------------------

    def bind_document(self, obj: JObject) -> InterfaceDescription | None:
        known = frozenset(
            {"meta", "signals", "hardware", "software", "model_card", "autonomy", "considerations"}
        )
        self.check_keys(obj, "", known)
        meta_node = self.require(obj, "meta", "")
        meta = None
        if meta_node is not None:
            inner = self.typed(meta_node, "meta", JObject, "object")
            if inner is not None:
                meta = self.bind_meta(inner, "meta")
        signals = self.list_field(obj, "signals", "", self.bind_signal)
        hardware = self.object_field(obj, "hardware", "", self.bind_hardware)
        software = self.object_field(obj, "software", "", self.bind_software)
        model_card = self.object_field(obj, "model_card", "", self.bind_model_card)
        autonomy = self.object_field(obj, "autonomy", "", self.bind_autonomy)
        considerations = self.object_field(obj, "considerations", "", self.bind_considerations)
        if meta is None:
            return None
        return InterfaceDescription(
            meta, signals, hardware, software, model_card, autonomy, considerations
        )

    def bind_transport_option(self, obj: JObject, path: str) -> TransportOption | None:
        self.check_keys(obj, path, frozenset({"protocol_name", "protocol_version"}))
        name_node = self.require(obj, "protocol_name", path)
        if name_node is None:
            return None
        name = self.str_at(name_node, _join(path, "protocol_name")) or ""
        return TransportOption(name, self.str_field(obj, "protocol_version", path))

    def bind_ility_requirement(self, obj: JObject, path: str) -> IlityRequirement | None:
        self.check_keys(obj, path, frozenset({"name", "minimum_level"}))
        node = self.require(obj, "name", path)
        name = "" if node is None else (self.str_at(node, _join(path, "name")) or "")
        level = self.enum_field(obj, "minimum_level", path, Level, required=True)
        if level is None:
            return None
        return IlityRequirement(name, level)

    def bind_context(self, obj: JObject) -> SystemContext | None:
        known = frozenset(
            {
                "context_id",
                "offered_signals",
                "accepted_signals",
                "environment",
                "available_transports",
                "change_profile",
                "required_ilities",
                "required_verification",
                "requires_online_adaptation",
                "peer_interface_count",
                "human_interaction_expected",
            }
        )
        self.check_keys(obj, "", known)
        id_node = self.require(obj, "context_id", "")
        context_id = "" if id_node is None else (self.str_at(id_node, "context_id") or "")
        return SystemContext(
            context_id,
            self.list_field(obj, "offered_signals", "", self.bind_signal),
            self.list_field(obj, "accepted_signals", "", self.bind_signal),
            self.envelope_list_field(obj, "environment", ""),
            self.list_field(obj, "available_transports", "", self.bind_transport_option),
            self.uncertainty_set_field(obj, "change_profile", ""),
            self.list_field(obj, "required_ilities", "", self.bind_ility_requirement),
            self.verification_set_field(obj, "required_verification", ""),
            self.bool_field(obj, "requires_online_adaptation", ""),
            self.int_field(obj, "peer_interface_count", ""),
            self.bool_field(obj, "human_interaction_expected", ""),
        )


def _parse(text: str, mode: ParseMode, bind: str) -> ParseResult:
    try:
        root, duplicates = parse_json(text)
    except JsonSyntaxError as exc:
        diag = ParseDiagnostic(Severity.ERROR, exc.line, exc.column, exc.message, "")
        return ParseResult(None, (diag,))
    binder = _Binder(mode)
    for dup in duplicates:
        binder.error(
            JString(dup.line, dup.column, dup.key),
            dup.path,
            f"duplicate key {dup.key!r} (first value kept)",
        )
    if not isinstance(root, JObject):
        binder.error(root, "", "top level must be an object")
        document = None
    else:
        document = getattr(binder, bind)(root)
    if binder.failed:
        document = None
    diags = sorted(binder.diags, key=lambda d: (d.line, d.column, d.path))
    return ParseResult(document, tuple(diags))


def parse_document(text: str, mode: ParseMode = ParseMode.LAX) -> ParseResult:
    """Read an interface document from JSON text.

    Returns a ParseResult whose document is None when any Error-severity
    diagnostic was produced.  Diagnostics are sorted by source position.
    """
    return _parse(text, mode, "bind_document")


def parse_context(text: str, mode: ParseMode = ParseMode.LAX) -> ParseResult:
    """Read a system context (the host side of an assessment) from JSON text."""
    return _parse(text, mode, "bind_context")
