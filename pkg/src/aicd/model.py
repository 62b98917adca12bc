"""Domain model for component interface description documents.

Everything here is an immutable value: frozen dataclasses over tuples,
frozensets, and enums.  Instances are safe to share between threads and to
use as dictionary keys where hashable.  Semantic rules (uniqueness,
range sanity, required sections) are *not* enforced at construction time;
they are the validator's job, so that a structurally well-formed but
semantically broken document can be represented, inspected, and reported
on.
"""

from __future__ import annotations

import datetime as _dt
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Iterator, Union

from .taxonomy import UncertaintyClass


# ---------------------------------------------------------------------------
# Enumerations


@total_ordering
class _OrderedEnum(Enum):
    """Enum whose members are totally ordered by declaration position."""

    def _rank(self) -> int:
        return list(type(self)).index(self)

    def __lt__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._rank() < other._rank()  # type: ignore[attr-defined]


class KindCategory(Enum):
    INFORMATION = "Information"
    ENERGY = "Energy"
    MATERIAL = "Material"


class EnergySubkind(Enum):
    ELECTRICAL = "Electrical"
    MECHANICAL = "Mechanical"
    CHEMICAL = "Chemical"
    NUCLEAR = "Nuclear"
    RADIANT = "Radiant"
    LIGHT = "Light"
    SOUND = "Sound"


class Direction(Enum):
    IN = "In"
    OUT = "Out"
    BIDIRECTIONAL = "Bidirectional"


class Level(_OrderedEnum):
    """Four-step ordinal scale for quality levels and flexibility degree."""

    NONE = "None"
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class SensitivityLevel(_OrderedEnum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class Visibility(Enum):
    OBSERVABLE = "Observable"
    OBSERVABLE_AND_MUTABLE = "ObservableAndMutable"


class ExplorationMode(Enum):
    EXPLORATION_DOMINANT = "ExplorationDominant"
    EXPLOITATION_DOMINANT = "ExploitationDominant"
    BALANCED = "Balanced"
    SCHEDULED = "Scheduled"


class VerificationStrategy(Enum):
    ABSTRACTABILITY_GENERALITY = "AbstractabilityGenerality"
    MAINTAINABILITY_CHANGEABILITY_ROBUSTNESS = "MaintainabilityChangeabilityRobustness"
    AGENT_BASED_SIMULATION = "AgentBasedSimulation"
    COOPERATION_TEST_CASES = "CooperationTestCases"


class RiskStatus(Enum):
    ASSESSED = "Assessed"
    NOT_ASSESSED = "NotAssessed"


class Likelihood(Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    UNKNOWN = "Unknown"


# ---------------------------------------------------------------------------
# Signal kind (category plus energy subkind)


@dataclass(frozen=True, slots=True)
class SignalKind:
    """What flows through a signal: information, a form of energy, or material.

    Energy carries exactly one subkind; the other categories carry none.
    The wire token is ``Information``, ``Material``, or ``Energy:<Subkind>``.
    """

    category: KindCategory
    energy_subkind: EnergySubkind | None = None

    def __post_init__(self) -> None:
        if (self.category is KindCategory.ENERGY) != (self.energy_subkind is not None):
            raise ValueError(
                "Energy kind requires exactly one subkind; other kinds carry none"
            )

    @property
    def token(self) -> str:
        if self.energy_subkind is not None:
            return f"{self.category.value}:{self.energy_subkind.value}"
        return self.category.value


INFORMATION = SignalKind(KindCategory.INFORMATION)
MATERIAL = SignalKind(KindCategory.MATERIAL)


def energy(subkind: EnergySubkind) -> SignalKind:
    return SignalKind(KindCategory.ENERGY, subkind)


def parse_kind_token(token: str) -> SignalKind:
    """Parse a kind token; raises ValueError for anything unrecognized."""
    base, sep, sub = token.partition(":")
    try:
        category = KindCategory(base)
    except ValueError:
        raise ValueError(f"unknown signal kind {token!r}") from None
    if category is KindCategory.ENERGY:
        if not sep:
            raise ValueError("Energy kind requires a subkind, e.g. 'Energy:Electrical'")
        try:
            return SignalKind(category, EnergySubkind(sub))
        except ValueError:
            raise ValueError(f"unknown energy subkind {sub!r}") from None
    if sep:
        raise ValueError(f"kind {base!r} does not take a subkind")
    return SignalKind(category)


# ---------------------------------------------------------------------------
# Quantity envelopes and the containment algebra shared by the diff and
# compatibility rules


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed real interval [lo, hi]. lo > hi is representable (validator
    reports it); such an empty interval behaves as the empty set here."""

    lo: float
    hi: float

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    @property
    def length(self) -> float:
        return 0.0 if self.is_empty else self.hi - self.lo


@dataclass(frozen=True, slots=True)
class LabelSet:
    """Finite enumerated alternative to an interval, e.g. signal shapes."""

    labels: tuple[str, ...]


Bounds = Union[Interval, LabelSet]


def bounds_contains(producer: Bounds, consumer: Bounds) -> bool:
    """True when every value the producer side may take is acceptable to the
    consumer side.  Mixed interval/label forms never contain each other."""
    if isinstance(producer, Interval) and isinstance(consumer, Interval):
        if producer.is_empty:
            return True
        if consumer.is_empty:
            return False
        return consumer.lo <= producer.lo and producer.hi <= consumer.hi
    if isinstance(producer, LabelSet) and isinstance(consumer, LabelSet):
        return set(producer.labels) <= set(consumer.labels)
    return False


def bounds_overlap_fraction(producer: Bounds, consumer: Bounds) -> float:
    """Fraction of the producer range that the consumer accepts, in [0, 1].

    For intervals this is length of the intersection over length of the
    producer interval; a zero-length producer counts 1.0 when its single
    point is accepted and 0.0 otherwise.  For label sets it is the matching
    cardinality ratio.  Mismatched bound forms overlap nowhere.
    """
    if isinstance(producer, Interval) and isinstance(consumer, Interval):
        if producer.is_empty:
            return 1.0
        if consumer.is_empty:
            return 0.0
        if producer.length == 0.0:
            return 1.0 if consumer.lo <= producer.lo <= consumer.hi else 0.0
        lo = max(producer.lo, consumer.lo)
        hi = min(producer.hi, consumer.hi)
        if lo > hi:
            return 0.0
        return min(1.0, (hi - lo) / producer.length)
    if isinstance(producer, LabelSet) and isinstance(consumer, LabelSet):
        if not producer.labels:
            return 1.0
        shared = set(producer.labels) & set(consumer.labels)
        return len(shared) / len(set(producer.labels))
    return 0.0


def describe_bounds(bounds: Bounds) -> str:
    if isinstance(bounds, Interval):
        return f"[{bounds.lo!r}, {bounds.hi!r}]"
    return "{" + ", ".join(bounds.labels) + "}"


@dataclass(frozen=True, slots=True)
class QuantityEnvelope:
    """A named, unit-bearing bound on one attribute of a signal or environment."""

    name: str
    unit: str
    bounds: Bounds


# ---------------------------------------------------------------------------
# Document metadata


_VERSION_RE = re.compile(r"^(0|[1-9][0-9]*)\.(0|[1-9][0-9]*)\.(0|[1-9][0-9]*)$")


@dataclass(frozen=True, slots=True, order=True)
class Version:
    major: int
    minor: int
    patch: int

    def __post_init__(self) -> None:
        if min(self.major, self.minor, self.patch) < 0:
            raise ValueError("version components must be non-negative")

    def render(self) -> str:
        return f"{self.major}.{self.minor}.{self.patch}"

    @classmethod
    def parse(cls, text: str) -> "Version":
        m = _VERSION_RE.match(text)
        if m is None:
            raise ValueError(f"version must be 'X.Y.Z' with non-negative integers, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True, slots=True)
class DocumentMeta:
    component_id: str
    name: str
    version: Version
    date: _dt.date
    authors: tuple[str, ...] = ()
    schema_version: Version = Version(1, 0, 0)
    ai_enabled: bool = False


# ---------------------------------------------------------------------------
# Signals


@dataclass(frozen=True, slots=True)
class SignalSpec:
    signal_id: str
    kind: SignalKind
    direction: Direction
    characteristics: tuple[QuantityEnvelope, ...] = ()

    @property
    def pairing_name(self) -> str | None:
        """Name of the first characteristic; the vocabulary used to pair a
        component signal with its counterpart on the host side."""
        return self.characteristics[0].name if self.characteristics else None


# ---------------------------------------------------------------------------
# Hardware interface


PHYSICAL_CATEGORIES = (
    "electrical_emc",
    "electrical_communication",
    "mechanical",
    "thermal",
    "particulate",
)


@dataclass(frozen=True, slots=True)
class PhysicalGroup:
    """Envelope lists for one direction of the physical layer, bucketed into
    the five fixed categories."""

    electrical_emc: tuple[QuantityEnvelope, ...] = ()
    electrical_communication: tuple[QuantityEnvelope, ...] = ()
    mechanical: tuple[QuantityEnvelope, ...] = ()
    thermal: tuple[QuantityEnvelope, ...] = ()
    particulate: tuple[QuantityEnvelope, ...] = ()

    def items(self) -> Iterator[tuple[str, tuple[QuantityEnvelope, ...]]]:
        for category in PHYSICAL_CATEGORIES:
            yield category, getattr(self, category)


@dataclass(frozen=True, slots=True)
class PhysicalLayer:
    inbound: PhysicalGroup = PhysicalGroup()
    outbound: PhysicalGroup = PhysicalGroup()


@dataclass(frozen=True, slots=True)
class TransportLayer:
    """How information is coded for the wire: representation plus protocol."""

    encoding: str = ""
    protocol_name: str = ""
    protocol_version: str = ""
    mapping_description: str = ""


@dataclass(frozen=True, slots=True)
class HardwareInterfaceSpec:
    physical_layer: PhysicalLayer = PhysicalLayer()
    transport_layer: TransportLayer = TransportLayer()


# ---------------------------------------------------------------------------
# Software interface


@dataclass(frozen=True, slots=True)
class PropertySpec:
    name: str
    visibility: Visibility
    description: str = ""


@dataclass(frozen=True, slots=True)
class OperationSpec:
    name: str
    inputs: str = ""
    outputs: str = ""
    description: str = ""


@dataclass(frozen=True, slots=True)
class EventSpec:
    name: str
    payload: str = ""
    trigger: str = ""


@dataclass(frozen=True, slots=True)
class ConstraintSet:
    element_constraints: tuple[str, ...] = ()
    relationship_constraints: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Packaging:
    role: str = ""
    supported_contexts: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class IlitySpec:
    name: str
    level: Level
    characterization: str = ""


@dataclass(frozen=True, slots=True)
class SoftwareInterfaceSpec:
    properties: tuple[PropertySpec, ...] = ()
    operations: tuple[OperationSpec, ...] = ()
    events: tuple[EventSpec, ...] = ()
    constraints: ConstraintSet | None = None
    packaging: Packaging | None = None
    ilities: tuple[IlitySpec, ...] = ()


# ---------------------------------------------------------------------------
# Model card report (nine sections, each independently present or absent)


@dataclass(frozen=True, slots=True)
class ModelDetails:
    date: str | None = None
    version: str | None = None
    model_type: str | None = None
    training_info: str | None = None


@dataclass(frozen=True, slots=True)
class MetricSpec:
    name: str
    value: float
    threshold_note: str = ""


@dataclass(frozen=True, slots=True)
class EvaluationData:
    datasets: str | None = None
    motivation: str | None = None
    preprocessing: str | None = None


@dataclass(frozen=True, slots=True)
class QuantitativeAnalyses:
    unitary: tuple[str, ...] = ()
    intersectional: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class ModelCardReport:
    model_details: ModelDetails | None = None
    intended_use: tuple[str, ...] | None = None
    factors: tuple[str, ...] | None = None
    metrics: tuple[MetricSpec, ...] | None = None
    evaluation_data: EvaluationData | None = None
    training_data: str | None = None
    quantitative_analyses: QuantitativeAnalyses | None = None
    ethical_considerations: str | None = None
    caveats: str | None = None


MODEL_CARD_SECTIONS = (
    "model_details",
    "intended_use",
    "factors",
    "metrics",
    "evaluation_data",
    "training_data",
    "quantitative_analyses",
    "ethical_considerations",
    "caveats",
)


# ---------------------------------------------------------------------------
# Autonomy description


@dataclass(frozen=True, slots=True)
class ExplorationProfile:
    mode: ExplorationMode
    mechanism: str = ""


@dataclass(frozen=True, slots=True)
class FeedbackCycle:
    source: str
    latency_bound: float
    purpose: str = ""


@dataclass(frozen=True, slots=True)
class InteractionSpec:
    peer: str
    filter_transform: str = ""


@dataclass(frozen=True, slots=True)
class AutonomySpec:
    exploration_exploitation: ExplorationProfile | None = None
    flexibility_degree: Level | None = None
    sensitivity_level: SensitivityLevel | None = None
    spatial_connectivity: str = ""
    change_types_handled: frozenset[UncertaintyClass] = frozenset()
    feedback_cycles: tuple[FeedbackCycle, ...] = ()
    interactions: tuple[InteractionSpec, ...] = ()
    noise_handling: str = ""
    cooperation_trigger: str = ""
    local_interaction_rules: str = ""
    human_interaction_rules: str = ""
    verification_strategies: frozenset[VerificationStrategy] = frozenset()


# ---------------------------------------------------------------------------
# Risk considerations


@dataclass(frozen=True, slots=True)
class RiskEntry:
    status: RiskStatus = RiskStatus.NOT_ASSESSED
    likelihood: Likelihood = Likelihood.UNKNOWN
    mitigation: str = ""


RISK_NAMES = (
    "catastrophic_inference",
    "drift_of_concept",
    "decentralization",
    "optimality_tradeoff",
    "unintended_synergy",
    "unintended_competition",
    "goal_deviation",
)


@dataclass(frozen=True, slots=True)
class ConsiderationsSpec:
    """The seven standing risk considerations for an adaptive component.

    Each entry may be absent (None) in a structurally valid document; the
    validator reports the gap.
    """

    catastrophic_inference: RiskEntry | None = None
    drift_of_concept: RiskEntry | None = None
    decentralization: RiskEntry | None = None
    optimality_tradeoff: RiskEntry | None = None
    unintended_synergy: RiskEntry | None = None
    unintended_competition: RiskEntry | None = None
    goal_deviation: RiskEntry | None = None

    def entries(self) -> Iterator[tuple[str, RiskEntry | None]]:
        for name in RISK_NAMES:
            yield name, getattr(self, name)


# ---------------------------------------------------------------------------
# Root document and host-side context


@dataclass(frozen=True, slots=True)
class InterfaceDescription:
    meta: DocumentMeta
    signals: tuple[SignalSpec, ...] = ()
    hardware: HardwareInterfaceSpec | None = None
    software: SoftwareInterfaceSpec | None = None
    model_card: ModelCardReport | None = None
    autonomy: AutonomySpec | None = None
    considerations: ConsiderationsSpec | None = None


@dataclass(frozen=True, slots=True)
class TransportOption:
    protocol_name: str
    protocol_version: str


@dataclass(frozen=True, slots=True)
class IlityRequirement:
    name: str
    minimum_level: Level


@dataclass(frozen=True, slots=True)
class SystemContext:
    """What a host system offers and demands at one integration point."""

    context_id: str
    offered_signals: tuple[SignalSpec, ...] = ()
    accepted_signals: tuple[SignalSpec, ...] = ()
    environment: tuple[QuantityEnvelope, ...] = ()
    available_transports: tuple[TransportOption, ...] = ()
    change_profile: frozenset[UncertaintyClass] = frozenset()
    required_ilities: tuple[IlityRequirement, ...] = ()
    required_verification: frozenset[VerificationStrategy] = frozenset()
    requires_online_adaptation: bool = False
    peer_interface_count: int = 0
    human_interaction_expected: bool = False


# Reserved placeholder used by scaffolds; the validator warns wherever it
# survives into a real document.
PLACEHOLDER = "TBD"
