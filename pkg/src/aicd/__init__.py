"""Machine-readable interface control documents for AI-enabled components.

The public API is re-exported here; submodules stay importable for the
finer-grained pieces (``aicd.docio.syntax``, ``aicd.registry``, ...).
"""

from .compat import (
    CompatibilityReport,
    InvalidDocumentError,
    Verdict,
    assess_autonomy_risks,
    assess_compatibility,
    check_change_coverage,
    check_physical_envelope,
    check_transport_compat,
    match_signal,
    score_verification_coverage,
)
from .docio import (
    DiffEntry,
    DocumentDiff,
    ParseDiagnostic,
    ParseMode,
    ParseResult,
    TemplateKind,
    diff_documents,
    parse_context,
    parse_document,
    scaffold_template,
    serialize_context,
    serialize_document,
    write_document,
)
from .findings import Dimension, Finding, Severity
from .model import (
    AutonomySpec,
    ConsiderationsSpec,
    Direction,
    DocumentMeta,
    EnergySubkind,
    HardwareInterfaceSpec,
    InterfaceDescription,
    Interval,
    KindCategory,
    LabelSet,
    Level,
    Likelihood,
    ModelCardReport,
    QuantityEnvelope,
    RiskEntry,
    RiskStatus,
    SensitivityLevel,
    SignalKind,
    SignalSpec,
    SoftwareInterfaceSpec,
    SystemContext,
    VerificationStrategy,
    Version,
)
from .render import render_report, render_validation
from .taxonomy import (
    ALL_CLASSES,
    Knowledge,
    UncertaintyClass,
    classify_change_uncertainty,
    covers_uncertainty,
)
from .validator import (
    CompletenessScore,
    TemplateScore,
    score_completeness,
    validate_document,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLASSES",
    "AutonomySpec",
    "CompatibilityReport",
    "CompletenessScore",
    "ConsiderationsSpec",
    "DiffEntry",
    "Dimension",
    "Direction",
    "DocumentDiff",
    "DocumentMeta",
    "EnergySubkind",
    "Finding",
    "HardwareInterfaceSpec",
    "InterfaceDescription",
    "Interval",
    "InvalidDocumentError",
    "KindCategory",
    "Knowledge",
    "LabelSet",
    "Level",
    "Likelihood",
    "ModelCardReport",
    "ParseDiagnostic",
    "ParseMode",
    "ParseResult",
    "QuantityEnvelope",
    "RiskEntry",
    "RiskStatus",
    "SensitivityLevel",
    "Severity",
    "SignalKind",
    "SignalSpec",
    "SoftwareInterfaceSpec",
    "SystemContext",
    "TemplateKind",
    "TemplateScore",
    "UncertaintyClass",
    "Verdict",
    "VerificationStrategy",
    "Version",
    "assess_autonomy_risks",
    "assess_compatibility",
    "check_change_coverage",
    "check_physical_envelope",
    "check_transport_compat",
    "classify_change_uncertainty",
    "covers_uncertainty",
    "diff_documents",
    "match_signal",
    "parse_context",
    "parse_document",
    "render_report",
    "render_validation",
    "scaffold_template",
    "score_completeness",
    "score_verification_coverage",
    "serialize_context",
    "serialize_document",
    "validate_document",
    "write_document",
    "__version__",
]
