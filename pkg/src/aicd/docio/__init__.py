"""Reading, writing, scaffolding, and diffing of interface documents."""

from .diff import DiffEntry, DocumentDiff, diff_documents
from .parse import (
    ParseDiagnostic,
    ParseResult,
    parse_context,
    parse_document,
    ParseMode,
)
from .scaffold import TemplateKind, scaffold_template, write_document
from .serialize import serialize_context, serialize_document

__all__ = [
    "DiffEntry",
    "DocumentDiff",
    "ParseDiagnostic",
    "ParseMode",
    "ParseResult",
    "TemplateKind",
    "diff_documents",
    "parse_context",
    "parse_document",
    "scaffold_template",
    "serialize_context",
    "serialize_document",
    "write_document",
]
