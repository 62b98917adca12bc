"""Structural diffing of two interface documents with breaking-change flags.

Lists of named things (signals, operations, characteristics, ...) are
aligned by their identifying field rather than by position, so reordering
alone never reports phantom changes.  Paths therefore address items by key,
e.g. ``signals[signal_id='power-in'].characteristics[name='supply_voltage']``;
that keeps every path unique even when items move.

Breaking classification is deliberately narrow and one-directional:
  * an accepted-input envelope that narrowed,
  * an emitted-output envelope that widened,
  * any envelope change on a bidirectional signal,
  * removal of a signal, operation, or event,
  * removal of a declared verification strategy,
  * a change-class set whose coverage shrank.
Everything else, including additions of any kind, is non-breaking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from ..model import Bounds, Interval, LabelSet, bounds_contains
from ..taxonomy import ALL_CLASSES, covers_uncertainty, from_index
from .serialize import _document_value
from ..model import InterfaceDescription


class ChangeKind(Enum):
    ADDED = "Added"
    REMOVED = "Removed"
    MODIFIED = "Modified"


@dataclass(frozen=True, slots=True)
class DiffEntry:
    path: str
    change: ChangeKind
    breaking: bool
    detail: str


@dataclass(frozen=True, slots=True)
class DocumentDiff:
    entries: tuple[DiffEntry, ...]

    @property
    def has_breaking(self) -> bool:
        return any(e.breaking for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


# identifying field per keyed list, looked up by the list's own field name
_KEY_FIELDS = {
    "signals": "signal_id",
    "properties": "name",
    "operations": "name",
    "events": "name",
    "ilities": "name",
    "metrics": "name",
    "characteristics": "name",
    "feedback_cycles": "source",
    "interactions": "peer",
    "electrical_emc": "name",
    "electrical_communication": "name",
    "mechanical": "name",
    "thermal": "name",
    "particulate": "name",
}

# lists treated as single values: order and content compared wholesale
_ENVELOPE_LISTS = frozenset(
    {
        "characteristics",
        "electrical_emc",
        "electrical_communication",
        "mechanical",
        "thermal",
        "particulate",
    }
)

_BREAKING_ITEM_REMOVALS = frozenset({"signals", "operations", "events"})


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False, sort_keys=False)


def _bounds_of(envelope: dict) -> Bounds:
    if "values" in envelope:
        return LabelSet(tuple(envelope["values"]))
    return Interval(envelope["min"], envelope["max"])


def _describe(envelope: dict) -> str:
    if "values" in envelope:
        return "{" + ", ".join(envelope["values"]) + "}"
    return f"[{envelope['min']!r}, {envelope['max']!r}]"


def _subtree_breaking(segment: str, value) -> bool:
    """Would removing this entire subtree count as breaking?"""
    if segment == "software":
        return bool(value.get("operations")) or bool(value.get("events"))
    if segment == "autonomy":
        return bool(value.get("change_types_handled")) or bool(
            value.get("verification_strategies")
        )
    if segment in ("operations", "events", "signals"):
        return bool(value)
    return False


class _Differ:
    def __init__(self) -> None:
        self.entries: list[DiffEntry] = []

    def emit(self, path: str, change: ChangeKind, breaking: bool, detail: str) -> None:
        self.entries.append(DiffEntry(path, change, breaking, detail))

    # -- envelope handling ---------------------------------------------------

    def envelope_modified(self, path: str, old: dict, new: dict, directions: set[str]) -> None:
        if old == new:
            return
        accepts = bool(directions & {"In", "Bidirectional"})
        emits = bool(directions & {"Out", "Bidirectional"})
        old_b, new_b = _bounds_of(old), _bounds_of(new)
        breaking = old.get("unit") != new.get("unit")
        if accepts and not bounds_contains(old_b, new_b):
            breaking = True  # accepted range narrowed
        if emits and not bounds_contains(new_b, old_b):
            breaking = True  # emitted range widened
        self.emit(
            path,
            ChangeKind.MODIFIED,
            breaking,
            f"envelope changed from {_describe(old)} {old.get('unit', '')}".rstrip()
            + f" to {_describe(new)} {new.get('unit', '')}".rstrip(),
        )

    def envelope_list(
        self, path: str, field: str, old: list, new: list, directions: set[str]
    ) -> None:
        self.keyed_list(
            path,
            field,
            old,
            new,
            directions,
            on_pair=lambda p, o, n: self.envelope_modified(p, o, n, directions),
        )

    # -- generic structure ---------------------------------------------------

    def keyed_list(
        self, path: str, field: str, old: list, new: list, directions: set[str], on_pair=None
    ) -> None:
        key_field = _KEY_FIELDS[field]

        def keyed(items: list) -> dict:
            out: dict = {}
            counts: dict = {}
            for item in items:
                key = item.get(key_field, "")
                counts[key] = counts.get(key, 0) + 1
                label = key if counts[key] == 1 else f"{key}#{counts[key]}"
                out[label] = item
            return out

        old_map, new_map = keyed(old), keyed(new)
        for label, new_item in new_map.items():
            item_path = f"{path}[{key_field}='{label}']"
            if label not in old_map:
                self.emit(item_path, ChangeKind.ADDED, False, "added")
            elif on_pair is not None:
                on_pair(item_path, old_map[label], new_item)
            else:
                self.walk(item_path, field, old_map[label], new_item, directions)
        for label, old_item in old_map.items():
            if label not in new_map:
                item_path = f"{path}[{key_field}='{label}']"
                breaking = field in _BREAKING_ITEM_REMOVALS
                self.emit(item_path, ChangeKind.REMOVED, breaking, "removed")

    def set_leaf(self, path: str, field: str, old: list, new: list) -> None:
        if old == new:
            return
        breaking = False
        if field == "change_types_handled":
            old_set = {from_index(i) for i in old}
            new_set = {from_index(i) for i in new}
            breaking = any(
                covers_uncertainty(old_set, c) and not covers_uncertainty(new_set, c)
                for c in ALL_CLASSES
            )
            detail = f"handled classes changed from {sorted(old)} to {sorted(new)}"
        elif field == "verification_strategies":
            dropped = sorted(set(old) - set(new))
            breaking = bool(dropped)
            detail = (
                f"strategies changed; removed: {', '.join(dropped)}"
                if dropped
                else "strategies extended"
            )
        else:
            detail = f"changed from {_compact(old)} to {_compact(new)}"
        self.emit(path, ChangeKind.MODIFIED, breaking, detail)

    def walk(self, path: str, field: str, old, new, directions: set[str]) -> None:
        if old == new:
            return
        if isinstance(old, dict) and isinstance(new, dict):
            if field == "signals" or field.endswith("_signals"):
                directions = {old.get("direction"), new.get("direction")} - {None}
            for key in list(new) + [k for k in old if k not in new]:
                child_path = f"{path}.{key}" if path else key
                child_dirs = directions
                if key == "in":
                    child_dirs = {"In"}
                elif key == "out":
                    child_dirs = {"Out"}
                if key not in old:
                    breaking = False
                    self.emit(child_path, ChangeKind.ADDED, breaking, "added")
                elif key not in new:
                    self.emit(
                        child_path,
                        ChangeKind.REMOVED,
                        _subtree_breaking(key, old[key]),
                        "removed",
                    )
                else:
                    self.walk(child_path, key, old[key], new[key], child_dirs)
            return
        if isinstance(old, list) and isinstance(new, list):
            if field in _ENVELOPE_LISTS:
                self.envelope_list(path, field, old, new, directions)
            elif field in _KEY_FIELDS:
                self.keyed_list(path, field, old, new, directions)
            else:
                self.set_leaf(path, field, old, new)
            return
        # scalar leaf (or a type change)
        self.emit(
            path,
            ChangeKind.MODIFIED,
            False,
            f"changed from {_compact(old)} to {_compact(new)}",
        )


def diff_documents(old: InterfaceDescription, new: InterfaceDescription) -> DocumentDiff:
    differ = _Differ()
    differ.walk("", "", _document_value(old), _document_value(new), set())
    entries = sorted(differ.entries, key=lambda e: e.path)
    return DocumentDiff(tuple(entries))
