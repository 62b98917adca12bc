"""Change-uncertainty taxonomy and the coverage relation over it.

A change hitting a cyber-physical system is characterized along three
dimensions: the state the system is driven to, the mechanism by which the
transition unfolds, and the agent that triggers it.  Ahead of time each
dimension is either known or unknown, which yields eight distinct
uncertainty classes.  Components declare the set of classes they can
handle; host systems declare the set of classes they may exhibit, and the
coverage relation decides whether the declared capability subsumes the
demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Knowledge(Enum):
    KNOWN = "Known"
    UNKNOWN = "Unknown"


_K = Knowledge.KNOWN
_U = Knowledge.UNKNOWN

# Index -> (state_of_change, change_mechanism, agent_of_change).
# The numbering is a fixed convention: it is NOT binary counting (note how
# indices 3 and 4 are ordered), so it must never be "simplified".
_TRIPLE_BY_INDEX: dict[int, tuple[Knowledge, Knowledge, Knowledge]] = {
    1: (_K, _K, _K),
    2: (_U, _K, _K),
    3: (_K, _K, _U),
    4: (_K, _U, _K),
    5: (_K, _U, _U),
    6: (_U, _U, _K),
    7: (_U, _K, _U),
    8: (_U, _U, _U),
}

_INDEX_BY_TRIPLE = {triple: index for index, triple in _TRIPLE_BY_INDEX.items()}

# Dimension names used in letter codes ("UKK") and unknown-set comparisons,
# in state/mechanism/agent order.
_DIMENSIONS = ("state", "mechanism", "agent")


@dataclass(frozen=True, slots=True)
class UncertaintyClass:
    """One of the eight Known/Unknown triples, with its conventional index.

    Instances are value objects; use :func:`classify_change_uncertainty`,
    :func:`from_index`, or :func:`from_code` rather than constructing by
    hand.  Direct construction with an index that does not match the triple
    raises ``ValueError``.
    """

    state_of_change: Knowledge
    change_mechanism: Knowledge
    agent_of_change: Knowledge
    index: int

    def __post_init__(self) -> None:
        triple = (self.state_of_change, self.change_mechanism, self.agent_of_change)
        expected = _INDEX_BY_TRIPLE.get(triple)
        if expected != self.index:
            raise ValueError(
                f"uncertainty class index {self.index} does not match triple "
                f"{self.code}; expected index {expected}"
            )

    @property
    def code(self) -> str:
        """Three-letter code, one letter per dimension, e.g. ``UUK``."""
        return "".join(
            "K" if dim is Knowledge.KNOWN else "U"
            for dim in (self.state_of_change, self.change_mechanism, self.agent_of_change)
        )

    @property
    def unknown_dimensions(self) -> frozenset[str]:
        """Names of the dimensions that are unknown for this class."""
        triple = (self.state_of_change, self.change_mechanism, self.agent_of_change)
        return frozenset(
            name for name, dim in zip(_DIMENSIONS, triple) if dim is Knowledge.UNKNOWN
        )

    def __str__(self) -> str:
        return f"class {self.index} ({self.code})"


def classify_change_uncertainty(
    state: Knowledge, mechanism: Knowledge, agent: Knowledge
) -> UncertaintyClass:
    """Return the uncertainty class for a (state, mechanism, agent) triple.

    Total over all eight triples; the returned class carries the
    conventional index for that triple.
    """
    return UncertaintyClass(state, mechanism, agent, _INDEX_BY_TRIPLE[(state, mechanism, agent)])


ALL_CLASSES: tuple[UncertaintyClass, ...] = tuple(
    UncertaintyClass(*_TRIPLE_BY_INDEX[i], index=i) for i in range(1, 9)
)


def from_index(index: int) -> UncertaintyClass:
    if not 1 <= index <= 8:
        raise ValueError(f"uncertainty class index must be 1..8, got {index}")
    return ALL_CLASSES[index - 1]


def from_code(code: str) -> UncertaintyClass:
    """Parse a three-letter code such as ``UUK`` (state, mechanism, agent)."""
    if len(code) != 3 or any(ch not in "KU" for ch in code):
        raise ValueError(f"uncertainty class code must be three letters of K/U, got {code!r}")
    triple = tuple(Knowledge.KNOWN if ch == "K" else Knowledge.UNKNOWN for ch in code)
    return from_index(_INDEX_BY_TRIPLE[triple])  # type: ignore[index]


def covers_uncertainty(
    handled: Iterable[UncertaintyClass], demanded: UncertaintyClass
) -> bool:
    """True if some handled class subsumes the demanded class.

    A class subsumes another when its unknown-dimension set is a superset of
    the other's: a component that copes with a harder unknown pattern copes
    with every easier pattern along the same dimensions.  Classes whose
    unknown sets are incomparable (e.g. unknown-state-only versus
    unknown-agent-only) do not cover each other.
    """
    demanded_unknowns = demanded.unknown_dimensions
    return any(h.unknown_dimensions >= demanded_unknowns for h in handled)
