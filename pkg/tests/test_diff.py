"""Structural diff: keyed alignment, breaking flags, symmetry."""

import datetime as dt
import random

from aicd.docio import diff_documents
from aicd.docio.diff import ChangeKind
from aicd.model import (
    AutonomySpec,
    Direction,
    DocumentMeta,
    EventSpec,
    INFORMATION,
    IlitySpec,
    InterfaceDescription,
    Interval,
    LabelSet,
    Level,
    OperationSpec,
    QuantityEnvelope,
    SignalSpec,
    SoftwareInterfaceSpec,
    VerificationStrategy,
    Version,
)
from aicd.taxonomy import from_index

from genlib import gen_document


def _meta(name="thing"):
    return DocumentMeta("c1", name, Version(1, 0, 0), dt.date(2024, 6, 1))


def _doc(**kwargs):
    return InterfaceDescription(meta=kwargs.pop("meta", _meta()), **kwargs)


def _sig(direction, lo, hi, unit="degC", signal_id="s1", name="t"):
    env = QuantityEnvelope(name, unit, Interval(lo, hi))
    return SignalSpec(signal_id, INFORMATION, direction, (env,))


def test_identity_diff_is_empty():
    doc = _doc(signals=(_sig(Direction.IN, -40.0, 85.0),))
    diff = diff_documents(doc, doc)
    assert len(diff) == 0
    assert not diff.has_breaking
    assert diff.entries == ()


def test_narrowed_input_envelope_breaks():
    old = _doc(signals=(_sig(Direction.IN, -40.0, 85.0),))
    new = _doc(signals=(_sig(Direction.IN, -20.0, 60.0),))
    diff = diff_documents(old, new)
    (entry,) = diff.entries
    assert entry.path == "signals[signal_id='s1'].characteristics[name='t']"
    assert entry.change is ChangeKind.MODIFIED
    assert entry.breaking is True
    assert "[-40.0, 85.0]" in entry.detail and "[-20.0, 60.0]" in entry.detail


def test_widened_input_envelope_is_compatible():
    old = _doc(signals=(_sig(Direction.IN, -40.0, 85.0),))
    new = _doc(signals=(_sig(Direction.IN, -50.0, 90.0),))
    (entry,) = diff_documents(old, new).entries
    assert entry.breaking is False


def test_widened_output_envelope_breaks():
    old = _doc(signals=(_sig(Direction.OUT, 0.0, 50.0),))
    new = _doc(signals=(_sig(Direction.OUT, 0.0, 80.0),))
    (entry,) = diff_documents(old, new).entries
    assert entry.breaking is True


def test_narrowed_output_envelope_is_compatible():
    old = _doc(signals=(_sig(Direction.OUT, 0.0, 80.0),))
    new = _doc(signals=(_sig(Direction.OUT, 0.0, 50.0),))
    (entry,) = diff_documents(old, new).entries
    assert entry.breaking is False


def test_bidirectional_envelope_any_change_breaks():
    old = _doc(signals=(_sig(Direction.BIDIRECTIONAL, 0.0, 50.0),))
    for lo, hi in ((0.0, 80.0), (0.0, 40.0), (-5.0, 50.0)):
        new = _doc(signals=(_sig(Direction.BIDIRECTIONAL, lo, hi),))
        (entry,) = diff_documents(old, new).entries
        assert entry.breaking is True, (lo, hi)


def test_unit_change_always_breaks():
    old = _doc(signals=(_sig(Direction.IN, 0.0, 50.0, unit="V"),))
    new = _doc(signals=(_sig(Direction.IN, 0.0, 50.0, unit="mV"),))
    (entry,) = diff_documents(old, new).entries
    assert entry.breaking is True


def test_label_set_narrowing_on_input_breaks():
    old_env = QuantityEnvelope("mode", "", LabelSet(("a", "b")))
    new_env = QuantityEnvelope("mode", "", LabelSet(("a",)))
    old = _doc(signals=(SignalSpec("s1", INFORMATION, Direction.IN, (old_env,)),))
    new = _doc(signals=(SignalSpec("s1", INFORMATION, Direction.IN, (new_env,)),))
    (entry,) = diff_documents(old, new).entries
    assert entry.breaking is True
    assert "{a, b}" in entry.detail


def _interval_contains(outer: Interval, inner: Interval) -> bool:
    if inner.lo > inner.hi:
        return True
    if outer.lo > outer.hi:
        return False
    return outer.lo <= inner.lo and inner.hi <= outer.hi


def test_envelope_breaking_matches_direction_oracle():
    rng = random.Random(77)
    for _ in range(400):
        direction = rng.choice(list(Direction))
        old_iv = Interval(*sorted((rng.uniform(-10, 10), rng.uniform(-10, 10))))
        new_iv = Interval(*sorted((rng.uniform(-10, 10), rng.uniform(-10, 10))))
        old = _doc(signals=(SignalSpec("s1", INFORMATION, direction, (QuantityEnvelope("x", "u", old_iv),)),))
        new = _doc(signals=(SignalSpec("s1", INFORMATION, direction, (QuantityEnvelope("x", "u", new_iv),)),))
        diff = diff_documents(old, new)
        if old_iv == new_iv:
            assert len(diff) == 0
            continue
        expect = False
        if direction in (Direction.IN, Direction.BIDIRECTIONAL):
            expect = expect or not _interval_contains(new_iv, old_iv)
        if direction in (Direction.OUT, Direction.BIDIRECTIONAL):
            expect = expect or not _interval_contains(old_iv, new_iv)
        (entry,) = diff.entries
        assert entry.breaking == expect, (direction, old_iv, new_iv)


def test_added_items_never_break():
    old = _doc(software=SoftwareInterfaceSpec())
    new = _doc(
        software=SoftwareInterfaceSpec(
            ilities=(IlitySpec("robustness", Level.HIGH, "envelope tested"),),
            operations=(OperationSpec("reset"),),
        )
    )
    diff = diff_documents(old, new)
    assert {e.path for e in diff.entries} == {
        "software.ilities[name='robustness']",
        "software.operations[name='reset']",
    }
    assert all(e.change is ChangeKind.ADDED and not e.breaking for e in diff.entries)


def test_removals_breaking_only_for_contract_surface():
    old = _doc(
        signals=(_sig(Direction.IN, 0.0, 1.0),),
        software=SoftwareInterfaceSpec(
            operations=(OperationSpec("reset"),),
            events=(EventSpec("overheat"),),
            ilities=(IlitySpec("robustness", Level.HIGH),),
        ),
    )
    new = _doc(software=SoftwareInterfaceSpec())
    diff = diff_documents(old, new)
    by_path = {e.path: e for e in diff.entries}
    assert by_path["signals[signal_id='s1']"].breaking is True
    assert by_path["software.operations[name='reset']"].breaking is True
    assert by_path["software.events[name='overheat']"].breaking is True
    assert by_path["software.ilities[name='robustness']"].breaking is False
    assert all(e.change is ChangeKind.REMOVED for e in diff.entries)


def test_removing_software_section_breaking_depends_on_content():
    loaded = _doc(software=SoftwareInterfaceSpec(operations=(OperationSpec("reset"),)))
    passive = _doc(software=SoftwareInterfaceSpec())
    bare = _doc()
    (entry,) = diff_documents(loaded, bare).entries
    assert entry.path == "software" and entry.breaking is True
    (entry,) = diff_documents(passive, bare).entries
    assert entry.path == "software" and entry.breaking is False


def test_verification_strategy_removal_breaks():
    old = _doc(
        autonomy=AutonomySpec(
            verification_strategies=frozenset(
                {VerificationStrategy.AGENT_BASED_SIMULATION, VerificationStrategy.COOPERATION_TEST_CASES}
            )
        )
    )
    new = _doc(
        autonomy=AutonomySpec(
            verification_strategies=frozenset({VerificationStrategy.COOPERATION_TEST_CASES})
        )
    )
    (entry,) = diff_documents(old, new).entries
    assert entry.path == "autonomy.verification_strategies"
    assert entry.breaking is True
    assert "AgentBasedSimulation" in entry.detail
    # pure extension is the other way round
    (entry,) = diff_documents(new, old).entries
    assert entry.breaking is False


def test_change_class_coverage_shrink_breaks():
    full = _doc(autonomy=AutonomySpec(change_types_handled=frozenset({from_index(8)})))
    partial = _doc(autonomy=AutonomySpec(change_types_handled=frozenset({from_index(6)})))
    (entry,) = diff_documents(full, partial).entries
    assert entry.breaking is True
    assert entry.path == "autonomy.change_types_handled"


def test_change_class_swap_without_coverage_loss_is_compatible():
    # class 8 covers everything class 1 did, so dropping 1 for 8 loses nothing
    small = _doc(autonomy=AutonomySpec(change_types_handled=frozenset({from_index(1)})))
    full = _doc(autonomy=AutonomySpec(change_types_handled=frozenset({from_index(8)})))
    (entry,) = diff_documents(small, full).entries
    assert entry.breaking is False


def test_scalar_change_detail():
    old = _doc(meta=_meta("alpha"))
    new = _doc(meta=_meta("beta"))
    (entry,) = diff_documents(old, new).entries
    assert entry.path == "meta.name"
    assert entry.change is ChangeKind.MODIFIED
    assert entry.breaking is False
    assert entry.detail == 'changed from "alpha" to "beta"'


def test_duplicate_keys_get_distinct_paths():
    dup = (_sig(Direction.IN, 0.0, 1.0), _sig(Direction.IN, 2.0, 3.0))
    old = _doc(signals=dup)
    new = _doc(signals=(dup[0],))
    diff = diff_documents(old, new)
    paths = [e.path for e in diff.entries]
    assert paths == ["signals[signal_id='s1#2']"]
    assert diff.entries[0].change is ChangeKind.REMOVED


def test_entries_sorted_and_deterministic():
    rng = random.Random(5)
    old, new = gen_document(rng), gen_document(rng)
    diff = diff_documents(old, new)
    paths = [e.path for e in diff.entries]
    assert paths == sorted(paths)
    assert diff_documents(old, new) == diff


def test_diff_symmetry_over_seeded_pairs():
    for seed in range(60):
        rng = random.Random(seed)
        a, b = gen_document(rng), gen_document(rng)
        fwd = diff_documents(a, b)
        rev = diff_documents(b, a)
        assert len(fwd) == len(rev), seed

        def split(diff):
            added = {e.path for e in diff.entries if e.change is ChangeKind.ADDED}
            removed = {e.path for e in diff.entries if e.change is ChangeKind.REMOVED}
            modified = {e.path for e in diff.entries if e.change is ChangeKind.MODIFIED}
            return added, removed, modified

        fa, fr, fm = split(fwd)
        ra, rr, rm = split(rev)
        assert fa == rr and fr == ra and fm == rm, seed
