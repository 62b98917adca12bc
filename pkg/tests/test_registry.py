"""Registry conformance: emitted findings stay inside the published table."""

import pathlib
import random

from aicd.compat import InvalidDocumentError, assess_compatibility
from aicd.registry import ALL_CODES, BY_CODE, registry_markdown
from aicd.validator import validate_document

from genlib import ERROR_MUTATIONS, gen_context, gen_document, pristine_document, tighten_context

DOC = pathlib.Path(__file__).resolve().parents[1] / "docs" / "finding-codes.md"


def test_published_table_matches_registry():
    assert DOC.read_text(encoding="utf-8") == registry_markdown()


def test_codes_are_unique():
    assert len(BY_CODE) == len(ALL_CODES)


def test_every_compat_finding_is_registered():
    seen = set()
    for seed in range(150):
        rng = random.Random(seed)
        doc = gen_document(rng)
        ctx = tighten_context(rng, gen_context(rng, doc))
        try:
            report = assess_compatibility(doc, ctx)
        except InvalidDocumentError as exc:
            assert exc.code in BY_CODE
            continue
        for f in report.findings:
            info = BY_CODE[f.code]
            assert info.source == "check", f.code
            assert f.severity is info.severity, f.code
            assert f.dimension in info.dimensions, f.code
            seen.add(f.code)
    assert len(seen) >= 5, seen


def test_every_validator_finding_is_registered():
    seen = set()
    for code, mutate in ERROR_MUTATIONS.items():
        for seed in range(3):
            mutant = mutate(random.Random(seed), pristine_document())
            for f in validate_document(mutant):
                info = BY_CODE[f.code]
                assert info.source == "validate"
                assert f.severity is info.severity
                assert f.dimension in info.dimensions
                seen.add(f.code)
    assert seen == set(ERROR_MUTATIONS)
