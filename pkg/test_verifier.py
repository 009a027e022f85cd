import dataclasses
from types import MappingProxyType

import pytest

from formula import parse_value
from refdata import REFDATA, SeedEntry
from unital import canonical_key, value_at_zero
from verifier import verify


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_verify_passes(n, unital_sets):
    report = verify(n, functions=unital_sets[n])
    assert report.passed
    assert report.count_match and report.values_match
    assert report.computed_count == report.expected_count
    assert report.summary_lines()[-1] == "PASSED"


def test_verify_u4_orbits_and_generators(unital_sets):
    report = verify(4, functions=unital_sets[4])
    assert report.orbit_sizes_match
    assert report.generators_distinct
    assert report.to_dict()["orbit_sizes"] == [72, 48, 36, 36, 24, 18, 12, 6]


def test_verify_without_fixtures_raises():
    with pytest.raises(ValueError):
        verify(5)


def test_corrupted_count_fails(unital_sets):
    corrupted = dataclasses.replace(REFDATA, counts=MappingProxyType({**REFDATA.counts, 2: 35}))
    report = verify(2, refdata=corrupted, functions=unital_sets[2])
    assert not report.count_match
    assert not report.passed
    assert report.to_dict()["passed"] is False
    assert report.summary_lines()[-1] == "FAILED"


def test_missing_value_is_reported(unital_sets):
    half = parse_value("1/2", 2)
    partial = [f for f in unital_sets[2] if value_at_zero(f) != half]
    report = verify(2, functions=partial)
    assert not report.values_match
    assert report.missing_values == [str(half)]
    assert report.extra_values == []


def test_listing_diffs_only_warn(unital_sets):
    bogus = SeedEntry(2, "x**2+x-1", "test listing", "bogus", verbatim_uncertain=True)
    with_bogus = dataclasses.replace(REFDATA, seeds=REFDATA.seeds + (bogus,))
    report = verify(2, refdata=with_bogus, functions=unital_sets[2])
    assert report.passed
    assert any("verbatim-uncertain" in w for w in report.warnings)


def test_listing_comparison_uses_canonical_keys(unital_sets):
    report = verify(2, functions=unital_sets[2])
    expansion = REFDATA.expand_seeds(2)
    listed = set(expansion.functions)
    computed = {canonical_key(f) for f in unital_sets[2]}
    assert report.missing_from_computed == sorted(listed - computed)
    assert report.extra_in_computed == sorted(computed - listed)
