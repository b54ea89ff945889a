import json
from itertools import combinations

import pytest

from bifrm.errors import SizeCapExceeded
from bifrm.harness import (
    DOCUMENTED,
    SOURCES,
    THEOREMS,
    Instance,
    TheoremSuite,
    Toolkit,
    corrupted_toolkit,
    default_suite,
    enumerate_bispaces,
    instances,
    shrink,
    verify,
)
from bifrm.spaces import Bispace, bihomeomorphic, topology_violations
import oracles

# Bispaces with at most two points up to bihomeomorphism: one on a single
# point plus the pairs of topologies on two points modulo the swap, counted by
# the brute-force oracle (test_enumeration_matches_brute_force).
BISPACES_UP_TO_TWO_POINTS = 11
BISPACES_BY_POINTS = {1: 1, 2: 10, 3: 166, 4: 5965}


def test_enumeration_small_counts():
    assert len(list(enumerate_bispaces(1))) == 1
    assert len(list(enumerate_bispaces(2))) == BISPACES_UP_TO_TWO_POINTS
    assert list(enumerate_bispaces(0)) == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(n):
    spaces = [x for x in enumerate_bispaces(n) if len(x) == n]
    assert len(spaces) == oracles.bispace_classes(n) == BISPACES_BY_POINTS[n]
    keys = {x.canonical_key() for x in spaces}
    assert len(keys) == len(spaces)


def test_enumeration_of_four_points_is_pairwise_distinct():
    spaces = [x for x in enumerate_bispaces(4) if len(x) == 4]
    assert len(spaces) == BISPACES_BY_POINTS[4]
    assert len({x.canonical_key() for x in spaces}) == len(spaces)


def test_enumeration_is_deterministic_and_valid():
    first = [(x.tau_plus, x.tau_minus) for x in enumerate_bispaces(3)]
    assert first == [(x.tau_plus, x.tau_minus) for x in enumerate_bispaces(3)]
    for x in enumerate_bispaces(3):
        assert topology_violations(x.tau_plus, x.full) == []
        assert topology_violations(x.tau_minus, x.full) == []
    two = [x for x in enumerate_bispaces(2) if len(x) == 2]
    assert not any(bihomeomorphic(a, b) for a, b in combinations(two, 2))


def test_enumeration_respects_caps():
    with pytest.raises(SizeCapExceeded):
        list(enumerate_bispaces(9))
    with pytest.raises(SizeCapExceeded):
        list(enumerate_bispaces(3, cap_topologies=10))


def test_registry_is_data_driven_and_documented():
    names = [t.name for t in THEOREMS]
    assert len(names) == len(set(names))
    for t in THEOREMS:
        assert t.anchor and t.family in {"bispace", "biframe", "dframe", "frame", "biframe-map"}
    reasons = " ".join(d.reason for d in DOCUMENTED)
    assert "not falsifiable at desk scale" in reasons and "theory collapse" in reasons


def test_default_suite_passes_on_two_points():
    report = verify(default_suite(max_points=2))
    assert report.ok and report.exit_code == 0
    assert all(r.status == "pass" for r in report.results)


def test_corrupted_delta_is_caught_with_a_counterexample():
    report = verify(default_suite(max_points=2, toolkit=corrupted_toolkit()))
    assert report.exit_code == 1
    failing = [r for r in report.results if r.failed]
    assert {"Delta of bOmega", "d-frame axioms"} <= {r.name for r in failing}
    for r in failing:
        assert r.counterexample is not None
        json.dumps(r.counterexample)
        assert r.counterexample["message"]


def test_empty_family_is_skipped():
    report = verify(default_suite(max_points=0, max_frame_size=0, map_points=0))
    assert report.exit_code == 0
    assert {r.status for r in report.results} == {"skipped"}


def test_reports_are_byte_identical_for_identical_suites():
    a = verify(default_suite(max_points=2, sample=5, seed=3)).to_json()
    b = verify(default_suite(max_points=2, sample=5, seed=3)).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "wall_time_seconds" not in a
    assert "wall_time_seconds" in verify(default_suite(max_points=1)).to_json(include_timing=True)


def test_sampling_depends_on_the_seed():
    one = [i.key for i in instances(default_suite(max_points=3, sample=10, seed=1), "bispace")]
    two = [i.key for i in instances(default_suite(max_points=3, sample=10, seed=2), "bispace")]
    assert len(one) == len(two) == 10 and one != two


def test_shrinking_removes_points_and_opens():
    """A check failing on every bispace with two or more points shrinks to two discrete-free points."""
    from bifrm.harness import Theorem

    theorem = Theorem("at most one point", "test", "bispace", lambda x, tk: "too big" if len(x) > 1 else None)
    big = Bispace(3, [0, 1, 3, 7], [0, 4, 7])
    inst = Instance("bispace", "big", big, big, "bispace")
    small = shrink(theorem, inst, Toolkit())
    assert len(small.origin) == 2
    assert small.origin.tau_plus == frozenset({0, 3}) and small.origin.tau_minus == frozenset({0, 3})


def test_observations_are_reported():
    report = verify(TheoremSuite(tuple(t for t in THEOREMS if t.name == "pairwise Hausdorff is bisober"), max_points=2))
    (result,) = report.results
    assert result.observations.get("not pairwise Hausdorff", 0) > 0
    assert "NOTE" in report.to_text()


def test_sources_cover_every_derived_family():
    assert {fam for fam, _ in SOURCES.values()} == {"bispace", "biframe", "dframe"}
