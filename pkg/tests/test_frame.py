from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bifrm.errors import ElementNotInFrame, NotAFrameMap
from bifrm.frame import (
    TWO,
    Congruence,
    FrameMap,
    all_congruences,
    boolean_frame,
    chain_frame,
    congruence_closure,
    congruence_closure_fixpoint,
    congruence_lattice,
    coproduct,
    delta,
    enumerate_frame_maps,
    frame_from_lattice,
    frames_isomorphic,
    nabla,
    points,
    quotient,
)
from bifrm.harness import check_filter_completion, check_quotient_witness, Toolkit
from bifrm.poset import Poset, downset_lattice, enumerate_lattices, poset_product
import oracles
from strategies import frames

SMALL = [frame_from_lattice(l) for l in enumerate_lattices(6, distributive_only=True)]


def as_partition(c: Congruence) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(b) for b in c.classes())


# -- maps and points ----------------------------------------------------------


def test_two_is_initial():
    for m in SMALL:
        maps = enumerate_frame_maps(TWO, m)
        assert len(maps) == 1
        assert maps[0](0) == 0 and maps[0](TWO.top) == m.top


def test_map_counts():
    assert len(enumerate_frame_maps(boolean_frame(2), TWO)) == 2
    assert len(enumerate_frame_maps(chain_frame(3), chain_frame(3))) == 3


def test_frame_maps_match_brute_force():
    for a, b in product(SMALL[:5], repeat=2):
        fast = {tuple(f(x) for x in a.elements) for f in enumerate_frame_maps(a, b)}
        slow = {tuple(f[x] for x in a.elements) for f in oracles.frame_maps(a, b)}
        assert fast == slow


def test_point_counts():
    assert len(points(TWO)) == 1
    for n in range(1, 6):
        assert len(points(chain_frame(n + 1))) == n
        assert len(oracles.frame_maps(chain_frame(n + 1), TWO)) == n
    assert len(points(boolean_frame(2))) == 2


def test_from_function_rejects_non_maps():
    c3 = chain_frame(3)
    with pytest.raises(NotAFrameMap):
        FrameMap.from_function(c3, c3, lambda x: c3.top)
    with pytest.raises(ElementNotInFrame):
        c3.check(0b100)


# -- coproducts ---------------------------------------------------------------


def test_two_is_neutral_for_coproduct():
    for m in SMALL:
        assert frames_isomorphic(coproduct(TWO, m).frame, m)


def test_coproduct_of_three_chains_is_down_of_grid():
    cp = coproduct(chain_frame(3), chain_frame(3))
    assert cp.frame.size() == 6
    grid = poset_product(Poset.chain("ab"), Poset.chain("xy"))
    assert frames_isomorphic(cp.frame, downset_lattice(grid))


def test_coproduct_universal_property_against_small_frames():
    c3 = chain_frame(3)
    cp = coproduct(c3, c3)
    for m in SMALL:
        all_h = enumerate_frame_maps(cp.frame, m)
        for f, g in product(enumerate_frame_maps(c3, m), repeat=2):
            matches = [h for h in all_h if h @ cp.inj_left == f and h @ cp.inj_right == g]
            assert len(matches) == 1
            assert matches[0] == cp.pairing(f, g)


def test_points_of_coproduct_multiply():
    frames8 = [frame_from_lattice(l) for l in enumerate_lattices(8, distributive_only=True)]
    for a, b in product(frames8[:8], repeat=2):
        assert len(points(coproduct(a, b).frame)) == len(points(a)) * len(points(b))


# -- congruences --------------------------------------------------------------


def test_closure_examples():
    c3 = chain_frame(3)
    assert congruence_closure(c3, []).is_diagonal()
    assert congruence_closure(c3, [(c3.top, 0)]).is_total()
    a = c3.element(frozenset({1}))
    c = congruence_closure(c3, [(c3.top, a)])
    assert as_partition(c) == frozenset({frozenset({0}), frozenset({a, c3.top})})
    assert as_partition(c) == oracles.least_congruence_containing(c3, [(c3.top, a)])


def test_congruences_match_brute_force_partitions():
    for frame in SMALL:
        fast = {as_partition(c) for c in all_congruences(frame)}
        assert fast == oracles.congruence_partitions(frame)


def test_least_congruence_matches_brute_force():
    for frame in SMALL:
        for pair in product(frame.elements, repeat=2):
            assert as_partition(congruence_closure(frame, [pair])) == oracles.least_congruence_containing(frame, [pair])


def test_congruence_lattice_examples():
    assert congruence_lattice(TWO).size() == 2
    a3 = congruence_lattice(chain_frame(3))
    assert a3.size() == 4 and frames_isomorphic(a3, boolean_frame(2))
    assert len(oracles.congruence_partitions(chain_frame(3))) == 4


def test_quotient_by_diagonal_and_total():
    for frame in SMALL:
        assert frames_isomorphic(quotient(frame, Congruence.diagonal(frame)).frame, frame)
        assert quotient(frame, Congruence.total(frame)).frame.size() == 1


def test_nabla_and_delta_are_complements():
    for frame in SMALL:
        assert nabla(frame, 0).is_diagonal() and delta(frame, frame.top).is_diagonal()
        assert nabla(frame, frame.top).is_total() and delta(frame, 0).is_total()
        for x in frame.elements:
            n, d = nabla(frame, x), delta(frame, x)
            assert n.join(d).is_total() and n.meet(d).is_diagonal()


def test_nabla_is_a_frame_injection():
    for frame in SMALL:
        a = congruence_lattice(frame)
        f = FrameMap.from_function(frame, a, lambda x: a.element(nabla(frame, x)))
        assert f.is_injective()


def test_quotient_witness_lemma_on_small_frames():
    for frame in SMALL:
        assert check_quotient_witness(frame, Toolkit()) is None


def test_filters_match_brute_force():
    for frame in SMALL:
        assert check_filter_completion(frame, Toolkit()) is None


@given(frames(), st.data())
def test_closure_routes_agree(frame, data):
    pairs = data.draw(st.lists(st.tuples(st.sampled_from(frame.elements), st.sampled_from(frame.elements)), max_size=3))
    c = congruence_closure(frame, pairs)
    assert c == congruence_closure_fixpoint(frame, pairs)
    for x, y in pairs:
        assert c.forces_leq(x, y)


@given(frames(), st.data())
def test_congruence_lattice_operations(frame, data):
    cs = all_congruences(frame)
    c = data.draw(st.sampled_from(cs))
    d = data.draw(st.sampled_from(cs))
    meet, join = c.meet(d), c.join(d)
    assert meet <= c and meet <= d and c <= join and d <= join
    assert {p for p in meet.pairs()} == set(c.pairs()) & set(d.pairs())
