from itertools import product

import pytest
from hypothesis import given

from bifrm.biframe import Biframe, bipoint_pairs, biframe_map
from bifrm.bispace import b_omega, b_omega_fin, d_omega
from bifrm.dframe import (
    DFrame,
    delta_functor,
    dpoint_pairs,
    dpoints,
    gamma_functor,
    is_dframe_map,
    normalize,
    violations,
)
from bifrm.errors import InvalidInput
from bifrm.frame import TWO, FrameMap, chain_frame
from bifrm.harness import enumerate_bispaces
from bifrm.spaces import Bispace
from strategies import bispaces

ONE = TWO.top


def two_dframe() -> DFrame:
    pairs = list(product(TWO.elements, repeat=2))
    con = {(a, b) for a, b in pairs if a & b == 0}
    tot = {(a, b) for a, b in pairs if a | b == ONE}
    return DFrame(TWO, TWO, frozenset(con), frozenset(tot))


def two_biframe() -> Biframe:
    return Biframe(TWO, TWO, TWO, FrameMap.identity(TWO), FrameMap.identity(TWO))


def axioms(d: DFrame) -> set[str]:
    return {v.split(":")[0] for v in violations(d)}


def test_two_is_a_dframe():
    assert violations(two_dframe()) == []


def test_con_not_downward_closed():
    c3 = chain_frame(3)
    d = DFrame(c3, TWO, frozenset({(0, 0), (c3.top, 0)}), frozenset({(c3.top, ONE)}))
    assert "con-downset" in axioms(d)


def test_balance_violation():
    full = frozenset(product(TWO.elements, repeat=2))
    d = DFrame(TWO, TWO, full, frozenset({(ONE, 0), (ONE, ONE)}))
    assert "balance" in axioms(d)


def test_normalize_reports_additions():
    d, added = normalize(TWO, TWO, [(ONE, 0)], [])
    assert (0, 0) in added["con"] and (ONE, ONE) in added["tot"]
    assert violations(d) == []


def test_pairs_outside_components_are_rejected():
    with pytest.raises(InvalidInput):
        DFrame(TWO, TWO, frozenset({(7, 0)}), frozenset())


def test_delta_and_gamma_of_two():
    d = delta_functor(two_biframe())
    assert (d.con, d.tot) == (two_dframe().con, two_dframe().tot)
    g = gamma_functor(two_dframe())
    assert g.main.size() == 2
    assert len(dpoint_pairs(two_dframe())) == 1


def test_spectra_of_two_point_space_differ():
    x = Bispace(["a", "b"], [0, 1, 3], [0, 1, 3])
    assert len(dpoints(d_omega(x)).bispace) == 4
    assert len(bipoint_pairs(b_omega_fin(x))) == 2


def test_delta_of_opens_is_d_opens():
    for x in enumerate_bispaces(3):
        expected = d_omega(x)
        for b in (b_omega(x), b_omega_fin(x)):
            d = delta_functor(b)
            assert (d.con, d.tot) == (expected.con, expected.tot)


def test_bpt_of_gamma_is_dpt_and_counit_is_a_map():
    for x in enumerate_bispaces(3):
        d = d_omega(x)
        g = gamma_functor(d)
        assert set(bipoint_pairs(g)) == set(dpoint_pairs(d))
        b = b_omega_fin(x)
        gd = gamma_functor(delta_functor(b))
        biframe_map(gd, b, FrameMap.identity(b.plus), FrameMap.identity(b.minus))


@given(bispaces(4))
def test_delta_outputs_satisfy_the_axioms(space):
    d = delta_functor(b_omega_fin(space))
    assert violations(d) == []
    ip, im = FrameMap.identity(d.plus), FrameMap.identity(d.minus)
    assert is_dframe_map(d, delta_functor(gamma_functor(d)), ip, im)
