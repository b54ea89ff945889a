from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bifrm.biframe import bipoints, spatialization
from bifrm.bispace import (
    b_omega,
    b_omega_fin,
    d_omega,
    inclusion_map,
    omega_minus,
    omega_plus,
    opens_map,
    sobriety,
    spectrum,
    unit_map,
)
from bifrm.errors import InvalidInput
from bifrm.frame import frames_isomorphic, TWO
from bifrm.harness import enumerate_bispaces
from bifrm.spaces import (
    SEPARATION_AXIOMS,
    Bispace,
    bihomeomorphic,
    bihomeomorphism,
    enumerate_topologies,
    generate_topology,
    is_bi_td,
    separation,
)
import oracles
from strategies import bispaces

TOPOLOGIES_BY_POINTS = [1, 1, 4, 29, 355]


def discrete(n: int) -> list[int]:
    return list(range(1 << n))


def chain_space(n: int) -> Bispace:
    return Bispace(n, [(1 << k) - 1 for k in range(n + 1)], [0, (1 << n) - 1])


def test_invalid_topology_is_rejected():
    with pytest.raises(InvalidInput):
        Bispace(2, [0, 1, 2], [0, 3])
    space, added = Bispace.generated(2, [1, 2], [])
    assert 3 in space.tau_plus and added["tauP"]


@pytest.mark.parametrize("n", range(5))
def test_topology_counts(n):
    assert len(enumerate_topologies(n)) == TOPOLOGIES_BY_POINTS[n]
    if n <= 3:
        assert {frozenset(t) for t in enumerate_topologies(n)} == {
            frozenset(sum(1 << i for i in s) for s in fam) for fam in oracles.topologies(n)
        }


def test_patch_examples():
    assert Bispace(2, [0, 3], [0, 3]).patch == frozenset({0, 3})
    assert Bispace(2, [0, 1, 3], [0, 2, 3]).patch == frozenset(discrete(2))
    for tau in enumerate_topologies(3):
        assert Bispace(3, discrete(3), tau).patch == frozenset(discrete(3))


def test_skula_examples():
    d = Bispace(2, discrete(2), discrete(2))
    assert d.skula() == d
    sk = Bispace(2, [0, 1, 3], [0, 3]).skula()
    assert sk.tau_plus == frozenset({0, 1, 3}) and sk.tau_minus == frozenset({0, 2, 3})


def test_patch_of_skula_is_discrete_iff_bi_td():
    for x in enumerate_bispaces(3):
        assert (len(x.skula().patch) == 1 << len(x)) == is_bi_td(x)


def test_functors_on_one_point_space():
    x = Bispace(1, [0, 1], [0, 1])
    for b in (b_omega(x), b_omega_fin(x)):
        assert b.main.size() == 2 and frames_isomorphic(b.plus, TWO)
    d = d_omega(x)
    assert len(d.con) == 3 and len(d.tot) == 3
    for duality in ("bi", "fin", "d"):
        assert unit_map(x, duality).is_bijective()


def test_chain_space_is_bisober_but_not_t1():
    for n in range(2, 6):
        x = chain_space(n)
        assert unit_map(x, "fin").is_bihomeomorphism()
        assert sobriety(x)["biSober"]
        assert not separation(x, "pairwiseT1")


def test_unit_pulls_back_basic_opens():
    for x in enumerate_bispaces(3):
        spec = spectrum(x, "fin")
        psi = unit_map(x, "fin", spec)
        plus = omega_plus(x)
        for a in plus.elements:
            assert psi.preimage(spec.phi_plus(a)) == plus.label(a)
        minus = omega_minus(x)
        for a in minus.elements:
            assert psi.preimage(spec.phi_minus(a)) == minus.label(a)


def test_separation_examples():
    d = Bispace(2, discrete(2), discrete(2))
    assert all(separation(d, a) for a in SEPARATION_AXIOMS)
    ind = Bispace(2, [0, 3], [0, 3])
    assert not separation(ind, "pairwiseT0") and not separation(ind, "biTD")
    with pytest.raises(InvalidInput):
        separation(d, "T5")


def test_sobriety_examples():
    x = Bispace(["a", "b"], [0, 1, 3], [0, 1, 3])
    s = sobriety(x)
    assert s["biSober"] and not s["dSober"]
    for y in enumerate_bispaces(3):
        if separation(y, "pairwiseT2"):
            assert sobriety(y)["biSober"]


def test_subspaces():
    x = Bispace(["a", "b", "c"], [0, 1, 3, 7], [0, 4, 6, 7])
    assert x.subspace(x.full) == x
    empty = x.subspace(0)
    assert len(empty) == 0 and empty.tau_plus == frozenset({0})
    for mask in range(x.full + 1):
        sub = x.subspace(mask)
        plus, minus = opens_map(inclusion_map(x, mask))
        for u in omega_plus(x).elements:
            assert sub.labels_of(omega_plus(sub).label(plus(u))) == x.labels_of(omega_plus(x).label(u) & mask)
        for u in omega_minus(x).elements:
            assert sub.labels_of(omega_minus(sub).label(minus(u))) == x.labels_of(omega_minus(x).label(u) & mask)


def test_spatial_side_of_functors():
    for x in enumerate_bispaces(2):
        assert spatialization(b_omega_fin(x)).is_bispatial
        assert bihomeomorphic(bipoints(b_omega_fin(x)).bispace, spectrum(x, "fin").bispace)


@given(bispaces(4), st.permutations(range(4)))
def test_bihomeomorphism_routes_agree(space, perm):
    perm = [p for p in perm if p < len(space)]
    moved = space.permuted(perm)
    f = bihomeomorphism(space, moved)
    assert f is not None and f.is_bihomeomorphism()
    assert space.canonical_key() == moved.canonical_key()


@given(bispaces(3), bispaces(3))
def test_bihomeomorphic_matches_canonical_key(x, y):
    assert bihomeomorphic(x, y) == (len(x) == len(y) and x.canonical_key() == y.canonical_key())


@given(st.lists(st.integers(0, 15), max_size=5))
def test_generated_topology_is_least(subbase):
    tau = generate_topology(subbase, 15)
    brute = [t for t in oracles.topologies(4) if all(frozenset(i for i in range(4) if u >> i & 1) in t for u in subbase)]
    smallest = min(brute, key=len)
    assert tau == frozenset(sum(1 << i for i in s) for s in smallest)
