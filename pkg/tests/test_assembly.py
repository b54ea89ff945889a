from itertools import product

import pytest

from bifrm.assembly import (
    alpha,
    alpha_identities,
    alpha_naturality,
    assembly_free_presentation,
    assembly_map,
    bi_td_conditions,
    biframe_assembly,
    bisp_table,
    bisubspace_conditions,
    filter_completion,
    final_conditions,
    finitary_assembly,
    principal_filter,
)
from bifrm.biframe import Biframe, BiframeMap, bipoints, enumerate_biframe_maps, identity_map
from bifrm.bispace import b_omega, b_omega_fin
from bifrm.caps import override
from bifrm.errors import SizeCapExceeded
from bifrm.frame import TWO, FrameMap, chain_frame, frame_from_lattice, frames_isomorphic
from bifrm.harness import enumerate_bispaces
from bifrm.poset import enumerate_lattices
from bifrm.spaces import Bispace
import oracles


def two() -> Biframe:
    return Biframe(TWO, TWO, TWO, FrameMap.identity(TWO), FrameMap.identity(TWO))


def chain_space(n: int) -> Bispace:
    return Bispace(n, [(1 << k) - 1 for k in range(n + 1)], [0, (1 << n) - 1])


SPACES2 = list(enumerate_bispaces(2))
BIFRAMES2 = [b_omega_fin(x) for x in SPACES2]


def same_map(f: BiframeMap, g: BiframeMap) -> bool:
    return f.plus.dual == g.plus.dual and f.minus.dual == g.minus.dual and f.main.dual == g.main.dual


# -- the assembly itself --------------------------------------------------------


def test_assembly_of_two():
    a = biframe_assembly(two())
    assert a.main.size() == 2 and a.plus.size() == 2 and a.minus.size() == 2
    assert len(finitary_assembly(two()).family) == 2


def test_finitary_assembly_is_everything_at_finite_scale():
    for x in enumerate_bispaces(3):
        b = b_omega_fin(x)
        fa = finitary_assembly(b)
        assert fa.is_whole_assembly
        assert len(fa.family) == 1 << len(b.main.poset)


def test_nabla_is_an_injective_biframe_map_with_bicomplements():
    for b in BIFRAMES2 + [two()]:
        a = biframe_assembly(b)
        assert a.nabla_embed.main.is_injective()
        for x in b.plus.elements:
            n, d = a.nabla_plus(x), a.delta_plus(x)
            assert a.biframe.inj_plus(n) & a.biframe.inj_minus(d) == 0
            assert a.biframe.inj_plus(n) | a.biframe.inj_minus(d) == a.main.top


def test_bispectrum_size_is_preserved():
    for x in enumerate_bispaces(3):
        b = b_omega_fin(x)
        assert len(bipoints(biframe_assembly(b).biframe).bispace) == len(bipoints(b).bispace)


def _provides_bicomplements(f: BiframeMap) -> bool:
    m = f.target
    plus_images = {m.inj_plus(a) for a in m.plus.elements}
    minus_images = {m.inj_minus(a) for a in m.minus.elements}

    def has_complement(z: int, pool: set[int]) -> bool:
        return any(z & w == 0 and z | w == m.main.top for w in pool)

    return all(has_complement(m.inj_plus(f.plus(x)), minus_images) for x in f.source.plus.elements) and all(
        has_complement(m.inj_minus(f.minus(y)), plus_images) for y in f.source.minus.elements
    )


def test_universal_property_of_the_assembly():
    targets = [b for b in BIFRAMES2 + [b_omega(x) for x in SPACES2] if max(b.plus.size(), b.minus.size()) <= 4]
    checked = 0
    for b in BIFRAMES2[:6] + [two()]:
        a = biframe_assembly(b)
        for m in targets:
            lifts = enumerate_biframe_maps(a.biframe, m)
            for f in enumerate_biframe_maps(b, m):
                matching = [g for g in lifts if same_map(g @ a.nabla_embed, f)]
                assert len(matching) == (1 if _provides_bicomplements(f) else 0)
                checked += 1
    assert checked > 100


def test_assembly_is_functorial():
    for src, tgt in product(BIFRAMES2[:5], repeat=2):
        for f in enumerate_biframe_maps(src, tgt):
            af = assembly_map(f)
            for g in enumerate_biframe_maps(tgt, src):
                assert same_map(assembly_map(g @ f), assembly_map(g) @ af)
        ident = identity_map(src)
        assert same_map(assembly_map(ident), identity_map(biframe_assembly(src).biframe))


# -- filters and the free presentation -----------------------------------------


def test_filter_examples():
    assert filter_completion(TWO).size() == 2
    c3 = filter_completion(chain_frame(3))
    assert c3.size() == 3 and frames_isomorphic(c3, chain_frame(3))
    for lattice in enumerate_lattices(6, distributive_only=True):
        frame = frame_from_lattice(lattice)
        filt = filter_completion(frame)
        assert filt.size() == len(oracles.filters(frame))
        for a in frame.elements:
            assert filt.label(principal_filter(frame, a)) == frozenset(x for x in frame.elements if frame.leq(a, x))


def test_free_presentation_examples():
    c3 = chain_frame(3)
    chain_biframe = Biframe(c3, TWO, c3, FrameMap.identity(c3), FrameMap.from_function(TWO, c3, lambda x: c3.top if x else 0))
    for b in [two(), chain_biframe] + BIFRAMES2:
        fp = assembly_free_presentation(b)
        assert fp.iso.is_isomorphism()
        assert fp.complements_forced


# -- alpha ------------------------------------------------------------------------


def test_alpha_on_two_is_a_bijection_of_singletons():
    amap = alpha(two())
    assert len(amap.source) == len(amap.target) == 1 and amap.is_bihomeomorphism()


def test_alpha_matches_independent_skula_construction():
    for n in range(1, 5):
        b = b_omega_fin(chain_space(n))
        amap = alpha(b)
        sk = bipoints(b).bispace.skula()
        assert {amap.preimage(u) for u in amap.target.tau_plus} == sk.tau_plus
        assert {amap.preimage(u) for u in amap.target.tau_minus} == sk.tau_minus
        assert all(alpha_identities(b).values())


def test_alpha_is_natural():
    for src, tgt in product(BIFRAMES2, repeat=2):
        for f in enumerate_biframe_maps(src, tgt):
            assert alpha_naturality(f)


# -- bisp, bi-T_D ------------------------------------------------------------------


def test_bisp_of_total_is_total():
    for b in BIFRAMES2:
        t = bisp_table(b)
        top = max(t.table)
        assert t.table[top] == top


def test_final_and_bisubspace_conditions_on_small_biframes():
    for b in BIFRAMES2:
        assert len(set(final_conditions(b).values())) == 1
        assert len(set(bisubspace_conditions(bipoints(b).bispace).values())) == 1


def test_double_indiscrete_fails_every_bi_td_condition():
    ind = Bispace(2, [0, 3], [0, 3])
    assert not any(bi_td_conditions(ind).values())
    d = Bispace(2, [0, 1, 2, 3], [0, 1, 2, 3])
    assert all(bi_td_conditions(d).values())


def test_assembly_respects_caps():
    b = b_omega_fin(chain_space(4))
    with override(join_irreducibles=2):
        with pytest.raises(SizeCapExceeded):
            biframe_assembly.__wrapped__(b)
