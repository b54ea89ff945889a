"""Assemblies of finite biframes and the operators living on them.

Congruences on the main component ``L = D(J)`` are stored by the set of
join-irreducibles they *kill* (see :class:`~bifrm.frame.Congruence`), so the
full assembly ``A(L)`` is the Boolean algebra of subsets of ``J``: ``nabla(x)``
kills ``x`` and ``Delta(x)`` kills ``J - x``.  Every lattice built here is a
family of killed sets and is turned into a :class:`~bifrm.frame.Frame` whose
element labels are those sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable

from . import caps
from .biframe import (
    Biframe,
    BiframeMap,
    Spectrum,
    biframe_map,
    bipoints,
    bisp_interior,
    bpt_map,
    finitary_elements,
    interior_from,
    present,
)
from .errors import InvalidInput
from .frame import (
    Congruence,
    Frame,
    FrameMap,
    congruence_closure,
    coproduct,
    sublattice_frame,
)
from .poset import iter_bits, popcount
from .spaces import Bispace, BispaceMap, is_bi_td

__all__ = [
    "AssemblyBiframe",
    "BispTable",
    "FinitaryAssembly",
    "FreePresentation",
    "alpha",
    "alpha_identities",
    "alpha_naturality",
    "assembly_free_presentation",
    "assembly_map",
    "bi_td_conditions",
    "biframe_assembly",
    "bisob_closure",
    "bisober_subsets",
    "bisp_table",
    "bisubspace_conditions",
    "bpt_of_quotient",
    "canonical_form_subsets",
    "filter_completion",
    "final_conditions",
    "finitary_assembly",
    "principal_filter",
    "skula_patch_closed",
]


def _check_size(b: Biframe) -> None:
    caps.check("assembly (join-irreducibles of the main component)", len(b.main.poset), caps.current().join_irreducibles)


# ---------------------------------------------------------------------------
# A_fin(L)


@dataclass(frozen=True)
class FinitaryAssembly:
    """``A_fin(L)`` as a family of killed sets, with the routes that produced it.

    ``descriptions`` maps the name of each generating description to the
    family it generates; all of them coincide with ``family``.
    """

    biframe: Biframe
    frame: Frame
    family: frozenset[int]
    descriptions: dict[str, frozenset[int]] = field(compare=False)
    is_whole_assembly: bool

    def congruence(self, x: int) -> Congruence:
        """The congruence on ``L`` represented by the frame element ``x``."""
        main = self.biframe.main
        return Congruence(main, main.top & ~self.frame.label(x))


def _downsets_of(frame: Frame) -> frozenset[int]:
    return frozenset(frame.label(x) for x in frame.elements)


def _canonical_form_family(b: Biframe) -> frozenset[int]:
    """Joins of ``nabla(e+a & e-a) & Delta(e+b | e-b)``; killed set ``(a & ~b)``."""
    meets = {b.generator(x, y) for x in b.plus.elements for y in b.minus.elements}
    joins = {b.cogenerator(x, y) for x in b.plus.elements for y in b.minus.elements}
    pieces = {a & ~c for a in meets for c in joins}
    out = {0}
    for piece in sorted(pieces):
        if piece in out:
            continue
        out |= {r | piece for r in out}
    return frozenset(out)


def _pushforward(b: Biframe, inj: FrameMap, comp: Frame) -> list[int]:
    """Killed sets of the congruences on ``L`` generated by images of all congruences on ``comp``."""
    out = set()
    n = len(comp.poset)
    for killed in range(1 << n):
        relation = [(inj(comp.principal(j)), inj(comp.principal(j) & ~(1 << j))) for j in iter_bits(killed)]
        out.add(congruence_closure(b.main, relation).killed)
    return sorted(out)


def finitary_assembly(b: Biframe, *, check_all_congruences: bool = True) -> FinitaryAssembly:
    """``A_fin(L)``: the subframe of ``A(L)`` generated by ``nabla`` of all elements and ``Delta`` of finitary ones.

    Four further descriptions are computed and required to agree: the
    generators ``nabla, Delta`` of component images; the images of the
    component assemblies; the canonical-form joins; and (optionally) the set of
    all congruences that are generated by pairs of finitary elements.
    """
    _check_size(b)
    main = b.main
    full = main.top
    fin = finitary_elements(b)
    ep = [b.inj_plus(x) for x in b.plus.elements]
    em = [b.inj_minus(y) for y in b.minus.elements]

    definitional = [x for x in main.elements] + [full & ~x for x in fin]
    first = [x for x in main.elements] + [full & ~(p | m) for p in ep for m in em]
    second = ep + em + [full & ~p for p in ep] + [full & ~m for m in em]
    third = _pushforward(b, b.inj_plus, b.plus) + _pushforward(b, b.inj_minus, b.minus)

    frame = sublattice_frame(definitional, full, name="A_fin")
    family = _downsets_of(frame)
    descriptions = {
        "nabla all, Delta finitary": family,
        "nabla all, Delta of e+x | e-y": _downsets_of(sublattice_frame(first, full)),
        "nabla and Delta of component images": _downsets_of(sublattice_frame(second, full)),
        "images of component assemblies": _downsets_of(sublattice_frame(third, full)),
        "canonical form": _canonical_form_family(b),
    }
    if check_all_congruences:
        found = set()
        for killed in range(full + 1):
            if killed & ~full:
                continue
            c = Congruence(main, full & ~killed)
            if interior_from(main, fin, c) == c:
                found.add(killed)
        descriptions["finitary congruences"] = frozenset(found)
    for name, fam in descriptions.items():
        if fam != family:
            raise AssertionError(f"A_fin description {name!r} disagrees ({len(fam)} vs {len(family)} members)")
    whole = len(family) == 1 << len(main.poset)
    return FinitaryAssembly(b, frame, family, descriptions, whole)


# ---------------------------------------------------------------------------
# A(L)


@dataclass(frozen=True)
class AssemblyBiframe:
    """``A(L) = (A+, A-, A_fin(L))`` with the embedding ``nabla : L -> A(L)``.

    ``A+`` is generated by ``nabla(e+ x)`` and ``Delta(e- y)``; ``A-`` by
    ``nabla(e- y)`` and ``Delta(e+ x)``.
    """

    base: Biframe
    biframe: Biframe
    nabla_embed: BiframeMap
    finitary: FinitaryAssembly

    @property
    def plus(self) -> Frame:
        return self.biframe.plus

    @property
    def minus(self) -> Frame:
        return self.biframe.minus

    @property
    def main(self) -> Frame:
        return self.biframe.main

    def nabla_plus(self, x: int) -> int:
        """``nabla(e+ x)`` as an element of ``A+``."""
        return self.plus.element(self.base.inj_plus(x))

    def delta_plus(self, x: int) -> int:
        """``Delta(e+ x)`` as an element of ``A-``."""
        return self.minus.element(self.base.main.top & ~self.base.inj_plus(x))

    def nabla_minus(self, y: int) -> int:
        return self.minus.element(self.base.inj_minus(y))

    def delta_minus(self, y: int) -> int:
        """``Delta(e- y)`` as an element of ``A+``."""
        return self.plus.element(self.base.main.top & ~self.base.inj_minus(y))


def _inclusion(sub: Frame, main: Frame) -> FrameMap:
    return FrameMap.from_function(sub, main, lambda x: main.element(sub.label(x)))


@lru_cache(maxsize=1024)
def biframe_assembly(b: Biframe) -> AssemblyBiframe:
    fa = finitary_assembly(b)
    main = fa.frame
    full = b.main.top
    ep = [b.inj_plus(x) for x in b.plus.elements]
    em = [b.inj_minus(y) for y in b.minus.elements]
    plus = sublattice_frame(ep + [full & ~m for m in em], full, name="A+")
    minus = sublattice_frame(em + [full & ~p for p in ep], full, name="A-")
    target = Biframe(plus, minus, main, _inclusion(plus, main), _inclusion(minus, main), name="A")
    for x in ep + em:
        if main.meet(main.element(x), main.element(full & ~x)) != 0 or main.join(
            main.element(x), main.element(full & ~x)
        ) != main.top:
            raise AssertionError("nabla and Delta of a component element are not complements")
    np_ = FrameMap.from_function(b.plus, plus, lambda x: plus.element(b.inj_plus(x)))
    nm_ = FrameMap.from_function(b.minus, minus, lambda y: minus.element(b.inj_minus(y)))
    embed = biframe_map(b, target, np_, nm_)
    if any(embed.main(x) != main.element(x) for x in b.main.elements):
        raise AssertionError("the main part of the embedding is not nabla")
    if not (np_.is_injective() and nm_.is_injective() and embed.main.is_injective()):
        raise AssertionError("nabla is not an embedding")
    return AssemblyBiframe(b, target, embed, fa)


def assembly_map(f: BiframeMap, source: AssemblyBiframe | None = None, target: AssemblyBiframe | None = None) -> BiframeMap:
    """``A(f) : A(L) -> A(M)``, determined by ``nabla(x) -> nabla(f x)`` and ``Delta(x) -> Delta(f x)``.

    On killed sets it is the preimage along the dual of ``f``'s main part.
    """
    a = source or biframe_assembly(f.source)
    c = target or biframe_assembly(f.target)
    dual = f.main.dual
    m_full = f.target.main.top

    def pull(killed: int) -> int:
        return sum(1 << t for t in range(len(dual)) if killed >> dual[t] & 1)

    plus = FrameMap.from_function(a.plus, c.plus, lambda x: c.plus.element(pull(a.plus.label(x))))
    minus = FrameMap.from_function(a.minus, c.minus, lambda x: c.minus.element(pull(a.minus.label(x))))
    out = biframe_map(a.biframe, c.biframe, plus, minus)
    for x in f.source.main.elements:
        if out.main(a.main.element(x)) != c.main.element(f.main(x)):
            raise AssertionError("A(f) does not send nabla(x) to nabla(f x)")
        if out.main(a.main.element(f.source.main.top & ~x)) != c.main.element(m_full & ~f.main(x)):
            raise AssertionError("A(f) does not send Delta(x) to Delta(f x)")
    return out


# ---------------------------------------------------------------------------
# filter completion and the free presentation


def filter_completion(frame: Frame) -> Frame:
    """Filters of a finite frame ordered by inclusion.

    Every filter of a finite lattice is principal, ``up a``, and
    ``up a <= up b`` iff ``b <= a``; so this is ``D(J^op)`` with ``up a``
    encoded as ``J - a``.  Labels are the filters as frozensets of elements.
    """
    poset = frame.poset
    full = poset.full

    def decode(mask: int) -> frozenset[int]:
        a = full & ~mask
        return frozenset(x for x in frame.elements if a & ~x == 0)

    def encode(flt: Iterable[int]) -> int:
        flt = frozenset(flt)
        if not flt:
            raise InvalidInput("filters are non-empty")
        a = frame.meet_all(flt)
        if decode(full & ~a) != flt:
            raise InvalidInput("not a filter")
        return full & ~a

    name = f"Filt({frame.name})" if frame.name else "Filt"
    return Frame(poset.dual(), decode=decode, encode=encode, name=name)


def principal_filter(frame: Frame, a: int) -> int:
    """``up a`` as an element of :func:`filter_completion` of ``frame``."""
    frame.check(a)
    return frame.poset.full & ~a


@dataclass(frozen=True)
class FreePresentation:
    """The assembly presented on ``(L+ (+) Filt(L-), L- (+) Filt(L+))``.

    ``iso`` goes from :func:`biframe_assembly` to the presented biframe and
    sends ``nabla(x+) -> [[x+]]`` and ``Delta(x-) -> [[up x-]]``.
    """

    presented: Biframe
    iso: BiframeMap
    complements_forced: bool


def _profile_dual(src_gens: list[int], src: Frame, tgt_gens: list[int], tgt: Frame) -> tuple[int, ...]:
    """The dual of the isomorphism matching generator lists, recovered pointwise.

    A join-irreducible lies in exactly those generators listed by its profile;
    when both sides are generated by their lists, profiles determine
    join-irreducibles, so the isomorphism (if any) is forced.
    """
    src_profile = {}
    for s in range(len(src.poset)):
        key = tuple(g >> s & 1 for g in src_gens)
        if key in src_profile:
            raise AssertionError("generators do not separate the join-irreducibles of the assembly")
        src_profile[key] = s
    dual = []
    for t in range(len(tgt.poset)):
        key = tuple(g >> t & 1 for g in tgt_gens)
        if key not in src_profile:
            raise AssertionError("a point of the presented biframe has no counterpart in the assembly")
        dual.append(src_profile[key])
    if sorted(dual) != list(range(len(src.poset))):
        raise AssertionError("presented biframe and assembly have different points")
    return tuple(dual)


def assembly_free_presentation(b: Biframe, assembly: AssemblyBiframe | None = None) -> FreePresentation:
    """Present ``A(b)`` by ``C_L`` together with the complementation relations.

    The main component is a quotient of the four-fold coproduct
    ``L+ (+) Filt(L-) (+) L- (+) Filt(L+)``; it is handled through kept sets
    only and never enumerated.
    """
    _check_size(b)
    a = assembly or biframe_assembly(b)
    lp, lm = b.plus, b.minus
    fm, fp = filter_completion(lm), filter_completion(lp)
    pos, neg = coproduct(lp, fm), coproduct(lm, fp)
    four = coproduct(pos.frame, neg.frame)
    caps.check(
        "four-fold coproduct join-irreducibles",
        len(four.frame.poset),
        caps.current().join_irreducibles ** 2,
    )

    def g_plus(x: int) -> int:
        return four.inj_left(pos.inj_left(x))

    def g_up_minus(y: int) -> int:
        return four.inj_left(pos.inj_right(principal_filter(lm, y)))

    def g_minus(y: int) -> int:
        return four.inj_right(neg.inj_left(y))

    def g_up_plus(x: int) -> int:
        return four.inj_right(neg.inj_right(principal_filter(lp, x)))

    relation = []
    pp, mp = lp.poset, lm.poset
    for p, q in b.ji_pairs():
        lo, hi = (pp.down[p], mp.down[q]), (pp.full & ~pp.up[p], mp.full & ~mp.up[q])
        if b.main.leq(b.generator(*lo), b.cogenerator(*hi)):
            relation.append((g_plus(lo[0]) & g_minus(lo[1]), g_plus(hi[0]) | g_minus(hi[1])))
    for x in lp.elements:
        relation.append((g_plus(x) & g_up_plus(x), 0))
        relation.append((four.frame.top, g_plus(x) | g_up_plus(x)))
    for y in lm.elements:
        relation.append((g_minus(y) & g_up_minus(y), 0))
        relation.append((four.frame.top, g_minus(y) | g_up_minus(y)))

    pres = present(pos.frame, neg.frame, relation, allow_component_quotients=True)
    q = pres.biframe
    mq = pres.main_quotient

    full = b.main.top
    xs, ys = list(lp.elements), list(lm.elements)
    # generators of A(b) in order: nabla(e+x), Delta(e-y), nabla(e-y), Delta(e+x)
    a_main = [a.main.element(b.inj_plus(x)) for x in xs] + [a.main.element(full & ~b.inj_minus(y)) for y in ys]
    a_main += [a.main.element(b.inj_minus(y)) for y in ys] + [a.main.element(full & ~b.inj_plus(x)) for x in xs]
    q_main = [mq(g_plus(x)) for x in xs] + [mq(g_up_minus(y)) for y in ys]
    q_main += [mq(g_minus(y)) for y in ys] + [mq(g_up_plus(x)) for x in xs]
    main_iso = FrameMap(a.main, q.main, _profile_dual(a_main, a.main, q_main, q.main))

    a_plus = [a.nabla_plus(x) for x in xs] + [a.delta_minus(y) for y in ys]
    q_plus = [pres.plus_quotient(pos.inj_left(x)) for x in xs]
    q_plus += [pres.plus_quotient(pos.inj_right(principal_filter(lm, y))) for y in ys]
    a_minus = [a.nabla_minus(y) for y in ys] + [a.delta_plus(x) for x in xs]
    q_minus = [pres.minus_quotient(neg.inj_left(y)) for y in ys]
    q_minus += [pres.minus_quotient(neg.inj_right(principal_filter(lp, x))) for x in xs]
    plus_iso = FrameMap(a.plus, q.plus, _profile_dual(a_plus, a.plus, q_plus, q.plus))
    minus_iso = FrameMap(a.minus, q.minus, _profile_dual(a_minus, a.minus, q_minus, q.minus))

    iso = biframe_map(a.biframe, q, plus_iso, minus_iso)
    if iso.main != main_iso:
        raise AssertionError("component isomorphisms do not induce the main isomorphism")
    if not iso.is_isomorphism():
        raise AssertionError("the presented biframe is not isomorphic to the assembly")
    for gen_a, gen_q in zip(a_main, q_main):
        if main_iso(gen_a) != gen_q:
            raise AssertionError("the isomorphism does not match generators")
    forced = all(
        mq(g_plus(x)) & mq(g_up_plus(x)) == 0 and mq(g_plus(x)) | mq(g_up_plus(x)) == q.main.top for x in xs
    ) and all(
        mq(g_minus(y)) & mq(g_up_minus(y)) == 0 and mq(g_minus(y)) | mq(g_up_minus(y)) == q.main.top for y in ys
    )
    return FreePresentation(q, iso, forced)


# ---------------------------------------------------------------------------
# alpha : Sk(bpt L) -> bpt(A L)


def alpha(b: Biframe, assembly: AssemblyBiframe | None = None) -> BispaceMap:
    """``f -> f~``, the unique bipoint of ``A(b)`` with ``f~ o nabla = f``.

    The source is the Skula bispace of ``bpt(b)``.
    """
    a = assembly or biframe_assembly(b)
    spec_b, spec_a = bipoints(b), bipoints(a.biframe)
    emb = a.nabla_embed
    mapping = []
    for p, q in spec_b.pairs:
        hits = [
            k
            for k, (pa, qa) in enumerate(spec_a.pairs)
            if emb.plus.dual[pa] == p and emb.minus.dual[qa] == q
        ]
        if len(hits) != 1:
            raise AssertionError(f"bipoint {(p, q)} has {len(hits)} extensions along nabla")
        mapping.append(hits[0])
    return BispaceMap(spec_b.bispace.skula(), spec_a.bispace, tuple(mapping))


def alpha_identities(b: Biframe, assembly: AssemblyBiframe | None = None) -> dict[str, bool]:
    """How ``alpha`` moves the four kinds of subbasic sets."""
    a = assembly or biframe_assembly(b)
    amap = alpha(b, a)
    spec_b, spec_a = bipoints(b), bipoints(a.biframe)
    full = spec_b.bispace.full
    return {
        "phi+(x) -> phi+(nabla x)": all(
            amap.image(spec_b.phi_plus(x)) == spec_a.phi_plus(a.nabla_plus(x)) for x in b.plus.elements
        ),
        "complement phi-(x) -> phi+(Delta x)": all(
            amap.image(full & ~spec_b.phi_minus(y)) == spec_a.phi_plus(a.delta_minus(y))
            for y in b.minus.elements
        ),
        "phi-(x) -> phi-(nabla x)": all(
            amap.image(spec_b.phi_minus(y)) == spec_a.phi_minus(a.nabla_minus(y)) for y in b.minus.elements
        ),
        "complement phi+(x) -> phi-(Delta x)": all(
            amap.image(full & ~spec_b.phi_plus(x)) == spec_a.phi_minus(a.delta_plus(x))
            for x in b.plus.elements
        ),
    }


def alpha_naturality(f: BiframeMap) -> bool:
    """``alpha_L o bpt(f) = bpt(A f) o alpha_M`` as functions ``bpt(M) -> bpt(A L)``."""
    a_src, a_tgt = biframe_assembly(f.source), biframe_assembly(f.target)
    left = bpt_map(f)
    right = bpt_map(assembly_map(f, a_src, a_tgt))
    alpha_src, alpha_tgt = alpha(f.source, a_src), alpha(f.target, a_tgt)
    return all(
        alpha_src(left(k)) == right(alpha_tgt(k)) for k in range(len(left.source))
    )


# ---------------------------------------------------------------------------
# biquotients, bisp and bisob


def _point_index(b: Biframe, spec: Spectrum) -> list[int]:
    """For each join-irreducible of ``L`` the index of its bipoint in ``spec``."""
    index = {pair: k for k, pair in enumerate(spec.pairs)}
    return [index[pair] for pair in b.point_pairs]


def bpt_of_quotient(b: Biframe, c: Congruence, spec: Spectrum | None = None) -> int:
    """The bipoints of ``b`` that factor through ``L/c``, as a subset of ``bpt(b)``."""
    spec = spec or bipoints(b)
    where = _point_index(b, spec)
    return sum(1 << where[j] for j in iter_bits(c.kept))


@dataclass(frozen=True)
class BispTable:
    """``bisp`` on the finitary congruences of ``L`` (keyed by killed set).

    ``fixpoints`` are the bispatial biquotients; ``boolean`` says whether they
    form a Boolean algebra under the induced order.
    """

    table: dict[int, int]
    fixpoints: tuple[int, ...]
    boolean: bool


def bisp_table(b: Biframe, assembly: FinitaryAssembly | None = None) -> BispTable:
    fa = assembly or finitary_assembly(b, check_all_congruences=False)
    main = b.main
    table = {}
    for killed in sorted(fa.family):
        c = Congruence(main, main.top & ~killed)
        table[killed] = bisp_interior(b, c).killed
    fix = tuple(sorted((k for k, v in table.items() if k == v), key=lambda s: (popcount(s), s)))
    fixset = set(fix)
    top = main.top

    def meet_in_fix(x: int, y: int) -> int:
        return table[x & y]

    boolean = True
    for x in fix:
        if not any((x | y) == top and meet_in_fix(x, y) == 0 for y in fixset):
            boolean = False
            break
    return BispTable(table, fix, boolean)


def bisober_subsets(space: Bispace) -> frozenset[int]:
    """Subsets of points whose bisubspace is bisober."""
    from .bispace import sobriety

    return frozenset(
        mask for mask in range(space.full + 1) if sobriety(space.subspace(mask))["biSober"]
    )


def bisob_closure(space: Bispace, mask: int, sober: frozenset[int] | None = None) -> int:
    """The smallest bisober subset containing ``mask``."""
    sober = sober if sober is not None else bisober_subsets(space)
    out = space.full
    for z in sober:
        if mask & ~z == 0:
            out &= z
    return out


def skula_patch_closed(space: Bispace) -> frozenset[int]:
    sk = space.skula()
    return frozenset(space.full & ~u for u in sk.patch)


def canonical_form_subsets(b: Biframe, spec: Spectrum | None = None) -> frozenset[int]:
    """Intersections of ``phi+(a)^c | phi+(b) | phi-(a)^c | phi-(b)`` in ``bpt(b)``."""
    spec = spec or bipoints(b)
    full = spec.bispace.full
    pieces = {
        (full & ~spec.phi_plus(a1)) | spec.phi_plus(b1) | (full & ~spec.phi_minus(a2)) | spec.phi_minus(b2)
        for a1, b1 in product(b.plus.elements, repeat=2)
        for a2, b2 in product(b.minus.elements, repeat=2)
    }
    out = {full}
    for piece in sorted(pieces):
        out |= {r & piece for r in out}
    return frozenset(out)


def final_conditions(b: Biframe) -> dict[str, bool]:
    """The five conditions that together characterise a bi-T_D spectrum."""
    a = biframe_assembly(b)
    spec = bipoints(b)
    space = spec.bispace
    spec_a = bipoints(a.biframe)
    table = bisp_table(b, a.finitary)
    sober = bisober_subsets(space)
    everything = frozenset(range(space.full + 1))
    images = {bpt_of_quotient(b, Congruence(b.main, b.main.top & ~k), spec) for k in table.fixpoints}
    return {
        "bpt is bi-T_D": is_bi_td(space),
        "bpt of the assembly is patch-discrete": len(spec_a.bispace.patch) == 1 << len(spec_a.bispace),
        "bispatial biquotients form a Boolean algebra": table.boolean,
        "every bisubspace is bisober": sober == everything,
        "bpt on bispatial biquotients is onto all subsets": images == everything
        and len(images) == len(table.fixpoints),
    }


def bisubspace_conditions(space: Bispace) -> dict[str, bool]:
    """Five conditions on a spectrum concerning its bisober bisubspaces."""
    sober = bisober_subsets(space)
    full = space.full
    everything = frozenset(range(full + 1))
    return {
        "all bisubspaces bisober": sober == everything,
        "bisober closed under unions": all((x | y) in sober for x in sober for y in sober),
        "bisober closed under complements": all((full & ~x) in sober for x in sober),
        "point-deleted bisubspaces bisober": all((full & ~(1 << i)) in sober for i in range(len(space))),
        "bi-T_D": is_bi_td(space),
    }


def bi_td_conditions(space: Bispace) -> dict[str, bool]:
    """Four characterisations of bi-T_D for an arbitrary bispace."""
    from .bispace import b_omega_fin, inclusion_map, opens_map

    full = space.full
    sk = space.skula()
    bo = b_omega_fin(space)

    def induced(mask: int) -> int:
        """Killed set of the congruence ``-&Y`` induces on the main component of ``bOmega_fin(X)``."""
        plus, minus = opens_map(inclusion_map(space, mask))
        sub = b_omega_fin(space.subspace(mask))
        f = biframe_map(bo, sub, plus, minus)
        return f.main.kernel().killed

    kernels = [induced(mask) for mask in range(full + 1)]
    return {
        "bi-T_D": is_bi_td(space),
        "Skula patch discrete": len(sk.patch) == 1 << len(space),
        "distinct bisubspaces induce distinct biquotients": len(set(kernels)) == len(kernels),
        "removing a point is never an isomorphism": all(kernels[full & ~(1 << i)] != 0 for i in range(len(space))),
    }
