"""Finite biframes, their maps, bipoints, presentations and biquotients.

A biframe ``(L+, L-, L)`` consists of two subframes of ``L`` (given by
injective frame maps ``e+``, ``e-``) that together generate ``L``.  Through the
dual maps of the injections every join-irreducible ``j`` of ``L`` determines
the pair ``(e+^dual(j), e-^dual(j))`` of join-irreducibles of the components;
the biframe is generated exactly when this assignment is an order embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .errors import InjectionCollapsed, InvalidInput, NotAFrameMap, NotGenerating, NotInjective
from .frame import (
    Congruence,
    Coproduct,
    Frame,
    FrameMap,
    congruence_closure,
    coproduct,
    point,
    points,
    quotient,
    set_lattice_frame,
)
from .poset import iter_bits
from .spaces import Bispace, BispaceMap


class Biframe:
    """A finite biframe with component injections ``inj_plus`` and ``inj_minus``."""

    def __init__(
        self,
        plus: Frame,
        minus: Frame,
        main: Frame,
        inj_plus: FrameMap,
        inj_minus: FrameMap,
        *,
        name: str | None = None,
    ) -> None:
        for inj, comp, sign in ((inj_plus, plus, "+"), (inj_minus, minus, "-")):
            if inj.source != comp or inj.target != main:
                raise InvalidInput(f"injection {sign} has the wrong source or target")
            if not inj.is_injective():
                raise NotInjective(f"the {sign} injection is not one-to-one")
        self.plus = plus
        self.minus = minus
        self.main = main
        self.inj_plus = inj_plus
        self.inj_minus = inj_minus
        self.name = name
        generators = {self.generator(plus.principal(p), minus.principal(q)) for p, q in self.ji_pairs()}
        missing = [j for j in range(len(main.poset)) if main.principal(j) not in generators]
        if missing:
            raise NotGenerating(
                f"{len(missing)} join-irreducible(s) of the main component are not meets of generators"
            )

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return (
            f"<Biframe{tag} |J+|={len(self.plus.poset)} |J-|={len(self.minus.poset)} "
            f"|J|={len(self.main.poset)}>"
        )

    def ji_pairs(self) -> Iterator[tuple[int, int]]:
        return product(range(len(self.plus.poset)), range(len(self.minus.poset)))

    def generator(self, a: int, b: int) -> int:
        """``e+(a) & e-(b)`` in the main component."""
        return self.inj_plus(a) & self.inj_minus(b)

    def cogenerator(self, a: int, b: int) -> int:
        """``e+(a) | e-(b)`` in the main component."""
        return self.inj_plus(a) | self.inj_minus(b)

    @cached_property
    def point_pairs(self) -> tuple[tuple[int, int], ...]:
        """For each join-irreducible of ``L`` the pair of component join-irreducibles."""
        return tuple(zip(self.inj_plus.dual, self.inj_minus.dual))

    # -- canonical presentation ------------------------------------------

    @cached_property
    def coproduct(self) -> Coproduct:
        return coproduct(self.plus, self.minus)

    @cached_property
    def pairing(self) -> FrameMap:
        """The copairing ``L+ (+) L- -> L`` of the two injections."""
        return self.coproduct.pairing(self.inj_plus, self.inj_minus)

    def syntactic(self, a: int, b: int) -> int:
        """``<a> & <b>`` in the coproduct."""
        return self.coproduct.generator(a, b)

    def cosyntactic(self, a: int, b: int) -> int:
        """``<a> | <b>`` in the coproduct."""
        cp = self.coproduct
        return cp.inj_left(a) | cp.inj_right(b)

    @cached_property
    def canonical_congruence(self) -> Congruence:
        """``C_L``: generated by the pairs ``(<a+> & <a->, <b+> | <b->)`` valid in ``L``."""
        return congruence_closure(self.coproduct.frame, relation_generators(self))

    @cached_property
    def canonical_isomorphism(self) -> FrameMap:
        """The isomorphism ``(L+ (+) L-) / C_L -> L`` induced by the copairing."""
        q = quotient(self.coproduct.frame, self.canonical_congruence)
        keep = list(iter_bits(self.canonical_congruence.kept))
        position = {k: i for i, k in enumerate(keep)}
        cp = self.coproduct
        try:
            dual = tuple(position[cp.pair_index(p, q_)] for p, q_ in self.point_pairs)
        except KeyError:
            raise AssertionError("C_L identifies elements that L keeps apart") from None
        iso = FrameMap(q.frame, self.main, dual)
        if not iso.is_isomorphism():
            raise AssertionError("canonical presentation does not reproduce the main component")
        return iso

    def is_finitary(self) -> bool:
        return finitary_interior(self, self.canonical_congruence) == self.canonical_congruence


def relation_generators(b: Biframe) -> Iterator[tuple[int, int]]:
    """A generating part of ``R_L``.

    For component join-irreducibles ``p``, ``q`` the instance with
    ``a+ = down p``, ``a- = down q``, ``b+ = not-up p`` and ``b- = not-up q`` is the
    strongest one that can separate the pair ``(p, q)``; any instance of the
    full relation is implied by these, so both generate the same congruence.
    """
    pp, mp = b.plus.poset, b.minus.poset
    for p, q in b.ji_pairs():
        a_plus, a_minus = pp.down[p], mp.down[q]
        b_plus, b_minus = pp.full & ~pp.up[p], mp.full & ~mp.up[q]
        if b.main.leq(b.generator(a_plus, a_minus), b.cogenerator(b_plus, b_minus)):
            yield b.syntactic(a_plus, a_minus), b.cosyntactic(b_plus, b_minus)


def full_relation(b: Biframe) -> Iterator[tuple[int, int]]:
    """Every pair of ``R_L`` (quartic in the component sizes; for small cases)."""
    for a_plus, a_minus, b_plus, b_minus in product(b.plus.elements, b.minus.elements, b.plus.elements, b.minus.elements):
        if b.main.leq(b.generator(a_plus, a_minus), b.cogenerator(b_plus, b_minus)):
            yield b.syntactic(a_plus, a_minus), b.cosyntactic(b_plus, b_minus)


def make_biframe(plus: Frame, minus: Frame, main: Frame, inj_plus: FrameMap, inj_minus: FrameMap) -> Biframe:
    """Validate a biframe and compute its canonical presentation."""
    b = Biframe(plus, minus, main, inj_plus, inj_minus)
    b.canonical_isomorphism  # noqa: B018 - forces the presentation check
    return b


def coproduct_biframe(plus: Frame, minus: Frame) -> Biframe:
    """``(L+, L-, L+ (+) L-)`` with the coproduct injections."""
    cp = coproduct(plus, minus)
    return Biframe(plus, minus, cp.frame, cp.inj_left, cp.inj_right)


# ---------------------------------------------------------------------------
# biframe maps


@dataclass(frozen=True)
class BiframeMap:
    source: Biframe
    target: Biframe
    plus: FrameMap
    minus: FrameMap
    main: FrameMap

    def compose(self, first: "BiframeMap") -> "BiframeMap":
        """``self o first``."""
        return BiframeMap(
            first.source, self.target, self.plus @ first.plus, self.minus @ first.minus, self.main @ first.main
        )

    def __matmul__(self, first: "BiframeMap") -> "BiframeMap":
        return self.compose(first)

    def is_isomorphism(self) -> bool:
        return self.plus.is_isomorphism() and self.minus.is_isomorphism() and self.main.is_isomorphism()

    def components(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.plus.dual, self.minus.dual


def witness(source: Biframe, target: Biframe, plus: FrameMap, minus: FrameMap) -> FrameMap | None:
    """The main-component map extending ``(plus, minus)``, if there is one.

    Each point ``m`` of the target's main component pulls back to the pair
    ``(plus^dual(m+), minus^dual(m-))``; a witness exists exactly when every such
    pair is a point of the source's main component.
    """
    index = {pair: j for j, pair in enumerate(source.point_pairs)}
    dual = []
    for mp, mm in target.point_pairs:
        pair = (plus.dual[mp], minus.dual[mm])
        if pair not in index:
            return None
        dual.append(index[pair])
    try:
        return FrameMap(source.main, target.main, dual)
    except NotAFrameMap:
        return None


def witness_by_generators(source: Biframe, target: Biframe, plus: FrameMap, minus: FrameMap) -> FrameMap | None:
    """Same as :func:`witness`, computed on elements.

    ``f(x)`` must be the join of ``f(e+ a & e- b) = e+ f+(a) & e- f-(b)`` over the
    generators below ``x``; this candidate is then checked to be a frame map
    commuting with the injections.
    """
    gens = []
    for p, q in source.ji_pairs():
        a, b = source.plus.principal(p), source.minus.principal(q)
        gens.append((source.generator(a, b), target.generator(plus(a), minus(b))))

    def candidate(x: int) -> int:
        out = 0
        for g, image in gens:
            if g & ~x == 0:
                out |= image
        return out

    try:
        f = FrameMap.from_function(source.main, target.main, candidate)
    except NotAFrameMap:
        return None
    if f @ source.inj_plus != target.inj_plus @ plus or f @ source.inj_minus != target.inj_minus @ minus:
        return None
    return f


def biframe_map(source: Biframe, target: Biframe, plus: FrameMap, minus: FrameMap) -> BiframeMap:
    main = witness(source, target, plus, minus)
    if main is None:
        raise NotAFrameMap("the component maps do not extend to the main components")
    return BiframeMap(source, target, plus, minus, main)


def is_biframe_map(source: Biframe, target: Biframe, plus: FrameMap, minus: FrameMap) -> bool:
    return witness(source, target, plus, minus) is not None


def preserves_relations(source: Biframe, target: Biframe, plus: FrameMap, minus: FrameMap) -> bool:
    """Whether every inequality ``a+ & a- <= b+ | b-`` of the source survives the maps."""
    for a_plus, a_minus, b_plus, b_minus in product(
        source.plus.elements, source.minus.elements, source.plus.elements, source.minus.elements
    ):
        if source.main.leq(source.generator(a_plus, a_minus), source.cogenerator(b_plus, b_minus)):
            if not target.main.leq(
                target.generator(plus(a_plus), minus(a_minus)), target.cogenerator(plus(b_plus), minus(b_minus))
            ):
                return False
    return True


def identity_map(b: Biframe) -> BiframeMap:
    return BiframeMap(b, b, FrameMap.identity(b.plus), FrameMap.identity(b.minus), FrameMap.identity(b.main))


def enumerate_biframe_maps(source: Biframe, target: Biframe) -> list[BiframeMap]:
    from .frame import enumerate_frame_maps

    out = []
    for fp in enumerate_frame_maps(source.plus, target.plus):
        for fm in enumerate_frame_maps(source.minus, target.minus):
            main = witness(source, target, fp, fm)
            if main is not None:
                out.append(BiframeMap(source, target, fp, fm, main))
    return out


def biframe_from_point_pairs(plus: Frame, minus: Frame, pairs: Iterable[tuple[int, int]]) -> Biframe:
    """The biframe whose main join-irreducibles are the given component pairs.

    ``pairs`` is a set of pairs ``(p, q)`` of join-irreducibles, ordered
    coordinatewise; every ``p`` and every ``q`` must occur so that both
    injections are one-to-one.
    """
    from .poset import Poset

    pairs = sorted(set(pairs))
    pp, mp = plus.poset, minus.poset
    down = []
    for p, q in pairs:
        d = 0
        for k, (p2, q2) in enumerate(pairs):
            if pp.leq(p2, p) and mp.leq(q2, q):
                d |= 1 << k
        down.append(d)
    main = Frame(Poset(tuple(pairs), down))
    inj_plus = FrameMap(plus, main, [p for p, _ in pairs])
    inj_minus = FrameMap(minus, main, [q for _, q in pairs])
    return Biframe(plus, minus, main, inj_plus, inj_minus)


# ---------------------------------------------------------------------------
# bipoints


@dataclass(frozen=True)
class Spectrum:
    """A bispace of points together with the maps sending elements to open sets.

    ``pairs[k]`` is the pair of component join-irreducibles of point ``k``;
    ``phi_plus(a)`` is the positive open of points ``(p, q)`` with ``p`` in ``a``.
    """

    bispace: Bispace
    pairs: tuple[tuple[int, int], ...]
    plus: Frame
    minus: Frame

    def phi_plus(self, a: int) -> int:
        return sum(1 << k for k, (p, _) in enumerate(self.pairs) if a >> p & 1)

    def phi_minus(self, b: int) -> int:
        return sum(1 << k for k, (_, q) in enumerate(self.pairs) if b >> q & 1)

    def point_maps(self, k: int) -> tuple[FrameMap, FrameMap]:
        p, q = self.pairs[k]
        return point(self.plus, p), point(self.minus, q)

    def index(self, pair: tuple[int, int]) -> int:
        return self.pairs.index(pair)


def spectrum_from_pairs(plus: Frame, minus: Frame, pairs: Iterable[tuple[int, int]]) -> Spectrum:
    pairs = tuple(sorted(pairs))
    labels = tuple((plus.poset.labels[p], minus.poset.labels[q]) for p, q in pairs)
    tau_plus = frozenset(
        sum(1 << k for k, (p, _) in enumerate(pairs) if a >> p & 1) for a in plus.elements
    )
    tau_minus = frozenset(
        sum(1 << k for k, (_, q) in enumerate(pairs) if b >> q & 1) for b in minus.elements
    )
    return Spectrum(Bispace(labels, tau_plus, tau_minus, validate=False), pairs, plus, minus)


def bipoint_pairs(b: Biframe) -> list[tuple[int, int]]:
    """Pairs of component points passing the four-condition test.

    ``(f+, f-)`` fails when some ``a+ & a- <= b+ | b-`` holds in ``L`` while
    ``f+(a+) = f-(a-) = 1`` and ``f+(b+) = f-(b-) = 0``; for a given pair the most
    demanding such inequality uses ``down p``, ``down q``, ``not-up p``, ``not-up q``.
    """
    pp, mp = b.plus.poset, b.minus.poset
    out = []
    for p, q in b.ji_pairs():
        lhs = b.generator(pp.down[p], mp.down[q])
        rhs = b.cogenerator(pp.full & ~pp.up[p], mp.full & ~mp.up[q])
        if not b.main.leq(lhs, rhs):
            out.append((p, q))
    return out


def bipoint_pairs_exhaustive(b: Biframe) -> list[tuple[int, int]]:
    """The four-condition test against every inequality of ``L`` (small cases)."""
    inequalities = [
        (a_plus, a_minus, b_plus, b_minus)
        for a_plus, a_minus, b_plus, b_minus in product(
            b.plus.elements, b.minus.elements, b.plus.elements, b.minus.elements
        )
        if b.main.leq(b.generator(a_plus, a_minus), b.cogenerator(b_plus, b_minus))
    ]
    out = []
    for p, q in b.ji_pairs():
        if all(
            not (a_plus >> p & 1) or not (a_minus >> q & 1) or b_plus >> p & 1 or b_minus >> q & 1
            for a_plus, a_minus, b_plus, b_minus in inequalities
        ):
            out.append((p, q))
    return out


def bipoint_pairs_by_factoring(b: Biframe) -> list[tuple[int, int]]:
    """Points of the main component, restricted along the two injections."""
    out = set()
    for f in points(b.main):
        fp, fm = f @ b.inj_plus, f @ b.inj_minus
        out.add((fp.dual[0], fm.dual[0]))
    return sorted(out)


def bipoints(b: Biframe) -> Spectrum:
    """The bispectrum of ``b``."""
    return spectrum_from_pairs(b.plus, b.minus, bipoint_pairs(b))


def bpt_map(f: BiframeMap, source_spectrum: Spectrum | None = None, target_spectrum: Spectrum | None = None) -> BispaceMap:
    """``bpt(f) : bpt(target) -> bpt(source)``, ``(g+, g-) -> (g+ o f+, g- o f-)``."""
    src = source_spectrum or bipoints(f.source)
    tgt = target_spectrum or bipoints(f.target)
    index = {pair: k for k, pair in enumerate(src.pairs)}
    mapping = tuple(index[(f.plus.dual[p], f.minus.dual[q])] for p, q in tgt.pairs)
    return BispaceMap(tgt.bispace, src.bispace, mapping)


# ---------------------------------------------------------------------------
# presentations and finitary structure


@dataclass(frozen=True)
class Presentation:
    """A biframe presented by generators ``L+``, ``L-`` and a relation.

    ``plus_quotient``/``minus_quotient`` are the (possibly non-injective) maps
    from the generating frames to the components; they are identities unless
    the relation collapses part of a component and quotients were allowed.
    """

    biframe: Biframe
    congruence: Congruence
    coproduct: Coproduct
    main_quotient: FrameMap
    plus_quotient: FrameMap
    minus_quotient: FrameMap


def present(
    plus: Frame,
    minus: Frame,
    relation: Iterable[tuple[int, int]],
    *,
    allow_component_quotients: bool = False,
) -> Presentation:
    cp = coproduct(plus, minus)
    congruence = congruence_closure(cp.frame, relation)
    q = quotient(cp.frame, congruence)
    inj_plus, inj_minus = q.map @ cp.inj_left, q.map @ cp.inj_right
    plus_q, minus_q = FrameMap.identity(plus), FrameMap.identity(minus)
    if not (inj_plus.is_injective() and inj_minus.is_injective()):
        if not allow_component_quotients:
            raise InjectionCollapsed("the relation identifies distinct elements of a component")
        plus_q, inj_plus = _factor_injection(inj_plus)
        minus_q, inj_minus = _factor_injection(inj_minus)
    b = Biframe(plus_q.target, minus_q.target, q.frame, inj_plus, inj_minus)
    return Presentation(b, congruence, cp, q.map, plus_q, minus_q)


def _factor_injection(f: FrameMap) -> tuple[FrameMap, FrameMap]:
    """Split ``f`` as (quotient by its kernel) then (injection)."""
    q = quotient(f.source, f.kernel())
    keep = list(iter_bits(f.kernel().kept))
    position = {k: i for i, k in enumerate(keep)}
    return q.map, FrameMap(q.frame, f.target, tuple(position[s] for s in f.dual))


def presented_biframe(plus: Frame, minus: Frame, relation: Iterable[tuple[int, int]]) -> Biframe:
    """``(L+, L-, (L+ (+) L-) / <R>)``; the relation is read as inequalities ``x <= y``."""
    return present(plus, minus, relation).biframe


def finitary_elements(b: Biframe) -> frozenset[int]:
    """Finite joins of ``e+(a) & e-(b)``."""
    gens = {b.generator(x, y) for x in b.plus.elements for y in b.minus.elements}
    out = {0}
    for g in sorted(gens):
        if g in out:
            continue
        out |= {r | g for r in out}
    return frozenset(out)


def interior_from(frame: Frame, allowed: frozenset[int], c: Congruence) -> Congruence:
    """The congruence generated by the pairs of ``c`` between elements of ``allowed``.

    Within one class, the pairs ``(x, y)`` together kill the join-irreducibles in
    ``x`` but not in ``y``; over the whole class that is ``OR - AND``.
    """
    groups: dict[int, list[int]] = {}
    for x in allowed:
        groups.setdefault(x & c.kept, []).append(x)
    killed = 0
    for members in groups.values():
        if len(members) > 1:
            killed |= frame.join_all(members) & ~frame.meet_all(members)
    return Congruence(frame, frame.top & ~killed)


def finitary_interior(b: Biframe, c: Congruence) -> Congruence:
    """``fin(C)`` for a congruence on ``L+ (+) L-``."""
    if c.frame != b.coproduct.frame:
        raise InvalidInput("the finitary interior is taken on the coproduct of the components")
    return interior_from(c.frame, finitary_elements(coproduct_biframe(b.plus, b.minus)), c)


def finitary_interior_on_main(b: Biframe, c: Congruence) -> Congruence:
    """The finitary interior of a congruence on the main component."""
    if c.frame != b.main:
        raise InvalidInput("congruence does not live on the main component")
    return interior_from(b.main, finitary_elements(b), c)


@dataclass(frozen=True)
class FinCoreflection:
    """``fin(L) = (L+, L-, (L+ (+) L-) / fin(C_L))`` with the counit ``fin(L) -> L``."""

    biframe: Biframe
    counit: BiframeMap


def fin_coreflect(b: Biframe) -> FinCoreflection:
    fin_c = finitary_interior(b, b.canonical_congruence)
    p = present(b.plus, b.minus, _pairs_generating(fin_c))
    fb = p.biframe
    counit = biframe_map(fb, b, FrameMap.identity(b.plus), FrameMap.identity(b.minus))
    return FinCoreflection(fb, counit)


def _pairs_generating(c: Congruence) -> list[tuple[int, int]]:
    """A small relation generating ``c``: ``(down j, down j - j)`` for each killed ``j``."""
    frame = c.frame
    return [(frame.principal(j), frame.principal(j) & ~(1 << j)) for j in iter_bits(c.killed)]


def fin_unit(b: Biframe) -> BiframeMap:
    """For a finitary ``b``, the unit ``b -> fin(b)`` (identity on both components)."""
    fb = fin_coreflect(b).biframe
    return biframe_map(b, fb, FrameMap.identity(b.plus), FrameMap.identity(b.minus))


def is_finitary(b: Biframe) -> bool:
    return b.is_finitary()


# ---------------------------------------------------------------------------
# biquotients


@dataclass(frozen=True)
class Biquotient:
    biframe: Biframe
    map: BiframeMap
    congruence: Congruence
    finitary: bool


def biquotient(b: Biframe, relation: Iterable[tuple[int, int]] | Congruence) -> Biquotient:
    """``(L+/C+, L-/C-, L/C)`` for the congruence ``C`` generated on ``L``."""
    if isinstance(relation, Congruence):
        c = relation
    else:
        c = congruence_closure(b.main, relation)
    q = quotient(b.main, c)
    plus_q, inj_plus = _factor_injection(q.map @ b.inj_plus)
    minus_q, inj_minus = _factor_injection(q.map @ b.inj_minus)
    target = Biframe(plus_q.target, minus_q.target, q.frame, inj_plus, inj_minus)
    bmap = BiframeMap(b, target, plus_q, minus_q, q.map)
    finitary = finitary_interior_on_main(b, c) == c
    return Biquotient(target, bmap, c, finitary)


def main_to_coproduct_congruence(b: Biframe, c: Congruence) -> Congruence:
    """The congruence on ``L+ (+) L-`` containing ``C_L`` that corresponds to ``c`` on ``L``."""
    cp = b.coproduct
    kept = 0
    for j in iter_bits(c.kept):
        p, q = b.point_pairs[j]
        kept |= 1 << cp.pair_index(p, q)
    return Congruence(cp.frame, kept)


def coproduct_to_main_congruence(b: Biframe, d: Congruence) -> Congruence:
    """Inverse of :func:`main_to_coproduct_congruence` for ``d`` containing ``C_L``."""
    cp = b.coproduct
    kept = 0
    for j, (p, q) in enumerate(b.point_pairs):
        if d.kept >> cp.pair_index(p, q) & 1:
            kept |= 1 << j
    return Congruence(b.main, kept)


@dataclass(frozen=True)
class BiquotientLattice:
    """Finitary congruences on ``L+ (+) L-`` containing ``C_L``.

    ``frame`` orders them by inclusion (elements are the killed sets of the
    coproduct minus those of ``C_L``); the biquotients ``S(L)`` carry the reverse order
    (:meth:`s_leq`).  ``to_assembly`` sends each one to the corresponding
    congruence on ``L``.
    """

    biframe: Biframe
    congruences: tuple[Congruence, ...]
    frame: Frame

    def s_leq(self, i: int, j: int) -> bool:
        """``L/C_i <= L/C_j`` in ``S(L)``, i.e. ``C_j`` is contained in ``C_i``."""
        return self.congruences[j] <= self.congruences[i]

    def to_assembly(self, i: int) -> Congruence:
        return coproduct_to_main_congruence(self.biframe, self.congruences[i])

    def __len__(self) -> int:
        return len(self.congruences)


def biquotient_lattice(b: Biframe) -> BiquotientLattice:
    from . import caps

    base = b.canonical_congruence
    cp = b.coproduct.frame
    k = list(iter_bits(base.kept))
    caps.check("biquotient enumeration (points)", len(k), caps.current().join_irreducibles)
    allowed = finitary_elements(coproduct_biframe(b.plus, b.minus))
    found = []
    for subset in range(1 << len(k)):
        kept = sum(1 << k[i] for i in range(len(k)) if subset >> i & 1)
        d = Congruence(cp, kept)
        if interior_from(cp, allowed, d) == d:
            found.append(d)
    found.sort(key=lambda c: (bin(c.killed).count("1"), c.killed))
    frame = set_lattice_frame((d.killed & base.kept for d in found), base.kept, name="fin-congruences")
    return BiquotientLattice(b, tuple(found), frame)


# ---------------------------------------------------------------------------
# spatial reflection


def spatial_interior(b: Biframe, c: Congruence) -> Congruence:
    """``sp(C)``: the kernel of ``L -> L/C -> Omega(pt(L/C))``."""
    q = quotient(b.main, c)
    kept = 0
    for f in points(q.frame):
        kept |= 1 << (f @ q.map).dual[0]
    return Congruence(b.main, kept)


def bisp_interior(b: Biframe, c: Congruence) -> Congruence:
    """``fin(sp(C))`` for a congruence on the main component."""
    return finitary_interior_on_main(b, spatial_interior(b, c))


@dataclass(frozen=True)
class Spatialization:
    spectrum: Spectrum
    target: Biframe
    phi: BiframeMap
    is_bispatial: bool


def spatialization(b: Biframe) -> Spatialization:
    """``phi : L -> bOmega_fin(bpt(L))``, ``a+ -> {f : f+(a+) = 1}``."""
    from .bispace import b_omega_fin

    spec = bipoints(b)
    target = b_omega_fin(spec.bispace)
    plus = FrameMap.from_function(b.plus, target.plus, lambda a: target.plus.element(spec.phi_plus(a)))
    minus = FrameMap.from_function(b.minus, target.minus, lambda a: target.minus.element(spec.phi_minus(a)))
    phi = biframe_map(b, target, plus, minus)
    return Spatialization(spec, target, phi, phi.is_isomorphism())
