"""Exhaustive verification over small instances.

A :class:`Theorem` is a named predicate over one instance family (bispaces,
biframes, d-frames, frames or biframe maps).  :func:`verify` runs a
:class:`TheoremSuite` and returns a :class:`Report`; failures carry a
serialisable counterexample, shrunk by deleting points and opens while the
failure persists.  Claims that cannot be falsified on finite instances are
registered as documented entries so the report states its coverage honestly.

All functors a check needs are looked up on a :class:`Toolkit`, which tests
replace with deliberately broken versions to make sure the suite notices.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from itertools import permutations, product
from typing import Any, Callable, Iterator

from . import caps
from .assembly import (
    alpha,
    alpha_identities,
    alpha_naturality,
    assembly_free_presentation,
    assembly_map,
    bi_td_conditions,
    biframe_assembly,
    bisob_closure,
    bisober_subsets,
    bisp_table,
    bisubspace_conditions,
    bpt_of_quotient,
    canonical_form_subsets,
    filter_completion,
    final_conditions,
    finitary_assembly,
    skula_patch_closed,
)
from .biframe import (
    Biframe,
    BiframeMap,
    biframe_map,
    biquotient_lattice,
    bipoint_pairs,
    bipoint_pairs_by_factoring,
    bipoint_pairs_exhaustive,
    bipoints,
    bpt_map,
    enumerate_biframe_maps,
    fin_coreflect,
    fin_unit,
    finitary_elements,
    finitary_interior,
    interior_from,
    coproduct_biframe,
    spatialization,
)
from .bispace import (
    b_omega,
    b_omega_fin,
    d_omega,
    opens_map,
    sobriety,
    spectrum,
    unit_map,
)
from .dframe import DFrame, delta_functor, dpoint_pairs, gamma_functor, is_dframe_map, violations
from .errors import BifrmError, SizeCapExceeded
from .frame import (
    Congruence,
    Frame,
    FrameMap,
    congruence_closure,
    congruence_closure_fixpoint,
    frame_from_lattice,
    quotient,
)
from .poset import enumerate_lattices, iter_bits, popcount
from .spaces import Bispace, enumerate_topologies, is_bi_td, separation

__all__ = [
    "DOCUMENTED",
    "Instance",
    "Report",
    "THEOREMS",
    "Theorem",
    "TheoremSuite",
    "Toolkit",
    "corrupted_toolkit",
    "default_suite",
    "enumerate_bispaces",
    "instances",
    "shrink",
    "verify",
]


# ---------------------------------------------------------------------------
# bispace enumeration


def _move(u: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i in iter_bits(u):
        out |= 1 << perm[i]
    return out


def _bispaces_on(n: int) -> list[Bispace]:
    """One bispace per bihomeomorphism class on ``n`` points.

    Each positive topology is replaced by the least member of its orbit; the
    negative topology is then minimised over the automorphisms of that
    representative, which makes the pair a complete invariant.
    """
    tops = [tuple(sorted(t)) for t in enumerate_topologies(n)]
    perms = list(permutations(range(n)))
    reps = sorted({min(tuple(sorted(_move(u, p) for u in t)) for p in perms) for t in tops})
    out = []
    for rep in reps:
        members = set(rep)
        autos = [p for p in perms if {_move(u, p) for u in rep} == members]
        keys = sorted({min(tuple(sorted(_move(u, p) for u in t)) for p in autos) for t in tops})
        out.extend(Bispace(n, rep, key, validate=False) for key in keys)
    return out


def enumerate_bispaces(max_points: int | None = None, cap_topologies: int | None = None) -> Iterator[Bispace]:
    """All non-empty bispaces with at most ``max_points`` points, up to bihomeomorphism.

    The order is deterministic: by number of points, then by the sorted
    positive and negative topologies of the canonical representative.
    """
    limits = caps.current()
    max_points = limits.max_points if max_points is None else max_points
    caps.check("bispace enumeration (points)", max_points, limits.enumerate_points)
    for n in range(1, max_points + 1):
        if cap_topologies is not None:
            count = len(enumerate_topologies(n))
            caps.check(f"topologies on {n} points", count, cap_topologies)
        yield from _bispaces_on(n)


def bispace_key(space: Bispace) -> str:
    return f"n={len(space)} +{sorted(space.tau_plus)} -{sorted(space.tau_minus)}"


# ---------------------------------------------------------------------------
# toolkit and instances


@dataclass(frozen=True)
class Toolkit:
    """The functors the checks use; replaceable for mutation testing."""

    delta_functor: Callable[[Biframe], DFrame] = delta_functor
    gamma_functor: Callable[[DFrame], Biframe] = gamma_functor
    b_omega_fin: Callable[[Bispace], Biframe] = b_omega_fin
    d_omega: Callable[[Bispace], DFrame] = d_omega


def corrupted_toolkit() -> Toolkit:
    """A toolkit whose ``Delta`` forgets the largest non-trivial consistent pair."""

    def broken_delta(b: Biframe) -> DFrame:
        d = delta_functor(b)
        nontrivial = sorted(p for p in d.con if p != (0, 0))
        if not nontrivial:
            return d
        return replace(d, con=d.con - {nontrivial[-1]})

    return Toolkit(delta_functor=broken_delta)


@dataclass(frozen=True)
class Instance:
    """One object a check runs on.

    ``source`` names the construction from ``origin`` (a bispace) when there
    is one; it is what shrinking re-runs on smaller bispaces.
    """

    family: str
    key: str
    value: Any
    origin: Bispace | None = None
    source: str | None = None


SOURCES: dict[str, tuple[str, Callable[[Bispace, Toolkit], Any]]] = {
    "bispace": ("bispace", lambda x, t: x),
    "bOmega_fin": ("biframe", lambda x, t: t.b_omega_fin(x)),
    "bOmega": ("biframe", lambda x, t: b_omega(x)),
    "dOmega": ("dframe", lambda x, t: t.d_omega(x)),
    "Delta(bOmega_fin)": ("dframe", lambda x, t: t.delta_functor(t.b_omega_fin(x))),
}


@dataclass(frozen=True)
class TheoremSuite:
    """Which theorems to run and on which instance family.

    ``max_points`` bounds enumerated bispaces; biframes and d-frames are built
    from those with at most ``biframe_points`` points; frames are the
    distributive lattices with at most ``max_frame_size`` elements; biframe
    maps are enumerated between biframes from bispaces with at most
    ``map_points`` points.  ``sample`` keeps a seeded random subset of each
    family.
    """

    theorems: tuple["Theorem", ...]
    max_points: int = 2
    biframe_points: int | None = None
    max_frame_size: int = 6
    map_points: int = 2
    sample: int | None = None
    seed: int = 0
    toolkit: Toolkit = field(default_factory=Toolkit)

    def describe(self) -> dict:
        return {
            "max_points": self.max_points,
            "biframe_points": self.effective_biframe_points,
            "max_frame_size": self.max_frame_size,
            "map_points": self.map_points,
            "sample": self.sample,
            "seed": self.seed,
            "theorems": sorted(t.name for t in self.theorems),
        }

    @property
    def effective_biframe_points(self) -> int:
        return self.max_points if self.biframe_points is None else min(self.biframe_points, self.max_points)


def instances(suite: TheoremSuite, family: str) -> list[Instance]:
    """The deterministic (optionally sampled) instance list of one family."""
    tk = suite.toolkit
    out: list[Instance] = []
    spaces = list(enumerate_bispaces(suite.max_points)) if suite.max_points > 0 else []
    small = [x for x in spaces if len(x) <= suite.effective_biframe_points]
    if family == "bispace":
        out = [Instance("bispace", bispace_key(x), x, x, "bispace") for x in spaces]
    elif family in ("biframe", "dframe"):
        for x in small:
            for source, (fam, build) in SOURCES.items():
                if fam == family:
                    out.append(Instance(family, f"{source}({bispace_key(x)})", build(x, tk), x, source))
    elif family == "frame":
        for lattice in enumerate_lattices(suite.max_frame_size, distributive_only=True) if suite.max_frame_size else []:
            frame = frame_from_lattice(lattice)
            out.append(Instance("frame", f"lattice {len(lattice)} {frame.poset.down}", frame))
    elif family == "biframe-map":
        bases = [x for x in spaces if len(x) <= min(suite.map_points, suite.max_points)]
        biframes = [(bispace_key(x), tk.b_omega_fin(x)) for x in bases]
        for (ka, a), (kb, b) in product(biframes, repeat=2):
            for k, f in enumerate(enumerate_biframe_maps(a, b)):
                out.append(Instance("biframe-map", f"{ka} -> {kb} #{k}", f))
    else:
        raise ValueError(f"unknown family {family!r}")
    if suite.sample is not None and len(out) > suite.sample:
        rng = random.Random(f"{suite.seed}:{family}")
        keep = sorted(rng.sample(range(len(out)), suite.sample))
        out = [out[i] for i in keep]
    return out


# ---------------------------------------------------------------------------
# theorems


class _Skip:
    def __repr__(self) -> str:
        return "SKIP"


SKIP = _Skip()


@dataclass(frozen=True)
class Observed:
    """A passing outcome that also records a value to be tallied in the report."""

    value: str


Outcome = Any  # None (pass), str (failure message), SKIP, or Observed


@dataclass(frozen=True)
class Theorem:
    name: str
    anchor: str
    family: str
    check: Callable[[Any, Toolkit], Outcome]
    applies: Callable[[Instance], bool] = lambda inst: True


@dataclass(frozen=True)
class Documented:
    """A claim listed in reports but not checked, with the reason."""

    name: str
    anchor: str
    reason: str


def _is_identity(f: FrameMap) -> bool:
    return f.source.poset == f.target.poset and f.dual == tuple(range(len(f.target.poset)))


def _is_identity_biframe_map(f: BiframeMap) -> bool:
    return _is_identity(f.plus) and _is_identity(f.minus) and _is_identity(f.main)


def _all_equal(values: dict[str, bool]) -> str | None:
    if len(set(values.values())) > 1:
        return "conditions disagree: " + ", ".join(f"{k}={v}" for k, v in values.items())
    return None


# -- bispace checks ---------------------------------------------------------


def check_sobriety_chain(x: Bispace, tk: Toolkit) -> Outcome:
    s = sobriety(x)
    if s["dSober"] and not s["biSober"]:
        return "d-sober but not bisober"
    if s["biSober"] and not s["patchSober"]:
        return "bisober but not patch-sober"
    return None


def check_bisober_t0(x: Bispace, tk: Toolkit) -> Outcome:
    bisober = sobriety(x)["biSober"]
    t0 = separation(x, "pairwiseT0")
    if bisober and not t0:
        return "bisober but not pairwise T0"
    if bisober != t0 or t0 != is_bi_td(x):
        return f"finite collapse fails: bisober={bisober} pairwiseT0={t0} biTD={is_bi_td(x)}"
    return None


def check_hausdorff_bisober(x: Bispace, tk: Toolkit) -> Outcome:
    if not separation(x, "pairwiseT2"):
        return Observed("not pairwise Hausdorff")
    return None if sobriety(x)["biSober"] else "pairwise Hausdorff but not bisober"


def check_bi_td_conditions(x: Bispace, tk: Toolkit) -> Outcome:
    return _all_equal(bi_td_conditions(x))


def check_spectra_chain(x: Bispace, tk: Toolkit) -> Outcome:
    units = {unit_map(x, "fin").mapping}
    neighbourhoods = set(spectrum(x, "fin").pairs[k] for k in unit_map(x, "fin").mapping)
    bi = set(bipoint_pairs(b_omega(x)))
    fin = set(bipoint_pairs(tk.b_omega_fin(x)))
    d = set(dpoint_pairs(tk.d_omega(x)))
    if not neighbourhoods <= bi:
        return "a point of X is missing from bpt(bOmega X)"
    if not bi <= fin:
        return "bpt(bOmega X) is not contained in bpt(bOmega_fin X)"
    if not fin <= d:
        return "bpt(bOmega_fin X) is not contained in dpt(dOmega X)"
    del units
    return None


def check_fin_of_b_omega(x: Bispace, tk: Toolkit) -> Outcome:
    fin = fin_coreflect(b_omega(x)).biframe
    target = tk.b_omega_fin(x)
    if fin.canonical_congruence != target.canonical_congruence:
        return "fin(bOmega X) and bOmega_fin X are presented by different congruences"
    return None


def check_delta_of_b_omega(x: Bispace, tk: Toolkit) -> Outcome:
    d, expected = tk.delta_functor(b_omega(x)), tk.d_omega(x)
    if (d.con, d.tot) != (expected.con, expected.tot):
        return "Delta(bOmega X) differs from dOmega X"
    d2 = tk.delta_functor(fin_coreflect(b_omega(x)).biframe)
    if (d2.con, d2.tot) != (expected.con, expected.tot):
        return "Delta(fin(bOmega X)) differs from dOmega X"
    return None


def check_bpt_gamma(x: Bispace, tk: Toolkit) -> Outcome:
    d = tk.d_omega(x)
    if set(bipoint_pairs(tk.gamma_functor(d))) != set(dpoint_pairs(d)):
        return "bpt(Gamma D) differs from dpt(D)"
    return None


def check_omega_fin_triangles(x: Bispace, tk: Toolkit) -> Outcome:
    """Both triangle identities of the finitary open-set functor and bpt."""
    lb = tk.b_omega_fin(x)
    psi = unit_map(x, "fin")
    sp = spatialization(lb)
    plus, minus = opens_map(psi)
    back = biframe_map(sp.target, lb, plus, minus)
    if not _is_identity_biframe_map(back @ sp.phi):
        return "bOmega_fin(psi) o phi is not the identity"
    for b in (lb, b_omega(x)):
        spec = bipoints(b)
        spb = spatialization(b)
        psi_y = unit_map(spec.bispace, "fin")
        bpt_phi = bpt_map(spb.phi, spec, bipoints(spb.target))
        if any(bpt_phi(psi_y(k)) != k for k in range(len(spec.bispace))):
            return "bpt(phi) o psi is not the identity"
    return None


def check_fin_triangles(x: Bispace, tk: Toolkit) -> Outcome:
    """Triangle identities of the inclusion of finitary biframes and ``fin``."""
    for b in (b_omega(x), tk.b_omega_fin(x)):
        core = fin_coreflect(b)
        f = core.biframe
        f_core = fin_coreflect(f)
        eta = fin_unit(f)
        if not _is_identity_biframe_map(f_core.counit @ eta):
            return "counit o unit is not the identity on a finitary biframe"
        fin_eps = biframe_map(f_core.biframe, f, core.counit.plus, core.counit.minus)
        if not _is_identity_biframe_map(fin_eps @ eta):
            return "fin(counit) o unit is not the identity"
    return None


def check_gamma_delta_triangles(x: Bispace, tk: Toolkit) -> Outcome:
    """Triangle identities of ``Gamma -| Delta`` (all component maps are identities)."""
    d = tk.d_omega(x)
    gd = tk.gamma_functor(d)
    dgd = tk.delta_functor(gd)
    ip, im = FrameMap.identity(d.plus), FrameMap.identity(d.minus)
    if not is_dframe_map(d, dgd, ip, im):
        return "the unit D -> Delta Gamma D is not a d-frame map"
    gdgd = tk.gamma_functor(dgd)
    g_eta = biframe_map(gd, gdgd, ip, im)
    eps = biframe_map(gdgd, gd, ip, im)
    if not _is_identity_biframe_map(eps @ g_eta):
        return "counit o Gamma(unit) is not the identity"
    lb = tk.b_omega_fin(x)
    dl = tk.delta_functor(lb)
    gdl = tk.gamma_functor(dl)
    jp, jm = FrameMap.identity(lb.plus), FrameMap.identity(lb.minus)
    eps_l = biframe_map(gdl, lb, jp, jm)
    dgdl = tk.delta_functor(gdl)
    if not is_dframe_map(dl, dgdl, jp, jm):
        return "the unit Delta L -> Delta Gamma Delta L is not a d-frame map"
    if not is_dframe_map(dgdl, dl, eps_l.plus, eps_l.minus):
        return "Delta(counit) is not a d-frame map"
    return None


# -- biframe checks ---------------------------------------------------------


def check_bipoint_routes(b: Biframe, tk: Toolkit) -> Outcome:
    a, c, e = bipoint_pairs(b), bipoint_pairs_exhaustive(b), bipoint_pairs_by_factoring(b)
    if not (sorted(a) == sorted(c) == sorted(e)):
        return f"bipoint routes disagree: {a} / {c} / {e}"
    return None


def check_canonical_presentation(b: Biframe, tk: Toolkit) -> Outcome:
    iso = b.canonical_isomorphism
    return None if iso.is_isomorphism() else "canonical presentation fails"


def check_fin_collapse(b: Biframe, tk: Toolkit) -> Outcome:
    return None if b.is_finitary() else "fin(C_L) differs from C_L"


def check_fin_interior(b: Biframe, tk: Toolkit) -> Outcome:
    cp = b.coproduct.frame
    n = len(cp.poset)
    if n > caps.current().join_irreducibles:
        return SKIP
    allowed = finitary_elements(coproduct_biframe(b.plus, b.minus))
    table = {}
    for killed in range(1 << n):
        table[killed] = interior_from(cp, allowed, Congruence(cp, cp.top & ~killed)).killed
    return _interior_laws(table, joins=False)


def _interior_laws(table: dict[int, int], *, joins: bool) -> str | None:
    for k, v in table.items():
        if v & ~k:
            return f"not deflationary at {k:#b}"
        if table.get(v) != v:
            return f"not idempotent at {k:#b}"
        for j in iter_bits(~k & max(table)):
            bigger = k | 1 << j
            if bigger in table and table[k] & ~table[bigger]:
                return f"not monotone at {k:#b}"
    if joins:
        keys = sorted(table)
        for i, k in enumerate(keys):
            for m in keys[i:]:
                if (k | m) in table and table[k | m] != table[k] | table[m]:
                    return f"finite joins not preserved at {k:#b}, {m:#b}"
    return None


def check_finitary_assembly(b: Biframe, tk: Toolkit) -> Outcome:
    fa = finitary_assembly(b)
    return None if fa.is_whole_assembly else Observed("A_fin smaller than A")


def check_anti_isomorphism(b: Biframe, tk: Toolkit) -> Outcome:
    fa = finitary_assembly(b, check_all_congruences=False)
    s = biquotient_lattice(b)
    images = [s.to_assembly(i) for i in range(len(s))]
    killed = [c.killed for c in images]
    if set(killed) != fa.family or len(set(killed)) != len(killed):
        return "biquotients do not correspond one-to-one with A_fin"
    for i, j in product(range(len(s)), repeat=2):
        if s.s_leq(i, j) != (images[j] <= images[i]):
            return "the correspondence with A_fin is not order-reversing"
    return None


def check_assembly(b: Biframe, tk: Toolkit) -> Outcome:
    a = biframe_assembly(b)
    if not a.biframe.is_finitary():
        return "the assembly is not finitary"
    return None


def check_free_presentation(b: Biframe, tk: Toolkit) -> Outcome:
    fp = assembly_free_presentation(b)
    if not fp.complements_forced:
        return "complementation relations do not produce complements"
    return None


def check_alpha(b: Biframe, tk: Toolkit) -> Outcome:
    amap = alpha(b)
    if not amap.is_bihomeomorphism():
        return "alpha is not a bihomeomorphism from the Skula bispace"
    bad = [k for k, v in alpha_identities(b).items() if not v]
    return f"alpha image identities fail: {bad}" if bad else None


def check_bisp_laws(b: Biframe, tk: Toolkit) -> Outcome:
    t = bisp_table(b)
    if t.table[max(t.table)] != max(t.table):
        return "bisp does not fix the total congruence"
    return _interior_laws(t.table, joins=True)


def check_bisob_laws(b: Biframe, tk: Toolkit) -> Outcome:
    space = bipoints(b).bispace
    sober = bisober_subsets(space)
    full = space.full
    closure = {m: bisob_closure(space, m, sober) for m in range(full + 1)}
    for m, c in closure.items():
        if m & ~c:
            return "bisob is not extensive"
        if closure[c] != c:
            return "bisob is not idempotent"
        for j in iter_bits(full & ~m):
            if c & ~closure[m | 1 << j]:
                return "bisob is not monotone"
    fix = {m for m, c in closure.items() if m == c}
    if fix != set(sober):
        return "fixpoints of bisob are not the bisober subsets"
    for u, v in product(fix, repeat=2):
        if (u | v) not in fix or (u & v) not in fix:
            return "bisober subsets are not a subcoframe"
    if 0 not in fix or full not in fix:
        return "bisober subsets miss the empty or the whole set"
    return None


def check_bpt_coframe_iso(b: Biframe, tk: Toolkit) -> Outcome:
    spec = bipoints(b)
    sober = bisober_subsets(spec.bispace)
    t = bisp_table(b)
    top = b.main.top
    image = {k: bpt_of_quotient(b, Congruence(b.main, top & ~k), spec) for k in t.fixpoints}
    if set(image.values()) != set(sober) or len(set(image.values())) != len(image):
        return "bpt is not a bijection from bispatial biquotients to bisober subsets"
    for k, m in product(t.fixpoints, repeat=2):
        if (k & ~m == 0) != (image[m] & ~image[k] == 0):
            return "bpt is not an order anti-isomorphism on congruences"
    return None if len(sober) == 1 << len(spec.bispace) else Observed("not totally spatial")


def check_skula_bisober(b: Biframe, tk: Toolkit) -> Outcome:
    space = bipoints(b).bispace
    sober = bisober_subsets(space)
    if sober != skula_patch_closed(space):
        return "bisober subsets differ from the Skula patch-closed sets"
    if sober != canonical_form_subsets(b):
        return "bisober subsets differ from the intersections of basic subsets"
    a = biframe_assembly(b)
    amap = alpha(b, a)
    closed_a = {bipoints(a.biframe).bispace.full & ~u for u in bipoints(a.biframe).bispace.patch}
    if {amap.image(m) for m in sober} != closed_a:
        return "alpha does not carry bisober subsets to patch-closed sets of bpt(A L)"
    return None


def check_biquotient_spectra(b: Biframe, tk: Toolkit) -> Outcome:
    spec = bipoints(b)
    full = spec.bispace.full
    main, top = b.main, b.main.top

    def pts(killed: int) -> int:
        return bpt_of_quotient(b, Congruence(main, top & ~killed), spec)

    for a in b.plus.elements:
        ea = b.inj_plus(a)
        if pts(top & ~ea) != spec.phi_plus(a):
            return "points of L/Delta(a+) are not phi+(a+)"
        if pts(ea) != full & ~spec.phi_plus(a):
            return "points of L/nabla(a+) are not the complement of phi+(a+)"
    pieces = []
    for a1, b1 in product(b.plus.elements, repeat=2):
        for a2, b2 in product(b.minus.elements, repeat=2):
            killed = b.generator(a1, a2) & ~b.cogenerator(b1, b2)
            expected = (
                (full & ~spec.phi_plus(a1))
                | (full & ~spec.phi_minus(a2))
                | spec.phi_plus(b1)
                | spec.phi_minus(b2)
            )
            if pts(killed) != expected:
                return "points of a basic biquotient are not the basic subset"
            pieces.append((killed, expected))
    distinct = sorted(set(pieces))[:24]
    for (k1, _), (k2, _) in product(distinct, repeat=2):
        if pts(k1 | k2) != pts(k1) & pts(k2):
            return "points of a join of congruences are not the intersection"
    for killed in finitary_assembly(b, check_all_congruences=False).family:
        expected = full
        for piece, subset in pieces:
            if piece & ~killed == 0:
                expected &= subset
        if pts(killed) != expected:
            return "points of a biquotient are not the intersection of basic subsets below it"
    return None


def check_final_theorem(b: Biframe, tk: Toolkit) -> Outcome:
    return _all_equal(final_conditions(b))


def check_bisubspace_conditions(b: Biframe, tk: Toolkit) -> Outcome:
    return _all_equal(bisubspace_conditions(bipoints(b).bispace))


def check_bispatial(b: Biframe, tk: Toolkit) -> Outcome:
    return None if spatialization(b).is_bispatial else "not bispatial"


# -- d-frame checks ---------------------------------------------------------


def check_dframe_axioms(d: DFrame, tk: Toolkit) -> Outcome:
    problems = violations(d)
    return problems[0] if problems else None


# -- frame checks -----------------------------------------------------------


def check_quotient_witness(frame: Frame, tk: Toolkit) -> Outcome:
    """``(L/R)/S = L/(R u w(S))`` for single pairs ``R``, ``S`` and two witness choices."""
    elements = frame.elements
    for r in product(elements, repeat=2):
        c = congruence_closure(frame, [r])
        q = quotient(frame, c)
        classes: dict[int, list[int]] = {}
        for x in elements:
            classes.setdefault(q.map(x), []).append(x)
        for s in product(q.frame.elements, repeat=2):
            d = congruence_closure(q.frame, [s])
            composite = (quotient(q.frame, d).map @ q.map).kernel()
            for pick in (frame.join_all, frame.meet_all):
                w = (pick(classes[s[0]]), pick(classes[s[1]]))
                if congruence_closure(frame, [r, w]) != composite:
                    return f"witness lemma fails for R={r}, S={s}"
    return None


def check_closure_oracle(frame: Frame, tk: Toolkit) -> Outcome:
    pairs = list(product(frame.elements, repeat=2))
    relations = [[p] for p in pairs] + [[p, q] for p, q in product(pairs[:: max(1, len(pairs) // 12)], repeat=2)]
    for rel in relations:
        if congruence_closure(frame, rel) != congruence_closure_fixpoint(frame, rel):
            return f"congruence closure routes disagree on {rel}"
    return None


def check_filter_completion(frame: Frame, tk: Toolkit) -> Outcome:
    elements = frame.elements
    brute = []
    for bits in range(1, 1 << len(elements)):
        s = {elements[i] for i in range(len(elements)) if bits >> i & 1}
        if all(y in s for x in s for y in elements if frame.leq(x, y)) and all(frame.meet(x, y) in s for x in s for y in s):
            brute.append(frozenset(s))
    f = filter_completion(frame)
    labels = {x: f.label(x) for x in f.elements}
    if sorted(map(sorted, labels.values())) != sorted(map(sorted, brute)):
        return "filters differ from the brute-force enumeration"
    for x, y in product(f.elements, repeat=2):
        if f.leq(x, y) != (labels[x] <= labels[y]):
            return "filters are not ordered by inclusion"
    return None


# -- biframe-map checks -----------------------------------------------------


def check_alpha_natural(f: BiframeMap, tk: Toolkit) -> Outcome:
    assembly_map(f)
    return None if alpha_naturality(f) else "alpha is not natural"


THEOREMS: tuple[Theorem, ...] = (
    Theorem("sobriety implications", "d-sober implies bisober implies patch-sober", "bispace", check_sobriety_chain),
    Theorem("bisober finite collapse", "bisober implies pairwise T0; on finite bispaces bisober, pairwise T0 and bi-T_D coincide", "bispace", check_bisober_t0),
    Theorem("pairwise Hausdorff is bisober", "pairwise Hausdorff bispaces are bisober", "bispace", check_hausdorff_bisober),
    Theorem("bi-T_D characterisations", "bi-T_D, Skula patch discrete, distinct bisubspaces give distinct biquotients, no point is redundant", "bispace", check_bi_td_conditions),
    Theorem("spectra chain", "X in bpt(bOmega X) in bpt(bOmega_fin X) in dpt(dOmega X)", "bispace", check_spectra_chain),
    Theorem("fin of bOmega", "bOmega_fin is fin after bOmega", "bispace", check_fin_of_b_omega),
    Theorem("Delta of bOmega", "dOmega is Delta after (fin after) bOmega", "bispace", check_delta_of_b_omega),
    Theorem("bpt of Gamma", "bpt after Gamma is dpt", "bispace", check_bpt_gamma),
    Theorem("Omega_fin -| bpt triangles", "unit-counit triangles of the finitary duality", "bispace", check_omega_fin_triangles),
    Theorem("i -| fin triangles", "finitary biframes are coreflective", "bispace", check_fin_triangles),
    Theorem("Gamma -| Delta triangles", "unit-counit triangles between d-frames and finitary biframes", "bispace", check_gamma_delta_triangles),
    Theorem("bipoint routes", "four-condition bipoints are the points factoring through C_L", "biframe", check_bipoint_routes),
    Theorem("canonical presentation", "L is (L+ (+) L-)/C_L", "biframe", check_canonical_presentation),
    Theorem("fin fixes C_L", "every finite biframe is finitary", "biframe", check_fin_collapse),
    Theorem("fin is an interior operator", "finitary interior on congruences of the coproduct", "biframe", check_fin_interior),
    Theorem("A_fin descriptions", "generator descriptions of the finitary assembly and its canonical form agree", "biframe", check_finitary_assembly),
    Theorem("A_fin anti-isomorphic to S(L)", "finitary assembly versus the coframe of biquotients", "biframe", check_anti_isomorphism),
    Theorem("assembly is finitary", "the assembly of a finitary biframe is finitary and nabla embeds", "biframe", check_assembly),
    Theorem("assembly free presentation", "assembly presented over filter completions with complementation relations", "biframe", check_free_presentation),
    Theorem("alpha bihomeomorphism", "Sk(bpt L) is bpt(A L) via alpha", "biframe", check_alpha),
    Theorem("bisp interior operator", "bisp is an interior operator preserving finite joins", "biframe", check_bisp_laws),
    Theorem("bisob closure operator", "bisob is a closure operator whose fixpoints form a subcoframe", "biframe", check_bisob_laws),
    Theorem("bpt coframe isomorphism", "bpt from bispatial biquotients to bisober subsets is an isomorphism", "biframe", check_bpt_coframe_iso),
    Theorem("Skula bisober subspaces", "bisober bisubspaces are the Skula patch-closed sets", "biframe", check_skula_bisober),
    Theorem("biquotient spectra", "points of biquotients by nabla, Delta, basic and joined congruences", "biframe", check_biquotient_spectra),
    Theorem("bi-T_D final theorem", "bi-T_D spectrum, patch-discrete assembly spectrum, Boolean bisp, all bisubspaces bisober, bpt onto subsets", "biframe", check_final_theorem),
    Theorem("bisober bisubspace conditions", "all bisober, unions, complements, point deletions, bi-T_D", "biframe", check_bisubspace_conditions),
    Theorem("bispatiality", "bOmega_fin(X) and bOmega(X) are bispatial", "biframe", check_bispatial),
    Theorem("d-frame axioms", "dOmega(X) and Delta(L) satisfy the d-frame axioms", "dframe", check_dframe_axioms),
    Theorem("quotient witness lemma", "(L/R)/S = L/(R u w(S))", "frame", check_quotient_witness),
    Theorem("congruence closure oracle", "kill-set closure equals union-find closure", "frame", check_closure_oracle),
    Theorem("filter completion", "filters of a finite frame, ordered by inclusion", "frame", check_filter_completion),
    Theorem("alpha naturality", "alpha commutes with bpt(f) and bpt(A f)", "biframe-map", check_alpha_natural),
)

DOCUMENTED: tuple[Documented, ...] = (
    Documented(
        "infinite bisober counterexample",
        "(N, cofinite, indiscrete) is bisober but not pairwise T1",
        "not falsifiable at desk scale: the instance is infinite",
    ),
    Documented(
        "fin is the identity on finite biframes",
        "finitary coreflection",
        "theory collapse: every finite biframe is finitary, so fin = id and the coreflection is trivial on all instances",
    ),
    Documented(
        "spatial reflection is the identity on finite quotients",
        "sp(C) = C",
        "theory collapse: every finite frame is spatial, so bisp = fin = id on finite congruences",
    ),
    Documented(
        "pairwise Hausdorff beyond finite spaces",
        "pairwise Hausdorff bispaces are bisober",
        "not falsifiable at desk scale: only finite instances are checked",
    ),
    Documented(
        "totally spatial finitary biframes",
        "when bisob[P(bpt L)] is all of P(bpt L)",
        "open question: reported per instance as an observation, no characterisation claimed",
    ),
)


def default_suite(max_points: int = 2, **kwargs: Any) -> TheoremSuite:
    return TheoremSuite(THEOREMS, max_points=max_points, **kwargs)


# ---------------------------------------------------------------------------
# running


def _run(theorem: Theorem, inst: Instance, tk: Toolkit) -> tuple[str, str | None]:
    """``("pass"|"fail"|"skip", detail)``."""
    try:
        outcome = theorem.check(inst.value, tk)
    except SizeCapExceeded as exc:
        return "skip", f"cap: {exc}"
    except (AssertionError, BifrmError) as exc:
        return "fail", f"{type(exc).__name__}: {exc}"
    if outcome is None:
        return "pass", None
    if outcome is SKIP:
        return "skip", None
    if isinstance(outcome, Observed):
        return "pass", outcome.value
    return "fail", str(outcome)


def shrink(theorem: Theorem, inst: Instance, tk: Toolkit, max_steps: int = 50) -> Instance:
    """Delete points and opens of the originating bispace while the check keeps failing."""
    if inst.origin is None or inst.source is None:
        return inst
    _, build = SOURCES[inst.source]
    current = inst
    for _ in range(max_steps):
        for candidate in _smaller(current.origin):
            try:
                value = build(candidate, tk)
            except BifrmError:
                continue
            trial = Instance(inst.family, f"{inst.source}({bispace_key(candidate)})", value, candidate, inst.source)
            if _run(theorem, trial, tk)[0] == "fail":
                current = trial
                break
        else:
            return current
    return current


def _smaller(space: Bispace) -> Iterator[Bispace]:
    full = space.full
    if len(space) > 1:
        for i in range(len(space)):
            yield space.subspace(full & ~(1 << i))
    for which in ("plus", "minus"):
        tau = space.tau_plus if which == "plus" else space.tau_minus
        for u in sorted(tau):
            if u in (0, full):
                continue
            rest = [v for v in tau if v != u]
            other = space.tau_minus if which == "plus" else space.tau_plus
            candidate, _ = Bispace.generated(space.points, rest, other) if which == "plus" else Bispace.generated(space.points, other, rest)
            if candidate != space:
                yield candidate


@dataclass
class TheoremResult:
    name: str
    anchor: str
    family: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    observations: dict[str, int] = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def status(self) -> str:
        if self.failed:
            return "fail"
        if self.passed:
            return "pass"
        return "skipped"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "family": self.family,
            "status": self.status,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "observations": dict(sorted(self.observations.items())),
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    suite: dict
    results: list[TheoremResult]
    documented: tuple[Documented, ...]
    instance_counts: dict[str, int]
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(r.failed for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, *, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "ok": self.ok,
            "instances": dict(sorted(self.instance_counts.items())),
            "theorems": [r.to_json() for r in sorted(self.results, key=lambda r: r.name)],
            "documented": [
                {"name": d.name, "anchor": d.anchor, "status": "documented, not checked", "reason": d.reason}
                for d in sorted(self.documented, key=lambda d: d.name)
            ],
        }
        if include_timing:
            out["wall_time_seconds"] = round(self.wall_time, 3)
        return out

    def to_text(self) -> str:
        lines = []
        for r in sorted(self.results, key=lambda r: r.name):
            extra = f" observations={dict(sorted(r.observations.items()))}" if r.observations else ""
            lines.append(
                f"{r.status.upper():7} {r.name}: {r.passed} passed, {r.failed} failed, {r.skipped} skipped{extra}"
            )
            if r.counterexample:
                lines.append(f"        counterexample: {r.counterexample['instance']} -- {r.counterexample['message']}")
        for d in sorted(self.documented, key=lambda d: d.name):
            lines.append(f"NOTE    {d.name} [{d.anchor}]: documented, not checked ({d.reason})")
        lines.append("OK" if self.ok else "FAILURES")
        return "\n".join(lines)


def _serialise(inst: Instance) -> dict:
    from .io import biframe_to_json, bispace_to_json, dframe_to_json, frame_to_json

    out: dict[str, Any] = {"family": inst.family, "instance": inst.key}
    if inst.origin is not None:
        out["bispace"] = bispace_to_json(inst.origin)
        out["construction"] = inst.source
    elif inst.family == "frame":
        out["frame"] = frame_to_json(inst.value)
    elif inst.family == "biframe":
        out["biframe"] = biframe_to_json(inst.value)
    elif inst.family == "dframe":
        out["dframe"] = dframe_to_json(inst.value)
    elif inst.family == "biframe-map":
        out["source"] = biframe_to_json(inst.value.source)
        out["target"] = biframe_to_json(inst.value.target)
        out["plus_dual"] = list(inst.value.plus.dual)
        out["minus_dual"] = list(inst.value.minus.dual)
    return out


def verify(suite: TheoremSuite) -> Report:
    start = time.perf_counter()
    families = sorted({t.family for t in suite.theorems})
    pools = {fam: instances(suite, fam) for fam in families}
    results = []
    for theorem in suite.theorems:
        res = TheoremResult(theorem.name, theorem.anchor, theorem.family)
        for inst in pools[theorem.family]:
            if not theorem.applies(inst):
                res.skipped += 1
                continue
            status, detail = _run(theorem, inst, suite.toolkit)
            if status == "pass":
                res.passed += 1
                if detail:
                    res.observations[detail] = res.observations.get(detail, 0) + 1
            elif status == "skip":
                res.skipped += 1
            else:
                res.failed += 1
                if res.counterexample is None:
                    small = shrink(theorem, inst, suite.toolkit)
                    payload = _serialise(small)
                    payload["message"] = _run(theorem, small, suite.toolkit)[1] or detail
                    if small is not inst:
                        payload["shrunk_from"] = inst.key
                    res.counterexample = payload
        if not pools[theorem.family]:
            res.skipped = 0
        results.append(res)
    return Report(
        suite.describe(),
        results,
        DOCUMENTED,
        {fam: len(pool) for fam, pool in pools.items()},
        time.perf_counter() - start,
    )
