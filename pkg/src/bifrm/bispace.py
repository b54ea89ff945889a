"""Open-set functors on finite bispaces, their spectra, units and sobriety.

Three ways of turning a bispace ``X`` into algebra:

``bi``   ``bOmega(X) = (Omega+, Omega-, patch topology)``
``fin``  ``bOmega_fin(X)``: the coproduct of the two topologies modulo the
         inclusions ``U+ & U- <= V+ | V-`` that hold in ``X``
``d``    ``dOmega(X)``: the two topologies with disjoint and covering pairs

Each has a spectrum of pairs of points of ``Omega+`` and ``Omega-`` and a unit
``x -> (N+_x, N-_x)`` from ``X``; ``X`` is sober for that duality when the unit
is a bihomeomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .biframe import Biframe, Spectrum, bipoints, present
from .dframe import DFrame, dpoints
from .errors import InvalidInput
from .frame import Frame, FrameMap, set_lattice_frame
from .spaces import (
    SEPARATION_AXIOMS,
    Bispace,
    BispaceMap,
    bihomeomorphic,
    bihomeomorphism,
    is_bi_td,
    separation,
)

DUALITIES = ("bi", "fin", "d")

__all__ = [
    "Bispace",
    "BispaceMap",
    "DUALITIES",
    "SEPARATION_AXIOMS",
    "b_omega",
    "b_omega_fin",
    "bihomeomorphic",
    "bihomeomorphism",
    "d_omega",
    "is_bi_td",
    "omega_minus",
    "omega_plus",
    "patch_frame",
    "separation",
    "sobriety",
    "spectrum",
    "unit_map",
]


@lru_cache(maxsize=8192)
def omega_plus(space: Bispace) -> Frame:
    return set_lattice_frame(space.tau_plus, space.full, name="Omega+")


@lru_cache(maxsize=8192)
def omega_minus(space: Bispace) -> Frame:
    return set_lattice_frame(space.tau_minus, space.full, name="Omega-")


@lru_cache(maxsize=8192)
def patch_frame(space: Bispace) -> Frame:
    return set_lattice_frame(space.patch, space.full, name="Omega")


@lru_cache(maxsize=8192)
def b_omega(space: Bispace) -> Biframe:
    """``(Omega+(X), Omega-(X), Omega(X))`` with the inclusions."""
    plus, minus, main = omega_plus(space), omega_minus(space), patch_frame(space)
    inj_plus = FrameMap.from_function(plus, main, lambda x: main.element(plus.label(x)))
    inj_minus = FrameMap.from_function(minus, main, lambda x: main.element(minus.label(x)))
    return Biframe(plus, minus, main, inj_plus, inj_minus, name="bOmega")


def finitary_open_relation(space: Bispace) -> Iterator[tuple[int, int]]:
    """A generating part of ``{(<U+> & <U->, <V+> | <V->) : U+ & U- <= V+ | V-}``.

    Only the instances ``U+ = N+``, ``U- = N-`` (join-irreducible opens) and
    ``V+``, ``V-`` the largest opens not containing them are produced; every
    other instance follows from these.
    """
    plus, minus = omega_plus(space), omega_minus(space)
    pp, mp = plus.poset, minus.poset
    from .frame import coproduct

    cp = coproduct(plus, minus)
    for p, q in product(range(len(pp)), range(len(mp))):
        a, b = pp.down[p], mp.down[q]
        c, d = pp.full & ~pp.up[p], mp.full & ~mp.up[q]
        if plus.label(a) & minus.label(b) & ~(plus.label(c) | minus.label(d)) == 0:
            yield cp.inj_left(a) & cp.inj_right(b), cp.inj_left(c) | cp.inj_right(d)


def finitary_open_relation_exhaustive(space: Bispace) -> Iterator[tuple[int, int]]:
    """Every inclusion ``U+ & U- <= V+ | V-`` (small spaces only)."""
    plus, minus = omega_plus(space), omega_minus(space)
    from .frame import coproduct

    cp = coproduct(plus, minus)
    for a, b, c, d in product(plus.elements, minus.elements, plus.elements, minus.elements):
        if plus.label(a) & minus.label(b) & ~(plus.label(c) | minus.label(d)) == 0:
            yield cp.inj_left(a) & cp.inj_right(b), cp.inj_left(c) | cp.inj_right(d)


@lru_cache(maxsize=8192)
def b_omega_fin(space: Bispace) -> Biframe:
    b = present(omega_plus(space), omega_minus(space), finitary_open_relation(space)).biframe
    b.name = "bOmega_fin"
    return b


@lru_cache(maxsize=8192)
def d_omega(space: Bispace) -> DFrame:
    """Disjoint pairs as ``con`` and covering pairs as ``tot``."""
    plus, minus = omega_plus(space), omega_minus(space)
    con, tot = set(), set()
    for a in plus.elements:
        u = plus.label(a)
        for b in minus.elements:
            v = minus.label(b)
            if u & v == 0:
                con.add((a, b))
            if u | v == space.full:
                tot.add((a, b))
    return DFrame(plus, minus, frozenset(con), frozenset(tot))


def spectrum(space: Bispace, duality: str) -> Spectrum:
    if duality == "bi":
        return bipoints(b_omega(space))
    if duality == "fin":
        return bipoints(b_omega_fin(space))
    if duality == "d":
        return dpoints(d_omega(space))
    raise InvalidInput(f"unknown duality {duality!r}; expected one of {DUALITIES}")


def neighbourhood_pair(space: Bispace, x: int) -> tuple[int, int]:
    """Join-irreducible indices of the minimal positive and negative opens of ``x``."""
    plus, minus = omega_plus(space), omega_minus(space)
    return plus.poset.index(space.min_plus[x]), minus.poset.index(space.min_minus[x])


def unit_map(space: Bispace, duality: str, spec: Spectrum | None = None) -> BispaceMap:
    """``x -> (N+_x, N-_x)`` into the spectrum of the chosen duality."""
    spec = spec or spectrum(space, duality)
    index = {pair: k for k, pair in enumerate(spec.pairs)}
    try:
        mapping = tuple(index[neighbourhood_pair(space, x)] for x in range(len(space)))
    except KeyError:
        raise AssertionError("a neighbourhood pair is missing from the spectrum") from None
    return BispaceMap(space, spec.bispace, mapping)


def sobriety(space: Bispace) -> dict[str, bool]:
    return {
        "patchSober": unit_map(space, "bi").is_bihomeomorphism(),
        "biSober": unit_map(space, "fin").is_bihomeomorphism(),
        "dSober": unit_map(space, "d").is_bihomeomorphism(),
    }


def opens_map(f: BispaceMap) -> tuple[FrameMap, FrameMap]:
    """``(f^-1, f^-1) : Omega(target) -> Omega(source)`` on both topologies."""
    sp, tp = omega_plus(f.source), omega_plus(f.target)
    sm, tm = omega_minus(f.source), omega_minus(f.target)
    plus = FrameMap.from_function(tp, sp, lambda v: sp.element(f.preimage(tp.label(v))))
    minus = FrameMap.from_function(tm, sm, lambda v: sm.element(f.preimage(tm.label(v))))
    return plus, minus


def inclusion_map(space: Bispace, mask: int) -> BispaceMap:
    """The inclusion of the bisubspace on ``mask``."""
    from .poset import iter_bits

    sub = space.subspace(mask)
    return BispaceMap(sub, space, tuple(iter_bits(mask & space.full)))
