"""Hypothesis strategies for small posets, frames and bispaces."""

from __future__ import annotations

from hypothesis import strategies as st

from bifrm.frame import Frame
from bifrm.poset import Poset, downset_lattice
from bifrm.spaces import Bispace


@st.composite
def posets(draw, max_size: int = 4) -> Poset:
    n = draw(st.integers(0, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return Poset.from_relation(range(n), pairs)


@st.composite
def frames(draw, max_join_irreducibles: int = 4) -> Frame:
    return downset_lattice(draw(posets(max_join_irreducibles)))


@st.composite
def bispaces(draw, max_points: int = 4) -> Bispace:
    n = draw(st.integers(1, max_points))
    full = (1 << n) - 1
    subsets = st.lists(st.integers(0, full), max_size=4)
    space, _ = Bispace.generated(n, draw(subsets), draw(subsets))
    return space
