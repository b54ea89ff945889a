"""Finite bitopological spaces: topologies as families of bitmasks.

Points of a :class:`Bispace` are ``0..n-1`` (with arbitrary hashable labels);
an open set is the bitmask of its points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Hashable, Iterable, Sequence

import networkx as nx

from .errors import InvalidInput
from .poset import iter_bits, popcount

Label = Hashable


def close_under_unions(family: Iterable[int]) -> frozenset[int]:
    out = {0}
    for s in set(family):
        if s in out:
            continue
        out |= {t | s for t in out}
    return frozenset(out)


def close_under_intersections(family: Iterable[int], full: int) -> frozenset[int]:
    out = {full}
    for s in set(family):
        if s in out:
            continue
        out |= {t & s for t in out}
    return frozenset(out)


def generate_topology(subbase: Iterable[int], full: int) -> frozenset[int]:
    """The least topology (on the points of ``full``) containing ``subbase``."""
    return close_under_unions(close_under_intersections(subbase, full))


def topology_violations(family: frozenset[int], full: int) -> list[str]:
    problems = []
    if 0 not in family:
        problems.append("missing the empty set")
    if full not in family:
        problems.append("missing the whole space")
    for s in family:
        if s & ~full:
            problems.append(f"{s:#b} mentions points outside the space")
            break
    fam = sorted(family)
    for i, s in enumerate(fam):
        for t in fam[i + 1 :]:
            if s | t not in family:
                problems.append("not closed under unions")
                return problems
            if s & t not in family:
                problems.append("not closed under intersections")
                return problems
    return problems


def enumerate_topologies(n: int) -> list[frozenset[int]]:
    """All topologies on ``n`` labelled points (they correspond to preorders)."""
    full = (1 << n) - 1
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = set()
    for choice in range(1 << len(pairs)):
        # up[i]: points in every open containing i (the specialisation preorder)
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                up[i] |= 1 << j
        if any(up[j] & ~up[i] for i in range(n) for j in iter_bits(up[i])):
            continue  # not transitive
        found.add(close_under_unions(up))
    assert all(not topology_violations(t, full) for t in found)
    return sorted(found, key=lambda t: (len(t), sorted(t)))


class Bispace:
    """A finite set with two topologies ``tau_plus`` and ``tau_minus``."""

    def __init__(
        self,
        points: Sequence[Label] | int,
        tau_plus: Iterable[int],
        tau_minus: Iterable[int],
        *,
        validate: bool = True,
    ) -> None:
        if isinstance(points, int):
            points = tuple(range(points))
        self.points: tuple[Label, ...] = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise InvalidInput("point labels must be distinct")
        self.tau_plus = frozenset(tau_plus)
        self.tau_minus = frozenset(tau_minus)
        if validate:
            for name, tau in (("positive", self.tau_plus), ("negative", self.tau_minus)):
                problems = topology_violations(tau, self.full)
                if problems:
                    raise InvalidInput(f"{name} family is not a topology: {problems[0]}")

    @classmethod
    def generated(
        cls, points: Sequence[Label] | int, plus: Iterable[int], minus: Iterable[int]
    ) -> tuple["Bispace", dict[str, list[int]]]:
        """Close two families into topologies, reporting the sets that were added."""
        n = points if isinstance(points, int) else len(points)
        full = (1 << n) - 1
        plus, minus = set(plus), set(minus)
        for s in plus | minus:
            if s & ~full or s < 0:
                raise InvalidInput(f"open set {s:#b} mentions points outside the space")
        tau_plus = generate_topology(plus, full)
        tau_minus = generate_topology(minus, full)
        added = {"tauP": sorted(tau_plus - plus), "tauM": sorted(tau_minus - minus)}
        return cls(points, tau_plus, tau_minus, validate=False), added

    def __repr__(self) -> str:
        return f"Bispace({len(self.points)} points, |tau+|={len(self.tau_plus)}, |tau-|={len(self.tau_minus)})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Bispace)
            and self.points == other.points
            and self.tau_plus == other.tau_plus
            and self.tau_minus == other.tau_minus
        )

    def __hash__(self) -> int:
        return hash((self.points, self.tau_plus, self.tau_minus))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, label: Label) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise InvalidInput(f"{label!r} is not a point") from None

    def labels_of(self, mask: int) -> list[Label]:
        return [self.points[i] for i in iter_bits(mask)]

    # -- neighbourhoods ---------------------------------------------------

    @cached_property
    def min_plus(self) -> tuple[int, ...]:
        """Smallest positive open neighbourhood of each point."""
        return _minimal_neighbourhoods(self.tau_plus, len(self.points), self.full)

    @cached_property
    def min_minus(self) -> tuple[int, ...]:
        return _minimal_neighbourhoods(self.tau_minus, len(self.points), self.full)

    def closure_plus(self, mask: int) -> int:
        return self.full & ~max((u for u in self.tau_plus if not u & mask), key=popcount)

    def closure_minus(self, mask: int) -> int:
        return self.full & ~max((u for u in self.tau_minus if not u & mask), key=popcount)

    # -- derived bispaces -------------------------------------------------

    @cached_property
    def patch(self) -> frozenset[int]:
        """The join of the two topologies."""
        return generate_topology(self.tau_plus | self.tau_minus, self.full)

    def swapped(self) -> "Bispace":
        return Bispace(self.points, self.tau_minus, self.tau_plus, validate=False)

    def skula(self) -> "Bispace":
        """Positive opens generated by ``tau+`` and the negative closed sets; dually."""
        full = self.full
        closed_minus = {full & ~u for u in self.tau_minus}
        closed_plus = {full & ~u for u in self.tau_plus}
        return Bispace(
            self.points,
            generate_topology(self.tau_plus | closed_minus, full),
            generate_topology(self.tau_minus | closed_plus, full),
            validate=False,
        )

    def subspace(self, mask: int) -> "Bispace":
        """The bisubspace on the points of ``mask`` (labels are kept)."""
        keep = list(iter_bits(mask & self.full))

        def restrict(u: int) -> int:
            out = 0
            for new, old in enumerate(keep):
                if u >> old & 1:
                    out |= 1 << new
            return out

        return Bispace(
            [self.points[i] for i in keep],
            {restrict(u) for u in self.tau_plus},
            {restrict(u) for u in self.tau_minus},
            validate=False,
        )

    def relabelled(self, labels: Sequence[Label]) -> "Bispace":
        return Bispace(labels, self.tau_plus, self.tau_minus, validate=False)

    def permuted(self, perm: Sequence[int]) -> "Bispace":
        """Move point ``i`` to position ``perm[i]`` (labels become positions)."""
        def move(u: int) -> int:
            out = 0
            for i in iter_bits(u):
                out |= 1 << perm[i]
            return out

        return Bispace(
            len(self.points),
            {move(u) for u in self.tau_plus},
            {move(u) for u in self.tau_minus},
            validate=False,
        )

    def canonical_key(self) -> tuple:
        """An isomorphism-invariant key, by brute force over permutations."""
        n = len(self.points)
        best = None
        for perm in permutations(range(n)):
            moved = self.permuted(perm)
            key = (n, tuple(sorted(moved.tau_plus)), tuple(sorted(moved.tau_minus)))
            if best is None or key < best:
                best = key
        return best  # type: ignore[return-value]

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for i in range(len(self.points)):
            graph.add_node(("pt", i), kind="pt")
        for kind, tau in (("+", self.tau_plus), ("-", self.tau_minus)):
            for u in tau:
                graph.add_node((kind, u), kind=kind)
                for i in iter_bits(u):
                    graph.add_edge((kind, u), ("pt", i))
        return graph


def _minimal_neighbourhoods(tau: frozenset[int], n: int, full: int) -> tuple[int, ...]:
    out = []
    for i in range(n):
        nb = full
        for u in tau:
            if u >> i & 1:
                nb &= u
        out.append(nb)
    return tuple(out)


@dataclass(frozen=True)
class BispaceMap:
    """A function between the points of two bispaces (``mapping[i]`` is an index)."""

    source: Bispace
    target: Bispace
    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def preimage(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.mapping):
            if mask >> j & 1:
                out |= 1 << i
        return out

    def image(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.mapping[i]
        return out

    def is_bicontinuous(self) -> bool:
        return all(self.preimage(v) in self.source.tau_plus for v in self.target.tau_plus) and all(
            self.preimage(v) in self.source.tau_minus for v in self.target.tau_minus
        )

    def is_bijective(self) -> bool:
        return sorted(self.mapping) == list(range(len(self.target.points)))

    def is_bihomeomorphism(self) -> bool:
        return (
            self.is_bijective()
            and {self.image(u) for u in self.source.tau_plus} == self.target.tau_plus
            and {self.image(u) for u in self.source.tau_minus} == self.target.tau_minus
        )

    def is_embedding(self) -> bool:
        """Injective, and both topologies of the source are the induced ones."""
        if len(set(self.mapping)) != len(self.mapping):
            return False
        return {self.preimage(v) for v in self.target.tau_plus} == self.source.tau_plus and {
            self.preimage(v) for v in self.target.tau_minus
        } == self.source.tau_minus


def bihomeomorphism(left: Bispace, right: Bispace) -> BispaceMap | None:
    """A bihomeomorphism ``left -> right`` if one exists (labelled graph matching)."""
    if (len(left), len(left.tau_plus), len(left.tau_minus)) != (len(right), len(right.tau_plus), len(right.tau_minus)):
        return None
    matcher = nx.algorithms.isomorphism.GraphMatcher(
        left.to_graph(), right.to_graph(), node_match=lambda a, b: a["kind"] == b["kind"]
    )
    for mapping in matcher.isomorphisms_iter():
        images = tuple(mapping[("pt", i)][1] for i in range(len(left)))
        return BispaceMap(left, right, images)
    return None


def bihomeomorphic(left: Bispace, right: Bispace) -> bool:
    return bihomeomorphism(left, right) is not None


# ---------------------------------------------------------------------------
# separation


SEPARATION_AXIOMS = ("pairwiseT0", "pairwiseT1", "pairwiseT2", "biTD")


def separation(space: Bispace, axiom: str) -> bool:
    """Pairwise separation axioms (and the bi-T_D property)."""
    n = len(space)
    opens = space.tau_plus | space.tau_minus
    if axiom == "pairwiseT0":
        return all(
            any((u >> x & 1) != (u >> y & 1) for u in opens) for x in range(n) for y in range(x + 1, n)
        )
    if axiom == "pairwiseT1":
        return all(
            any(u >> x & 1 and not u >> y & 1 for u in opens) for x in range(n) for y in range(n) if x != y
        )
    if axiom == "pairwiseT2":
        def split(x: int, y: int) -> bool:
            return any(
                u >> x & 1 and v >> y & 1 and not u & v for u in space.tau_plus for v in space.tau_minus
            )

        return all(split(x, y) or split(y, x) for x in range(n) for y in range(n) if x != y)
    if axiom == "biTD":
        return is_bi_td(space)
    raise InvalidInput(f"unknown axiom {axiom!r}; expected one of {SEPARATION_AXIOMS}")


def is_bi_td(space: Bispace) -> bool:
    """Every singleton is ``U+ & U- & ~V+ & ~V-`` for opens ``U+, V+`` and ``U-, V-``."""
    full = space.full
    locally_closed_plus = {u & ~v & full for u in space.tau_plus for v in space.tau_plus}
    locally_closed_minus = {u & ~v & full for u in space.tau_minus for v in space.tau_minus}
    shapes = {a & b for a in locally_closed_plus for b in locally_closed_minus}
    return all(1 << x in shapes for x in range(len(space)))

