"""Finite posets and explicitly tabulated finite lattices.

A :class:`Poset` stores, for every element ``i``, the bitmask ``down[i]`` of
elements below it.  Downsets are then plain integers, which is what the frame
layer builds on: every finite frame is the lattice of downsets of its poset of
join-irreducibles.
"""

from __future__ import annotations

from functools import cached_property
from typing import TYPE_CHECKING, Hashable, Iterable, Iterator, Sequence

import networkx as nx

from . import caps
from .errors import InvalidInput, NotALattice, NotDistributive

if TYPE_CHECKING:
    from .frame import Frame

Label = Hashable


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """An immutable finite partial order on labelled elements ``0..n-1``."""

    __slots__ = ("labels", "down", "_index", "__dict__")

    def __init__(self, labels: Sequence[Label], down: Sequence[int]) -> None:
        self.labels: tuple[Label, ...] = tuple(labels)
        self.down: tuple[int, ...] = tuple(down)
        if len(self.labels) != len(self.down):
            raise InvalidInput("one downset mask per element is required")
        self._index = {label: i for i, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise InvalidInput("poset labels must be distinct")
        self._validate()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relation(cls, labels: Iterable[Label], pairs: Iterable[tuple[Label, Label]]) -> "Poset":
        """Reflexive-transitive closure of a generating relation ``x <= y``."""
        labels = tuple(labels)
        index = {label: i for i, label in enumerate(labels)}
        down = [1 << i for i in range(len(labels))]
        for x, y in pairs:
            if x not in index or y not in index:
                raise InvalidInput(f"relation mentions unknown element in {(x, y)!r}")
            down[index[y]] |= 1 << index[x]
        changed = True
        while changed:
            changed = False
            for i, mask in enumerate(down):
                closed = mask
                for j in iter_bits(mask):
                    closed |= down[j]
                if closed != mask:
                    down[i] = closed
                    changed = True
        return cls(labels, down)

    @classmethod
    def antichain(cls, labels: Iterable[Label]) -> "Poset":
        labels = tuple(labels)
        return cls(labels, [1 << i for i in range(len(labels))])

    @classmethod
    def chain(cls, labels: Iterable[Label]) -> "Poset":
        labels = tuple(labels)
        return cls(labels, [(1 << (i + 1)) - 1 for i in range(len(labels))])

    def _validate(self) -> None:
        for i, mask in enumerate(self.down):
            if not mask >> i & 1:
                raise InvalidInput(f"order is not reflexive at {self.labels[i]!r}")
            if mask >> len(self.labels):
                raise InvalidInput("downset mask mentions a non-element")
            for j in iter_bits(mask):
                if j != i and self.down[j] >> i & 1:
                    raise InvalidInput(
                        f"order is not antisymmetric: {self.labels[i]!r} and {self.labels[j]!r}"
                    )
                if self.down[j] & ~mask:
                    raise InvalidInput(f"order is not transitive below {self.labels[i]!r}")

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        pairs = [(self.labels[j], self.labels[i]) for i, j in self.cover_pairs()]
        return f"Poset({list(self.labels)!r}, covers={pairs!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self.labels == other.labels and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.labels, self.down))

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidInput(f"{label!r} is not an element of the poset") from None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    @cached_property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * len(self.labels)
        for i, mask in enumerate(self.down):
            for j in iter_bits(mask):
                up[j] |= 1 << i
        return tuple(up)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements sorted so that every element comes after everything below it."""
        return tuple(sorted(range(len(self.labels)), key=lambda i: (popcount(self.down[i]), i)))

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` such that ``j`` covers ``i``."""
        out = []
        for j, mask in enumerate(self.down):
            strict = mask & ~(1 << j)
            for i in iter_bits(strict):
                if not any(k != i and self.down[k] >> i & 1 for k in iter_bits(strict)):
                    out.append((i, j))
        return out

    def down_closure(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= self.down[i]
        return out

    def up_closure(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= self.up[i]
        return out

    def is_downset(self, mask: int) -> bool:
        return self.down_closure(mask) == mask

    def is_upset(self, mask: int) -> bool:
        return self.up_closure(mask) == mask

    def maximal(self, mask: int) -> int:
        """Maximal elements of the subset ``mask``."""
        out = 0
        for i in iter_bits(mask):
            if not (self.up[i] & mask) & ~(1 << i):
                out |= 1 << i
        return out

    def mask_of(self, labels: Iterable[Label]) -> int:
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def labels_of(self, mask: int) -> frozenset[Label]:
        return frozenset(self.labels[i] for i in iter_bits(mask))

    # -- derived posets ---------------------------------------------------

    def downsets(self) -> list[int]:
        """All downsets, ordered by size then by mask value."""
        order = self.linear_extension
        found: list[int] = []
        limit = caps.current().frame_elements

        def extend(pos: int, acc: int) -> None:
            if pos == len(order):
                found.append(acc)
                caps.check("downset enumeration", len(found), limit)
                return
            i = order[pos]
            extend(pos + 1, acc)
            if self.down[i] & ~(1 << i) & ~acc == 0:
                extend(pos + 1, acc | 1 << i)

        extend(0, 0)
        found.sort(key=lambda m: (popcount(m), m))
        return found

    def restrict(self, mask: int) -> "Poset":
        """The induced suborder on the elements of ``mask`` (in index order)."""
        keep = list(iter_bits(mask))
        position = {old: new for new, old in enumerate(keep)}
        down = []
        for old in keep:
            d = 0
            for k in iter_bits(self.down[old] & mask):
                d |= 1 << position[k]
            down.append(d)
        return Poset([self.labels[i] for i in keep], down)

    def dual(self) -> "Poset":
        return Poset(self.labels, self.up)

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.labels)))
        for j, mask in enumerate(self.down):
            for i in iter_bits(mask & ~(1 << j)):
                graph.add_edge(i, j)
        return graph


def poset_product(left: Poset, right: Poset) -> Poset:
    """Componentwise order on pairs; element ``(i, j)`` sits at index ``i * len(right) + j``."""
    n_right = len(right)
    labels = [(a, b) for a in left.labels for b in right.labels]
    down = []
    for i in range(len(left)):
        for j in range(n_right):
            mask = 0
            for a in iter_bits(left.down[i]):
                for b in iter_bits(right.down[j]):
                    mask |= 1 << (a * n_right + b)
            down.append(mask)
    return Poset(labels, down)


def poset_isomorphism(left: Poset, right: Poset) -> dict[int, int] | None:
    """An order isomorphism ``left -> right`` as an index map, or ``None``."""
    if len(left) != len(right):
        return None
    if sorted(map(popcount, left.down)) != sorted(map(popcount, right.down)):
        return None
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(left.to_digraph(), right.to_digraph())
    for mapping in matcher.isomorphisms_iter():
        return dict(mapping)
    return None


def posets_isomorphic(left: Poset, right: Poset) -> bool:
    return poset_isomorphism(left, right) is not None


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on ``n`` unlabelled elements, one per isomorphism class.

    Every poset arises from a smaller one by adding a new maximal element whose
    strict downset is any downset of the old poset; duplicates are removed by
    isomorphism testing within buckets of a cheap invariant.
    """
    layer = [Poset((), ())]
    for size in range(n):
        buckets: dict[tuple, list[Poset]] = {}
        for base in layer:
            for below in base.downsets():
                down = list(base.down) + [below | 1 << size]
                candidate = Poset(range(size + 1), down)
                key = _invariant(candidate)
                bucket = buckets.setdefault(key, [])
                if not any(posets_isomorphic(candidate, seen) for seen in bucket):
                    bucket.append(candidate)
        layer = [p for key in sorted(buckets) for p in buckets[key]]
    return layer


def _invariant(p: Poset) -> tuple:
    return tuple(sorted((popcount(d), popcount(u)) for d, u in zip(p.down, p.up)))


class FiniteLattice:
    """A finite poset given explicitly and checked to be a bounded lattice.

    This is the form in which arbitrary user input arrives; it may fail to be
    distributive (and so fail to be a frame), which :func:`validate_frame`
    reports.
    """

    def __init__(self, order: Poset) -> None:
        self.order = order
        n = len(order)
        if n == 0:
            raise NotALattice("a lattice needs at least one element")
        self.meet_table = [[-1] * n for _ in range(n)]
        self.join_table = [[-1] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lower = order.down[i] & order.down[j]
                upper = order.up[i] & order.up[j]
                m = [k for k in iter_bits(lower) if order.down[k] & lower == lower]
                s = [k for k in iter_bits(upper) if order.up[k] & upper == upper]
                if len(m) != 1:
                    raise NotALattice(f"no meet for {order.labels[i]!r}, {order.labels[j]!r}")
                if len(s) != 1:
                    raise NotALattice(f"no join for {order.labels[i]!r}, {order.labels[j]!r}")
                self.meet_table[i][j] = self.meet_table[j][i] = m[0]
                self.join_table[i][j] = self.join_table[j][i] = s[0]
        self.bottom = next(i for i in range(n) if order.down[i] == 1 << i and order.up[i] == order.full)
        self.top = next(i for i in range(n) if order.down[i] == order.full)

    @classmethod
    def from_relation(cls, labels: Iterable[Label], pairs: Iterable[tuple[Label, Label]]) -> "FiniteLattice":
        return cls(Poset.from_relation(labels, pairs))

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.order.labels

    def __len__(self) -> int:
        return len(self.order)

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def leq(self, i: int, j: int) -> bool:
        return self.order.leq(i, j)

    def distributivity_failures(self) -> list[tuple[int, int, int]]:
        """Triples ``(a, b, c)`` with ``a & (b | c) != (a & b) | (a & c)``."""
        n = len(self)
        bad = []
        for a in range(n):
            for b in range(n):
                for c in range(b + 1, n):
                    lhs = self.meet(a, self.join(b, c))
                    rhs = self.join(self.meet(a, b), self.meet(a, c))
                    if lhs != rhs:
                        bad.append((a, b, c))
        return bad

    def is_distributive(self) -> bool:
        return not self.distributivity_failures()

    def join_irreducible_indices(self) -> list[int]:
        """Non-bottom elements with exactly one lower cover."""
        covers: dict[int, list[int]] = {}
        for i, j in self.order.cover_pairs():
            covers.setdefault(j, []).append(i)
        return [j for j in range(len(self)) if j != self.bottom and len(covers.get(j, [])) == 1]


def validate_frame(lattice: FiniteLattice | "Frame") -> list[str]:
    """Frame laws violated by a finite lattice (empty list when it is a frame).

    For finite lattices arbitrary joins are finite joins, so the infinite
    distributive law reduces to ``a & (b | c) == (a & b) | (a & c)``.
    """
    from .frame import Frame

    if isinstance(lattice, Frame):
        return []
    problems = []
    for a, b, c in lattice.distributivity_failures()[:1]:
        labels = lattice.labels
        problems.append(
            f"distributivity: {labels[a]!r} & ({labels[b]!r} | {labels[c]!r})"
            f" != ({labels[a]!r} & {labels[b]!r}) | ({labels[a]!r} & {labels[c]!r})"
        )
    return problems


def join_irreducibles(lattice: FiniteLattice | "Frame") -> Poset:
    """The poset of join-irreducible elements, labelled by the lattice's labels."""
    from .frame import Frame

    if isinstance(lattice, Frame):
        return lattice.poset
    if not lattice.is_distributive():
        raise NotDistributive("; ".join(validate_frame(lattice)))
    ji = lattice.join_irreducible_indices()
    return lattice.order.restrict(sum(1 << i for i in ji))


def downset_lattice(poset: Poset) -> "Frame":
    """The frame of downsets of ``poset``."""
    from .frame import Frame

    return Frame(poset)


def enumerate_lattices(max_size: int, distributive_only: bool = False) -> list[FiniteLattice]:
    """All lattices with ``1..max_size`` elements up to isomorphism.

    A lattice with ``n >= 2`` elements is a poset on ``n - 2`` elements with a
    new bottom and top adjoined, which is a lattice exactly when every pair has
    a meet and a join.
    """
    found: list[FiniteLattice] = []
    for size in range(1, max_size + 1):
        if size == 1:
            candidates = [Poset(["0"], [1])]
        else:
            candidates = []
            for inner in enumerate_posets(size - 2):
                k = len(inner)
                bottom, top = k, k + 1
                down = [d | 1 << bottom for d in inner.down]
                down.append(1 << bottom)
                down.append((1 << (k + 2)) - 1)
                candidates.append(Poset(list(range(k + 2)), down))
        for order in candidates:
            try:
                lattice = FiniteLattice(order)
            except NotALattice:
                continue
            if distributive_only and not lattice.is_distributive():
                continue
            found.append(lattice)
    return found
