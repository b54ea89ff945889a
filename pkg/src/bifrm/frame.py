"""Finite frames, frame maps, points, coproducts, congruences and quotients.

Every finite frame is the lattice of downsets of its poset ``J`` of
join-irreducibles, so an element is stored as a bitmask over ``J``: meet is
``&``, join is ``|`` and ``0``/``1`` are the empty and full masks.

Two facts of finite Birkhoff duality are used throughout:

* a frame map ``D(A) -> D(B)`` is ``x -> pi^{-1}(x)`` for a unique monotone
  ``pi : B -> A`` (its *dual*), so a :class:`FrameMap` is stored as that tuple;
* a congruence on ``D(P)`` is the kernel of ``x -> x & K`` for a unique subset
  ``K`` of ``P`` (the *kept* join-irreducibles), and ``D(P)/C`` is ``D(K)``.

The generic routines (:func:`enumerate_frame_maps`,
:func:`congruence_closure_fixpoint`) work element by element instead and serve
as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from . import caps
from .errors import ElementNotInFrame, InvalidInput, NotAFrameMap
from .poset import Poset, iter_bits, popcount, poset_isomorphism, poset_product

Label = Hashable


class Frame:
    """A finite frame presented as the downsets of ``poset``.

    ``encode``/``decode`` optionally translate between element masks and
    domain-specific labels (open sets of a space, congruences, ...).
    """

    def __init__(
        self,
        poset: Poset,
        *,
        decode: Callable[[int], Label] | None = None,
        encode: Callable[[Label], int] | None = None,
        name: str | None = None,
    ) -> None:
        self.poset = poset
        self._decode = decode
        self._encode = encode
        self.name = name

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Frame{tag} |J|={len(self.poset)}>"

    # equality is structural on the underlying poset; labels are decoration
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Frame) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    # -- elements ---------------------------------------------------------

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.poset.full

    @cached_property
    def elements(self) -> tuple[int, ...]:
        """All elements, listed by size and then by mask value."""
        return tuple(self.poset.downsets())

    @cached_property
    def _position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def size(self) -> int:
        return len(self.elements)

    def position(self, x: int) -> int:
        """Index of ``x`` in :attr:`elements`."""
        self.check(x)
        return self._position[x]

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x <= self.poset.full and self.poset.is_downset(x)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def check(self, x: int) -> int:
        if x not in self:
            raise ElementNotInFrame(f"{x!r} is not an element of {self!r}")
        return x

    def meet(self, x: int, y: int) -> int:
        return x & y

    def join(self, x: int, y: int) -> int:
        return x | y

    def meet_all(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out &= x
        return out

    def join_all(self, xs: Iterable[int]) -> int:
        out = 0
        for x in xs:
            out |= x
        return out

    def leq(self, x: int, y: int) -> bool:
        return x & ~y == 0

    def principal(self, j: int) -> int:
        """The join-irreducible element generated by the ``j``-th element of ``J``."""
        return self.poset.down[j]

    @cached_property
    def join_irreducible_elements(self) -> tuple[int, ...]:
        return tuple(self.poset.down)

    def implies(self, x: int, y: int) -> int:
        """Heyting implication: the largest ``z`` with ``z & x <= y``."""
        return self.top & ~self.poset.up_closure(x & ~y)

    def pseudocomplement(self, x: int) -> int:
        return self.implies(x, 0)

    def complement(self, x: int) -> int | None:
        c = self.pseudocomplement(x)
        return c if x | c == self.top else None

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Pairs ``(x, y)`` of elements with ``y`` covering ``x``."""
        out = []
        for y in self.elements:
            for j in iter_bits(self.poset.maximal(y)):
                out.append((y & ~(1 << j), y))
        return out

    # -- labels -----------------------------------------------------------

    def label(self, x: int) -> Label:
        self.check(x)
        if self._decode is not None:
            return self._decode(x)
        return self.poset.labels_of(x)

    def element(self, label: Label) -> int:
        """Inverse of :meth:`label`."""
        if self._encode is not None:
            x = self._encode(label)
        else:
            try:
                x = self.poset.mask_of(label)  # type: ignore[arg-type]
            except (InvalidInput, TypeError) as exc:
                raise ElementNotInFrame(f"{label!r} does not name an element") from exc
        return self.check(x)

    def relabelled(
        self,
        decode: Callable[[int], Label] | None,
        encode: Callable[[Label], int] | None,
        name: str | None = None,
    ) -> "Frame":
        return Frame(self.poset, decode=decode, encode=encode, name=name or self.name)


#: The two-element frame; its points are the identity.
TWO = Frame(Poset(["*"], [1]), name="2")
#: The one-element (degenerate) frame.
ONE = Frame(Poset((), ()), name="1")


def chain_frame(n: int) -> Frame:
    """The ``n``-element chain ``0 < 1 < ... < n-1`` (``n >= 1``)."""
    return Frame(Poset.chain(range(1, n)), name=f"C{n}")


def boolean_frame(n: int) -> Frame:
    """The Boolean algebra on ``n`` atoms."""
    return Frame(Poset.antichain(range(n)), name=f"B{n}")


def frame_from_lattice(lattice) -> Frame:
    """Re-encode an explicit distributive :class:`~bifrm.poset.FiniteLattice`.

    Element labels are preserved: ``frame.label(x)`` returns the lattice label.
    """
    from .poset import join_irreducibles

    ji = join_irreducibles(lattice)
    order = lattice.order
    mask_to_label: dict[int, Label] = {}
    label_to_mask: dict[Label, int] = {}
    ji_index = [order.index(label) for label in ji.labels]
    for i, label in enumerate(order.labels):
        mask = 0
        for k, j in enumerate(ji_index):
            if order.leq(j, i):
                mask |= 1 << k
        mask_to_label[mask] = label
        label_to_mask[label] = mask

    def encode(label: Label) -> int:
        try:
            return label_to_mask[label]
        except (KeyError, TypeError):
            raise ElementNotInFrame(f"{label!r} is not an element") from None

    return Frame(ji, decode=mask_to_label.__getitem__, encode=encode)


def set_lattice_frame(family: Iterable[int], universe: int, *, name: str | None = None) -> Frame:
    """The frame of a family of subsets closed under union and intersection.

    The family must contain the empty set and ``universe``; labels are the
    subsets themselves (as bitmasks).  Used for topologies and for sublattices
    of congruence lattices.
    """
    family = frozenset(family)
    if 0 not in family or universe not in family:
        raise InvalidInput("family must contain the empty set and the whole set")
    # join-irreducibles: non-empty members that are not the union of the
    # members strictly below them
    members = sorted(family, key=lambda s: (popcount(s), s))
    ji = []
    for s in members:
        if not s:
            continue
        below = 0
        for t in members:
            if t != s and t & ~s == 0:
                below |= t
        if below != s:
            ji.append(s)
    down = []
    for s in ji:
        d = 0
        for k, t in enumerate(ji):
            if t & ~s == 0:
                d |= 1 << k
        down.append(d)
    poset = Poset(ji, down)

    def decode(mask: int) -> int:
        out = 0
        for k in iter_bits(mask):
            out |= ji[k]
        return out

    def encode(subset: int) -> int:
        if subset not in family:
            raise ElementNotInFrame(f"{subset:#b} is not in the family")
        mask = 0
        for k, t in enumerate(ji):
            if t & ~subset == 0:
                mask |= 1 << k
        return mask

    return Frame(poset, decode=decode, encode=encode, name=name)


def sublattice_frame(generators: Iterable[int], universe: int, *, name: str | None = None) -> Frame:
    """The {0,1}-sublattice of subsets of ``universe`` generated by ``generators``.

    A sublattice of a powerset containing the empty and the full set is the
    family of down-closed sets of the preorder ``i <= j`` iff every generator
    containing ``j`` contains ``i``; the join-irreducibles are the principal
    down-closed sets.  Labels are subsets, as in :func:`set_lattice_frame`.
    """
    gens = [g & universe for g in generators]
    elems = list(iter_bits(universe))
    below = {}
    for j in elems:
        d = universe
        for g in gens:
            if g >> j & 1:
                d &= g
        below[j] = d
    ji = sorted(set(below.values()), key=lambda s: (popcount(s), s))
    down = []
    for s in ji:
        d = 0
        for k, t in enumerate(ji):
            if t & ~s == 0:
                d |= 1 << k
        down.append(d)
    poset = Poset(ji, down)

    def decode(mask: int) -> int:
        out = 0
        for k in iter_bits(mask):
            out |= ji[k]
        return out

    def encode(subset: int) -> int:
        mask = 0
        covered = 0
        for k, t in enumerate(ji):
            if t & ~subset == 0:
                mask |= 1 << k
                covered |= t
        if covered != subset:
            raise ElementNotInFrame(f"{subset:#b} is not in the generated sublattice")
        return mask

    return Frame(poset, decode=decode, encode=encode, name=name)


def frame_isomorphism(left: Frame, right: Frame) -> "FrameMap | None":
    """A frame isomorphism ``left -> right`` when one exists."""
    iso = poset_isomorphism(right.poset, left.poset)
    if iso is None:
        return None
    return FrameMap(left, right, tuple(iso[t] for t in range(len(right.poset))))


def frames_isomorphic(left: Frame, right: Frame) -> bool:
    return poset_isomorphism(left.poset, right.poset) is not None


# ---------------------------------------------------------------------------
# frame maps


class FrameMap:
    """A frame map stored through its dual monotone map on join-irreducibles.

    ``dual[t]`` is the join-irreducible of the source that the ``t``-th
    join-irreducible of the target "comes from": ``f(x)`` contains ``t``
    exactly when ``x`` contains ``dual[t]``.
    """

    __slots__ = ("source", "target", "dual", "_pre", "__dict__")

    def __init__(self, source: Frame, target: Frame, dual: Sequence[int], *, check: bool = True) -> None:
        self.source = source
        self.target = target
        self.dual = tuple(dual)
        if check:
            if len(self.dual) != len(target.poset):
                raise NotAFrameMap("dual map must be defined on every join-irreducible of the target")
            tp, sp = target.poset, source.poset
            for t in range(len(tp)):
                if not 0 <= self.dual[t] < len(sp):
                    raise NotAFrameMap("dual map leaves the source")
                for u in iter_bits(tp.down[t]):
                    if not sp.leq(self.dual[u], self.dual[t]):
                        raise NotAFrameMap("dual map is not monotone")
        pre = [0] * len(source.poset)
        for t, s in enumerate(self.dual):
            pre[s] |= 1 << t
        self._pre = tuple(pre)

    def __call__(self, x: int) -> int:
        out = 0
        pre = self._pre
        while x:
            low = x & -x
            out |= pre[low.bit_length() - 1]
            x ^= low
        return out

    def __repr__(self) -> str:
        return f"FrameMap({self.source!r} -> {self.target!r}, dual={self.dual})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FrameMap)
            and self.source == other.source
            and self.target == other.target
            and self.dual == other.dual
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.dual))

    @classmethod
    def from_function(
        cls, source: Frame, target: Frame, fn: Callable[[int], int], *, check: bool = True
    ) -> "FrameMap":
        """Recover the dual of ``fn`` and (optionally) verify ``fn`` on every element."""
        sp = source.poset
        top_image = fn(source.top)
        if top_image != target.top:
            raise NotAFrameMap("top is not preserved")
        if check and fn(0) != 0:
            raise NotAFrameMap("bottom is not preserved")
        images = [fn(source.principal(s)) for s in range(len(sp))]
        dual = []
        for t in range(len(target.poset)):
            hits = [s for s in range(len(sp)) if images[s] >> t & 1]
            least = [s for s in hits if all(sp.leq(s, r) for r in hits)]
            if len(least) != 1:
                raise NotAFrameMap("function does not preserve finite meets")
            dual.append(least[0])
        fmap = cls(source, target, dual)
        if check:
            for x in source.elements:
                if fmap(x) != fn(x):
                    raise NotAFrameMap(f"function disagrees with a frame map at {x:#b}")
        return fmap

    @classmethod
    def identity(cls, frame: Frame) -> "FrameMap":
        return cls(frame, frame, range(len(frame.poset)), check=False)

    def compose(self, first: "FrameMap") -> "FrameMap":
        """``self o first``."""
        if first.target != self.source:
            raise InvalidInput("frame maps are not composable")
        return FrameMap(first.source, self.target, tuple(first.dual[s] for s in self.dual), check=False)

    def __matmul__(self, first: "FrameMap") -> "FrameMap":
        return self.compose(first)

    @cached_property
    def image_of_dual(self) -> int:
        out = 0
        for s in self.dual:
            out |= 1 << s
        return out

    def is_injective(self) -> bool:
        """Injective frame maps are exactly those whose dual is onto."""
        return self.image_of_dual == self.source.poset.full

    def is_surjective(self) -> bool:
        """Surjective frame maps are exactly those whose dual is an order embedding."""
        if len(set(self.dual)) != len(self.dual):
            return False
        sp, tp = self.source.poset, self.target.poset
        return all(
            tp.leq(a, b) == sp.leq(self.dual[a], self.dual[b]) for a in range(len(tp)) for b in range(len(tp))
        )

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def kernel(self) -> "Congruence":
        return Congruence(self.source, self.image_of_dual)

    def table(self) -> dict[int, int]:
        return {x: self(x) for x in self.source.elements}


def point(frame: Frame, j: int) -> FrameMap:
    """The point ``x -> [j in x]`` of ``frame``."""
    return FrameMap(frame, TWO, (j,), check=False)


def enumerate_frame_maps(source: Frame, target: Frame) -> list[FrameMap]:
    """All frame maps ``source -> target``, by search over images of join-irreducibles.

    The images of the principal downsets ``f(down j)`` are assigned in a linear
    extension of ``J(source)``; a partial assignment is pruned as soon as some
    ``f(down a & down b) == f(down a) & f(down b)`` fails (this, together with
    ``f(1) = 1``, characterises frame maps out of a finite frame).
    """
    sp = source.poset
    order = sp.linear_extension
    n = len(order)
    targets = target.elements
    limit = caps.current().map_search
    image: dict[int, int] = {}
    results: list[FrameMap] = []
    visited = 0

    def value(mask: int) -> int:
        out = 0
        for j in iter_bits(mask):
            out |= image[j]
        return out

    def search(pos: int) -> None:
        nonlocal visited
        visited += 1
        caps.check("frame-map search", visited, limit)
        if pos == n:
            if value(sp.full) == target.top:
                results.append(FrameMap.from_function(source, target, value, check=False))
            return
        j = order[pos]
        lower = value(sp.down[j] & ~(1 << j))
        for candidate in targets:
            if lower & ~candidate:
                continue
            image[j] = candidate
            ok = True
            for i in image:
                if i == j:
                    continue
                if value(sp.down[i] & sp.down[j]) != image[i] & candidate:
                    ok = False
                    break
            if ok:
                search(pos + 1)
            del image[j]

    search(0)
    return results


def points(frame: Frame) -> list[FrameMap]:
    """All frame maps ``frame -> 2``."""
    return enumerate_frame_maps(frame, TWO)


# ---------------------------------------------------------------------------
# coproducts


@dataclass(frozen=True)
class Coproduct:
    """``left (+) right`` as downsets of ``J(left) x J(right)``, with injections."""

    frame: Frame
    inj_left: FrameMap
    inj_right: FrameMap
    left: Frame
    right: Frame

    def pair_index(self, p: int, q: int) -> int:
        return p * len(self.right.poset) + q

    def split_index(self, k: int) -> tuple[int, int]:
        return divmod(k, len(self.right.poset))

    def pairing(self, f: FrameMap, g: FrameMap) -> FrameMap:
        """The copairing ``[f, g] : left (+) right -> M`` of two maps into a common ``M``."""
        if f.target != g.target:
            raise InvalidInput("copairing needs maps into one frame")
        dual = tuple(self.pair_index(f.dual[t], g.dual[t]) for t in range(len(f.target.poset)))
        return FrameMap(self.frame, f.target, dual, check=False)

    def generator(self, a: int, b: int) -> int:
        """The element ``inj_left(a) & inj_right(b)``."""
        return self.inj_left(a) & self.inj_right(b)


def coproduct(left: Frame, right: Frame) -> Coproduct:
    """The frame coproduct: downsets of the product of the posets of join-irreducibles."""
    product = poset_product(left.poset, right.poset)
    frame = Frame(product, name=f"({left.name or 'L'} (+) {right.name or 'M'})")
    m = len(right.poset)
    inj_left = FrameMap(left, frame, tuple(k // m for k in range(len(product))), check=False)
    inj_right = FrameMap(right, frame, tuple(k % m for k in range(len(product))), check=False)
    return Coproduct(frame, inj_left, inj_right, left, right)


# ---------------------------------------------------------------------------
# congruences


class Congruence:
    """A congruence on a finite frame, stored as its set of kept join-irreducibles.

    ``x`` and ``y`` are related exactly when they contain the same kept
    join-irreducibles.  Larger congruences keep fewer join-irreducibles.
    """

    __slots__ = ("frame", "kept")

    def __init__(self, frame: Frame, kept: int) -> None:
        self.frame = frame
        self.kept = kept & frame.top

    def __repr__(self) -> str:
        return f"Congruence(kept={sorted(self.frame.poset.labels_of(self.kept), key=repr)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Congruence) and self.frame == other.frame and self.kept == other.kept

    def __hash__(self) -> int:
        return hash((self.frame, self.kept))

    @property
    def killed(self) -> int:
        return self.frame.top & ~self.kept

    def related(self, x: int, y: int) -> bool:
        return (x ^ y) & self.kept == 0

    def forces_leq(self, x: int, y: int) -> bool:
        """Whether ``x <= y`` holds in the quotient."""
        return x & ~y & self.kept == 0

    def __le__(self, other: "Congruence") -> bool:
        return other.kept & ~self.kept == 0

    def __lt__(self, other: "Congruence") -> bool:
        return self <= other and self != other

    def meet(self, other: "Congruence") -> "Congruence":
        """Intersection of congruences."""
        return Congruence(self.frame, self.kept | other.kept)

    def join(self, other: "Congruence") -> "Congruence":
        """The congruence generated by the union."""
        return Congruence(self.frame, self.kept & other.kept)

    def is_diagonal(self) -> bool:
        return self.kept == self.frame.top

    def is_total(self) -> bool:
        return self.kept == 0

    def representative(self, x: int) -> int:
        """The largest element of the class of ``x``."""
        return self.frame.top & ~self.frame.poset.up_closure(self.kept & ~x)

    def classes(self) -> list[tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for x in self.frame.elements:
            groups.setdefault(x & self.kept, []).append(x)
        return [tuple(g) for _, g in sorted(groups.items(), key=lambda kv: kv[1][0])]

    def pairs(self) -> Iterator[tuple[int, int]]:
        for cls in self.classes():
            for x in cls:
                for y in cls:
                    yield x, y

    @classmethod
    def diagonal(cls, frame: Frame) -> "Congruence":
        return cls(frame, frame.top)

    @classmethod
    def total(cls, frame: Frame) -> "Congruence":
        return cls(frame, 0)

    @classmethod
    def from_partition(cls, frame: Frame, blocks: Iterable[Iterable[int]]) -> "Congruence":
        """Validate a partition of the elements as a congruence."""
        block_of: dict[int, int] = {}
        for b, block in enumerate(blocks):
            for x in block:
                frame.check(x)
                if x in block_of:
                    raise InvalidInput("blocks overlap")
                block_of[x] = b
        if set(block_of) != set(frame.elements):
            raise InvalidInput("blocks do not cover the frame")
        kept = 0
        for j in range(len(frame.poset)):
            below = frame.principal(j)
            if block_of[below] != block_of[below & ~(1 << j)]:
                kept |= 1 << j
        congruence = cls(frame, kept)
        for x in frame.elements:
            for y in frame.elements:
                if (block_of[x] == block_of[y]) != congruence.related(x, y):
                    raise InvalidInput("partition is not compatible with meets and joins")
        return congruence


def congruence_closure(frame: Frame, relation: Iterable[tuple[int, int]]) -> Congruence:
    """The least congruence in which ``x <= y`` for every pair of ``relation``.

    A pair kills exactly the join-irreducibles in ``x`` but not in ``y``.
    """
    killed = 0
    for x, y in relation:
        frame.check(x)
        frame.check(y)
        killed |= x & ~y
    return Congruence(frame, frame.top & ~killed)


def congruence_closure_fixpoint(frame: Frame, relation: Iterable[tuple[int, int]]) -> Congruence:
    """The same congruence computed by union-find saturation over all elements.

    Each pair ``(x, y)`` identifies ``x`` with ``x & y``; classes are then merged
    until transitive and compatible with binary meets and joins.
    """
    elements = frame.elements
    pos = {x: i for i, x in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> bool:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[max(ri, rj)] = min(ri, rj)
        return True

    for x, y in relation:
        union(pos[frame.check(x)], pos[x & frame.check(y)])
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(elements):
            ri = find(i)
            for j in range(i + 1, len(elements)):
                if find(j) != ri:
                    continue
                y = elements[j]
                for z in elements:
                    if union(pos[x & z], pos[y & z]) | union(pos[x | z], pos[y | z]):
                        changed = True
    blocks: dict[int, list[int]] = {}
    for i, x in enumerate(elements):
        blocks.setdefault(find(i), []).append(x)
    return Congruence.from_partition(frame, blocks.values())


def principal_congruences(frame: Frame, x: int) -> tuple[Congruence, Congruence]:
    """``(nabla(x), delta(x))``: the least congruences with ``x = 0`` and ``x = 1``."""
    frame.check(x)
    return congruence_closure(frame, [(x, 0)]), congruence_closure(frame, [(frame.top, x)])


def nabla(frame: Frame, x: int) -> Congruence:
    return congruence_closure(frame, [(x, 0)])


def delta(frame: Frame, x: int) -> Congruence:
    return congruence_closure(frame, [(frame.top, x)])


@dataclass(frozen=True)
class Quotient:
    frame: Frame
    map: FrameMap
    congruence: Congruence


def quotient(frame: Frame, congruence: Congruence) -> Quotient:
    """``frame / congruence`` with its quotient map.

    The quotient is the downset frame of the kept join-irreducibles; each of its
    elements is labelled by the largest element of the corresponding class.
    """
    kept = congruence.kept
    sub = frame.poset.restrict(kept)
    keep = list(iter_bits(kept))

    def lift(mask: int) -> int:
        x = 0
        for k in iter_bits(mask):
            x |= 1 << keep[k]
        return x

    def decode(mask: int) -> Label:
        return frame.label(congruence.representative(lift(mask)))

    def encode(label: Label) -> int:
        x = frame.element(label)
        out = 0
        for k, j in enumerate(keep):
            if x >> j & 1:
                out |= 1 << k
        return out

    qframe = Frame(sub, decode=decode, encode=encode, name=f"{frame.name or 'L'}/C")
    qmap = FrameMap(frame, qframe, tuple(keep), check=False)
    return Quotient(qframe, qmap, congruence)


def all_congruences(frame: Frame) -> list[Congruence]:
    """Every congruence, smallest first."""
    n = len(frame.poset)
    caps.check("congruence enumeration (join-irreducibles)", n, caps.current().join_irreducibles)
    full = frame.top
    out = [Congruence(frame, full & ~killed) for killed in range(1 << n)]
    out.sort(key=lambda c: (popcount(c.killed), c.killed))
    return out


def congruence_lattice(frame: Frame) -> Frame:
    """The frame ``A(L)`` of all congruences ordered by inclusion.

    Its elements are the killed sets (a congruence is larger when it kills
    more), so ``A(L)`` is the Boolean frame on ``J(L)``; labels are
    :class:`Congruence` objects.
    """
    n = len(frame.poset)
    caps.check("congruence enumeration (join-irreducibles)", n, caps.current().join_irreducibles)
    poset = Poset.antichain(frame.poset.labels)

    def decode(killed: int) -> Congruence:
        return Congruence(frame, frame.top & ~killed)

    def encode(c: Congruence) -> int:
        if not isinstance(c, Congruence) or c.frame != frame:
            raise ElementNotInFrame(f"{c!r} is not a congruence on {frame!r}")
        return c.killed

    return Frame(poset, decode=decode, encode=encode, name=f"A({frame.name or 'L'})")


def is_frame_map_by_table(source: Frame, target: Frame, fn: Callable[[int], int]) -> bool:
    """Brute-force check of 0, 1, binary meets and joins over all elements."""
    if fn(0) != 0 or fn(source.top) != target.top:
        return False
    elements = source.elements
    for x in elements:
        fx = fn(x)
        for y in elements:
            fy = fn(y)
            if fn(x & y) != fx & fy or fn(x | y) != fx | fy:
                return False
    return True
