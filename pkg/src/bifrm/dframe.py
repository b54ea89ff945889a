"""Finite d-frames: two frames with a consistency (``con``) and a totality (``tot``) relation.

``con`` and ``tot`` are sets of pairs ``(a+, a-)`` of element masks.  The
functors to and from finitary biframes and the d-spectrum live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .biframe import Biframe, Spectrum, present, spectrum_from_pairs
from .errors import InvalidInput
from .frame import Frame, FrameMap

Pair = tuple[int, int]

AXIOMS = ("con-downset", "con-joins", "tot-upset", "tot-meets", "balance")


@dataclass(frozen=True)
class DFrame:
    plus: Frame
    minus: Frame
    con: frozenset[Pair]
    tot: frozenset[Pair]

    def __post_init__(self) -> None:
        for a, b in self.con | self.tot:
            if a not in self.plus or b not in self.minus:
                raise InvalidInput(f"pair {(a, b)!r} is not in L+ x L-")

    def pairs(self) -> list[Pair]:
        return list(product(self.plus.elements, self.minus.elements))


def _homogeneous_violation(rel: frozenset[Pair], combine, empty: Pair) -> Pair | None:
    """A pair of ``rel`` members sharing a coordinate whose combination escapes ``rel``."""
    if empty not in rel:
        return empty
    items = sorted(rel)
    for i, (a1, b1) in enumerate(items):
        for a2, b2 in items[i + 1 :]:
            if a1 == a2 or b1 == b2:
                c = (combine(a1, a2), combine(b1, b2))
                if c not in rel:
                    return c
    return None


def violations(d: DFrame) -> list[str]:
    """Violated d-frame axioms (empty when ``d`` is a d-frame).

    Homogeneous joins of ``con`` and meets of ``tot`` include the empty family,
    so ``(0, 0)`` must be consistent and ``(1, 1)`` total.
    """
    problems: list[str] = []
    plus, minus = d.plus, d.minus
    for a, b in d.con:
        for x in plus.elements:
            for y in minus.elements:
                if plus.leq(x, a) and minus.leq(y, b) and (x, y) not in d.con:
                    problems.append(f"con-downset: {(x, y)} below {(a, b)} is missing")
                    break
            else:
                continue
            break
        if problems:
            break
    bad = _homogeneous_violation(d.con, lambda x, y: x | y, (0, 0))
    if bad is not None:
        problems.append(f"con-joins: homogeneous join {bad} is missing")
    for a, b in d.tot:
        missing = next(
            (
                (x, y)
                for x in plus.elements
                for y in minus.elements
                if plus.leq(a, x) and minus.leq(b, y) and (x, y) not in d.tot
            ),
            None,
        )
        if missing is not None:
            problems.append(f"tot-upset: {missing} above {(a, b)} is missing")
            break
    bad = _homogeneous_violation(d.tot, lambda x, y: x & y, (plus.top, minus.top))
    if bad is not None:
        problems.append(f"tot-meets: homogeneous meet {bad} is missing")
    for (a, b1), (a2, b2) in product(d.con, d.tot):
        if a == a2 and not minus.leq(b1, b2):
            problems.append(f"balance: {(a, b1)} in con and {(a, b2)} in tot but {b1} not <= {b2}")
            break
    for (a1, b), (a2, b2) in product(d.con, d.tot):
        if b == b2 and not plus.leq(a1, a2):
            problems.append(f"balance: {(a1, b)} in con and {(a2, b)} in tot but {a1} not <= {a2}")
            break
    return problems


def validate_dframe(d: DFrame) -> list[str]:
    return violations(d)


def normalize(
    plus: Frame, minus: Frame, con: Iterable[Pair], tot: Iterable[Pair]
) -> tuple[DFrame, dict[str, list[Pair]]]:
    """Close ``con`` downward and under homogeneous joins, ``tot`` dually.

    Returns the closed quadruple and the pairs that had to be added.  Balance
    is not something closure can repair; :func:`violations` reports it.
    """
    con0, tot0 = set(con), set(tot)
    closed_con = _close(plus, minus, con0 | {(0, 0)}, down=True)
    closed_tot = _close(plus, minus, tot0 | {(plus.top, minus.top)}, down=False)
    d = DFrame(plus, minus, frozenset(closed_con), frozenset(closed_tot))
    return d, {"con": sorted(closed_con - con0), "tot": sorted(closed_tot - tot0)}


def _close(plus: Frame, minus: Frame, rel: set[Pair], *, down: bool) -> set[Pair]:
    elements = list(product(plus.elements, minus.elements))
    while True:
        before = len(rel)
        if down:
            rel |= {(x, y) for x, y in elements if any(plus.leq(x, a) and minus.leq(y, b) for a, b in rel)}
        else:
            rel |= {(x, y) for x, y in elements if any(plus.leq(a, x) and minus.leq(b, y) for a, b in rel)}
        items = list(rel)
        for a1, b1 in items:
            for a2, b2 in items:
                if a1 == a2 or b1 == b2:
                    rel.add((a1 | a2, b1 | b2) if down else (a1 & a2, b1 & b2))
        if len(rel) == before:
            return rel


# ---------------------------------------------------------------------------
# functors


def delta_functor(b: Biframe) -> DFrame:
    """``con = {e+ a & e- b = 0}``, ``tot = {e+ a | e- b = 1}``."""
    con = set()
    tot = set()
    for a in b.plus.elements:
        ea = b.inj_plus(a)
        for c in b.minus.elements:
            ec = b.inj_minus(c)
            if ea & ec == 0:
                con.add((a, c))
            if ea | ec == b.main.top:
                tot.add((a, c))
    return DFrame(b.plus, b.minus, frozenset(con), frozenset(tot))


def gamma_relation(d: DFrame) -> list[Pair]:
    """``(<a+> & <a->, 0)`` for consistent pairs and ``(1, <a+> | <a->)`` for total ones."""
    from .frame import coproduct

    cp = coproduct(d.plus, d.minus)
    rel = [(cp.inj_left(a) & cp.inj_right(b), 0) for a, b in sorted(d.con)]
    rel += [(cp.frame.top, cp.inj_left(a) | cp.inj_right(b)) for a, b in sorted(d.tot)]
    return rel


def gamma_functor(d: DFrame) -> Biframe:
    """The finitary biframe presented by the d-frame's disjointness and covering data."""
    return present(d.plus, d.minus, gamma_relation(d)).biframe


def dpoint_pairs(d: DFrame) -> list[Pair]:
    """Pairs ``(p, q)`` with ``f+ a = 0 or f- b = 0`` on ``con`` and ``f+ a = 1 or f- b = 1`` on ``tot``."""
    out = []
    for p in range(len(d.plus.poset)):
        for q in range(len(d.minus.poset)):
            if any(a >> p & 1 and b >> q & 1 for a, b in d.con):
                continue
            if any(not a >> p & 1 and not b >> q & 1 for a, b in d.tot):
                continue
            out.append((p, q))
    return out


def dpoints(d: DFrame) -> Spectrum:
    return spectrum_from_pairs(d.plus, d.minus, dpoint_pairs(d))


def is_dframe_map(source: DFrame, target: DFrame, plus: FrameMap, minus: FrameMap) -> bool:
    """Frame maps on both sides carrying ``con`` into ``con`` and ``tot`` into ``tot``."""
    return all((plus(a), minus(b)) in target.con for a, b in source.con) and all(
        (plus(a), minus(b)) in target.tot for a, b in source.tot
    )
