"""JSON loading and dumping, and Graphviz DOT export.

Formats (all element and point names are strings)::

    poset    {"elements": ["a", "b"], "leq": [["a", "b"]]}
    frame    {"elements": [...], "leq": [...]}            a distributive lattice
             {"chain": n} | {"boolean": n}
             {"poset": <poset>}                           its downset lattice
    biframe  {"plus": <frame>, "minus": <frame>, "relations": [["a+ & b-", "c+ | d-"], ...]}
    dframe   {"plus": <frame>, "minus": <frame>, "con": [["a", "b"]], "tot": [...]}
    bispace  {"points": [...], "tauP": [["x", "y"], ...], "tauM": [...]}

Biframe relations are inequalities ``lhs <= rhs`` between expressions over
the generators: ``name+`` (an element of the positive frame), ``name-``,
``0``, ``1``, ``&``, ``|`` and parentheses.  Loaders that close a family
(topologies, ``con``/``tot``) report what they added.
"""

from __future__ import annotations

import json
import re
from typing import Any, Callable

from .biframe import Biframe, present
from .dframe import DFrame, normalize, violations
from .errors import InvalidInput
from .frame import Frame, boolean_frame, chain_frame, coproduct, frame_from_lattice
from .poset import FiniteLattice, Poset, downset_lattice, iter_bits, popcount, validate_frame
from .spaces import Bispace

__all__ = [
    "biframe_from_json",
    "biframe_to_json",
    "bispace_from_json",
    "bispace_to_json",
    "detect_kind",
    "dframe_from_json",
    "dframe_to_json",
    "dumps",
    "frame_from_json",
    "frame_to_dot",
    "frame_to_json",
    "load",
    "poset_from_json",
    "poset_to_json",
]


def _require(data: Any, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InvalidInput(f"missing field {key!r}")
    return data[key]


def _names(values: Any, what: str) -> list[str]:
    if not isinstance(values, list):
        raise InvalidInput(f"{what} must be a list")
    out = [str(v) for v in values]
    if len(set(out)) != len(out):
        raise InvalidInput(f"{what} contains duplicates")
    return out


# -- posets and frames --------------------------------------------------------


def poset_from_json(data: Any) -> Poset:
    elements = _names(_require(data, "elements"), "elements")
    pairs = []
    for pair in data.get("leq", []):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InvalidInput(f"leq entries must be pairs, got {pair!r}")
        a, b = str(pair[0]), str(pair[1])
        if a not in elements or b not in elements:
            raise InvalidInput(f"leq mentions an unknown element in {pair!r}")
        pairs.append((a, b))
    return Poset.from_relation(elements, pairs)


def poset_to_json(poset: Poset) -> dict:
    names = [_name(label) for label in poset.labels]
    return {"elements": names, "leq": [[names[a], names[b]] for a, b in poset.cover_pairs()]}


def frame_from_json(data: Any) -> Frame:
    if isinstance(data, dict) and "chain" in data:
        return chain_frame(int(data["chain"]))
    if isinstance(data, dict) and "boolean" in data:
        return boolean_frame(int(data["boolean"]))
    for key in ("poset", "downsets"):
        if isinstance(data, dict) and key in data:
            return downset_lattice(poset_from_json(data[key]))
    lattice = FiniteLattice(poset_from_json(data))
    problems = validate_frame(lattice)
    if problems:
        raise InvalidInput(f"not a frame: {problems[0]}")
    return frame_from_lattice(lattice)


def _name(label: Any) -> str:
    if isinstance(label, frozenset):
        return "{" + ",".join(sorted(_name(x) for x in label)) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(_name(x) for x in label) + ")"
    return str(label)


def frame_element_names(frame: Frame) -> dict[int, str]:
    """Printable, distinct names for the elements of ``frame``.

    Chains are named by height (``0 < 1 < ... < n-1``).
    """
    poset = frame.poset
    if all(poset.leq(i, j) or poset.leq(j, i) for i in range(len(poset)) for j in range(len(poset))):
        return {x: str(popcount(x)) for x in frame.elements}
    names = {x: _name(frame.label(x)).replace(" ", "") for x in frame.elements}
    if len(set(names.values())) != len(names) or any(re.search(r"[&|()]", n) for n in names.values()):
        names = {x: f"e{frame.position(x)}" for x in frame.elements}
    return names


def frame_to_json(frame: Frame) -> dict:
    names = frame_element_names(frame)
    return {
        "elements": [names[x] for x in frame.elements],
        "leq": [[names[a], names[b]] for a, b in frame.cover_pairs()],
    }


# -- biframes -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\(|\)|&|\||[^\s&|()]+)")


class _Parser:
    def __init__(self, text: str, atom: Callable[[str], int], top: int) -> None:
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise InvalidInput(f"cannot read expression {text!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0
        self.atom = atom
        self.top = top

    def parse(self) -> int:
        value = self._join()
        if self.i != len(self.tokens):
            raise InvalidInput(f"unexpected {self.tokens[self.i]!r}")
        return value

    def _peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _join(self) -> int:
        value = self._meet()
        while self._peek() == "|":
            self.i += 1
            value |= self._meet()
        return value

    def _meet(self) -> int:
        value = self._atom()
        while self._peek() == "&":
            self.i += 1
            value &= self._atom()
        return value

    def _atom(self) -> int:
        tok = self._peek()
        if tok is None:
            raise InvalidInput("expression ends too early")
        self.i += 1
        if tok == "(":
            value = self._join()
            if self._peek() != ")":
                raise InvalidInput("unbalanced parentheses")
            self.i += 1
            return value
        if tok == "0":
            return 0
        if tok == "1":
            return self.top
        return self.atom(tok)


def biframe_from_json(data: Any) -> Biframe:
    plus = frame_from_json(_require(data, "plus"))
    minus = frame_from_json(_require(data, "minus"))
    cp = coproduct(plus, minus)
    lookup = {
        "+": {n: x for x, n in frame_element_names(plus).items()},
        "-": {n: x for x, n in frame_element_names(minus).items()},
    }

    def atom(token: str) -> int:
        name, sign = token[:-1], token[-1:]
        if sign not in lookup or name not in lookup[sign]:
            raise InvalidInput(f"unknown generator {token!r} (write name+ or name-)")
        x = lookup[sign][name]
        return cp.inj_left(x) if sign == "+" else cp.inj_right(x)

    relation = []
    for pair in data.get("relations", []):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InvalidInput(f"relations are pairs of expressions, got {pair!r}")
        lhs = _Parser(str(pair[0]), atom, cp.frame.top).parse()
        rhs = _Parser(str(pair[1]), atom, cp.frame.top).parse()
        relation.append((lhs, rhs))
    return present(plus, minus, relation).biframe


def biframe_to_json(b: Biframe) -> dict:
    """Components plus a generating set of the inequalities that hold in ``b``."""
    pn, mn = frame_element_names(b.plus), frame_element_names(b.minus)
    pp, mp = b.plus.poset, b.minus.poset
    relations = []
    for p, q in b.ji_pairs():
        a, c = pp.down[p], mp.down[q]
        d, e = pp.full & ~pp.up[p], mp.full & ~mp.up[q]
        if b.main.leq(b.generator(a, c), b.cogenerator(d, e)):
            relations.append([f"{pn[a]}+ & {mn[c]}-", f"{pn[d]}+ | {mn[e]}-"])
    return {"plus": frame_to_json(b.plus), "minus": frame_to_json(b.minus), "relations": relations}


# -- d-frames -----------------------------------------------------------------


def dframe_from_json(data: Any) -> tuple[DFrame, dict]:
    """The normalised d-frame and a report of additions and remaining violations."""
    plus = frame_from_json(_require(data, "plus"))
    minus = frame_from_json(_require(data, "minus"))
    pl = {n: x for x, n in frame_element_names(plus).items()}
    ml = {n: x for x, n in frame_element_names(minus).items()}

    def pairs(key: str) -> list[tuple[int, int]]:
        out = []
        for pair in data.get(key, []):
            if not (isinstance(pair, list) and len(pair) == 2) or str(pair[0]) not in pl or str(pair[1]) not in ml:
                raise InvalidInput(f"bad {key} entry {pair!r}")
            out.append((pl[str(pair[0])], ml[str(pair[1])]))
        return out

    d, added = normalize(plus, minus, pairs("con"), pairs("tot"))
    pn, mn = frame_element_names(plus), frame_element_names(minus)
    report = {
        "added": {k: [[pn[a], mn[b]] for a, b in v] for k, v in added.items()},
        "violations": violations(d),
    }
    return d, report


def dframe_to_json(d: DFrame) -> dict:
    pn, mn = frame_element_names(d.plus), frame_element_names(d.minus)
    return {
        "plus": frame_to_json(d.plus),
        "minus": frame_to_json(d.minus),
        "con": sorted([pn[a], mn[b]] for a, b in d.con),
        "tot": sorted([pn[a], mn[b]] for a, b in d.tot),
    }


# -- bispaces -----------------------------------------------------------------


def bispace_from_json(data: Any) -> tuple[Bispace, dict]:
    points = _names(_require(data, "points"), "points")
    index = {p: i for i, p in enumerate(points)}

    def family(key: str) -> list[int]:
        out = []
        for subset in data.get(key, []):
            if not isinstance(subset, list):
                raise InvalidInput(f"{key} entries must be lists of points")
            mask = 0
            for p in subset:
                if str(p) not in index:
                    raise InvalidInput(f"{key} mentions unknown point {p!r}")
                mask |= 1 << index[str(p)]
            out.append(mask)
        return out

    space, added = Bispace.generated(points, family("tauP"), family("tauM"))
    report = {"added": {k: [sorted(space.labels_of(u), key=points.index) for u in v] for k, v in added.items()}}
    return space, report


def bispace_to_json(space: Bispace) -> dict:
    names = [_name(p) for p in space.points]

    def fam(tau: frozenset[int]) -> list[list[str]]:
        return [[names[i] for i in iter_bits(u)] for u in sorted(tau, key=lambda u: (bin(u).count("1"), u))]

    return {"points": names, "tauP": fam(space.tau_plus), "tauM": fam(space.tau_minus)}


# -- dispatch -----------------------------------------------------------------


def detect_kind(data: Any) -> str:
    if not isinstance(data, dict):
        raise InvalidInput("top-level JSON value must be an object")
    if "points" in data:
        return "bispace"
    if "con" in data or "tot" in data:
        return "dframe"
    if "plus" in data and "minus" in data:
        return "biframe"
    if {"elements", "chain", "boolean", "poset", "downsets"} & data.keys():
        return "frame"
    raise InvalidInput("cannot tell what kind of object this JSON describes")


def load(path: str) -> tuple[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from None
    return detect_kind(data), data


def dumps(value: Any) -> str:
    """Canonical JSON text (sorted keys, fixed separators)."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False)


def frame_to_dot(frame: Frame, name: str = "frame") -> str:
    """Hasse diagram of ``frame`` (bottom at the bottom)."""
    names = frame_element_names(frame)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in frame.elements:
        lines.append(f'  n{frame.position(x)} [label="{names[x]}"];')
    for a, b in frame.cover_pairs():
        lines.append(f"  n{frame.position(a)} -> n{frame.position(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_from_frame(frame: Frame) -> Poset:
    """The order of the elements of ``frame`` as an explicit poset."""
    names = frame_element_names(frame)
    return Poset.from_relation([names[x] for x in frame.elements], [(names[a], names[b]) for a, b in frame.cover_pairs()])
