"""Enumeration caps.

Every enumerating routine consults :func:`current` before it starts and raises
:class:`~bifrm.errors.SizeCapExceeded` instead of running away.  Defaults can be
overridden per process with the ``BIFRM_CAPS`` environment variable
(``"frame_elements=8192,join_irreducibles=14"``) or temporarily with
:func:`override`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from typing import Iterator

from .errors import InvalidInput, SizeCapExceeded

ENV_VAR = "BIFRM_CAPS"


@dataclass(frozen=True)
class Caps:
    #: Largest number of elements a frame may have when its elements are listed.
    frame_elements: int = 4096
    #: Largest number of join-irreducibles when all congruences are enumerated
    #: (the congruence lattice of a finite frame has 2**|J| elements).
    join_irreducibles: int = 12
    #: Largest number of candidate assignments tried by frame-map enumeration.
    map_search: int = 2_000_000
    #: Default number of points for bispace enumeration.
    max_points: int = 4
    #: Largest number of points accepted by bispace enumeration.
    enumerate_points: int = 5


def _from_env() -> Caps:
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return Caps()
    known = {f.name for f in fields(Caps)}
    values: dict[str, int] = {}
    for item in raw.split(","):
        if not item.strip():
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in known:
            raise InvalidInput(f"unknown cap {key!r} in {ENV_VAR}")
        try:
            values[key] = int(value)
        except ValueError as exc:
            raise InvalidInput(f"cap {key!r} needs an integer, got {value!r}") from exc
    return replace(Caps(), **values)


_current: Caps | None = None


def current() -> Caps:
    global _current
    if _current is None:
        _current = _from_env()
    return _current


@contextmanager
def override(**changes: int) -> Iterator[Caps]:
    """Temporarily replace some caps."""
    global _current
    previous = current()
    _current = replace(previous, **changes)
    try:
        yield _current
    finally:
        _current = previous


def check(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise SizeCapExceeded(what, size, cap)
