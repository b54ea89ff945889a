"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BifrmError(Exception):
    """Base class for all errors raised by :mod:`bifrm`."""


class InvalidInput(BifrmError, ValueError):
    """Malformed data: a relation that is not an order, a family that is not a topology, ..."""


class NotDistributive(InvalidInput):
    """A finite lattice failed the distributive law, so it is not a frame."""


class NotALattice(InvalidInput):
    """A finite poset lacks some binary meet or join, or a bound."""


class ElementNotInFrame(InvalidInput):
    """An element (or label) does not belong to the frame it was used with."""


class NotAFrameMap(InvalidInput):
    """A function between frames fails to preserve 0, 1, finite meets or joins."""


class NotInjective(InvalidInput):
    """A component injection of a biframe is not one-to-one."""


class NotGenerating(InvalidInput):
    """The images of the two components do not generate the main component."""


class InjectionCollapsed(BifrmError):
    """A presentation identified distinct elements of a component."""


class SizeCapExceeded(BifrmError):
    """A computation would exceed the configured enumeration cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
