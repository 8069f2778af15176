"""Year windows: integer intervals whose ends may be unknown.

A window is the set of calendar years a paper could plausibly have been
published in.  Either end may be absent; absent ends are carried as the
float infinities so that ``min``/``max`` arithmetic stays branch-free.
The infinities are internal sentinels only -- they are rendered as
``-inf`` / ``+inf`` at serialization boundaries and never leak into
estimates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

NO_LOWER = float("-inf")
NO_UPPER = float("inf")


class WindowKind(enum.Enum):
    """Classification of a window by which of its ends are known."""

    CLOSED = "closed"  # both ends known
    LOWER_ONLY = "lower"  # only the earliest possible year is known
    UPPER_ONLY = "upper"  # only the latest possible year is known
    OPEN = "open"  # nothing is known

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Window:
    """A closed year interval ``[lower, upper]`` with optional open ends."""

    lower: float = NO_LOWER
    upper: float = NO_UPPER

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"inverted window [{self.lower}, {self.upper}]")

    @property
    def kind(self) -> WindowKind:
        has_lower = self.lower != NO_LOWER
        has_upper = self.upper != NO_UPPER
        if has_lower and has_upper:
            return WindowKind.CLOSED
        if has_lower:
            return WindowKind.LOWER_ONLY
        if has_upper:
            return WindowKind.UPPER_ONLY
        return WindowKind.OPEN

    def contains(self, year: float) -> bool:
        return self.lower <= year <= self.upper

    def __str__(self) -> str:
        lo = "-inf" if self.lower == NO_LOWER else str(int(self.lower))
        hi = "+inf" if self.upper == NO_UPPER else str(int(self.upper))
        return f"[{lo}, {hi}]"


OPEN_WINDOW = Window()


def round_half_up(value: float) -> int:
    """Round to the nearest integer, ties toward the later year."""
    return math.floor(value + 0.5)


def window_year(window: Window) -> int | None:
    """Single-year guess supported by a window.

    Midpoint when both ends are known (ties round up), the known end when
    only one exists, None when the window carries no information.
    """
    kind = window.kind
    if kind is WindowKind.CLOSED:
        return round_half_up((window.lower + window.upper) / 2)
    if kind is WindowKind.LOWER_ONLY:
        return int(window.lower)
    if kind is WindowKind.UPPER_ONLY:
        return int(window.upper)
    return None


def normalized(lower: float, upper: float) -> tuple[Window, bool]:
    """Build a window from raw bounds, swapping them if inverted.

    Returns the window and whether a swap was needed.  Inverted raw bounds
    can only arise from propagation over inconsistent source data.
    """
    if lower > upper:
        return Window(upper, lower), True
    return Window(lower, upper), False
