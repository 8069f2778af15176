"""Missing-year estimation over the citation graph.

The constraint is that a paper is published no earlier than anything it
cites.  Each citation edge ``(cited, citing)`` therefore yields a lower
bound on the citing paper's year and an upper bound on the cited paper's.

Three estimator variants are exposed:

* ``ss`` -- windows from direct neighbours with known years; midpoint guess.
* ``as`` -- windows propagated to a fixpoint across chains of year-missing
  papers (a lower bound of a cited paper also bounds its citers, and an
  upper bound of a citing paper also bounds what it cites); midpoint guess.
* ``aa`` -- same propagated windows, plus a calibration table harvested
  from known-year papers: each known paper pretends its year is missing,
  derives a window from its neighbourhood the same way, and one-sided
  windows become (year, window kind, bound) samples.  A missing paper with
  a one-sided window is then guessed as the mean year of samples sharing
  its window kind and bound value, falling back to the bound itself when
  no sample matches.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .graph import MaskedGraph
from .windows import (
    NO_LOWER,
    NO_UPPER,
    Window,
    WindowKind,
    normalized,
    round_half_up,
    window_year,
)

VARIANTS = ("ss", "as", "aa")


class CalibrationSample(NamedTuple):
    """One known-year paper's pretend window, keyed by kind and bound."""

    year: int
    kind: WindowKind
    bound: int


def clamp_estimate(
    year: int, year_bounds: tuple[int, int], counters: Counter | None = None
) -> int:
    """Clamp an estimate to the input year window widened by 5 years."""
    lo, hi = year_bounds[0] - 5, year_bounds[1] + 5
    clamped = min(max(year, lo), hi)
    if clamped != year and counters is not None:
        counters["clamped_estimates"] += 1
    return clamped


def _materialize(
    ids: Sequence[str],
    lo: dict[str, float],
    hi: dict[str, float],
    counters: Counter | None,
) -> dict[str, Window]:
    out = {}
    for p in ids:
        win, swapped = normalized(lo[p], hi[p])
        if swapped and counters is not None:
            counters["swapped_windows"] += 1
        out[p] = win
    return out


def derive_simple_windows(
    g: MaskedGraph, counters: Counter | None = None
) -> dict[str, Window]:
    """Window per missing paper from direct known-year neighbours only.

    Lower bound: latest known year among the papers it cites.  Upper bound:
    earliest known year among the papers citing it.
    """
    years = g.visible_years()
    missing = g.missing_ids
    lo = {p: NO_LOWER for p in missing}
    hi = {p: NO_UPPER for p in missing}
    for p in missing:
        for ref in g.refs_of[p]:
            y = years.get(ref)
            if y is not None and y > lo[p]:
                lo[p] = y
        for citer in g.citers_of[p]:
            y = years.get(citer)
            if y is not None and y < hi[p]:
                hi[p] = y
    return _materialize(missing, lo, hi, counters)


def _propagate(
    g: MaskedGraph,
    with_pretend: bool,
    edge_order: Sequence[tuple[str, str]] | None,
) -> tuple[dict[str, float], dict[str, float]]:
    """Run the bound-propagation loop to a fixpoint.

    Bounds of missing papers are built from known neighbour years and from
    bounds of adjacent missing papers.  With ``with_pretend`` every known
    paper additionally accumulates a window as if its own year were hidden;
    those pretend bounds never feed back into anyone else's window.

    Terminates because bounds only tighten and only take values drawn from
    the finite set of known years.  The fixpoint is independent of the edge
    order; ``edge_order`` exists so tests can prove that.
    """
    years = g.visible_years()
    edges = tuple(edge_order) if edge_order is not None else g.citations
    lo = {p: NO_LOWER for p in g.paper_ids}
    hi = {p: NO_UPPER for p in g.paper_ids}

    changed = True
    while changed:
        changed = False
        for cited, citing in edges:
            y_cited = years.get(cited)
            y_citing = years.get(citing)
            if y_cited is None and y_citing is None:
                if lo[cited] > lo[citing]:
                    lo[citing] = lo[cited]
                    changed = True
                if hi[citing] < hi[cited]:
                    hi[cited] = hi[citing]
                    changed = True
            elif y_cited is not None and y_citing is None:
                if y_cited > lo[citing]:
                    lo[citing] = y_cited
                    changed = True
                if with_pretend and hi[citing] < hi[cited]:
                    hi[cited] = hi[citing]
                    changed = True
            elif y_cited is None and y_citing is not None:
                if y_citing < hi[cited]:
                    hi[cited] = y_citing
                    changed = True
                if with_pretend and lo[cited] > lo[citing]:
                    lo[citing] = lo[cited]
                    changed = True
            else:
                if with_pretend:
                    if y_cited > lo[citing]:
                        lo[citing] = y_cited
                        changed = True
                    if y_citing < hi[cited]:
                        hi[cited] = y_citing
                        changed = True
    return lo, hi


def derive_advanced_windows(
    g: MaskedGraph,
    edge_order: Sequence[tuple[str, str]] | None = None,
    counters: Counter | None = None,
) -> dict[str, Window]:
    """Fixpoint-propagated window per missing paper."""
    lo, hi = _propagate(g, with_pretend=False, edge_order=edge_order)
    return _materialize(g.missing_ids, lo, hi, counters)


def derive_windows_with_training(
    g: MaskedGraph,
    edge_order: Sequence[tuple[str, str]] | None = None,
    counters: Counter | None = None,
) -> tuple[dict[str, Window], list[CalibrationSample]]:
    """Propagated windows for every paper plus the calibration samples.

    Missing papers get exactly the windows of
    :func:`derive_advanced_windows`; known papers get pretend windows.  A
    known paper whose pretend window is one-sided contributes one sample.
    """
    lo, hi = _propagate(g, with_pretend=True, edge_order=edge_order)
    windows = _materialize(g.paper_ids, lo, hi, counters)
    samples = []
    for p in g.known_ids:
        win = windows[p]
        if win.kind is WindowKind.LOWER_ONLY:
            samples.append(CalibrationSample(g.year(p), win.kind, int(win.lower)))
        elif win.kind is WindowKind.UPPER_ONLY:
            samples.append(CalibrationSample(g.year(p), win.kind, int(win.upper)))
    samples.sort(key=lambda s: (s.kind.value, s.bound, s.year))
    return windows, samples


def calibration_lookup(
    samples: Sequence[CalibrationSample], kind: WindowKind, bound: int
) -> int | None:
    """Mean year of samples matching (kind, bound) exactly; None if none do."""
    matched = [s.year for s in samples if s.kind is kind and s.bound == bound]
    if not matched:
        return None
    return round_half_up(sum(matched) / len(matched))


def _calibrated_year(
    window: Window, samples: Sequence[CalibrationSample]
) -> int | None:
    kind = window.kind
    if kind is WindowKind.LOWER_ONLY:
        got = calibration_lookup(samples, kind, int(window.lower))
        return got if got is not None else window_year(window)
    if kind is WindowKind.UPPER_ONLY:
        got = calibration_lookup(samples, kind, int(window.upper))
        return got if got is not None else window_year(window)
    return window_year(window)


@dataclass
class CitationRun:
    """Everything a citation-variant run produced."""

    variant: str
    windows: dict[str, Window]
    outcomes: dict[str, int | None]
    samples: list[CalibrationSample] = field(default_factory=list)


def run_citation(
    g: MaskedGraph, variant: str, counters: Counter | None = None
) -> CitationRun:
    if variant not in VARIANTS:
        raise ValueError(f"unknown citation variant {variant!r}")
    samples: list[CalibrationSample] = []
    if variant == "ss":
        windows = derive_simple_windows(g, counters=counters)
    elif variant == "as":
        windows = derive_advanced_windows(g, counters=counters)
    else:
        all_windows, samples = derive_windows_with_training(g, counters=counters)
        windows = {p: all_windows[p] for p in g.missing_ids}

    outcomes: dict[str, int | None] = {}
    for p in g.missing_ids:
        win = windows[p]
        year = _calibrated_year(win, samples) if variant == "aa" else window_year(win)
        if year is not None:
            year = clamp_estimate(year, g.year_bounds, counters)
        outcomes[p] = year
    return CitationRun(variant, windows, outcomes, samples)


def estimate_citation(
    g: MaskedGraph, variant: str, counters: Counter | None = None
) -> dict[str, int | None]:
    """Estimate every missing paper's year; None marks an uncovered paper."""
    return run_citation(g, variant, counters=counters).outcomes
