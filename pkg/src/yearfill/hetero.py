"""Missing-year estimation over citation and authorship edges together.

Each missing paper gets two windows: one from the citation graph, one from
its authors' active windows.  They are merged with priority on the
citation window, which is the more trustworthy of the two because author
windows absorb earlier rounds' guesses:

* neither informative -> no estimate;
* only one informative -> that side's algorithm applies unchanged;
* both informative     -> intersection when the author window is
  consistent with the citation one, otherwise the citation window wins
  (collapsing to the citation bound when the windows are disjoint).

Variants pair up the per-graph estimators: ``ssba`` (direct windows, one
author pass), ``asiter`` (propagated windows, iterated author passes) and
``adviter`` (propagated windows plus the calibration table and
coauthor-pair weighting, iterated).
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from .authorship import AuthorWindowTracker, build_pair_index, weighted_year
from .citation import (
    CalibrationSample,
    calibration_lookup,
    clamp_estimate,
    derive_advanced_windows,
    derive_simple_windows,
    derive_windows_with_training,
)
from .graph import MaskedGraph
from .windows import Window, WindowKind, round_half_up, window_year

ALGOS = ("ssba", "asiter", "adviter")


class CombinedCase(enum.Enum):
    """Which sides contributed to a combined window."""

    NEITHER = "neither"
    AUTHORS_ONLY = "authors"
    CITATIONS_ONLY = "citations"
    BOTH = "both"


@dataclass(frozen=True)
class CombinedWindow:
    window: Window
    case: CombinedCase


def combine_windows(cite_win: Window, auth_win: Window) -> CombinedWindow:
    """Merge the two windows with citation priority.

    When both are informative, the merge depends on the citation window's
    kind: a two-sided citation window is narrowed to the author window only
    if that window sits fully inside it; a one-sided citation window takes
    the author bounds compatible with it and collapses to its own bound
    when the windows do not intersect at all.
    """
    ck, ak = cite_win.kind, auth_win.kind
    if ck is WindowKind.OPEN and ak is WindowKind.OPEN:
        return CombinedWindow(Window(), CombinedCase.NEITHER)
    if ck is WindowKind.OPEN:
        return CombinedWindow(auth_win, CombinedCase.AUTHORS_ONLY)
    if ak is WindowKind.OPEN:
        return CombinedWindow(cite_win, CombinedCase.CITATIONS_ONLY)

    if ck is WindowKind.CLOSED:
        if auth_win.lower < cite_win.lower or auth_win.upper > cite_win.upper:
            merged = cite_win
        else:
            merged = Window(
                max(cite_win.lower, auth_win.lower),
                min(cite_win.upper, auth_win.upper),
            )
    elif ck is WindowKind.LOWER_ONLY:
        if auth_win.upper < cite_win.lower:
            merged = Window(cite_win.lower, cite_win.lower)
        else:
            merged = Window(max(cite_win.lower, auth_win.lower), auth_win.upper)
    else:  # UPPER_ONLY
        if auth_win.lower > cite_win.upper:
            merged = Window(cite_win.upper, cite_win.upper)
        else:
            merged = Window(auth_win.lower, min(cite_win.upper, auth_win.upper))
    return CombinedWindow(merged, CombinedCase.BOTH)


def weighted_year_windowed(
    paper: str,
    index: Mapping[str, Mapping[str, int]],
    g: MaskedGraph,
    gamma: float,
    year_lo: float,
    year_hi: float,
) -> int | None:
    """Like :func:`weighted_year` but only over partners dated in a window."""
    if year_lo > year_hi:
        raise ValueError("weighted_year_windowed: lower bound above upper")
    years = g.visible_years()
    num = 0.0
    den = 0.0
    for q, count in index.get(paper, {}).items():
        y = years.get(q)
        if y is None or not year_lo <= y <= year_hi:
            continue
        w = count**gamma
        num += w * y
        den += w
    if den == 0.0:
        return None
    return round_half_up(num / den)


@dataclass(frozen=True)
class _Calibrated:
    """Per-paper statics for the adviter value rule (all mask-invariant)."""

    d_year: int | None  # calibrated guess for the one-sided citation bound
    wg_year: int | None  # windowed weighted year over the derived span


def _calibrate_paper(
    p: str,
    cw: Window,
    samples: list[CalibrationSample],
    index: dict[str, dict[str, int]],
    g: MaskedGraph,
    gamma: float,
) -> _Calibrated:
    kind = cw.kind
    if kind is WindowKind.CLOSED:
        return _Calibrated(None, weighted_year_windowed(p, index, g, gamma, cw.lower, cw.upper))
    if kind is WindowKind.LOWER_ONLY:
        d_year = calibration_lookup(samples, kind, int(cw.lower))
        # span reaches twice the calibrated offset past the bound; a
        # calibrated guess at or before the bound degenerates to the bound
        delta = max(0, d_year - int(cw.lower)) if d_year is not None else 0
        wg = weighted_year_windowed(p, index, g, gamma, cw.lower, cw.lower + 2 * delta)
        return _Calibrated(d_year, wg)
    if kind is WindowKind.UPPER_ONLY:
        d_year = calibration_lookup(samples, kind, int(cw.upper))
        delta = max(0, int(cw.upper) - d_year) if d_year is not None else 0
        wg = weighted_year_windowed(p, index, g, gamma, cw.upper - 2 * delta, cw.upper)
        return _Calibrated(d_year, wg)
    return _Calibrated(None, None)


def _adviter_value(
    cw: Window, aw: Window, combined: CombinedWindow, cal: _Calibrated
) -> int | None:
    """Value rule for adviter when the citation window is informative."""
    if cal.wg_year is not None:
        return cal.wg_year
    kind = cw.kind
    if kind is WindowKind.CLOSED or cal.d_year is None:
        return window_year(combined.window)
    if combined.case is CombinedCase.CITATIONS_ONLY:
        # only the citation side is informative: plain calibrated guess
        return cal.d_year
    disjoint = (
        aw.upper < cw.lower if kind is WindowKind.LOWER_ONLY else aw.lower > cw.upper
    )
    if disjoint or combined.window.contains(cal.d_year):
        return cal.d_year
    return window_year(combined.window)


@dataclass
class HeteroRun:
    """Converged state of a combined-network estimation."""

    outcomes: dict[str, int | None]
    windows: dict[str, Window]
    cases: dict[str, CombinedCase]
    rounds: int
    converged: bool


def run_hetero(
    g: MaskedGraph, algo: str, gamma: float = 1.0, counters: Counter | None = None
) -> HeteroRun:
    if algo not in ALGOS:
        raise ValueError(f"unknown hetero algorithm {algo!r}")

    samples: list[CalibrationSample] = []
    calibrated: dict[str, _Calibrated] = {}
    pinned: dict[str, int] = {}
    if algo == "ssba":
        cite_windows = derive_simple_windows(g, counters=counters)
    elif algo == "asiter":
        cite_windows = derive_advanced_windows(g, counters=counters)
    else:
        all_windows, samples = derive_windows_with_training(g, counters=counters)
        cite_windows = {p: all_windows[p] for p in g.missing_ids}
        index = build_pair_index(g)
        for p in g.missing_ids:
            calibrated[p] = _calibrate_paper(p, cite_windows[p], samples, index, g, gamma)
            got = weighted_year(p, index, g, gamma)
            if got is not None:
                pinned[p] = got  # authors-only fallback when citations say nothing

    tracker = AuthorWindowTracker(g)
    estimates: dict[str, int | None] = {}
    windows: dict[str, Window] = {}
    cases: dict[str, CombinedCase] = {}
    single_pass = algo == "ssba"
    round_cap = 1 if single_pass else max(2, len(g.paper_ids))
    rounds = 0
    converged = False
    while rounds < round_cap:
        rounds += 1
        changed = tracker.sweep(estimates)
        for p in g.missing_ids:
            cw = cite_windows[p]
            aw = tracker.paper_window(p)
            combined = combine_windows(cw, aw)
            windows[p] = combined.window
            cases[p] = combined.case
            if algo == "adviter":
                if combined.case is CombinedCase.NEITHER:
                    year: int | None = None
                elif combined.case is CombinedCase.AUTHORS_ONLY:
                    year = pinned.get(p)
                    if year is None:
                        year = window_year(combined.window)
                else:
                    year = _adviter_value(cw, aw, combined, calibrated[p])
            else:
                year = window_year(combined.window)
            if year is not None:
                year = clamp_estimate(year, g.year_bounds, counters)
            if estimates.get(p, None) != year or p not in estimates:
                estimates[p] = year
                changed = True
        if not changed:
            converged = True
            break
        if single_pass:
            break
    if not single_pass and not converged and counters is not None:
        counters["round_cap_hits"] += 1

    return HeteroRun(estimates, windows, cases, rounds, converged or single_pass)


def estimate_ssba(g: MaskedGraph, counters: Counter | None = None) -> dict[str, int | None]:
    """Direct citation windows merged with one author-window pass."""
    return run_hetero(g, "ssba", counters=counters).outcomes


def estimate_asiter(g: MaskedGraph, counters: Counter | None = None) -> dict[str, int | None]:
    """Propagated citation windows merged with iterated author passes."""
    return run_hetero(g, "asiter", counters=counters).outcomes


def estimate_g_adviter(
    g: MaskedGraph, gamma: float = 1.0, counters: Counter | None = None
) -> dict[str, int | None]:
    """Full combination: calibration table plus windowed pair weighting."""
    return run_hetero(g, "adviter", gamma=gamma, counters=counters).outcomes
