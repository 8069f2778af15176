"""Missing-year estimation over the author-paper bipartite graph.

Authors tend to publish inside a contiguous span of years.  Each author
gets an *active window* -- the min/max over the years of their papers --
and a missing paper's window is built from its authors' active windows.
Iterating feeds each round's estimates back into the author windows, so
information travels across coauthorships.

Estimator variants:

* ``ba``   -- one pass: author windows from known years only.
* ``iter`` -- repeat passes until nothing changes.
* ``adviter`` -- like ``iter``, but a paper that shares two or more
  authors with known-year papers is pinned to a weighted average of those
  papers' years instead of a window midpoint; repeated coauthor groups
  publish close together, so these guesses are the most trustworthy ones
  to propagate.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from .citation import clamp_estimate
from .graph import MaskedGraph
from .windows import (
    NO_LOWER,
    NO_UPPER,
    OPEN_WINDOW,
    Window,
    round_half_up,
    window_year,
)


class AuthorWindowTracker:
    """Accumulating author active windows.

    Windows only ever widen: each sweep folds in the known years and the
    current estimates of the author's papers.  That monotonicity is what
    makes the iterative estimators terminate.
    """

    def __init__(self, g: MaskedGraph) -> None:
        self._g = g
        self._years = g.visible_years()
        # min-accumulator starts empty-high, max-accumulator empty-low
        self._lo: dict[str, float] = {a: NO_UPPER for a in g.author_ids}
        self._hi: dict[str, float] = {a: NO_LOWER for a in g.author_ids}

    def sweep(self, estimates: Mapping[str, int | None]) -> bool:
        """Fold current paper years/estimates into every author window.

        Returns True when at least one window moved.
        """
        changed = False
        for author, paper in self._g.authorships:
            year = self._years.get(paper)
            if year is None:
                year = estimates.get(paper)
            if year is None:
                continue
            if year < self._lo[author]:
                self._lo[author] = year
                changed = True
            if year > self._hi[author]:
                self._hi[author] = year
                changed = True
        return changed

    def author_window(self, author: str) -> Window:
        lo, hi = self._lo[author], self._hi[author]
        if lo > hi:  # nothing accumulated yet
            return OPEN_WINDOW
        return Window(lo, hi)

    def paper_window(self, paper: str) -> Window:
        """Window for a paper implied by its authors' active windows.

        The tightest-looking combination is (latest window start, earliest
        window end); author windows need not intersect, so the pair is
        sorted before use.  Papers with no informative author stay open.
        """
        max_min = NO_LOWER
        min_max = NO_UPPER
        for author in self._g.authors_of[paper]:
            lo, hi = self._lo[author], self._hi[author]
            if lo > hi:
                continue
            if lo > max_min:
                max_min = lo
            if hi < min_max:
                min_max = hi
        return Window(min(max_min, min_max), max(max_min, min_max))


def author_windows(
    g: MaskedGraph, estimates: Mapping[str, int | None] | None = None
) -> dict[str, Window]:
    """Active window per author over known years plus supplied estimates."""
    tracker = AuthorWindowTracker(g)
    tracker.sweep(estimates or {})
    return {a: tracker.author_window(a) for a in g.author_ids}


def paper_window_from_authors(
    g: MaskedGraph, paper: str, estimates: Mapping[str, int | None] | None = None
) -> Window:
    """One-shot paper window; see :meth:`AuthorWindowTracker.paper_window`."""
    tracker = AuthorWindowTracker(g)
    tracker.sweep(estimates or {})
    return tracker.paper_window(paper)


def build_pair_index(g: MaskedGraph) -> dict[str, dict[str, int]]:
    """Map each paper to the papers sharing at least two authors with it.

    Values are shared-author counts; the index is symmetric.  Papers with
    no qualifying partner are absent.
    """
    counts: dict[str, Counter] = {}
    for author in g.author_ids:
        papers = g.papers_of[author]
        for i, p in enumerate(papers):
            for q in papers[i + 1 :]:
                counts.setdefault(p, Counter())[q] += 1
                counts.setdefault(q, Counter())[p] += 1
    index: dict[str, dict[str, int]] = {}
    for p, partners in counts.items():
        kept = {q: n for q, n in partners.items() if n >= 2}
        if kept:
            index[p] = kept
    return index


def weighted_year(
    paper: str,
    index: Mapping[str, Mapping[str, int]],
    g: MaskedGraph,
    gamma: float = 1.0,
) -> int | None:
    """Shared-author-weighted mean year over a paper's known partners.

    Weights are ``count ** gamma``; gamma 0 gives the plain average.  None
    when no partner has a visible year.
    """
    years = g.visible_years()
    num = 0.0
    den = 0.0
    for q, count in index.get(paper, {}).items():
        y = years.get(q)
        if y is None:
            continue
        w = count**gamma
        num += w * y
        den += w
    if den == 0.0:
        return None
    return round_half_up(num / den)


@dataclass
class AuthorshipRun:
    """Converged state of an authorship estimation."""

    outcomes: dict[str, int | None]
    paper_windows: dict[str, Window]
    author_windows: dict[str, Window]
    rounds: int
    converged: bool


def run_authorship(
    g: MaskedGraph,
    iterate: bool = True,
    pair_weighting: bool = False,
    gamma: float = 1.0,
    counters: Counter | None = None,
) -> AuthorshipRun:
    tracker = AuthorWindowTracker(g)
    estimates: dict[str, int | None] = {}
    pinned: dict[str, int] = {}
    if pair_weighting:
        index = build_pair_index(g)
        for p in g.missing_ids:
            got = weighted_year(p, index, g, gamma)
            if got is not None:
                pinned[p] = clamp_estimate(got, g.year_bounds, counters)

    round_cap = max(2, len(g.paper_ids)) if iterate else 1
    paper_windows: dict[str, Window] = {}
    rounds = 0
    converged = False
    while rounds < round_cap:
        rounds += 1
        changed = tracker.sweep(estimates)
        for p in g.missing_ids:
            win = tracker.paper_window(p)
            paper_windows[p] = win
            if p in pinned:
                year: int | None = pinned[p]
            else:
                year = window_year(win)
                if year is not None:
                    year = clamp_estimate(year, g.year_bounds, counters)
            if estimates.get(p, None) != year or p not in estimates:
                estimates[p] = year
                changed = True
        if not changed:
            converged = True
            break
        if not iterate:
            break
    if iterate and not converged and counters is not None:
        counters["round_cap_hits"] += 1

    aw = {a: tracker.author_window(a) for a in g.author_ids}
    return AuthorshipRun(estimates, paper_windows, aw, rounds, converged or not iterate)


def estimate_ba(g: MaskedGraph, counters: Counter | None = None) -> dict[str, int | None]:
    """Single-pass estimate: author windows from known years only."""
    return run_authorship(g, iterate=False, counters=counters).outcomes


def estimate_iter(g: MaskedGraph, counters: Counter | None = None) -> dict[str, int | None]:
    """Iterated estimate; previous rounds' guesses widen author windows."""
    return run_authorship(g, iterate=True, counters=counters).outcomes


def estimate_adviter(
    g: MaskedGraph, gamma: float = 1.0, counters: Counter | None = None
) -> dict[str, int | None]:
    """Iterated estimate with coauthor-pair weighted years taking priority."""
    return run_authorship(
        g, iterate=True, pair_weighting=True, gamma=gamma, counters=counters
    ).outcomes
