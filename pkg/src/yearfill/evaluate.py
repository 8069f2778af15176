"""Evaluation harness: fold masking, metrics, and the coverage model.

Evaluation hides the years of one fold of papers at a time, runs an
estimator, and scores it against the hidden truth.  Coverage counts how
many hidden papers received any estimate; MAE/RMSE measure how far the
estimates land, over covered papers only.

The analytical coverage model predicts the coverage an iterating
estimator can reach from connectivity alone: a missing paper is reachable
exactly when its connected component (in the relevant undirected
projection) contains at least one known-year paper.  Under independent
masking with rate eta, a component of size n is entirely masked with
probability eta**n, which gives a closed-form expected coverage.
"""

from __future__ import annotations

import bisect
import json
import math
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import AcademicGraph, mask
from .runner import run_estimator, validate_pair

K_PRESETS = (8, 5, 4, 3, 2)  # masking rates 1/8 .. 1/2


@dataclass(frozen=True)
class FoldPlan:
    """Assignment of every known-year paper to one of k folds."""

    k: int
    seed: int
    assignment: dict[str, int]

    def members(self, fold: int) -> list[str]:
        return sorted(p for p, f in self.assignment.items() if f == fold)


def plan_folds(g: AcademicGraph, k: int, seed: int) -> FoldPlan:
    """Shuffle known-year papers under the seed, deal them round-robin.

    Fold sizes differ by at most one; leftovers land in the lowest folds.
    """
    if k < 2:
        raise ValueError(f"need at least 2 folds, got {k}")
    known = list(g.known_ids)
    if k > len(known):
        raise ValueError(f"k={k} exceeds the {len(known)} known-year papers")
    rng = random.Random(seed)
    rng.shuffle(known)
    return FoldPlan(k, seed, {p: i % k for i, p in enumerate(known)})


@dataclass(frozen=True)
class FoldResult:
    fold: int
    n_hidden: int
    n_covered: int
    coverage: float
    mae: float | None
    rmse: float | None


@dataclass(frozen=True)
class EvalReport:
    network: str
    algo: str
    k: int
    seed: int
    gamma: float
    eta: float
    folds: tuple[FoldResult, ...]
    coverage: float
    mae: float | None
    rmse: float | None

    def to_csv(self) -> str:
        header = f"# run network={self.network} algo={self.algo} k={self.k} seed={self.seed} gamma={self.gamma}\n"
        lines = [header, "algo,network,eta,K,seed,fold,coverage,mae,rmse\n"]
        for fr in self.folds:
            lines.append(self._row(str(fr.fold), fr.coverage, fr.mae, fr.rmse))
        lines.append(self._row("aggregate", self.coverage, self.mae, self.rmse))
        return "".join(lines)

    def _row(self, fold: str, coverage: float, mae: float | None, rmse: float | None) -> str:
        mae_s = "" if mae is None else str(mae)
        rmse_s = "" if rmse is None else str(rmse)
        return (
            f"{self.algo},{self.network},{self.eta},{self.k},{self.seed},"
            f"{fold},{coverage},{mae_s},{rmse_s}\n"
        )

    def to_json(self) -> str:
        payload = {
            "network": self.network,
            "algo": self.algo,
            "k": self.k,
            "seed": self.seed,
            "gamma": self.gamma,
            "eta": self.eta,
            "coverage": self.coverage,
            "mae": self.mae,
            "rmse": self.rmse,
            "folds": [
                {
                    "fold": fr.fold,
                    "n_hidden": fr.n_hidden,
                    "n_covered": fr.n_covered,
                    "coverage": fr.coverage,
                    "mae": fr.mae,
                    "rmse": fr.rmse,
                }
                for fr in self.folds
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2)


def score_fold(
    fold: int,
    hidden: Iterable[str],
    outcomes: Mapping[str, int | None],
    true_years: Mapping[str, int],
) -> FoldResult:
    """Score one fold's estimates against the hidden truth.

    Uncovered papers count against coverage only; MAE/RMSE are over
    covered papers and are None when nothing was covered.
    """
    hidden = sorted(hidden)
    errors = []
    for p in hidden:
        got = outcomes.get(p)
        if got is not None:
            errors.append(abs(true_years[p] - got))
    n_hidden = len(hidden)
    n_covered = len(errors)
    coverage = n_covered / n_hidden if n_hidden else 0.0
    if n_covered:
        mae = sum(errors) / n_covered
        rmse = math.sqrt(sum(e * e for e in errors) / n_covered)
    else:
        mae = rmse = None
    return FoldResult(fold, n_hidden, n_covered, coverage, mae, rmse)


def evaluate(
    g: AcademicGraph,
    network: str,
    algo: str,
    k: int = 5,
    seed: int = 0,
    gamma: float = 1.0,
    jobs: int = 1,
    counters: Counter | None = None,
) -> EvalReport:
    """K-fold evaluation of one estimator; deterministic for a given seed.

    Folds are independent, so ``jobs`` may run them concurrently; results
    are reduced in fold order either way.
    """
    algo = validate_pair(network, algo)
    plan = plan_folds(g, k, seed)
    true_years = {p: g.year(p) for p in g.known_ids}

    def run_fold(fold: int) -> tuple[FoldResult, Counter]:
        local: Counter = Counter()
        hidden = plan.members(fold)
        outcomes = run_estimator(mask(g, hidden), network, algo, gamma, local).outcomes
        return score_fold(fold, hidden, outcomes, true_years), local

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            scored_folds = list(pool.map(run_fold, range(k)))
    else:
        scored_folds = [run_fold(fold) for fold in range(k)]
    folds = tuple(fr for fr, _ in scored_folds)
    if counters is not None:
        for _, local in scored_folds:
            counters.update(local)

    coverage = sum(fr.coverage for fr in folds) / k
    scored = [fr for fr in folds if fr.n_covered > 0]
    mae = sum(fr.mae for fr in scored) / len(scored) if scored else None
    rmse = sum(fr.rmse for fr in scored) / len(scored) if scored else None
    return EvalReport(network, algo, k, seed, gamma, 1 / k, folds, coverage, mae, rmse)


# --- connectivity projections and the expected-coverage model ---------------


class DisjointSet:
    """Union-find over arbitrary hashable keys, path-halving."""

    def __init__(self, keys: Iterable[str]) -> None:
        self._parent = {k: k for k in keys}
        self._rank = {k: 0 for k in self._parent}

    def find(self, key: str) -> str:
        parent = self._parent
        while parent[key] != key:
            parent[key] = parent[parent[key]]
            key = parent[key]
        return key

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1

    def component_sizes(self) -> list[int]:
        sizes: Counter = Counter(self.find(k) for k in self._parent)
        return sorted(sizes.values(), reverse=True)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected-component sizes of a projection over the paper set."""

    sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def n_components(self) -> int:
        return len(self.sizes)


def _partition(g: AcademicGraph, citation_edges: bool, author_links: bool) -> ComponentPartition:
    dsu = DisjointSet(g.paper_ids)
    if citation_edges:
        for cited, citing in g.citations:
            dsu.union(cited, citing)
    if author_links:
        # union through each author's paper list; never materializes the
        # quadratic shared-author pair set
        for author in g.author_ids:
            papers = g.papers_of[author]
            for q in papers[1:]:
                dsu.union(papers[0], q)
    return ComponentPartition(tuple(dsu.component_sizes()))


def project_citation(g: AcademicGraph) -> ComponentPartition:
    """Components of the citation graph read as undirected."""
    return _partition(g, True, False)


def project_coauthor(g: AcademicGraph) -> ComponentPartition:
    """Components of the papers-sharing-an-author relation."""
    return _partition(g, False, True)


def project_combined(g: AcademicGraph) -> ComponentPartition:
    """Components of the union of both relations."""
    return _partition(g, True, True)


def expected_coverage(parts: ComponentPartition, eta: float) -> float:
    """Expected covered fraction under independent masking at rate eta.

    A component contributes uncovered papers only when every paper in it
    is masked, so the expected uncovered count is ``sum(eta**n * n)`` and
    the expected missing count is ``eta * total``.
    """
    if not 0 < eta < 1:
        raise ValueError(f"eta must be in (0, 1), got {eta}")
    if parts.total == 0:
        raise ValueError("empty partition")
    uncovered = sum(eta**n * n for n in parts.sizes)
    return 1.0 - uncovered / (eta * parts.total)


# --- synthetic corpora -------------------------------------------------------


@dataclass(frozen=True)
class SyntheticParams:
    n_papers: int
    n_authors: int = 0
    mean_citations: float = 0.0
    mean_authors: float = 0.0
    year_min: int = 1990
    year_max: int = 2010


def _poisson(rng: random.Random, lam: float) -> int:
    if lam <= 0:
        return 0
    threshold = math.exp(-lam)
    k = 0
    p = 1.0
    while True:
        p *= rng.random()
        if p <= threshold:
            return k
        k += 1


def generate_synthetic(params: SyntheticParams, seed: int) -> AcademicGraph:
    """Random graph with every year known and no time-travelling citations.

    Papers may only cite papers at or before them in (year, id) order, so
    cleaning is a no-op on the output by construction.  Authors get a
    career centre and papers draw authors active near their own year,
    giving author windows the contiguity real corpora show.  Deterministic
    for a given seed.
    """
    if params.n_papers < 0 or params.n_authors < 0:
        raise ValueError("negative node counts")
    if params.mean_citations < 0 or params.mean_authors < 0:
        raise ValueError("negative edge means")
    if params.year_min > params.year_max:
        raise ValueError("year_min above year_max")

    rng = random.Random(seed)
    width = len(str(max(params.n_papers - 1, 1)))
    paper_ids = [f"p{i:0{width}d}" for i in range(params.n_papers)]
    years = {p: rng.randint(params.year_min, params.year_max) for p in paper_ids}

    order = sorted(paper_ids, key=lambda p: (years[p], p))
    citations = []
    for idx, citing in enumerate(order):
        n_refs = min(idx, _poisson(rng, params.mean_citations))
        if n_refs:
            for jdx in rng.sample(range(idx), n_refs):
                citations.append((order[jdx], citing))

    awidth = len(str(max(params.n_authors - 1, 1)))
    # author index i has career centre centres[i]; centres are sorted so a
    # paper's plausible coauthors form a contiguous index block
    centres = sorted(
        rng.uniform(params.year_min, params.year_max) for _ in range(params.n_authors)
    )
    authorships = []
    for p in paper_ids:
        n_auth = min(params.n_authors, _poisson(rng, params.mean_authors))
        if not n_auth:
            continue
        pos = bisect.bisect_left(centres, years[p])
        reach = max(4 * n_auth, 8)
        lo = max(0, min(pos - reach, params.n_authors - 2 * reach))
        block = range(lo, min(params.n_authors, lo + 2 * reach))
        for i in rng.sample(block, min(n_auth, len(block))):
            authorships.append((f"a{i:0{awidth}d}", p))

    return AcademicGraph(
        years, citations, authorships, year_bounds=(params.year_min, params.year_max)
    )


def three_paper_topologies(year: int = 2000) -> list[AcademicGraph]:
    """The seven 3-paper, 2-edge citation shapes, up to swapping the ends.

    All papers share one year so every orientation is time-consistent.
    Shapes 6 and 7 are the ones where propagation cannot reach one end
    from the middle, which is what makes the coverage model an upper
    bound rather than an exact prediction for window propagation.
    """
    shapes = [
        [("a", "b"), ("c", "b")],  # 1: middle paper cites both ends
        [("b", "a"), ("b", "c")],  # 2: both ends cite the middle
        [("a", "b"), ("b", "c")],  # 3: chain, one direction
        [("b", "a"), ("a", "c")],  # 4: chain through an end
        [("a", "b"), ("c", "a")],  # 5: chain through an end, reversed
        [("b", "a"), ("c", "a")],  # 6: one end cites the other two
        [("a", "b"), ("a", "c")],  # 7: one end cited by the other two
    ]
    years = {"a": year, "b": year, "c": year}
    bounds = (year - 5, year + 5)
    return [AcademicGraph(years, edges, year_bounds=bounds) for edges in shapes]
