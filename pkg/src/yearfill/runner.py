"""Dispatch table from (network, algorithm) names to estimator runs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import authorship, citation, hetero
from .graph import MaskedGraph
from .windows import Window

NETWORK_ALGOS = {
    "citation": ("ss", "as", "aa"),
    "authorship": ("ba", "iter", "adviter"),
    "hetero": ("ssba", "asiter", "adviter"),
}

# accepted spelling that disambiguates the hetero variant from the
# bipartite one in prose and scripts
_ALIASES = {("hetero", "g-adviter"): "adviter"}


@dataclass
class EstimatorRun:
    """Outcome map plus the windows behind it, for reporting."""

    network: str
    algo: str
    outcomes: dict[str, int | None]
    windows: dict[str, Window]


def validate_pair(network: str, algo: str) -> str:
    """Return the canonical algorithm id, raising on a bad pairing."""
    algo = _ALIASES.get((network, algo), algo)
    if network not in NETWORK_ALGOS:
        raise ValueError(f"unknown network {network!r}")
    if algo not in NETWORK_ALGOS[network]:
        raise ValueError(
            f"algorithm {algo!r} is not valid for network {network!r} "
            f"(expected one of {', '.join(NETWORK_ALGOS[network])})"
        )
    return algo


def run_estimator(
    g: MaskedGraph,
    network: str,
    algo: str,
    gamma: float = 1.0,
    counters: Counter | None = None,
) -> EstimatorRun:
    algo = validate_pair(network, algo)
    if network == "citation":
        run = citation.run_citation(g, algo, counters=counters)
        return EstimatorRun(network, algo, run.outcomes, run.windows)
    if network == "authorship":
        result = authorship.run_authorship(
            g,
            iterate=algo != "ba",
            pair_weighting=algo == "adviter",
            gamma=gamma,
            counters=counters,
        )
        return EstimatorRun(network, algo, result.outcomes, result.paper_windows)
    hrun = hetero.run_hetero(g, algo, gamma=gamma, counters=counters)
    return EstimatorRun(network, algo, hrun.outcomes, hrun.windows)
