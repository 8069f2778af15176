"""Shared fixtures: the two small worked-example graphs and their goldens."""

from pathlib import Path

import pytest

from yearfill import AcademicGraph, mask

DATA = Path(__file__).parent / "data"

# Small citation network: twelve papers, ten edges, five missing years.
CITATION_YEARS = {
    "a": None,
    "b": None,
    "c": 1993,
    "d": 1999,
    "e": None,
    "f": 2003,
    "g": 2001,
    "h": 2007,
    "i": None,
    "j": None,
    "k": 2005,
    "l": 2006,
}
CITATION_EDGES = [
    ("a", "d"),
    ("c", "d"),
    ("d", "e"),
    ("e", "h"),
    ("e", "i"),
    ("f", "i"),
    ("g", "i"),
    ("i", "j"),
    ("i", "k"),
    ("i", "l"),
]

# Small bipartite network: eight papers, four authors, four missing years.
COAUTHOR_YEARS = {
    "a": 1996,
    "b": 1999,
    "c": None,
    "d": 2002,
    "e": 2003,
    "f": None,
    "g": None,
    "h": None,
}
COAUTHOR_EDGES = [
    ("i", "a"),
    ("i", "b"),
    ("i", "c"),
    ("j", "c"),
    ("j", "d"),
    ("j", "e"),
    ("k", "c"),
    ("k", "d"),
    ("k", "f"),
    ("l", "f"),
    ("l", "g"),
]


@pytest.fixture
def citation_graph():
    return AcademicGraph(CITATION_YEARS, CITATION_EDGES)


@pytest.fixture
def citation_masked(citation_graph):
    return mask(citation_graph, ())


@pytest.fixture
def coauthor_graph():
    return AcademicGraph(COAUTHOR_YEARS, [], COAUTHOR_EDGES)


@pytest.fixture
def coauthor_masked(coauthor_graph):
    return mask(coauthor_graph, ())


@pytest.fixture
def hetero_graph():
    """Both edge types on one paper set (citation papers + author overlay)."""
    authorships = [
        ("u1", "e"),
        ("u1", "f"),
        ("u2", "e"),
        ("u2", "f"),
        ("u3", "a"),
        ("u3", "c"),
        ("u4", "j"),
        ("u4", "k"),
        ("u4", "l"),
    ]
    return AcademicGraph(CITATION_YEARS, CITATION_EDGES, authorships)
