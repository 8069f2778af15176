"""Core data model: papers, citation edges, authorship edges.

The graph is immutable once built.  Loading and preprocessing happen at
construction time; estimation algorithms only read.  Masking is an
immutable overlay that hides the years of selected papers, used by the
evaluation harness to simulate missing data.

Citation edges are ordered pairs ``(cited, citing)``: the citing paper is
assumed to appear no earlier than the paper it cites.  Authorship edges
are ``(author, paper)`` pairs.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_YEAR_BOUNDS = (1900, 2013)


class LoadError(ValueError):
    """Raised for malformed input files; message names file and line."""


@dataclass(frozen=True)
class Paper:
    id: str
    year: int | None


@dataclass
class LoadReport:
    """Counts of records kept and records repaired or dropped at load."""

    papers: int = 0
    citation_edges: int = 0
    authorship_edges: int = 0
    dangling: int = 0
    duplicate_papers: int = 0
    duplicate_edges: int = 0
    self_citations: int = 0
    rejected_years: int = 0

    def summary(self) -> str:
        return (
            f"papers={self.papers} citation_edges={self.citation_edges} "
            f"authorship_edges={self.authorship_edges} dangling={self.dangling} "
            f"duplicate_papers={self.duplicate_papers} duplicate_edges={self.duplicate_edges} "
            f"self_citations={self.self_citations} rejected_years={self.rejected_years}"
        )


@dataclass
class PreprocessReport:
    """Counts of edges and papers removed during cleaning."""

    violations: int = 0
    stripped_papers: int = 0
    stripped_citations: int = 0
    stripped_authorships: int = 0

    def summary(self) -> str:
        return (
            f"violations={self.violations} stripped_papers={self.stripped_papers} "
            f"stripped_citations={self.stripped_citations} "
            f"stripped_authorships={self.stripped_authorships}"
        )


class AcademicGraph:
    """Papers with optional years plus citation and authorship relations.

    All id collections are kept sorted so every traversal in the package is
    deterministic.  Construction validates structural invariants: edge
    endpoints must exist, no self-citations, no duplicate edges.
    """

    def __init__(
        self,
        years: Mapping[str, int | None],
        citations: Iterable[tuple[str, str]] = (),
        authorships: Iterable[tuple[str, str]] = (),
        year_bounds: tuple[int, int] = DEFAULT_YEAR_BOUNDS,
    ) -> None:
        self._years = dict(years)
        self.year_bounds = year_bounds
        raw_citations = tuple(citations)
        raw_authorships = tuple(authorships)
        if len(set(raw_citations)) != len(raw_citations):
            raise ValueError("duplicate citation edges")
        if len(set(raw_authorships)) != len(raw_authorships):
            raise ValueError("duplicate authorship edges")
        self.citations = tuple(sorted(raw_citations))
        self.authorships = tuple(sorted(raw_authorships))

        for cited, citing in self.citations:
            if cited == citing:
                raise ValueError(f"self-citation on {cited!r}")
            if cited not in self._years or citing not in self._years:
                raise ValueError(f"citation edge ({cited!r}, {citing!r}) has unknown paper")
        for _author, paper in self.authorships:
            if paper not in self._years:
                raise ValueError(f"authorship edge references unknown paper {paper!r}")

        self.paper_ids = tuple(sorted(self._years))
        self.known_ids = tuple(p for p in self.paper_ids if self._years[p] is not None)
        self.missing_ids = tuple(p for p in self.paper_ids if self._years[p] is None)
        self.author_ids = tuple(sorted({a for a, _ in self.authorships}))

        citers: dict[str, list[str]] = {p: [] for p in self.paper_ids}
        refs: dict[str, list[str]] = {p: [] for p in self.paper_ids}
        for cited, citing in self.citations:
            citers[cited].append(citing)
            refs[citing].append(cited)
        self.citers_of = {p: tuple(v) for p, v in citers.items()}
        self.refs_of = {p: tuple(v) for p, v in refs.items()}

        papers_of: dict[str, list[str]] = {a: [] for a in self.author_ids}
        authors_of: dict[str, list[str]] = {p: [] for p in self.paper_ids}
        for author, paper in self.authorships:
            papers_of[author].append(paper)
            authors_of[paper].append(author)
        self.papers_of = {a: tuple(v) for a, v in papers_of.items()}
        self.authors_of = {p: tuple(v) for p, v in authors_of.items()}

    def year(self, paper_id: str) -> int | None:
        return self._years[paper_id]

    def papers(self) -> list[Paper]:
        return [Paper(p, self._years[p]) for p in self.paper_ids]

    def years(self) -> dict[str, int | None]:
        return dict(self._years)


class MaskedGraph:
    """Read view of a graph with the years of selected papers hidden.

    Hidden papers behave exactly like papers whose year was never known.
    The true year of a hidden paper is reachable only through
    :meth:`true_year`, which exists for validation.
    """

    def __init__(self, base: AcademicGraph, hidden: Iterable[str] = ()) -> None:
        self.base = base
        self.hidden = frozenset(hidden)
        for p in self.hidden:
            if p not in base._years:
                raise ValueError(f"cannot hide unknown paper {p!r}")
            if base.year(p) is None:
                raise ValueError(f"cannot hide {p!r}: year already missing")
        self.paper_ids = base.paper_ids
        self.author_ids = base.author_ids
        self.citations = base.citations
        self.authorships = base.authorships
        self.citers_of = base.citers_of
        self.refs_of = base.refs_of
        self.papers_of = base.papers_of
        self.authors_of = base.authors_of
        self.year_bounds = base.year_bounds
        self.missing_ids = tuple(
            p for p in base.paper_ids if base.year(p) is None or p in self.hidden
        )
        self.known_ids = tuple(
            p for p in base.known_ids if p not in self.hidden
        )

    def year(self, paper_id: str) -> int | None:
        if paper_id in self.hidden:
            return None
        return self.base.year(paper_id)

    def true_year(self, paper_id: str) -> int | None:
        """Ground-truth year regardless of masking; validation only."""
        return self.base.year(paper_id)

    def visible_years(self) -> dict[str, int]:
        return {p: self.base.year(p) for p in self.known_ids}  # type: ignore[misc]


def mask(graph: AcademicGraph, hidden: Iterable[str]) -> MaskedGraph:
    """Hide the years of ``hidden`` papers; they must currently have one."""
    return MaskedGraph(graph, hidden)


def as_masked(graph: AcademicGraph | MaskedGraph) -> MaskedGraph:
    if isinstance(graph, MaskedGraph):
        return graph
    return MaskedGraph(graph, ())


def _read_rows(path: Path, n_fields: int) -> Iterable[tuple[int, list[str]]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != n_fields:
                raise LoadError(
                    f"{path}:{lineno}: expected {n_fields} tab-separated fields, got {len(fields)}"
                )
            yield lineno, fields


def load_graph(
    papers_path: str | Path,
    citations_path: str | Path | None = None,
    authorships_path: str | Path | None = None,
    year_bounds: tuple[int, int] = DEFAULT_YEAR_BOUNDS,
) -> tuple[AcademicGraph, LoadReport]:
    """Load a graph from TSV sources, repairing what can be repaired.

    Papers outside the configured year window are rejected (counted).
    Edge endpoints that name no loaded paper are materialized as papers
    with a missing year (counted as dangling).  Duplicate edges and
    self-citations are dropped with counts.
    """
    report = LoadReport()
    years: dict[str, int | None] = {}
    lo, hi = year_bounds

    for lineno, fields in _read_rows(Path(papers_path), 2):
        pid, year_text = fields[0].strip(), fields[1].strip()
        if not pid:
            raise LoadError(f"{papers_path}:{lineno}: empty paper id")
        if year_text == "":
            year: int | None = None
        else:
            try:
                year = int(year_text)
            except ValueError:
                raise LoadError(f"{papers_path}:{lineno}: bad year {year_text!r}") from None
            if not lo <= year <= hi:
                report.rejected_years += 1
                continue
        if pid in years:
            if years[pid] != year:
                raise LoadError(f"{papers_path}:{lineno}: conflicting duplicate paper {pid!r}")
            report.duplicate_papers += 1
            continue
        years[pid] = year

    def materialize(pid: str) -> None:
        if pid not in years:
            years[pid] = None
            report.dangling += 1

    citations: list[tuple[str, str]] = []
    seen_edges: set[tuple[str, str]] = set()
    if citations_path is not None:
        for lineno, fields in _read_rows(Path(citations_path), 2):
            cited, citing = fields[0].strip(), fields[1].strip()
            if not cited or not citing:
                raise LoadError(f"{citations_path}:{lineno}: empty paper id")
            if cited == citing:
                report.self_citations += 1
                continue
            if (cited, citing) in seen_edges:
                report.duplicate_edges += 1
                continue
            seen_edges.add((cited, citing))
            materialize(cited)
            materialize(citing)
            citations.append((cited, citing))

    authorships: list[tuple[str, str]] = []
    seen_auth: set[tuple[str, str]] = set()
    if authorships_path is not None:
        for lineno, fields in _read_rows(Path(authorships_path), 2):
            author, paper = fields[0].strip(), fields[1].strip()
            if not author or not paper:
                raise LoadError(f"{authorships_path}:{lineno}: empty id")
            if (author, paper) in seen_auth:
                report.duplicate_edges += 1
                continue
            seen_auth.add((author, paper))
            materialize(paper)
            authorships.append((author, paper))

    graph = AcademicGraph(years, citations, authorships, year_bounds=year_bounds)
    report.papers = len(graph.paper_ids)
    report.citation_edges = len(graph.citations)
    report.authorship_edges = len(graph.authorships)
    return graph, report


def preprocess(
    graph: AcademicGraph, strip_missing: bool = False
) -> tuple[AcademicGraph, PreprocessReport]:
    """Drop citation edges whose known years run backwards in time.

    An edge is a violation when both endpoint years are known and the cited
    paper is dated after the citing one; equal years are fine.  With
    ``strip_missing`` papers lacking a year are removed together with their
    incident edges, which is how a ground-truth corpus is prepared.
    """
    report = PreprocessReport()
    keep_citations = []
    for cited, citing in graph.citations:
        y_cited, y_citing = graph.year(cited), graph.year(citing)
        if y_cited is not None and y_citing is not None and y_cited > y_citing:
            report.violations += 1
            continue
        keep_citations.append((cited, citing))

    years = graph.years()
    authorships = list(graph.authorships)
    if strip_missing:
        missing = {p for p, y in years.items() if y is None}
        report.stripped_papers = len(missing)
        n_cit = len(keep_citations)
        keep_citations = [
            e for e in keep_citations if e[0] not in missing and e[1] not in missing
        ]
        report.stripped_citations = n_cit - len(keep_citations)
        n_auth = len(authorships)
        authorships = [e for e in authorships if e[1] not in missing]
        report.stripped_authorships = n_auth - len(authorships)
        years = {p: y for p, y in years.items() if y is not None}

    cleaned = AcademicGraph(
        years, keep_citations, authorships, year_bounds=graph.year_bounds
    )
    return cleaned, report


def write_graph(graph: AcademicGraph, out_dir: str | Path) -> None:
    """Write papers/citations/authorships TSVs; stable order, no comments."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "papers.tsv", "w", encoding="utf-8") as fh:
        for pid in graph.paper_ids:
            year = graph.year(pid)
            fh.write(f"{pid}\t{'' if year is None else year}\n")
    with open(out / "citations.tsv", "w", encoding="utf-8") as fh:
        for cited, citing in graph.citations:
            fh.write(f"{cited}\t{citing}\n")
    with open(out / "authorships.tsv", "w", encoding="utf-8") as fh:
        for author, paper in graph.authorships:
            fh.write(f"{author}\t{paper}\n")
