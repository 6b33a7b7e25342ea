"""Career-level analyses: h over time, output rate, author rank, m and cohorts."""
from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import NamedTuple, Sequence

from . import kernels
from .errors import EmptyInputError, InvalidArgumentError, ParseError, ValidationError
from .metrics import RankedPaper


class CareerPaper(NamedTuple):
    year: int
    paper: RankedPaper
    pub_id: str = ""
    alphabetical: bool = False


@dataclass(frozen=True)
class CareerRecord:
    """A researcher's papers with citation counts frozen at ``snapshot_year``."""

    papers: tuple[CareerPaper, ...]
    snapshot_year: int
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        papers = tuple(p if isinstance(p, CareerPaper) else CareerPaper(*p) for p in self.papers)
        object.__setattr__(self, "papers", papers)
        for p in papers:
            if p.year > self.snapshot_year:
                raise ValidationError(
                    f"paper {p.pub_id or '?'} published in {p.year}, after snapshot year {self.snapshot_year}"
                )

    @property
    def first_year(self) -> int | None:
        return min((p.year for p in self.papers), default=None)

    @property
    def publishing_age(self) -> int:
        """Years from first paper to snapshot, both ends counted."""
        self._require_papers()
        return self.snapshot_year - self.first_year + 1

    def ranked_papers(self) -> list[RankedPaper]:
        return [p.paper for p in self.papers]

    def without_alphabetical(self) -> CareerRecord:
        return replace(self, papers=tuple(p for p in self.papers if not p.alphabetical))

    def _require_papers(self):
        if not self.papers:
            raise EmptyInputError("career record has no papers")


@dataclass(frozen=True)
class CareerSeries:
    points: tuple[tuple[int, float], ...]

    def __post_init__(self):
        points = tuple((int(y), v) for y, v in self.points)
        object.__setattr__(self, "points", points)
        for (a, _), (b, _) in zip(points, points[1:]):
            if b <= a:
                raise ValidationError(f"series years must be strictly increasing ({a} then {b})")

    @property
    def years(self) -> list[int]:
        return [y for y, _ in self.points]

    @property
    def values(self) -> list:
        return [v for _, v in self.points]

    def __len__(self):
        return len(self.points)

    def as_dict(self) -> dict:
        return dict(self.points)


def h_trajectory(record: CareerRecord, modified: bool = False) -> CareerSeries:
    """h (or weighted h) using papers published up to each year, with all citations to date.

    Citations are a single snapshot, so early points credit papers with
    citations they earned later.
    """
    record._require_papers()
    years = [p.year for p in record.papers]
    nums = [p.paper.citations for p in record.papers]
    dens = [p.paper.auth_rank if modified else 1 for p in record.papers]
    first = record.first_year
    hs = kernels.prefix_h(years, nums, dens, first, record.snapshot_year)
    return CareerSeries(tuple(zip(range(first, record.snapshot_year + 1), hs)))


def publication_rate(record: CareerRecord) -> CareerSeries:
    record._require_papers()
    counts = dict.fromkeys(range(record.first_year, record.snapshot_year + 1), 0)
    for p in record.papers:
        counts[p.year] += 1
    return CareerSeries(tuple(counts.items()))


def average_author_rank(record: CareerRecord) -> CareerSeries:
    """Mean author position per year; years without papers are left out."""
    record._require_papers()
    by_year: dict[int, list[int]] = {}
    for p in record.papers:
        by_year.setdefault(p.year, []).append(p.paper.auth_rank)
    return CareerSeries(tuple((y, statistics.fmean(r)) for y, r in sorted(by_year.items())))


def m_coefficient(h: int, publishing_age: int) -> float:
    if publishing_age < 1:
        raise InvalidArgumentError(f"publishing age must be >= 1, got {publishing_age}")
    return h / publishing_age


def m_fit(series: CareerSeries, first_year: int | None = None) -> float:
    """Least-squares slope through the origin of h against publishing age.

    Age of point ``i`` is ``year_i - first_year + 1``; ``first_year``
    defaults to the first year in the series.
    """
    if not series.points:
        raise EmptyInputError("cannot fit an empty series")
    if first_year is None:
        first_year = series.points[0][0]
    ages = [y - first_year + 1 for y in series.years]
    if any(a < 1 for a in ages):
        raise InvalidArgumentError("series starts before first_year")
    num = sum(a * h for a, h in zip(ages, series.values))
    den = sum(a * a for a in ages)
    return num / den


@dataclass(frozen=True)
class CohortRow:
    name: str
    h: int
    h_mod: int
    c: int
    c_mod: int
    m: float
    m_mod: float

    def __post_init__(self):
        for raw, mod in (("h", "h_mod"), ("c", "c_mod"), ("m", "m_mod")):
            if getattr(self, mod) > getattr(self, raw):
                raise ValidationError(f"{self.name}: {mod} exceeds {raw}")


COHORT_COLUMNS = ("h", "h_mod", "c", "c_mod", "m", "m_mod")


@dataclass(frozen=True)
class CohortSummary:
    size: int
    mean: dict
    stdev: dict
    reduction: dict  # relative drop of the mean, keyed by "h", "c", "m"


def cohort_stats(rows: Sequence[CohortRow]) -> CohortSummary:
    """Means, sample standard deviations and mean reductions over a cohort."""
    if len(rows) < 2:
        raise InvalidArgumentError(f"cohort statistics need at least 2 rows, got {len(rows)}")
    mean = {}
    stdev = {}
    for col in COHORT_COLUMNS:
        vals = [getattr(r, col) for r in rows]
        mean[col] = statistics.fmean(vals)
        stdev[col] = statistics.stdev(vals)
    reduction = {}
    for col in ("h", "c", "m"):
        raw, mod = mean[col], mean[col + "_mod"]
        reduction[col] = (raw - mod) / raw if raw else 0.0
    return CohortSummary(len(rows), mean, stdev, reduction)


def read_cohort_csv(text: str) -> list[CohortRow]:
    """Rows from CSV with header ``name,h,h_mod,c,c_mod,m,m_mod``."""
    reader = csv.DictReader(io.StringIO(text))
    missing = {"name", *COHORT_COLUMNS} - set(reader.fieldnames or ())
    if missing:
        raise ParseError(f"cohort CSV missing columns: {', '.join(sorted(missing))}", line=1)
    rows = []
    for row in reader:
        try:
            rows.append(
                CohortRow(
                    name=row["name"],
                    h=int(row["h"]),
                    h_mod=int(row["h_mod"]),
                    c=int(row["c"].replace(",", "")),
                    c_mod=int(row["c_mod"].replace(",", "")),
                    m=float(row["m"]),
                    m_mod=float(row["m_mod"]),
                )
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ParseError(str(exc), line=reader.line_num) from None
    return rows


def cohort_h110_rows() -> list[CohortRow]:
    """The bundled eleven-researcher cohort (h >= 110 computer scientists)."""
    text = resources.files("citeweight").joinpath("data/top_cs_h110.csv").read_text(encoding="utf-8")
    return read_cohort_csv(text)
