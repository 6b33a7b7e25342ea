"""Citation indexes and their rank-weighted variants.

Citation values are exact rationals (:class:`fractions.Fraction`); plain
``int`` counts are accepted wherever a value is expected.  A paper in which
the researcher is listed at position ``r`` contributes ``citations / r`` to
a weighted index, the most credit any ``r``-th author can be owed when
authors are ordered by contribution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from . import kernels
from .errors import InvalidArgumentError, InvalidRankError

CitationValue = Fraction
Number = Union[int, Fraction]


@dataclass(frozen=True)
class RankedPaper:
    """One paper seen from one researcher: citations and their author position."""

    citations: int
    auth_rank: int = 1

    def __post_init__(self):
        if isinstance(self.auth_rank, bool) or not isinstance(self.auth_rank, int) or self.auth_rank < 1:
            raise InvalidRankError(f"author rank must be a positive integer, got {self.auth_rank!r}")
        if isinstance(self.citations, bool) or not isinstance(self.citations, int) or self.citations < 0:
            raise InvalidArgumentError(f"citations must be a non-negative integer, got {self.citations!r}")

    @property
    def weighted(self) -> Fraction:
        return Fraction(self.citations, self.auth_rank)


@dataclass(frozen=True)
class IndexReport:
    c: Fraction
    h: int
    g: int
    e: float
    i10: int
    modified: bool = False

    def as_dict(self):
        return {"c": self.c, "h": self.h, "g": self.g, "e": self.e, "i10": self.i10}


def _as_values(values: Iterable[Number]) -> list[Fraction]:
    out = []
    for v in values:
        f = v if isinstance(v, Fraction) else Fraction(v)
        if f < 0:
            raise InvalidArgumentError(f"citation values must be non-negative, got {v!r}")
        out.append(f)
    return out


def weight_citations(papers: Sequence[RankedPaper]) -> list[Fraction]:
    """Replace each paper's citations by ``citations / auth_rank``, order preserved."""
    return [_paper(p).weighted for p in papers]


def raw_citations(papers: Sequence[RankedPaper]) -> list[Fraction]:
    return [Fraction(_paper(p).citations) for p in papers]


def _paper(p) -> RankedPaper:
    # (citations, rank) tuples are accepted as shorthand
    return p if isinstance(p, RankedPaper) else RankedPaper(*p)


def c_index(values: Iterable[Number]) -> Fraction:
    return sum(_as_values(values), Fraction(0))


def h_index(values: Iterable[Number]) -> int:
    """Largest k such that at least k values are >= k (exact comparison)."""
    vals = _as_values(values)
    return kernels.h_from_pairs([v.numerator for v in vals], [v.denominator for v in vals])


def g_index(values: Iterable[Number]) -> int:
    """Largest g, at most the number of papers, whose top-g values sum to >= g**2."""
    vals = sorted(_as_values(values), reverse=True)
    total = Fraction(0)
    g = 0
    for k, v in enumerate(vals, 1):
        total += v
        if total >= k * k:
            g = k
    return g


def e_index(values: Iterable[Number]) -> float:
    vals = sorted(_as_values(values), reverse=True)
    h = h_index(vals)
    excess = sum(vals[:h], Fraction(0)) - h * h
    # excess < 0 cannot happen: every h-core value is >= h
    return math.sqrt(excess) if excess > 0 else 0.0


def i10_index(values: Iterable[Number], threshold: int = 10) -> int:
    vals = _as_values(values)
    return kernels.count_at_least([v.numerator for v in vals], [v.denominator for v in vals], threshold)


INDEXES: dict[str, Callable] = {
    "c": c_index,
    "h": h_index,
    "g": g_index,
    "e": e_index,
    "i10": i10_index,
}


def apply_modified(index: Callable, papers: Sequence[RankedPaper]):
    """Evaluate ``index`` on rank-weighted citations instead of raw counts."""
    return index(weight_citations(papers))


def index_report(papers: Sequence[RankedPaper], modified: bool = False) -> IndexReport:
    values = weight_citations(papers) if modified else raw_citations(papers)
    return IndexReport(
        c=c_index(values),
        h=h_index(values),
        g=g_index(values),
        e=e_index(values),
        i10=i10_index(values),
        modified=modified,
    )


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise InvalidArgumentError(f"n must be non-negative, got {n}")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def total_credit_curve(n_max: int) -> list[tuple[int, int, Fraction]]:
    """Total credit handed out per citation for papers with 1..n_max authors.

    Unweighted, every one of ``n`` authors claims the full citation (total
    ``n``); weighted, the total is the harmonic number ``H_n``.
    """
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 1:
        raise InvalidArgumentError(f"n_max must be a positive integer, got {n_max!r}")
    rows = []
    total = Fraction(0)
    for n in range(1, n_max + 1):
        total += Fraction(1, n)
        rows.append((n, n, total))
    return rows


def marginal_credit(n: int) -> Fraction:
    """Credit per citation gained by an author appended to ``n`` existing ones."""
    if n < 0:
        raise InvalidArgumentError(f"number of existing authors must be >= 0, got {n}")
    return Fraction(1, n + 1)
