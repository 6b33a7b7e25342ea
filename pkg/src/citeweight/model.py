"""Hirsch's constant-rate publishing model, with rank-weighted credit.

A researcher publishes ``p`` papers every year for ``n`` years and each
paper is cited ``c`` times in every year after the one it appeared in, so
at the end a paper from year ``j`` holds ``c * (n - j)`` citations.  When
the researcher always sits at author position ``r`` each paper is worth
``c * (n - j) / r`` to the weighted index.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import InvalidArgumentError
from .metrics import RankedPaper, harmonic


def _positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class ModelParams:
    p: int  # papers per year
    c: int  # citations per paper per subsequent year
    n: int  # publishing age, years
    r: int = 1  # constant author rank

    def __post_init__(self):
        for name in ("p", "c", "n", "r"):
            _positive(name, getattr(self, name))


@dataclass(frozen=True)
class SimulatedCareer:
    params: ModelParams
    papers: tuple[tuple[int, RankedPaper], ...]  # (year index 1..n, paper)
    h: int
    h_mod: int


def _career_papers(p, c, n, r):
    return [(j, RankedPaper(c * (n - j), r)) for j in range(1, n + 1) for _ in range(p)]


def _h(papers, weighted):
    return kernels.h_from_pairs(
        [pp.citations for _, pp in papers],
        [pp.auth_rank if weighted else 1 for _, pp in papers],
    )


def simulate_career(params: ModelParams) -> SimulatedCareer:
    papers = _career_papers(params.p, params.c, params.n, params.r)
    return SimulatedCareer(params, tuple(papers), _h(papers, False), _h(papers, True))


def closed_form_h(params: ModelParams) -> float:
    """Continuum h of the model, ``c n / (1 + c/p)``."""
    p, c, n = params.p, params.c, params.n
    return p * c * n / (p + c)


def closed_form_h_weighted(params: ModelParams) -> float:
    """Continuum weighted h, ``p c n / (c + p r)``.

    Derived here from the model: weighted citations ``c (n - j) / r`` reach
    ``h`` for the first ``n - h r / c`` years of papers, and ``p`` times that
    count equals ``h`` at the returned value.  Reduces to
    :func:`closed_form_h` when ``r == 1``.
    """
    p, c, n, r = params.p, params.c, params.n, params.r
    return p * c * n / (c + p * r)


def slowdown_factor(params: ModelParams) -> Fraction:
    """Ratio of unweighted to weighted continuum h, ``(c + p r) / (c + p)``.

    This approaches ``r`` only when ``p`` is much larger than ``c``.
    """
    p, c, r = params.p, params.c, params.r
    return Fraction(c + p * r, c + p)


@dataclass(frozen=True)
class HonoraryScenario:
    base: ModelParams
    extra_papers_per_year: int = 0
    extra_rank: int = 1

    def __post_init__(self):
        if isinstance(self.extra_papers_per_year, bool) or self.extra_papers_per_year < 0:
            raise InvalidArgumentError("extra_papers_per_year must be >= 0")
        _positive("extra_rank", self.extra_rank)


@dataclass(frozen=True)
class HonoraryComparison:
    base_h: int
    base_h_mod: int
    h: int
    h_mod: int
    marginal_credit: Fraction  # per citation of an honorary paper

    @property
    def delta_h(self) -> int:
        return self.h - self.base_h

    @property
    def delta_h_mod(self) -> int:
        return self.h_mod - self.base_h_mod


def honorary_scenario(scenario: HonoraryScenario) -> HonoraryComparison:
    """Compare a career with and without extra honorary papers per year.

    Honorary papers follow the same citation law as the researcher's own
    papers but list the researcher at ``extra_rank``.
    """
    b = scenario.base
    base = simulate_career(b)
    extras = _career_papers(scenario.extra_papers_per_year, b.c, b.n, scenario.extra_rank)
    papers = list(base.papers) + extras
    return HonoraryComparison(
        base_h=base.h,
        base_h_mod=base.h_mod,
        h=_h(papers, False),
        h_mod=_h(papers, True),
        marginal_credit=Fraction(1, scenario.extra_rank),
    )


@dataclass(frozen=True)
class CreditGame:
    n_authors: int
    total: Fraction
    credits: tuple[Fraction, ...]
    marginal: Fraction

    @property
    def positive_sum(self) -> bool:
        return all(c > 0 for c in self.credits)

    @property
    def diminishing(self) -> bool:
        return all(a > b for a, b in zip(self.credits, self.credits[1:]))


def credit_game_summary(n_authors: int) -> CreditGame:
    """Per-author shares ``1, 1/2, ..., 1/n`` of one citation and their total."""
    _positive("n_authors", n_authors)
    credits = tuple(Fraction(1, i) for i in range(1, n_authors + 1))
    game = CreditGame(n_authors, harmonic(n_authors), credits, credits[-1])
    assert game.positive_sum and game.diminishing
    return game
