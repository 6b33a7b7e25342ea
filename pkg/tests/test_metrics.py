import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from citeweight import (
    InvalidArgumentError,
    InvalidRankError,
    RankedPaper,
    apply_modified,
    c_index,
    e_index,
    g_index,
    h_index,
    i10_index,
    index_report,
    marginal_credit,
    total_credit_curve,
    weight_citations,
)
from citeweight.metrics import INDEXES
from oracles import brute_g, brute_h, direct_harmonic

F = Fraction
papers_st = st.lists(st.builds(RankedPaper, st.integers(0, 200), st.integers(1, 8)), max_size=40)


def P(*pairs):
    return [RankedPaper(c, r) for c, r in pairs]


class TestWeighting:
    def test_rank_division(self):
        assert weight_citations(P((100, 1), (100, 2), (100, 4))) == [100, 50, 25]

    def test_rank_one_identity(self):
        assert weight_citations(P((7, 1))) == [7]

    def test_exact_half(self):
        out = weight_citations(P(*[(9, 2)] * 5))
        assert out == [F(9, 2)] * 5
        assert all(isinstance(v, Fraction) and (v.numerator, v.denominator) == (9, 2) for v in out)

    def test_tuple_shorthand(self):
        assert weight_citations([(10, 4)]) == [F(5, 2)]

    @pytest.mark.parametrize("rank", [0, -1])
    def test_invalid_rank(self, rank):
        with pytest.raises(InvalidRankError):
            RankedPaper(5, rank)
        with pytest.raises(InvalidRankError):
            weight_citations([(5, rank)])

    def test_negative_citations(self):
        with pytest.raises(InvalidArgumentError):
            RankedPaper(-1, 1)

    @given(st.integers(0, 10**6), st.integers(1, 50))
    def test_ranked_paper_invariants(self, c, r):
        p = RankedPaper(c, r)
        assert p.weighted * r == c
        assert p.weighted <= c
        assert (p.weighted == c) == (r == 1 or c == 0)


class TestIndexes:
    def test_c(self):
        assert c_index([1, 2, 3]) == 6
        assert c_index([]) == 0

    def test_c_cohort_column(self):
        col = [108828, 79159, 83516, 61023, 87977, 68072, 85684, 54788, 73541, 88714, 65580]
        assert c_index(col) == 856882
        assert round(c_index(col) / 11) == 77898

    @pytest.mark.parametrize(
        "values,expected",
        [([4, 4, 4, 4], 4), ([10, 8, 5, 4, 3], 4), ([F(9, 2)] * 5, 4), ([9] * 5, 5), ([], 0), ([0, 0], 0)],
    )
    def test_h(self, values, expected):
        assert h_index(values) == expected == brute_h(values)

    @pytest.mark.parametrize("values,expected", [([10, 10, 10], 3), ([], 0), ([25, 0, 0, 0, 0], 5), ([100], 1)])
    def test_g(self, values, expected):
        assert g_index(values) == expected == brute_g(values)

    def test_e(self):
        assert e_index([10, 8, 5, 4, 3]) == pytest.approx(math.sqrt(11))
        assert e_index([10, 8, 5, 4, 3]) == pytest.approx(3.3166, abs=1e-4)
        assert e_index([4, 4, 4, 4]) == 0
        assert e_index([]) == 0

    def test_i10(self):
        assert i10_index([10, 9, 11]) == 2
        assert i10_index([]) == 0
        assert i10_index(weight_citations(P((20, 2), (19, 2)))) == 1

    def test_negative_value_rejected(self):
        with pytest.raises(InvalidArgumentError):
            h_index([3, -1])

    def test_floats_are_taken_exactly(self):
        assert h_index([4.5] * 5) == 4


class TestModified:
    def test_rank_one(self):
        papers = P(*[(9, 1)] * 5)
        assert h_index([9] * 5) == apply_modified(h_index, papers) == 5

    def test_c_sum(self):
        assert apply_modified(c_index, P((100, 1), (100, 2), (100, 4))) == 175

    def test_h_weighted(self):
        assert apply_modified(h_index, P(*[(9, 2)] * 5)) == 4

    def test_report(self):
        rep = index_report(P(*[(9, 2)] * 5), modified=True)
        assert rep.modified and rep.h == 4 and rep.c == F(45, 2) and rep.g == 4 and rep.i10 == 0
        raw = index_report(P(*[(9, 2)] * 5))
        assert not raw.modified and raw.h == 5 and raw.c == 45

    @given(st.lists(st.integers(0, 200), max_size=40))
    def test_rank_one_identity_all_indexes(self, cits):
        papers = [RankedPaper(c, 1) for c in cits]
        for f in INDEXES.values():
            assert apply_modified(f, papers) == f(cits)

    @given(papers_st)
    def test_dominance(self, papers):
        raw = [p.citations for p in papers]
        for name in ("c", "h", "g", "i10"):
            f = INDEXES[name]
            assert apply_modified(f, papers) <= f(raw)

    @given(papers_st, st.randoms())
    def test_permutation_invariance(self, papers, rnd):
        shuffled = list(papers)
        rnd.shuffle(shuffled)
        for f in INDEXES.values():
            assert apply_modified(f, papers) == apply_modified(f, shuffled)

    @given(papers_st)
    def test_h_le_g_le_count(self, papers):
        vals = weight_citations(papers)
        h, g = h_index(vals), g_index(vals)
        assert h <= g <= len(vals)
        assert i10_index(vals) <= len(vals)

    @given(papers_st)
    def test_threshold_is_h_times_rank(self, papers):
        # a paper is in the weighted h-core count only if citations >= h * rank
        vals = weight_citations(papers)
        h = h_index(vals)
        assert sum(1 for p in papers if p.citations >= h * p.auth_rank) >= h

    def test_exact_half_integers(self):
        for k in range(1, 1001):
            assert h_index(weight_citations([(2 * k - 1, 2)] * k)) == k - 1


class TestCredit:
    def test_curve_small(self):
        curve = total_credit_curve(5)
        assert curve[0] == (1, 1, 1)
        assert curve[1] == (2, 2, F(3, 2))
        assert curve[4] == (5, 5, F(137, 60)) and F(137, 60) == direct_harmonic(5)

    def test_curve_matches_direct_sum(self):
        for n, raw, w in total_credit_curve(100):
            assert raw == n and w == direct_harmonic(n)

    def test_curve_rejects_zero(self):
        with pytest.raises(InvalidArgumentError):
            total_credit_curve(0)

    def test_harmonic_bounds(self):
        for n, raw, w in total_credit_curve(10_000):
            assert w <= n and (w == n) == (n == 1)
            assert w <= 1 + math.log(n)

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, F(1, 2)), (9, F(1, 10))])
    def test_marginal(self, n, expected):
        assert marginal_credit(n) == expected

    def test_marginal_negative(self):
        with pytest.raises(InvalidArgumentError):
            marginal_credit(-1)


def test_rank_share_is_an_upper_bound():
    # Non-increasing shares summing to 1 never give author i more than 1/i.
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 10)
        raw = sorted((rng.randint(0, 50) for _ in range(n)), reverse=True)
        if raw[0] == 0:
            raw[0] = 1
        total = sum(raw)
        w = [F(x, total) for x in raw]
        for i in range(1, n + 1):
            assert w[i - 1] <= F(1, i)
            tight = all(x == F(1, i) for x in w[:i]) and all(x == 0 for x in w[i:])
            assert (w[i - 1] == F(1, i)) == tight
    # the bound is reached by i equal leaders and silent rest
    for n in range(1, 11):
        for i in range(1, n + 1):
            w = [F(1, i)] * i + [F(0)] * (n - i)
            assert w[i - 1] == F(1, i) and sum(w) == 1
