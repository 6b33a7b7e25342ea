import itertools
from fractions import Fraction

import pytest

from citeweight import (
    HonoraryScenario,
    InvalidArgumentError,
    ModelParams,
    closed_form_h,
    closed_form_h_weighted,
    credit_game_summary,
    honorary_scenario,
    simulate_career,
    slowdown_factor,
)
from oracles import brute_h, model_citations

GRID = [(p, c, n) for p, c in itertools.product(range(1, 6), repeat=2) for n in (5, 10, 20, 40, 80)]


class TestSimulation:
    @pytest.mark.parametrize(
        "params,h,h_mod",
        [((1, 1, 10, 1), 5, 5), ((2, 5, 35, 1), 50, 50), ((2, 5, 35, 2), 50, 38)],
    )
    def test_examples(self, params, h, h_mod):
        sim = simulate_career(ModelParams(*params))
        assert (sim.h, sim.h_mod) == (h, h_mod)
        p, c, n, r = params
        cits = model_citations(p, c, n)
        assert brute_h(cits) == h
        assert brute_h([Fraction(x, r) for x in cits]) == h_mod

    def test_papers(self):
        sim = simulate_career(ModelParams(3, 2, 6, 2))
        assert len(sim.papers) == 18
        assert all(pp.citations >= 0 and pp.auth_rank == 2 for _, pp in sim.papers)
        assert [pp.citations for j, pp in sim.papers if j == 6] == [0, 0, 0]
        assert sorted(pp.citations for _, pp in sim.papers) == sorted(model_citations(3, 2, 6))

    def test_deterministic(self):
        assert simulate_career(ModelParams(2, 3, 12, 2)) == simulate_career(ModelParams(2, 3, 12, 2))

    @pytest.mark.parametrize("bad", [dict(p=0), dict(c=0), dict(n=0), dict(r=0), dict(p=-1)])
    def test_invalid_params(self, bad):
        kw = dict(p=1, c=1, n=1, r=1) | bad
        with pytest.raises(InvalidArgumentError):
            ModelParams(**kw)

    @pytest.mark.parametrize("p,c,n", GRID)
    def test_close_to_closed_form(self, p, c, n):
        params = ModelParams(p, c, n)
        sim = simulate_career(params)
        assert abs(sim.h - closed_form_h(params)) <= p + c
        assert sim.h_mod == sim.h
        if n == 80:
            assert abs(sim.h / n - c / (1 + c / p)) / (c / (1 + c / p)) < 0.05

    @pytest.mark.parametrize("p,c,r", list(itertools.product(range(1, 5), range(1, 5), range(1, 4))))
    def test_no_superlinear_growth(self, p, c, r):
        hs = {n: simulate_career(ModelParams(p, c, n, r)).h_mod for n in range(1, 41)}
        assert all(hs[n] <= hs[n + 1] for n in range(1, 40))
        assert all(hs[2 * n] <= 2 * hs[n] + p + c for n in range(1, 21))


class TestClosedForms:
    def test_values(self):
        assert closed_form_h(ModelParams(2, 5, 35)) == pytest.approx(50.0)
        assert closed_form_h(ModelParams(1, 1, 10)) == pytest.approx(5.0)
        assert closed_form_h_weighted(ModelParams(2, 5, 35, 1)) == pytest.approx(50.0)
        assert closed_form_h_weighted(ModelParams(2, 5, 35, 2)) == pytest.approx(350 / 9)
        assert closed_form_h_weighted(ModelParams(1, 100, 20, 2)) == pytest.approx(2000 / 102)
        assert closed_form_h_weighted(ModelParams(1, 100, 20, 1)) == pytest.approx(2000 / 101)

    def test_slope_constant_in_n(self):
        slopes = {closed_form_h(ModelParams(3, 4, n)) / n for n in (1, 7, 50, 300)}
        assert max(slopes) - min(slopes) < 1e-12

    def test_weighted_simulation_tracks_weighted_closed_form(self):
        for p, c, n, r in itertools.product(range(1, 5), range(1, 5), (10, 40, 80), (1, 2, 3)):
            params = ModelParams(p, c, n, r)
            assert abs(simulate_career(params).h_mod - closed_form_h_weighted(params)) <= p + c

    def test_slowdown(self):
        assert slowdown_factor(ModelParams(2, 5, 35, 2)) == Fraction(9, 7)
        assert slowdown_factor(ModelParams(1, 100, 20, 2)) == Fraction(102, 101)
        assert slowdown_factor(ModelParams(4, 4, 4, 1)) == 1
        # approaches r only when p dominates c
        assert abs(slowdown_factor(ModelParams(10_000, 1, 1, 3)) - 3) < Fraction(1, 1000)
        p = ModelParams(2, 5, 35, 2)
        assert closed_form_h(p) / closed_form_h_weighted(p) == pytest.approx(float(slowdown_factor(p)))


class TestHonorary:
    def test_noop(self):
        cmp = honorary_scenario(HonoraryScenario(ModelParams(2, 3, 10), 0, 4))
        assert (cmp.delta_h, cmp.delta_h_mod) == (0, 0)

    def test_example(self):
        base = ModelParams(1, 5, 20)
        cmp = honorary_scenario(HonoraryScenario(base, 1, 5))
        doubled = simulate_career(ModelParams(2, 5, 20))
        assert cmp.delta_h == doubled.h - simulate_career(base).h
        assert cmp.delta_h_mod < cmp.delta_h
        cits = model_citations(1, 5, 20)
        assert cmp.h_mod == brute_h(cits + [Fraction(x, 5) for x in cits])
        assert cmp.marginal_credit == Fraction(1, 5)

    def test_invalid(self):
        with pytest.raises(InvalidArgumentError):
            HonoraryScenario(ModelParams(1, 1, 1), -1, 1)
        with pytest.raises(InvalidArgumentError):
            HonoraryScenario(ModelParams(1, 1, 1), 1, 0)


class TestCreditGame:
    def test_one(self):
        g = credit_game_summary(1)
        assert g.total == 1 and g.credits == (1,)

    def test_three(self):
        g = credit_game_summary(3)
        assert g.total == Fraction(11, 6)
        assert g.credits == (1, Fraction(1, 2), Fraction(1, 3))

    def test_ten(self):
        g = credit_game_summary(10)
        assert g.marginal == Fraction(1, 10) < Fraction(1, 9)
        assert g.positive_sum and g.diminishing

    def test_invalid(self):
        with pytest.raises(InvalidArgumentError):
            credit_game_summary(0)
