import random
from math import comb

import pytest

from qcsd import gf2poly as gp
from qcsd.errors import InputError
from qcsd.gf2poly import poly_from_string
from qcsd.qccode import build_code, is_self_dual
from qcsd.search import (
    DivisorMode,
    SearchConfig,
    _screen,
    canonical_form,
    divisor_filter,
    enumerate_candidates,
    run_search,
)
from qcsd.weights import prescreen_min_weight, weight_distribution, weight_distribution_bruteforce

CUBIC_A = poly_from_string("1011")
CUBIC_B = poly_from_string("1101")


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        dict(K_min=1, K_max=5),
        dict(K_min=6, K_max=5),
        dict(K_min=11, K_max=36),
        dict(weights=()),
        dict(weights=(0,)),
        dict(K_max=12, weights=(13,)),
        dict(prescreen_info_weight=6),
        dict(workers=0),
        dict(isd_iterations=-1),
    ])
    def test_rejects(self, kwargs):
        with pytest.raises(InputError):
            SearchConfig(**kwargs)

    def test_normalizes(self):
        cfg = SearchConfig(weights=(9, 7, 9), divisor_mode="any")
        assert cfg.weights == (7, 9) and cfg.divisor_mode is DivisorMode.ANY


class TestCandidates:
    def test_k11_w9(self):
        got = [p.to_string(11) for p in enumerate_candidates(SearchConfig(K_min=11, K_max=11, weights=(9,)))]
        assert len(got) == comb(9, 7) == 36
        assert "11111101101" in got
        # interior positions come out in lexicographic combination order, i.e. descending text
        assert got == sorted(got, reverse=True)
        assert all(s[0] == s[-1] == "1" and s.count("1") == 9 for s in got)

    def test_k12_w7(self):
        got = list(enumerate_candidates(SearchConfig(K_min=12, K_max=12, weights=(7,))))
        assert len(got) == comb(10, 5) == 252
        assert len(set(got)) == 252

    def test_smallest(self):
        got = [p.to_string(2) for p in enumerate_candidates(SearchConfig(K_min=2, K_max=2, weights=(2,)))]
        assert got == ["11"]


class TestDivisorFilter:
    def test_flagship(self):
        p = poly_from_string("11111101101")
        assert divisor_filter(p, 35, DivisorMode.REQUIRE_NONTRIVIAL)
        m = gp.x_pow_k_minus_1(35)
        assert gp.gcd(p, m) == CUBIC_A
        assert gp.gcd(gp.reverse_window(p, 11), m) == CUBIC_B

    def test_unit(self):
        p = poly_from_string("1")
        assert not divisor_filter(p, 35, DivisorMode.REQUIRE_NONTRIVIAL)
        assert divisor_filter(p, 35, DivisorMode.ANY)

    @pytest.mark.parametrize("mode", list(DivisorMode))
    def test_palindrome(self, mode):
        p = poly_from_string("1111111")
        assert gp.gcd(p, gp.x_pow_k_minus_1(35)) == p
        assert not divisor_filter(p, 35, mode)

    def test_accepted_means_full_rank(self):
        from qcsd.qccode import rank_theorem
        cfg = SearchConfig(K_min=8, K_max=12, weights=(5, 7), divisor_mode="any")
        for p in enumerate_candidates(cfg):
            if divisor_filter(p, 35, DivisorMode.ANY):
                assert rank_theorem(build_code(p, 35)) == 35


class TestCanonical:
    @pytest.mark.parametrize("text, expected", [
        ("111011000101", "101000110111"),
        ("1111111", "1111111"),
        ("11111101101", "10110111111"),
    ])
    def test_examples(self, text, expected):
        assert canonical_form(poly_from_string(text), len(text)).to_string(len(text)) == expected

    def test_pair_shares_form(self):
        p = poly_from_string("1110010001101")
        q = gp.reverse_window(p, 13)
        assert canonical_form(p, 13) == canonical_form(q, 13)


SMALL = dict(k=15, K_min=3, K_max=9, weights=(3, 5, 7), target_d=4, isd_iterations=20)


class TestRunSearchSmall:
    def test_hit_invariants(self):
        cfg = SearchConfig(**SMALL, divisor_mode="any")
        hits = run_search(cfg)
        assert hits
        for h in hits:
            p = poly_from_string(h.poly)
            code = build_code(p, 15)
            assert is_self_dual(code)
            assert h.report.d >= cfg.target_d
            assert divisor_filter(p, 15, cfg.divisor_mode)
            d = weight_distribution_bruteforce(code)
            assert d.min_distance() == h.report.d
        assert len({h.poly for h in hits}) == len(hits)
        assert [(h.K, h.weight, h.poly) for h in hits] == sorted((h.K, h.weight, h.poly) for h in hits)

    def test_idempotent(self):
        cfg = SearchConfig(**SMALL, divisor_mode="any")
        first = [(h.poly, h.report.d, h.report.extra["distribution"]) for h in run_search(cfg)]
        second = [(h.poly, h.report.d, h.report.extra["distribution"]) for h in run_search(cfg)]
        assert first == second

    def test_mode_monotone(self):
        strict = {h.poly for h in run_search(SearchConfig(**SMALL, divisor_mode="nontrivial"))}
        loose = {h.poly for h in run_search(SearchConfig(**SMALL, divisor_mode="any"))}
        assert strict <= loose

    def test_worker_budget_same_output(self):
        a = [h.poly for h in run_search(SearchConfig(**SMALL, divisor_mode="any", workers=1))]
        b = [h.poly for h in run_search(SearchConfig(**SMALL, divisor_mode="any", workers=3))]
        assert a == b

    def test_screen_rejects_are_light(self):
        cfg = SearchConfig(k=15, K_min=4, K_max=12, weights=(3, 5, 7), target_d=6, divisor_mode="any", isd_iterations=20)
        rejects = [p for p in enumerate_candidates(cfg)
                   if divisor_filter(p, 15, cfg.divisor_mode) and not _screen(p, cfg)]
        sample = random.Random(5).sample(rejects, 25)
        for p in sample:
            d = weight_distribution_bruteforce(build_code(p, 15))
            assert d[0] > 1 or d.min_distance() < cfg.target_d


@pytest.mark.slow
class TestRunSearchK35:
    def test_k11_weight9(self):
        hits = run_search(SearchConfig(K_min=11, K_max=11, weights=(9,)))
        assert [(h.poly, h.report.beta, h.report.gamma, h.report.family.value) for h in hits] == [
            ("10110111111", 140, 0, "W70_1")]

    def test_k11_weight7_empty(self):
        assert run_search(SearchConfig(K_min=11, K_max=11, weights=(7,))) == []

    def test_tiny_windows_screened_out(self):
        cfg = SearchConfig(K_min=2, K_max=4, weights=(3,), divisor_mode="any")
        cands = [p for p in enumerate_candidates(cfg) if divisor_filter(p, 35, cfg.divisor_mode)]
        assert [p.to_string() for p in cands] == ["111", "1101", "1011"]
        for p in cands:
            code = build_code(p, 35)
            v = prescreen_min_weight(code, cfg.prescreen_info_weight, cfg.target_d)
            assert v is not None and v < 12
            d = weight_distribution(code)
            assert d[v] > 0 and d.min_distance() <= v
        assert run_search(cfg) == []
