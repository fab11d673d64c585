import math

import pytest

from lightsout.montecarlo import (MODE_ALL, MODE_CONNECTED, EstimateRequest,
                                  margin_of_error, run_estimate)


class TestMarginOfError:
    def test_million_trials_near_042(self):
        moe = margin_of_error(0.42, 10**6, 0.95)
        assert moe == pytest.approx(0.000967, abs=1e-6)
        assert moe < 0.001

    def test_degenerate_p(self):
        assert margin_of_error(0.0, 1000) == 0.0
        assert margin_of_error(1.0, 1000) == 0.0

    def test_worst_case_half(self):
        assert margin_of_error(0.5, 10**6) == pytest.approx(0.000980, abs=1e-6)

    def test_z_value(self):
        # moe at p=0.5, N=1 is z/2; two-sided 95% z is 1.959964.
        assert 2 * margin_of_error(0.5, 1) == pytest.approx(1.959964, abs=1e-6)

    def test_validation(self):
        with pytest.raises(ValueError):
            margin_of_error(1.2, 100)
        with pytest.raises(ValueError):
            margin_of_error(0.5, 0)
        with pytest.raises(ValueError):
            margin_of_error(0.5, 100, confidence=1.0)


class TestRequestValidation:
    def test_bad_mode(self):
        with pytest.raises(ValueError):
            EstimateRequest(n=3, trials=10, mode="everything")

    def test_bad_counts(self):
        with pytest.raises(ValueError):
            EstimateRequest(n=0, trials=10)
        with pytest.raises(ValueError):
            EstimateRequest(n=3, trials=0)
        with pytest.raises(ValueError):
            EstimateRequest(n=3, trials=10, seed=1 << 64)
        with pytest.raises(ValueError):
            EstimateRequest(n=3, trials=10, workers=0)


class TestRunEstimate:
    def test_single_vertex_always_solvable(self):
        res = run_estimate(EstimateRequest(n=1, trials=500, seed=7))
        assert res.solvable_count == 500
        assert res.p_solvable == 1.0
        assert res.connected_count == 500

    def test_counts_bounded_and_consistent(self):
        req = EstimateRequest(n=5, trials=4000, seed=3)
        res = run_estimate(req)
        assert 0 <= res.solvable_count <= req.trials
        assert 0 <= res.connected_count <= req.trials
        assert res.p_solvable == res.solvable_count / req.trials
        assert res.moe95 > 0
        assert res.elapsed_seconds > 0

    def test_matches_exact_probability_n5(self):
        trials = 40_000
        res = run_estimate(EstimateRequest(n=5, trials=trials, seed=11))
        # Exact probability is 13/34; allow 4 sigma.
        p = 13 / 34
        assert abs(res.p_solvable - p) < 4 * math.sqrt(p * (1 - p) / trials)

    def test_connected_mode_drops_connected_fields(self):
        res = run_estimate(EstimateRequest(n=3, trials=2000, seed=5,
                                           mode=MODE_CONNECTED))
        assert res.connected_count is None
        assert res.p_connected is None
        # Exact probability among connected 3-vertex graphs is 1/2.
        assert abs(res.p_solvable - 0.5) < 0.05

    def test_two_vertices_connected_mode_never_solvable(self):
        res = run_estimate(EstimateRequest(n=2, trials=300, seed=5,
                                           mode=MODE_CONNECTED))
        assert res.solvable_count == 0


class TestDeterminism:
    @pytest.mark.parametrize("mode", [MODE_ALL, MODE_CONNECTED])
    def test_worker_count_does_not_change_counts(self, mode):
        base = run_estimate(EstimateRequest(n=6, trials=2000, seed=42, mode=mode,
                                            workers=1))
        for workers in (2, 5):
            res = run_estimate(EstimateRequest(n=6, trials=2000, seed=42,
                                               mode=mode, workers=workers))
            assert res.solvable_count == base.solvable_count
            assert res.connected_count == base.connected_count

    def test_same_seed_same_counts(self):
        a = run_estimate(EstimateRequest(n=7, trials=1500, seed=9))
        b = run_estimate(EstimateRequest(n=7, trials=1500, seed=9))
        assert (a.solvable_count, a.connected_count) \
            == (b.solvable_count, b.connected_count)

    def test_different_seeds_differ(self):
        a = run_estimate(EstimateRequest(n=7, trials=1500, seed=1))
        b = run_estimate(EstimateRequest(n=7, trials=1500, seed=2))
        assert (a.solvable_count, a.connected_count) \
            != (b.solvable_count, b.connected_count)
