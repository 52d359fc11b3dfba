import numpy as np
import pytest

from nature_opt import hypercomplex
from nature_opt.benchmarks import sphere
from nature_opt.core import make_rng, random_search
from nature_opt.hypercomplex import (
    OCTONION,
    QUATERNION,
    HypercomplexConfig,
    UnsupportedTechniqueError,
    init_tensor,
    lift,
    span_tensor,
    span_to_real,
    tensor_state,
)
from nature_opt.modelfile import load_example_model, search_space_from_model
from nature_opt.params import HYPERCOMPLEX_TECHNIQUES, Technique
from tests.natureopt.runs import (
    ALL_TECHNIQUES,
    Recorder,
    assert_in_bounds,
    comparable,
    run,
    small_space,
)

LIFTED = [t for t in ALL_TECHNIQUES if t in HYPERCOMPLEX_TECHNIQUES]


class TestSpan:
    def test_zero_row(self):
        assert span_to_real([0.0] * QUATERNION, -10.0, 10.0) == -10.0

    def test_ones_row(self):
        """tests if a row of ones lands exactly on the upper bound"""
        assert span_to_real([1.0] * QUATERNION, -10.0, 10.0) == 10.0
        assert span_to_real([1.0] * OCTONION, -10.0, 10.0) == 10.0
        assert span_to_real([1.0] * 3, -10.0, 10.0) == 10.0

    def test_half_row(self):
        """tests norm 1 over sqrt(4) = 2 on the unit interval"""
        assert span_to_real([0.5] * 4, 0.0, 1.0) == 0.5

    def test_interior(self):
        """tests if coefficients inside the unit box span to the open interval"""
        t = make_rng(0).random((10000, 1, 4))
        x = span_tensor(t, [-5.12], [5.12])
        assert x.shape == (10000, 1)
        assert np.all(x > -5.12) and np.all(x < 5.12)

    def test_out_of_box_coefficients_are_clamped(self):
        clamped = span_to_real([1.0, 0.0, 1.0, 1.0], 0.0, 1.0)
        assert span_to_real([2.0, -1.0, 3.0, 5.0], 0.0, 1.0) == clamped


class TestInitTensor:
    def test_shapes_and_range(self):
        """tests if k=4, n=2, m=10 draws ten 2 x 4 tensors in the unit box"""
        s = small_space("PSO", m=10, n=2)
        init_tensor(s, 4, make_rng(0))
        assert s.k == 4
        for agent in s.agents:
            assert agent.t.shape == (2, 4)
            assert np.all((agent.t >= 0) & (agent.t <= 1))
        assert tensor_state(s).t.shape == (10, 2, 4)
        assert_in_bounds(s)

    def test_one_coefficient(self):
        """tests if k=1 reduces to a bounded real initialization"""
        s = small_space("PSO")
        init_tensor(s, 1, make_rng(0), f=sphere)
        expected = s.LB + (s.UB - s.LB) * np.array([agent.t[:, 0] for agent in s.agents])
        assert np.allclose(s.positions, expected)
        assert s.gfit == min(sphere(x) for x in s.positions)

    def test_same_seed_same_tensors(self):
        a = tensor_state(init_tensor(small_space("PSO"), 4, make_rng(9)))
        b = tensor_state(init_tensor(small_space("PSO"), 4, make_rng(9)))
        assert np.array_equal(a.t, b.t)

    @pytest.mark.parametrize("k", [0, -1, 2.5])
    def test_invalid_k(self, k):
        with pytest.raises(ValueError):
            HypercomplexConfig(k)

    def test_tensor_state_needs_tensors(self):
        with pytest.raises(ValueError):
            tensor_state(small_space("PSO"))


class TestLift:
    @pytest.mark.parametrize("technique", [Technique.MBO, Technique.WCA])
    def test_unsupported(self, technique):
        """tests if techniques without a hypercomplex version are refused with the supported list"""
        with pytest.raises(UnsupportedTechniqueError) as e:
            lift(technique, small_space(technique), sphere, 4, seed=0)
        assert "PSO" in str(e.value)

    def test_eleven_supported(self):
        assert len(LIFTED) == 11

    @pytest.mark.parametrize("technique", LIFTED)
    def test_lifted_run(self, technique):
        """tests the core invariants of a lifted run"""
        s = small_space(technique, iterations=10)
        recorder = Recorder(sphere)
        result = lift(technique, s, recorder, QUATERNION, seed=1)
        trace = np.array(result.trace)
        assert len(trace) == 10
        assert np.all(np.diff(trace) <= 0)
        assert trace[-1] == result.best_fitness
        assert result.k == QUATERNION
        assert result.evaluations == len(recorder.values)
        assert result.best_fitness == min(recorder.values)
        assert sphere(np.array(result.best_position)) == result.best_fitness

        # the outer space mirrors the inner one
        assert_in_bounds(s)
        state = tensor_state(s)
        assert state.t.shape == (s.m, 2, QUATERNION)
        assert np.all((state.t >= 0) & (state.t <= 1))
        assert np.allclose(s.positions, span_tensor(state.t, s.LB, s.UB))
        assert np.array_equal(s.g, result.best_position)

    def test_deterministic(self):
        a = lift("PSO", small_space("PSO"), sphere, QUATERNION, seed=3)
        b = lift("PSO", small_space("PSO"), sphere, QUATERNION, seed=3)
        assert comparable(a) == comparable(b)

    def test_one_coefficient_keeps_invariants(self):
        """tests if a k=1 lift and a plain run satisfy the same invariants"""
        for result in (
            lift("PSO", small_space("PSO"), sphere, 1, seed=2),
            run(small_space("PSO"), sphere, seed=2),
        ):
            trace = np.array(result.trace)
            assert np.all(np.diff(trace) <= 0)
            assert trace[-1] == result.best_fitness
            assert np.all(np.abs(result.best_position) <= 5.12)
            assert result.evaluations == 10 + 15 * 10

    def test_technique_mismatch(self):
        with pytest.raises(ValueError):
            lift("HS", small_space("PSO"), sphere, 4, seed=0)

    def test_population_is_spanned_once_per_iteration(self, monkeypatch):
        """tests if mirroring the population costs one span per iteration, not one per agent"""
        calls = []

        def counting_span(t, LB, UB):
            calls.append(np.shape(t))
            return span_tensor(t, LB, UB)

        monkeypatch.setattr(hypercomplex, "span_tensor", counting_span)
        s = small_space("HS", m=10, iterations=50)
        result = lift("HS", s, sphere, QUATERNION, seed=0)

        population = [shape for shape in calls if shape == (10, 2, QUATERNION)]
        assert len(population) == s.iterations + 1
        # init_tensor spans each agent, every evaluation spans one tensor, sync spans g
        assert len(calls) == s.m + result.evaluations + 2 * (s.iterations + 1)

    @pytest.mark.slow
    @pytest.mark.parametrize("technique", LIFTED)
    def test_beats_random_search(self, technique):
        """tests every lifted technique at k=4 against equal-budget random search"""
        finals, baseline = [], []
        for seed in range(25):
            s = search_space_from_model(load_example_model(technique))
            result = lift(technique, s, sphere, QUATERNION, seed)
            finals.append(result.best_fitness)
            reference = random_search(sphere, s.LB, s.UB, result.evaluations, seed)
            baseline.append(reference.best_fitness)
        assert np.median(finals) < np.median(baseline)


if __name__ == "__main__":
    pytest.main([__file__])
