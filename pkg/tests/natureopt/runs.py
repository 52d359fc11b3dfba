"""Small search spaces and run helpers shared by the test modules."""
from typing import Callable, List, Optional

import numpy as np

from nature_opt.benchmarks import lookup
from nature_opt.core import (
    Objective,
    RunResult,
    SearchSpace,
    create_search_space,
    initialize_search_space,
    make_rng,
    minimize,
)
from nature_opt.params import Technique, default_params


def small_space(
    technique, function: str = "sphere", m: int = 10, n: int = 2, iterations: int = 15
) -> SearchSpace:
    """a default-parameter search space bounded by the function's suggested box"""
    f = lookup(function)
    s = create_search_space(m, n, technique, iterations)
    s.params = default_params(technique)
    LB, UB = f.suggested_bounds(n)
    s.set_bounds(LB, UB)
    return s


class Recorder:
    """wraps an objective and keeps every value it returned"""

    def __init__(self, f: Objective):
        self.f = f
        self.values: List[float] = []

    def __call__(self, x) -> float:
        value = self.f(x)
        self.values.append(value)
        return value


def countdown() -> Callable[[np.ndarray], float]:
    """objective whose value drops on every call, so every candidate improves"""
    calls = [0]

    def f(x):
        calls[0] += 1
        return -float(calls[0])

    return f


def run(
    s: SearchSpace,
    f: Objective,
    seed: int,
    callback: Optional[Callable[[SearchSpace], None]] = None,
) -> RunResult:
    rng = make_rng(seed)
    initialize_search_space(s, rng)
    return minimize(s, f, rng, seed=seed, callback=callback)


def assert_in_bounds(s: SearchSpace):
    for agent in s.agents:
        assert np.all(agent.x >= s.LB) and np.all(agent.x <= s.UB)


def comparable(result: RunResult) -> tuple:
    """a run result without its wall time"""
    return (
        result.technique,
        result.best_position,
        result.best_fitness,
        result.trace,
        result.evaluations,
        result.seed,
        result.k,
    )


ALL_TECHNIQUES = list(Technique)
