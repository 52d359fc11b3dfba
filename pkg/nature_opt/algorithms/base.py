import numpy as np

from nature_opt.core import Agent, Objective, SearchSpace
from nature_opt.params import Technique


class Metaheuristic:
    """Per-iteration behaviour of one technique.

    Instances hold no run state: everything a run needs lives in the
    SearchSpace (per-agent extras in `agent.extras`, technique-level state
    in `s.state`), so one instance serves any number of runs.
    """

    technique: Technique

    def allocate(self, agent: Agent, s: SearchSpace) -> None:
        """sets the agent's technique extras to their initial values"""

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        """runs once the initial population has been evaluated"""

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        raise NotImplementedError

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        """objective calls every iteration makes, on top of s.extra_evaluations"""
        return s.m

    def __repr__(self):
        return f"{self.__class__.__name__}()"


def greedy_replace(s: SearchSpace, i: int, candidate: np.ndarray, f: Objective) -> bool:
    """evaluates a candidate for agent i and keeps it if it is not worse"""
    fit = s.evaluate(candidate, f)
    agent = s.agents[i]
    if fit <= agent.fit:
        agent.x = candidate
        agent.fit = fit
        return True
    return False


def other_indices(rng: np.random.Generator, m: int, exclude: int, size: int) -> np.ndarray:
    """`size` agent indices different from `exclude`, or `exclude` itself when m == 1"""
    if m == 1:
        return np.full(size, exclude)
    picks = rng.integers(0, m - 1, size=size)
    return picks + (picks >= exclude)
