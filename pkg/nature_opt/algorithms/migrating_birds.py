from typing import List, Tuple

import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Agent, Objective, SearchSpace
from nature_opt.params import Technique

# neighbourhood radius as a share of the variable range, start and floor
SIGMA_START = 0.1
SIGMA_FLOOR = 1e-3

Neighbour = Tuple[float, np.ndarray]


def bird_ahead(formation: List[int], position: int) -> int:
    """index of the bird flying in front of the one at `position` in the V

    The leader is at position 0; odd positions form the left line and even
    positions the right line, so positions 1 and 2 follow the leader and
    every other bird follows the one two places ahead of it.
    """
    if position <= 0:
        raise ValueError("The leader has no bird ahead of it")
    return formation[0] if position <= 2 else formation[position - 2]


def neighbour_sigma(s: SearchSpace) -> np.ndarray:
    width = s.UB - s.LB
    decay = 1.0 - s.iteration / max(s.iterations, 1)
    return np.maximum(SIGMA_START * width * decay, SIGMA_FLOOR * width)


class MigratingBirds(Metaheuristic):
    """Migrating Birds Optimization for continuous spaces.

    The birds fly in a V formation kept as an ordered list of agent indices
    in `s.state["formation"]`, leader first. Neighbours are Gaussian
    perturbations

        y = clamp(x + N(0, 1)^n sigma_t),   sigma_t = max(0.1 (UB - LB) (1 - t/T), 1e-3 (UB - LB))

    The leader evaluates k neighbours. Every follower evaluates k - x of its
    own and receives the x best unused neighbours of the bird ahead. A bird
    moves to its best candidate when that is better than its position, and
    passes its own x best unused candidates back. Every `period` iterations
    the leader flies to the tail of the formation.
    Evaluations per iteration: k + (m - 1)(k - x).
    """

    technique = Technique.MBO

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        k, x = s.params["k"], s.params["x"]
        return k + (s.m - 1) * (k - x)

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        s.state["formation"] = list(range(s.m))

    def _neighbours(
        self, s: SearchSpace, agent: Agent, count: int, f: Objective, rng: np.random.Generator
    ) -> List[Neighbour]:
        sigma = neighbour_sigma(s)
        out = []
        for _ in range(count):
            y = s.clamp(agent.x + rng.standard_normal(s.n) * sigma)
            out.append((s.evaluate(y, f), y))
        return out

    def _fly(self, agent: Agent, candidates: List[Neighbour], shared: int) -> List[Neighbour]:
        candidates = sorted(candidates, key=lambda c: c[0])
        if candidates and candidates[0][0] < agent.fit:
            agent.fit = candidates[0][0]
            agent.x = candidates[0][1].copy()
            candidates = candidates[1:]
        return candidates[:shared]

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        k, shared = int(s.params["k"]), int(s.params["x"])
        formation = s.state["formation"]

        leader = s.agents[formation[0]]
        passed = {formation[0]: self._fly(leader, self._neighbours(s, leader, k, f, rng), shared)}
        counts = [(k, 0)]
        for position in range(1, s.m):
            index = formation[position]
            bird = s.agents[index]
            received = passed[bird_ahead(formation, position)]
            own = self._neighbours(s, bird, k - shared, f, rng)
            passed[index] = self._fly(bird, own + received, shared)
            counts.append((len(own), len(received)))
        s.state["neighbour_counts"] = counts

        if (s.iteration + 1) % int(s.params["period"]) == 0:
            s.state["formation"] = formation[1:] + formation[:1]
        return s


mbo_step = MigratingBirds().step
