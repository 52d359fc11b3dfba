import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique

# how far beyond its guide a stream may overshoot
C = 2.0
# chance that a river evaporates regardless of its distance to the sea
RAIN_PROBABILITY = 0.1


def wca_stream_allocation(costs, n_sr: int, n_streams: int) -> np.ndarray:
    """number of streams flowing into the sea and into each river

    Args:
        costs: fitnesses sorted ascending; the first n_sr are the sea and the
            rivers, costs[n_sr] (the best stream) is the reference level
        n_sr (int): sea plus rivers
        n_streams (int): streams to distribute, m - n_sr

    Returns:
        np.ndarray: n_sr integer counts proportional to |cost_i - reference|,
        summing to exactly n_streams (largest remainder rounding, ties to the
        better body of water)
    """
    costs = np.asarray(costs, dtype=float)
    reference = costs[n_sr] if len(costs) > n_sr else costs[n_sr - 1]
    with np.errstate(over="ignore", invalid="ignore"):
        weights = np.abs(costs[:n_sr] - reference)
        total = weights.sum()
    if not np.isfinite(total) or total <= 0:
        weights, total = np.ones(n_sr), float(n_sr)

    raw = weights / total * n_streams
    counts = np.floor(raw).astype(int)
    remainder = n_streams - int(counts.sum())
    order = np.argsort(-(raw - counts), kind="stable")
    counts[order[:remainder]] += 1
    return counts


class WaterCycle(Metaheuristic):
    """Water Cycle Algorithm.

    Agents are ranked by fitness: the best is the sea, the next n_sr - 1 are
    rivers, the rest are streams, allocated to the sea and the rivers with
    `wca_stream_allocation`. Every stream, then every river, flows

        x <- x + C U(0, 1)^n (x_guide - x),     C = 2

    and swaps places with its guide when it ends up better. A river within
    d_max of the sea, or with probability 0.1, evaporates and rains down as
    a uniform draw. d_max decays by d_max / T every iteration.
    Evaluations per iteration: m - 1, plus one extra per raining river.
    """

    technique = Technique.WCA

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        return s.m - 1

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        s.state["d_max"] = s.params["d_max"]

    def _flow(self, s: SearchSpace, i: int, guide: int, f: Objective, rng: np.random.Generator):
        agent, target = s.agents[i], s.agents[guide]
        agent.x = s.clamp(agent.x + C * rng.random(s.n) * (target.x - agent.x))
        s.evaluate_agent(i, f)
        if agent.fit < target.fit:
            agent.x, target.x = target.x, agent.x
            agent.fit, target.fit = target.fit, agent.fit

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        n_sr = int(s.params["n_sr"])
        order = np.argsort(s.fitnesses, kind="stable")
        bodies, streams = order[:n_sr], order[n_sr:]
        counts = wca_stream_allocation(s.fitnesses[order], n_sr, len(streams))
        s.state["streams_per_body"] = counts

        start = 0
        for body, count in zip(bodies, counts):
            for i in streams[start:start + count]:
                self._flow(s, int(i), int(body), f, rng)
            start += count

        sea = int(bodies[0])
        for river in bodies[1:]:
            self._flow(s, int(river), sea, f, rng)

        rained = []
        for river in bodies[1:]:
            river = int(river)
            close = np.linalg.norm(s.agents[sea].x - s.agents[river].x) < s.state["d_max"]
            if close or rng.random() < RAIN_PROBABILITY:
                s.agents[river].x = s.uniform(rng)
                s.evaluate_agent(river, f)
                s.extra_evaluations += 1
                rained.append(river)
        s.state["rained"] = rained
        s.state["d_max"] -= s.state["d_max"] / s.iterations
        return s


wca_step = WaterCycle().step
