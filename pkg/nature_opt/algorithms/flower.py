import numpy as np

from nature_opt.algorithms.base import Metaheuristic, greedy_replace, other_indices
from nature_opt.algorithms.levy import levy_flight
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique


class FlowerPollination(Metaheuristic):
    """Flower Pollination Algorithm.

    For every flower i, with probability p a global (biotic) pollination

        y = x_i + 0.01 L (g - x_i),            L ~ Levy(beta)^n

    otherwise a local (abiotic) one between two other random flowers j, k

        y = x_i + U(0, 1) (x_j - x_k)

    The clamped candidate replaces x_i when it is not worse.
    Evaluations per iteration: m.
    """

    technique = Technique.FPA

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        p, beta = s.params["p"], s.params["beta"]
        for i, agent in enumerate(s.agents):
            if rng.random() < p:
                step = 0.01 * levy_flight(rng, beta, s.n) * (s.g - agent.x)
            else:
                j, k = other_indices(rng, s.m, i, 2)
                step = rng.random() * (s.agents[j].x - s.agents[k].x)
            greedy_replace(s, i, s.clamp(agent.x + step), f)
        return s


fpa_step = FlowerPollination().step
