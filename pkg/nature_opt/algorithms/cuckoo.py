import numpy as np

from nature_opt.algorithms.base import Metaheuristic, greedy_replace, other_indices
from nature_opt.algorithms.levy import levy_flight
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique


class CuckooSearch(Metaheuristic):
    """Cuckoo Search via Levy flights.

    Every nest i lays a cuckoo egg

        y = x_i + alpha L (x_i - g) N(0, 1)^n,      L ~ Levy(beta)^n

    kept when not worse. Afterwards every nest except the current best is
    abandoned with probability p_a and rebuilt from two other random nests

        y = x_i + U(0, 1)^n (x_j - x_k)

    again kept when not worse, so the best nest always survives.
    Evaluations per iteration: m, plus one extra per abandoned nest.
    """

    technique = Technique.CS

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        p = s.params
        for i, agent in enumerate(s.agents):
            step = p["alpha"] * levy_flight(rng, p["beta"], s.n) * (agent.x - s.g)
            candidate = s.clamp(agent.x + step * rng.standard_normal(s.n))
            greedy_replace(s, i, candidate, f)

        best = int(np.argmin(s.fitnesses))
        abandoned = []
        for i, agent in enumerate(s.agents):
            if i == best or rng.random() >= p["p_a"]:
                continue
            j, k = other_indices(rng, s.m, i, 2)
            candidate = s.clamp(agent.x + rng.random(s.n) * (s.agents[j].x - s.agents[k].x))
            greedy_replace(s, i, candidate, f)
            s.extra_evaluations += 1
            abandoned.append(i)
        s.state["abandoned"] = abandoned
        return s


cs_step = CuckooSearch().step
