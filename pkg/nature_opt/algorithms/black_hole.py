import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique


class BlackHole(Metaheuristic):
    """Black Hole Algorithm.

    The best agent is the black hole and does not move. Every other star is
    pulled towards it

        x_i <- x_i + U(0, 1)^n (x_BH - x_i)

    and a star that ends up better than the black hole takes its role for
    the rest of the sweep. Then the event horizon

        R = |f_BH| / sum_i |f_i|

    is computed and every star closer than R to the black hole is
    re-initialised uniformly inside the bounds. The black hole the sweep
    started from is never re-initialised.
    Evaluations per iteration: m - 1, plus one extra per re-initialised star.
    """

    technique = Technique.BH

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        return s.m - 1

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        hole = int(np.argmin(s.fitnesses))
        start = hole
        for i, agent in enumerate(s.agents):
            if i == start:
                continue
            target = s.agents[hole]
            agent.x = s.clamp(agent.x + rng.random(s.n) * (target.x - agent.x))
            s.evaluate_agent(i, f)
            if agent.fit < target.fit:
                hole = i

        fits = np.abs(s.fitnesses)
        total = float(np.sum(fits))
        radius = float(fits[hole] / total) if total > 0 and np.isfinite(total) else 0.0
        x_hole = s.agents[hole].x
        swallowed = []
        for i, agent in enumerate(s.agents):
            if i in (hole, start):
                continue
            if np.linalg.norm(agent.x - x_hole) < radius:
                agent.x = s.uniform(rng)
                s.evaluate_agent(i, f)
                s.extra_evaluations += 1
                swallowed.append(i)

        s.state["black_hole"] = hole
        s.state["horizon"] = radius
        s.state["swallowed"] = swallowed
        return s


bh_step = BlackHole().step
