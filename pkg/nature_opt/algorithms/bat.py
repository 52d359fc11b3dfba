import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Agent, Objective, SearchSpace
from nature_opt.params import Technique


class BatAlgorithm(Metaheuristic):
    """Bat Algorithm with frequency tuning, loudness and pulse emission.

    For every bat i, in index order, at 1-based iteration t:

        f_i  = f_min + (f_max - f_min) U
        v_i <- v_i + (g - x_i) f_i
        y    = clamp(x_i + v_i)
        y    = clamp(g + U(-1, 1)^n mean(A))      when U > r_i (local walk)
        accept y if U < A_i and f(y) <= fit_i, then
            A_i <- alpha A_i
            r_i <- r (1 - exp(-gamma t))

    Loudness starts at A and the pulse rate at 0. The stored velocity is the
    displacement of the clamped candidate. Evaluations per iteration: m.
    """

    technique = Technique.BA

    def allocate(self, agent: Agent, s: SearchSpace) -> None:
        agent.extras["velocity"] = np.zeros(s.n)
        agent.extras["frequency"] = 0.0
        agent.extras["loudness"] = s.params.get("A", 1.0)
        agent.extras["pulse_rate"] = 0.0

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        p = s.params
        t = s.iteration + 1
        mean_loudness = np.mean([a.extras["loudness"] for a in s.agents])
        for i, agent in enumerate(s.agents):
            extras = agent.extras
            extras["frequency"] = p["f_min"] + (p["f_max"] - p["f_min"]) * rng.random()
            velocity = extras["velocity"] + (s.g - agent.x) * extras["frequency"]
            candidate = s.clamp(agent.x + velocity)
            extras["velocity"] = candidate - agent.x
            if rng.random() > extras["pulse_rate"]:
                candidate = s.clamp(s.g + rng.uniform(-1.0, 1.0, s.n) * mean_loudness)

            fit = s.evaluate(candidate, f)
            if rng.random() < extras["loudness"] and fit <= agent.fit:
                agent.x = candidate
                agent.fit = fit
                extras["loudness"] *= p["alpha"]
                extras["pulse_rate"] = p["r"] * (1.0 - np.exp(-p["gamma"] * t))
        return s


ba_step = BatAlgorithm().step
