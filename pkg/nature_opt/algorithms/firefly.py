import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique

# per-iteration decay of the randomisation scale
ALPHA_DECAY = 0.97


class Firefly(Metaheuristic):
    """Firefly Algorithm; a firefly is brighter when its fitness is lower.

    Brightness is read once at the start of the iteration. For every pair
    where j is brighter than i:

        x_i <- x_i + beta0 exp(-gamma r_ij^2) (x_j - x_i) + alpha_t (U - 0.5) (UB - LB)

    with r_ij the Euclidean distance and alpha_t = alpha 0.97^t. A firefly
    with no brighter neighbour stays put. All fireflies are re-evaluated
    after the sweep. Evaluations per iteration: m.
    """

    technique = Technique.FA

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        p = s.params
        alpha_t = p["alpha"] * ALPHA_DECAY ** s.iteration
        width = s.UB - s.LB
        brightness = s.fitnesses
        for i, agent in enumerate(s.agents):
            x = agent.x
            for j, other in enumerate(s.agents):
                if brightness[j] >= brightness[i]:
                    continue
                r2 = float(np.sum((other.x - x) ** 2))
                attraction = p["beta0"] * np.exp(-p["gamma"] * r2)
                x = x + attraction * (other.x - x) + alpha_t * (rng.random(s.n) - 0.5) * width
            agent.x = s.clamp(x)

        for i in range(s.m):
            s.evaluate_agent(i, f)
        return s


fa_step = Firefly().step
