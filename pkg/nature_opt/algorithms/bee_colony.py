import numpy as np

from nature_opt.algorithms.base import Metaheuristic, other_indices
from nature_opt.core import Agent, Objective, SearchSpace
from nature_opt.params import Technique


def abc_selection_probabilities(fitnesses) -> np.ndarray:
    """onlooker roulette over food sources

    Quality is 1 / (1 + f) for f >= 0 and 1 + |f| otherwise, normalised to sum to 1.
    """
    fitnesses = np.asarray(fitnesses, dtype=float)
    quality = np.where(
        fitnesses >= 0, 1.0 / (1.0 + np.abs(fitnesses)), 1.0 + np.abs(fitnesses)
    )
    total = quality.sum()
    if not np.isfinite(total) or total <= 0:
        return np.full(len(fitnesses), 1.0 / len(fitnesses))
    return quality / total


class ArtificialBeeColony(Metaheuristic):
    """Artificial Bee Colony; every agent is a food source.

    Employed phase: each source i tries

        y = x_i,  y_j = x_ij + U(-1, 1) (x_ij - x_kj)

    for one random variable j and another random source k; y replaces x_i
    when strictly better, which resets its trial counter, otherwise the
    counter grows. Onlooker phase: m more such trials on sources drawn with
    `abc_selection_probabilities`. Scout phase: the source with the most
    trials, if above `limit`, is replaced by a uniform draw.
    Evaluations per iteration: 2m, plus one extra when a scout flies.
    """

    technique = Technique.ABC

    def allocate(self, agent: Agent, s: SearchSpace) -> None:
        agent.extras["trials"] = 0

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        return 2 * s.m

    def _forage(self, s: SearchSpace, i: int, f: Objective, rng: np.random.Generator) -> bool:
        agent = s.agents[i]
        (k,) = other_indices(rng, s.m, i, 1)
        j = rng.integers(s.n)
        candidate = agent.x.copy()
        candidate[j] += rng.uniform(-1.0, 1.0) * (agent.x[j] - s.agents[k].x[j])
        candidate = s.clamp(candidate)
        fit = s.evaluate(candidate, f)
        if fit < agent.fit:
            agent.x = candidate
            agent.fit = fit
            agent.extras["trials"] = 0
            return True
        agent.extras["trials"] += 1
        return False

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        for i in range(s.m):
            self._forage(s, i, f, rng)

        probabilities = abc_selection_probabilities(s.fitnesses)
        for i in rng.choice(s.m, size=s.m, p=probabilities):
            self._forage(s, int(i), f, rng)

        trials = [a.extras["trials"] for a in s.agents]
        scout = int(np.argmax(trials))
        s.state["scout"] = None
        if trials[scout] > s.params["limit"]:
            agent = s.agents[scout]
            agent.x = s.uniform(rng)
            agent.extras["trials"] = 0
            s.evaluate_agent(scout, f)
            s.extra_evaluations += 1
            s.state["scout"] = scout
        return s


abc_step = ArtificialBeeColony().step
