import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import WORST_FITNESS, Agent, Objective, SearchSpace
from nature_opt.params import Technique


def adaptive_inertia(success_rate: float, w_min: float, w_max: float) -> float:
    """inertia weight from the share of particles that improved their personal best"""
    return w_min + (w_max - w_min) * success_rate


class ParticleSwarm(Metaheuristic):
    """Global-best Particle Swarm Optimization with inertia weight.

    For every particle i, in index order:

        v_i <- w v_i + c1 r1 (pbest_i - x_i) + c2 r2 (g - x_i),   r1, r2 ~ U(0, 1)^n
        x_i <- clamp(x_i + v_i)
        v_i <- x_i(new) - x_i(old)

    so the stored velocity is the displacement actually taken after clamping.
    Personal bests live in the agent extras ("pbest", "pbest_fit").
    Evaluations per iteration: m.
    """

    technique = Technique.PSO

    def allocate(self, agent: Agent, s: SearchSpace) -> None:
        agent.extras["velocity"] = np.zeros(s.n)
        agent.extras["pbest"] = np.zeros(s.n)
        agent.extras["pbest_fit"] = WORST_FITNESS

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        for agent in s.agents:
            agent.extras["pbest"] = agent.x.copy()
            agent.extras["pbest_fit"] = agent.fit

    def inertia(self, s: SearchSpace) -> float:
        return s.params["w"]

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        c1, c2 = s.params["c1"], s.params["c2"]
        w = self.inertia(s)
        improved = 0
        for i, agent in enumerate(s.agents):
            r1 = rng.random(s.n)
            r2 = rng.random(s.n)
            extras = agent.extras
            velocity = (
                w * extras["velocity"]
                + c1 * r1 * (extras["pbest"] - agent.x)
                + c2 * r2 * (s.g - agent.x)
            )
            new_x = s.clamp(agent.x + velocity)
            extras["velocity"] = new_x - agent.x
            agent.x = new_x
            s.evaluate_agent(i, f)
            if agent.fit < extras["pbest_fit"]:
                extras["pbest"] = agent.x.copy()
                extras["pbest_fit"] = agent.fit
                improved += 1
        self.after_step(s, improved / s.m)
        return s

    def after_step(self, s: SearchSpace, success_rate: float) -> None:
        pass


class AdaptiveInertiaParticleSwarm(ParticleSwarm):
    """PSO whose inertia weight follows the swarm's success rate.

    A particle succeeds when its new fitness beats its previous personal best;
    with P_s the share of successful particles,

        w(t + 1) = w_min + (w_max - w_min) P_s(t)

    The first iteration uses the model file's w. Evaluations per iteration: m.
    """

    technique = Technique.AIWPSO

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        super().initialize(s, rng)
        s.state["w"] = s.params["w"]

    def inertia(self, s: SearchSpace) -> float:
        return s.state["w"]

    def after_step(self, s: SearchSpace, success_rate: float) -> None:
        s.state["success_rate"] = success_rate
        s.state["w"] = adaptive_inertia(
            success_rate, s.params["w_min"], s.params["w_max"]
        )


pso_step = ParticleSwarm().step
aiwpso_step = AdaptiveInertiaParticleSwarm().step
