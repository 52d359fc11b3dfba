from typing import Tuple

import numpy as np

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.core import Objective, SearchSpace
from nature_opt.params import Technique

# operation codes kept in the PSFHS operation memory
RANDOM, MEMORY, PITCH = 0, 1, 2

# rates used while the operation memory is rehearsed
REHEARSAL_HMCR = 0.9
REHEARSAL_PAR = 0.3
# pitch adjustment bandwidth as a share of the variable range
PSFHS_BANDWIDTH = 0.01


def ihs_schedule(t: int, T: int, params: dict) -> Tuple[float, float]:
    """PAR and bandwidth for iteration t (0-based) of a T-iteration run

        PAR(t) = PAR_min + (PAR_max - PAR_min) t / (T - 1)
        bw(t)  = bw_max exp(ln(bw_min / bw_max) t / (T - 1))
    """
    progress = min(max(t / max(T - 1, 1), 0.0), 1.0)
    par = params["PAR_min"] + (params["PAR_max"] - params["PAR_min"]) * progress
    bw = params["bw_max"] * np.exp(np.log(params["bw_min"] / params["bw_max"]) * progress)
    return par, float(bw)


def psfhs_rates(operations: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """per-variable HMCR and PAR read off an m x n operation memory

    HMCR_j is the share of harmonies whose j-th value came from memory
    (with or without pitch adjustment); PAR_j is the share of those that
    were pitch adjusted, 0 when none came from memory.
    """
    operations = np.asarray(operations)
    from_memory = np.sum(operations != RANDOM, axis=0)
    pitched = np.sum(operations == PITCH, axis=0)
    hmcr = from_memory / operations.shape[0]
    par = np.divide(
        pitched, from_memory, out=np.zeros(operations.shape[1]), where=from_memory > 0
    )
    return hmcr, par


class HarmonySearch(Metaheuristic):
    """Harmony Search; the agents are the harmony memory.

    One harmony is improvised per iteration, variable by variable:

        with probability HMCR  y_j = x_rj for a random memory entry r,
                               then with probability PAR  y_j += bw U(-1, 1)
        otherwise              y_j ~ U(LB_j, UB_j)

    and replaces the worst memory entry if it is strictly better.
    Evaluations per iteration: 1.
    """

    technique = Technique.HS

    def evaluations_per_iteration(self, s: SearchSpace) -> int:
        return 1

    def rates(self, s: SearchSpace):
        """HMCR, PAR and bandwidth, scalars or per-variable arrays"""
        return s.params["HMCR"], s.params["PAR"], s.params["bw"]

    def improvise(self, s: SearchSpace, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        hmcr, par, bw = (np.broadcast_to(v, (s.n,)) for v in self.rates(s))
        harmony = np.empty(s.n)
        operations = np.full(s.n, RANDOM)
        for j in range(s.n):
            if rng.random() < hmcr[j]:
                harmony[j] = s.agents[rng.integers(s.m)].x[j]
                operations[j] = MEMORY
                if rng.random() < par[j]:
                    harmony[j] += bw[j] * rng.uniform(-1.0, 1.0)
                    operations[j] = PITCH
            else:
                harmony[j] = rng.uniform(s.LB[j], s.UB[j])
        return s.clamp(harmony), operations

    def step(self, s: SearchSpace, f: Objective, rng: np.random.Generator) -> SearchSpace:
        harmony, operations = self.improvise(s, rng)
        fit = s.evaluate(harmony, f)
        worst = int(np.argmax(s.fitnesses))
        s.state["replaced"] = None
        if fit < s.agents[worst].fit:
            s.agents[worst].x = harmony
            s.agents[worst].fit = fit
            s.state["replaced"] = worst
            self.remember(s, worst, operations)
        return s

    def remember(self, s: SearchSpace, index: int, operations: np.ndarray) -> None:
        pass


class ImprovedHarmonySearch(HarmonySearch):
    """Harmony Search with iteration-dependent PAR and bandwidth.

    PAR grows linearly from PAR_min to PAR_max and the bandwidth shrinks
    exponentially from bw_max to bw_min over the run, see `ihs_schedule`.
    Evaluations per iteration: 1.
    """

    technique = Technique.IHS

    def rates(self, s: SearchSpace):
        par, bw = ihs_schedule(s.iteration, s.iterations, s.params)
        s.state["PAR"], s.state["bw"] = par, bw
        return s.params["HMCR"], par, bw


class ParameterSettingFreeHarmonySearch(HarmonySearch):
    """Harmony Search that learns HMCR and PAR from its own history.

    An m x n operation memory records how each stored value was produced
    (random, memory or pitch adjusted). The first m iterations rehearse with
    HMCR 0.9 and PAR 0.3; afterwards the per-variable rates come from
    `psfhs_rates` over the operation memory. The bandwidth is 0.01 (UB - LB).
    Evaluations per iteration: 1.
    """

    technique = Technique.PSFHS

    def initialize(self, s: SearchSpace, rng: np.random.Generator) -> None:
        s.state["operations"] = np.full((s.m, s.n), RANDOM)

    def rates(self, s: SearchSpace):
        if s.iteration < s.m:
            hmcr, par = np.full(s.n, REHEARSAL_HMCR), np.full(s.n, REHEARSAL_PAR)
        else:
            hmcr, par = psfhs_rates(s.state["operations"])
        s.state["HMCR"], s.state["PAR"] = hmcr, par
        return hmcr, par, PSFHS_BANDWIDTH * (s.UB - s.LB)

    def remember(self, s: SearchSpace, index: int, operations: np.ndarray) -> None:
        s.state["operations"][index] = operations


hs_step = HarmonySearch().step
ihs_step = ImprovedHarmonySearch().step
psfhs_step = ParameterSettingFreeHarmonySearch().step
