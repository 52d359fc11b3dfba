"""Hypercomplex search spaces.

Every decision variable j is represented by k coefficients q_j in [0, 1]^k
(k = 4 for quaternions, k = 8 for octonions, any k >= 1 otherwise). The
objective only ever sees the spanned real position

    x_j = LB_j + (UB_j - LB_j) ||q_j|| / sqrt(k)

which always lies inside [LB_j, UB_j]. A lifted run applies a technique's
ordinary update rules to the flattened n * k coefficients over the unit box.
"""
import dataclasses
import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from nature_opt.core import (
    Objective,
    RunResult,
    SearchSpace,
    SearchSpaceError,
    check_arity,
    create_search_space,
    initialize_search_space,
    make_rng,
    minimize,
    update_global_best,
    validate_search_space,
)
from nature_opt.params import HYPERCOMPLEX_TECHNIQUES, Technique, to_technique

logger = logging.getLogger(__name__)

QUATERNION = 4
OCTONION = 8


class UnsupportedTechniqueError(ValueError):
    pass


@dataclass(frozen=True)
class HypercomplexConfig:
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise ValueError(f"Hypercomplex dimension k must be an integer >= 1, got {self.k!r}")


@dataclass(frozen=True)
class TensorState:
    """snapshot of a lifted population: t is m x n x k, t_g is n x k"""

    t: np.ndarray
    t_g: Optional[np.ndarray]

    @property
    def k(self) -> int:
        return self.t.shape[-1]


def span_to_real(t_row, LB_j: float, UB_j: float) -> float:
    return float(span_tensor(np.asarray(t_row, dtype=float)[None, :], [LB_j], [UB_j])[0])


def span_tensor(t: np.ndarray, LB, UB) -> np.ndarray:
    """spans an (..., n, k) tensor to (..., n) real positions inside [LB, UB]

    Coefficients are clamped to [0, 1] first; a row of ones maps exactly to UB.
    """
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    LB = np.asarray(LB, dtype=float)
    UB = np.asarray(UB, dtype=float)
    ratio = np.linalg.norm(t, axis=-1) / np.sqrt(t.shape[-1])
    x = np.where(ratio >= 1.0, UB, LB + (UB - LB) * ratio)
    return np.clip(x, LB, UB)


def supported_technique(technique: Union[str, Technique]) -> Technique:
    technique = to_technique(technique)
    if technique not in HYPERCOMPLEX_TECHNIQUES:
        supported = [t.value for t in Technique if t in HYPERCOMPLEX_TECHNIQUES]
        raise UnsupportedTechniqueError(
            f"{technique} has no hypercomplex version, supported techniques are {supported}"
        )
    return technique


def init_tensor(
    s: SearchSpace, k: int, rng: np.random.Generator, f: Optional[Objective] = None
) -> SearchSpace:
    """draws every agent's n x k tensor from U(0, 1) and spans it to a position

    When an objective is given the agents are evaluated as well.
    """
    k = HypercomplexConfig(k).k
    if s.LB is None or s.UB is None:
        raise SearchSpaceError("Bounds must be set before initializing tensors")
    s.k = k
    for agent in s.agents:
        agent.t = rng.random((s.n, k))
        agent.x = s.clamp(span_tensor(agent.t, s.LB, s.UB))
    if f is not None:
        for i in range(s.m):
            s.evaluate_agent(i, f)
        update_global_best(s)
    return s


def tensor_state(s: SearchSpace) -> TensorState:
    if any(agent.t is None for agent in s.agents):
        raise SearchSpaceError("Search space holds no tensors, call init_tensor first")
    t_g = None if s.t_g is None else s.t_g.copy()
    return TensorState(t=np.array([agent.t for agent in s.agents]), t_g=t_g)


def lift(
    technique: Union[str, Technique], s: SearchSpace, f: Objective, k: int, seed: int
) -> RunResult:
    """runs a technique over the hypercomplex version of a search space

    The technique moves an inner population of n * k coefficients in the unit
    box; after every iteration the outer search space mirrors its tensors,
    spanned positions, fitnesses and global best.

    Raises:
        UnsupportedTechniqueError: for MBO and WCA
        SearchSpaceError: on a technique mismatch or failed validation
    """
    technique = supported_technique(technique)
    k = HypercomplexConfig(k).k
    if technique != s.technique:
        raise SearchSpaceError(f"Search space was created for {s.technique}, cannot run {technique}")
    problems = validate_search_space(s, min_iterations=0)
    if problems:
        raise SearchSpaceError("Invalid search space: " + "; ".join(problems))
    check_arity(s, f)

    n, LB, UB = s.n, s.LB, s.UB

    def spanned(z: np.ndarray) -> float:
        return f(s.clamp(span_tensor(np.reshape(z, (n, k)), LB, UB)))

    rng = make_rng(seed)
    init_tensor(s, k, rng)
    inner = create_search_space(s.m, n * k, technique, s.iterations)
    inner.params = dict(s.params)
    inner.set_bounds(np.zeros(n * k), np.ones(n * k))
    initialize_search_space(inner, rng, positions=[agent.t.ravel() for agent in s.agents])

    def sync(inner: SearchSpace) -> None:
        # one span over the whole (m, n, k) population per iteration
        t = inner.positions.reshape(s.m, n, k)
        x = s.clamp(span_tensor(t, LB, UB))
        for i, (outer_agent, agent) in enumerate(zip(s.agents, inner.agents)):
            outer_agent.t = t[i]
            outer_agent.x = x[i]
            outer_agent.fit = agent.fit
        s.t_g = inner.g.reshape(n, k).copy()
        s.g = s.clamp(span_tensor(s.t_g, LB, UB))
        s.gfit = inner.gfit
        s.best = inner.best
        s.iteration = inner.iteration
        s.evaluations = inner.evaluations
        s.extra_evaluations = inner.extra_evaluations

    logger.info(f"Lifting {technique} to k={k}: {n} variables become {n * k} coefficients")
    result = minimize(inner, spanned, rng, seed=seed, callback=sync)
    return dataclasses.replace(result, best_position=tuple(float(v) for v in s.g), k=k)
