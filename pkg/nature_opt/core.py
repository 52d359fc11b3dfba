import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from nature_opt.params import Technique, to_technique, validate_params

logger = logging.getLogger(__name__)

# largest finite double, stored instead of NaN/inf objective values
WORST_FITNESS = float(np.finfo(np.float64).max)

Objective = Callable[[np.ndarray], float]


class SearchSpaceError(ValueError):
    pass


def make_rng(seed: Optional[int]) -> np.random.Generator:
    """the one random stream of a run: numpy's PCG64 seeded with a 64-bit integer"""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass
class Agent:
    n: int
    x: np.ndarray
    fit: float = WORST_FITNESS
    # per-technique state: velocity, pbest, loudness, trial counter, ...
    extras: dict = field(default_factory=dict)
    # n x k hypercomplex coefficients, lifted runs only
    t: Optional[np.ndarray] = None

    @classmethod
    def zeros(cls, n: int) -> "Agent":
        return cls(n=n, x=np.zeros(n))


@dataclass(frozen=True)
class RunResult:
    technique: str
    best_position: Tuple[float, ...]
    best_fitness: float
    trace: Tuple[float, ...]
    evaluations: int
    seed: Optional[int]
    elapsed: float
    k: Optional[int] = None


class SearchSpace:
    """Population plus everything a technique needs to move it.

    Attributes:
        m, n, iterations: number of agents, decision variables and iterations
        agents (list): the m agents
        LB, UB (np.ndarray): per-variable boundaries, None until set
        g (np.ndarray): position that achieved gfit
        t_g (np.ndarray): tensor behind g in lifted runs
        best (int): index of the agent holding the best fitness
        gfit (float): best fitness evaluated so far
        is_integer_opt (bool): round positions to integers after every move
        params (dict): technique parameters, see params.schema_for
        iteration (int): 0-based index of the iteration being stepped
        evaluations (int): objective calls so far
        extra_evaluations (int): event-driven calls (scouts, re-initialisations, ...)
        state (dict): technique-level state (inertia weight, formation, ...)
    """

    def __init__(self, m: int, n: int, technique: Technique, iterations: int = 1):
        self.m = m
        self.n = n
        self.technique = technique
        self.iterations = iterations
        self.agents = [Agent.zeros(n) for _ in range(m)]
        self.LB: Optional[np.ndarray] = None
        self.UB: Optional[np.ndarray] = None
        self.g = np.zeros(n)
        self.t_g: Optional[np.ndarray] = None
        self.best = 0
        self.gfit = WORST_FITNESS
        self.is_integer_opt = False
        self.params: dict = {}
        self.k: Optional[int] = None
        self.iteration = 0
        self.evaluations = 0
        self.extra_evaluations = 0
        self.state: dict = {}

    def __repr__(self):
        return f"SearchSpace({self.technique}, m={self.m}, n={self.n}, iterations={self.iterations})"

    def set_bounds(self, LB: Sequence[float], UB: Sequence[float]) -> "SearchSpace":
        self.LB = np.asarray(LB, dtype=float).copy()
        self.UB = np.asarray(UB, dtype=float).copy()
        return self

    @property
    def positions(self) -> np.ndarray:
        return np.array([a.x for a in self.agents])

    @property
    def fitnesses(self) -> np.ndarray:
        return np.array([a.fit for a in self.agents])

    def clamp(self, x: np.ndarray) -> np.ndarray:
        return clamp_position(x, self.LB, self.UB, self.is_integer_opt)

    def uniform(self, rng: np.random.Generator, size=None) -> np.ndarray:
        """uniform draw inside the bounds, one row per requested agent"""
        shape = (self.n,) if size is None else (size, self.n)
        return self.clamp(rng.uniform(self.LB, self.UB, size=shape))

    def evaluate(self, x: np.ndarray, f: Objective, index: Optional[int] = None) -> float:
        """counted objective call that also keeps the global best up to date

        Candidates rejected later by a technique still count towards gfit.
        """
        fit = sanitize_fitness(f(x))
        self.evaluations += 1
        if fit < self.gfit:
            self.gfit = fit
            self.g = np.array(x, dtype=float)
            if index is not None:
                self.best = index
        return fit

    def evaluate_agent(self, index: int, f: Objective) -> float:
        agent = self.agents[index]
        agent.fit = self.evaluate(agent.x, f, index)
        return agent.fit


def sanitize_fitness(value) -> float:
    value = float(value)
    if not np.isfinite(value):
        return WORST_FITNESS
    return value


def _algorithm(technique: Technique):
    # algorithms import this module, so resolve lazily
    from nature_opt.algorithms import get_algorithm

    return get_algorithm(technique)


def create_search_space(
    m: int, n: int, technique: Union[str, Technique], iterations: int = 1
) -> SearchSpace:
    """allocates m agents of n zeroed variables with the technique's extras

    Raises:
        SearchSpaceError: if m or n is not a positive integer or the technique is unknown
    """
    try:
        technique = to_technique(technique)
    except ValueError as e:
        raise SearchSpaceError(f"Invalid parameters @create_search_space: {e}")
    for name, value in (("m", m), ("n", n)):
        if isinstance(value, bool) or int(value) != value or value < 1:
            raise SearchSpaceError(
                f"Invalid parameters @create_search_space: {name} must be a positive integer, got {value!r}"
            )

    s = SearchSpace(int(m), int(n), technique, iterations)
    algorithm = _algorithm(technique)
    for agent in s.agents:
        algorithm.allocate(agent, s)
    return s


def initialize_search_space(
    s: SearchSpace, rng: np.random.Generator, positions: Optional[np.ndarray] = None
) -> SearchSpace:
    """draws every position uniformly inside the bounds and resets run state

    Args:
        s (SearchSpace): search space with bounds set
        rng (np.random.Generator): the run's random stream
        positions (np.ndarray): optional m x n starting positions used instead
            of the uniform draw, clamped to the bounds

    Raises:
        SearchSpaceError: if the bounds are not set
    """
    if s.LB is None or s.UB is None:
        raise SearchSpaceError("Bounds must be set before initializing the search space")
    if s.is_integer_opt and not (np.all(s.LB == np.rint(s.LB)) and np.all(s.UB == np.rint(s.UB))):
        warnings.warn("Integer optimization with non-integral bounds, clamped positions may not be integral")

    algorithm = _algorithm(s.technique)
    s.gfit = WORST_FITNESS
    s.g = np.zeros(s.n)
    s.t_g = None
    s.best = 0
    s.iteration = 0
    s.evaluations = 0
    s.extra_evaluations = 0
    s.state = {}
    if positions is None:
        positions = s.uniform(rng, size=s.m)
    else:
        positions = s.clamp(np.asarray(positions, dtype=float).reshape(s.m, s.n))
    for agent, x in zip(s.agents, positions):
        agent.x = x
        agent.fit = WORST_FITNESS
        agent.t = None
        agent.extras = {}
        algorithm.allocate(agent, s)
    return s


def validate_search_space(s: SearchSpace, min_iterations: int = 1) -> List[str]:
    """lists every failed validity check of a search space, empty when valid"""
    problems = []
    for name in ("m", "n"):
        if getattr(s, name) < 1:
            problems.append(f"{name} must be >= 1, got {getattr(s, name)}")
    if s.iterations < min_iterations:
        problems.append(f"iterations must be >= {min_iterations}, got {s.iterations}")
    if len(s.agents) != s.m:
        problems.append(f"expected {s.m} agents, found {len(s.agents)}")
    if s.LB is None or s.UB is None:
        problems.append("bounds are not set")
    elif len(s.LB) != s.n or len(s.UB) != s.n:
        problems.append(f"expected {s.n} bounds, found {len(s.LB)} LB and {len(s.UB)} UB")
    else:
        if not (np.all(np.isfinite(s.LB)) and np.all(np.isfinite(s.UB))):
            problems.append("bounds must be finite")
        for j in np.flatnonzero(~(s.LB < s.UB)):
            problems.append(f"LB[{j}]={s.LB[j]} must be < UB[{j}]={s.UB[j]}")
    problems.extend(validate_params(s.technique, s.params, s.m))
    return problems


def check_search_space(s: SearchSpace) -> bool:
    """True iff the search space is valid; each failed check is logged"""
    problems = validate_search_space(s)
    for problem in problems:
        logger.warning(f"Invalid search space: {problem}")
    return not problems


def evaluate_agent(a: Agent, f: Objective) -> float:
    a.fit = sanitize_fitness(f(a.x))
    return a.fit


def clamp_position(
    x: np.ndarray, LB: np.ndarray, UB: np.ndarray, is_integer_opt: bool = False
) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if is_integer_opt:
        x = np.rint(x)
    return np.clip(x, LB, UB)


def clamp_to_bounds(a: Agent, s: SearchSpace) -> Agent:
    a.x = s.clamp(a.x)
    return a


def update_global_best(s: SearchSpace) -> SearchSpace:
    """points best/g/gfit at the lowest fitness seen so far, lowest index on ties"""
    fits = s.fitnesses
    i = int(np.argmin(fits))
    if fits[i] <= s.gfit:
        s.best = i
        if fits[i] < s.gfit:
            s.gfit = float(fits[i])
            s.g = s.agents[i].x.copy()
            if s.agents[i].t is not None:
                s.t_g = s.agents[i].t.copy()
    return s


def check_arity(s: SearchSpace, f: Objective):
    """rejects objectives that declare an arity other than s.n"""
    accepts = getattr(f, "accepts", None)
    if accepts is not None and not accepts(s.n):
        raise SearchSpaceError(f"{f} cannot be evaluated with n={s.n} decision variables")


def minimize(
    s: SearchSpace,
    f: Objective,
    rng: np.random.Generator,
    seed: Optional[int] = None,
    callback: Optional[Callable[[SearchSpace], None]] = None,
) -> RunResult:
    """runs a technique on an initialized search space

    Evaluates the initial population, then calls the technique's step
    `s.iterations` times, recording gfit after each iteration.

    Args:
        s (SearchSpace): initialized search space
        f: objective, maps a position to a float
        rng (np.random.Generator): the run's random stream
        seed (int): recorded in the result
        callback: called with the search space after initialization and after every iteration

    Returns:
        RunResult: trace and best solution of the run
    """
    problems = validate_search_space(s, min_iterations=0)
    if problems:
        raise SearchSpaceError("Invalid search space: " + "; ".join(problems))
    check_arity(s, f)

    algorithm = _algorithm(s.technique)
    logger.info(f"Running {s.technique} on {f} with m={s.m}, n={s.n}, seed={seed}")
    start = time.perf_counter()

    for i in range(s.m):
        s.evaluate_agent(i, f)
    update_global_best(s)
    algorithm.initialize(s, rng)
    if callback is not None:
        callback(s)

    trace = []
    for it in range(s.iterations):
        s.iteration = it
        algorithm.step(s, f, rng)
        update_global_best(s)
        trace.append(s.gfit)
        if callback is not None:
            callback(s)
        logger.debug(f"{s.technique} iteration {it + 1}/{s.iterations}: gfit={s.gfit}")

    elapsed = time.perf_counter() - start
    logger.info(f"{s.technique} finished: gfit={s.gfit} after {s.evaluations} evaluations")
    return RunResult(
        technique=s.technique.value,
        best_position=tuple(float(v) for v in s.g),
        best_fitness=float(s.gfit),
        trace=tuple(float(v) for v in trace),
        evaluations=s.evaluations,
        seed=seed,
        elapsed=elapsed,
        k=s.k,
    )


def optimize(
    s: SearchSpace, f: Objective, technique: Union[str, Technique], seed: int
) -> RunResult:
    """seeds, (re)initializes and runs a search space; equal inputs give equal results

    Raises:
        SearchSpaceError: on a technique mismatch or failed validation, before any evaluation
    """
    technique = to_technique(technique)
    if technique != s.technique:
        raise SearchSpaceError(
            f"Search space was created for {s.technique}, cannot run {technique}"
        )
    problems = validate_search_space(s, min_iterations=0)
    if problems:
        raise SearchSpaceError("Invalid search space: " + "; ".join(problems))
    check_arity(s, f)

    rng = make_rng(seed)
    initialize_search_space(s, rng)
    return minimize(s, f, rng, seed=seed)


def random_search(
    f: Objective,
    LB: Sequence[float],
    UB: Sequence[float],
    evaluations: int,
    seed: Optional[int] = None,
) -> RunResult:
    """uniform random search, the reference every technique must beat

    The trace holds the best fitness after each evaluation.
    """
    LB = np.asarray(LB, dtype=float)
    UB = np.asarray(UB, dtype=float)
    rng = make_rng(seed)
    start = time.perf_counter()
    best, best_x = WORST_FITNESS, np.zeros(len(LB))
    trace = []
    for x in rng.uniform(LB, UB, size=(evaluations, len(LB))):
        fit = sanitize_fitness(f(x))
        if fit < best:
            best, best_x = fit, x
        trace.append(best)
    return RunResult(
        technique="random",
        best_position=tuple(float(v) for v in best_x),
        best_fitness=float(best),
        trace=tuple(trace),
        evaluations=evaluations,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )
