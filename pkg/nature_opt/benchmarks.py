import difflib
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

Bounds = Tuple[np.ndarray, np.ndarray]
Optimum = Tuple[np.ndarray, float]


class UnknownFunctionError(ValueError):
    def __init__(self, name: str, suggestions: Sequence[str] = ()):
        self.name = name
        self.suggestions = list(suggestions)
        message = f"Unknown benchmark function {name!r}"
        if self.suggestions:
            message += f", did you mean {' or '.join(repr(s) for s in self.suggestions)}?"
        super().__init__(message)


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class ObjectiveFunction:
    """A minimization objective: maps a position vector to a 64-bit real.

    Attributes:
        name (str): catalog name
        evaluate: the formula, receives a float array of length d
        arity (int): fixed number of variables, None for any d >= min_arity
        min_arity (int): smallest d the formula is defined for
        optimum: d -> (minimiser, minimum), None when only known numerically
        bounds: d -> (LB, UB) suggested search box
    """

    name: str
    evaluate: Callable[[np.ndarray], float]
    arity: Optional[int] = None
    min_arity: int = 1
    optimum: Optional[Callable[[int], Optimum]] = None
    bounds: Optional[Callable[[int], Bounds]] = None

    def accepts(self, n: int) -> bool:
        if self.arity is not None:
            return n == self.arity
        return n >= self.min_arity

    def describe_arity(self) -> str:
        if self.arity is not None:
            return f"d={self.arity}"
        return f"d>={self.min_arity}"

    def _dimension(self, d: Optional[int]) -> int:
        if d is None:
            d = self.arity if self.arity is not None else 2
        if not self.accepts(d):
            raise ArityError(f"{self.name} needs {self.describe_arity()}, got d={d}")
        return d

    def known_optimum(self, d: Optional[int] = None) -> Optional[Optimum]:
        if self.optimum is None:
            return None
        return self.optimum(self._dimension(d))

    def suggested_bounds(self, d: Optional[int] = None) -> Bounds:
        return self.bounds(self._dimension(d))

    def __call__(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or not self.accepts(len(x)):
            raise ArityError(
                f"{self.name} needs {self.describe_arity()}, got a position of shape {x.shape}"
            )
        return float(self.evaluate(x))

    def __str__(self):
        return self.name


def _box(low: float, high: float) -> Callable[[int], Bounds]:
    return lambda d: (np.full(d, float(low)), np.full(d, float(high)))


def _fixed_box(low: Sequence[float], high: Sequence[float]) -> Callable[[int], Bounds]:
    return lambda d: (np.array(low, dtype=float), np.array(high, dtype=float))


def _at(position: float, value: float = 0.0) -> Callable[[int], Optimum]:
    """optimum at the same coordinate in every dimension, value scaling with d"""
    return lambda d: (np.full(d, float(position)), value * d)


def _point(position: Sequence[float], value: float) -> Callable[[int], Optimum]:
    return lambda d: (np.array(position, dtype=float), value)


def _my_function(x: np.ndarray) -> float:
    # x0^2 + x1^2 + 1
    return x[0] ** 2 + x[1] ** 2 + 1.0


def _sphere(x: np.ndarray) -> float:
    # sum x_i^2
    return np.sum(x**2)


def _rastrigin(x: np.ndarray) -> float:
    # 10 d + sum (x_i^2 - 10 cos(2 pi x_i))
    return 10.0 * len(x) + np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x))


def _rosenbrock(x: np.ndarray) -> float:
    # sum_{i<d} 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2
    return np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2)


def _ackley(x: np.ndarray) -> float:
    # -20 exp(-0.2 sqrt(mean x_i^2)) - exp(mean cos(2 pi x_i)) + 20 + e
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.mean(x**2)))
        - np.exp(np.mean(np.cos(2.0 * np.pi * x)))
        + 20.0
        + np.e
    )


def _griewank(x: np.ndarray) -> float:
    # 1 + sum x_i^2 / 4000 - prod cos(x_i / sqrt(i))
    i = np.arange(1, len(x) + 1)
    return 1.0 + np.sum(x**2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)))


def _schwefel_226(x: np.ndarray) -> float:
    # 418.9829 d - sum x_i sin(sqrt|x_i|)
    return 418.9829 * len(x) - np.sum(x * np.sin(np.sqrt(np.abs(x))))


def _levy(x: np.ndarray) -> float:
    # w = 1 + (x - 1) / 4
    # sin^2(pi w_1) + sum_{i<d} (w_i - 1)^2 (1 + 10 sin^2(pi w_i + 1)) + (w_d - 1)^2 (1 + sin^2(2 pi w_d))
    w = 1.0 + (x - 1.0) / 4.0
    head = np.sin(np.pi * w[0]) ** 2
    body = np.sum((w[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * w[:-1] + 1.0) ** 2))
    tail = (w[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * w[-1]) ** 2)
    return head + body + tail


def _zakharov(x: np.ndarray) -> float:
    # sum x_i^2 + (sum 0.5 i x_i)^2 + (sum 0.5 i x_i)^4
    s = np.sum(0.5 * np.arange(1, len(x) + 1) * x)
    return np.sum(x**2) + s**2 + s**4


def _styblinski_tang(x: np.ndarray) -> float:
    # 0.5 sum (x_i^4 - 16 x_i^2 + 5 x_i)
    return 0.5 * np.sum(x**4 - 16.0 * x**2 + 5.0 * x)


def _sum_squares(x: np.ndarray) -> float:
    # sum i x_i^2
    return np.sum(np.arange(1, len(x) + 1) * x**2)


def _dixon_price(x: np.ndarray) -> float:
    # (x_1 - 1)^2 + sum_{i>=2} i (2 x_i^2 - x_{i-1})^2
    i = np.arange(2, len(x) + 1)
    return (x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] ** 2 - x[:-1]) ** 2)


def _dixon_price_optimum(d: int) -> Optimum:
    i = np.arange(1, d + 1)
    return 2.0 ** (-(2.0**i - 2.0) / 2.0**i), 0.0


MICHALEWICZ_STEEPNESS = 10


def _michalewicz(x: np.ndarray) -> float:
    # -sum sin(x_i) sin(i x_i^2 / pi)^(2 m), m = 10
    i = np.arange(1, len(x) + 1)
    return -np.sum(np.sin(x) * np.sin(i * x**2 / np.pi) ** (2 * MICHALEWICZ_STEEPNESS))


def _booth(x: np.ndarray) -> float:
    # (x1 + 2 x2 - 7)^2 + (2 x1 + x2 - 5)^2
    return (x[0] + 2.0 * x[1] - 7.0) ** 2 + (2.0 * x[0] + x[1] - 5.0) ** 2


def _beale(x: np.ndarray) -> float:
    # (1.5 - x1 + x1 x2)^2 + (2.25 - x1 + x1 x2^2)^2 + (2.625 - x1 + x1 x2^3)^2
    x1, x2 = x
    return (
        (1.5 - x1 + x1 * x2) ** 2
        + (2.25 - x1 + x1 * x2**2) ** 2
        + (2.625 - x1 + x1 * x2**3) ** 2
    )


def _matyas(x: np.ndarray) -> float:
    # 0.26 (x1^2 + x2^2) - 0.48 x1 x2
    return 0.26 * (x[0] ** 2 + x[1] ** 2) - 0.48 * x[0] * x[1]


def _himmelblau(x: np.ndarray) -> float:
    # (x1^2 + x2 - 11)^2 + (x1 + x2^2 - 7)^2
    return (x[0] ** 2 + x[1] - 11.0) ** 2 + (x[0] + x[1] ** 2 - 7.0) ** 2


def _easom(x: np.ndarray) -> float:
    # -cos(x1) cos(x2) exp(-((x1 - pi)^2 + (x2 - pi)^2))
    return -np.cos(x[0]) * np.cos(x[1]) * np.exp(-((x[0] - np.pi) ** 2 + (x[1] - np.pi) ** 2))


def _branin(x: np.ndarray) -> float:
    # (x2 - b x1^2 + c x1 - 6)^2 + 10 (1 - t) cos(x1) + 10
    # b = 5.1 / (4 pi^2), c = 5 / pi, t = 1 / (8 pi)
    b = 5.1 / (4.0 * np.pi**2)
    c = 5.0 / np.pi
    t = 1.0 / (8.0 * np.pi)
    return (x[1] - b * x[0] ** 2 + c * x[0] - 6.0) ** 2 + 10.0 * (1.0 - t) * np.cos(x[0]) + 10.0


def _goldstein_price(x: np.ndarray) -> float:
    # [1 + (x1 + x2 + 1)^2 (19 - 14 x1 + 3 x1^2 - 14 x2 + 6 x1 x2 + 3 x2^2)]
    # * [30 + (2 x1 - 3 x2)^2 (18 - 32 x1 + 12 x1^2 + 48 x2 - 36 x1 x2 + 27 x2^2)]
    x1, x2 = x
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return a * b


def _six_hump_camel(x: np.ndarray) -> float:
    # (4 - 2.1 x1^2 + x1^4 / 3) x1^2 + x1 x2 + (-4 + 4 x2^2) x2^2
    x1, x2 = x
    return (4.0 - 2.1 * x1**2 + x1**4 / 3.0) * x1**2 + x1 * x2 + (-4.0 + 4.0 * x2**2) * x2**2


my_function = ObjectiveFunction(
    "my_function", _my_function, arity=2, optimum=_point((0.0, 0.0), 1.0), bounds=_box(-10, 10)
)
sphere = ObjectiveFunction("sphere", _sphere, optimum=_at(0.0), bounds=_box(-5.12, 5.12))
rastrigin = ObjectiveFunction(
    "rastrigin", _rastrigin, optimum=_at(0.0), bounds=_box(-5.12, 5.12)
)
rosenbrock = ObjectiveFunction(
    "rosenbrock", _rosenbrock, min_arity=2, optimum=_at(1.0), bounds=_box(-2.048, 2.048)
)
ackley = ObjectiveFunction("ackley", _ackley, optimum=_at(0.0), bounds=_box(-32.768, 32.768))
griewank = ObjectiveFunction("griewank", _griewank, optimum=_at(0.0), bounds=_box(-600, 600))
# minimum only known numerically, near x_i = 420.9687
schwefel_226 = ObjectiveFunction("schwefel_226", _schwefel_226, bounds=_box(-500, 500))
levy = ObjectiveFunction("levy", _levy, optimum=_at(1.0), bounds=_box(-10, 10))
zakharov = ObjectiveFunction("zakharov", _zakharov, optimum=_at(0.0), bounds=_box(-5, 10))
styblinski_tang = ObjectiveFunction(
    "styblinski_tang",
    _styblinski_tang,
    optimum=_at(-2.903534027612696, -39.16616570377142),
    bounds=_box(-5, 5),
)
sum_squares = ObjectiveFunction(
    "sum_squares", _sum_squares, optimum=_at(0.0), bounds=_box(-10, 10)
)
dixon_price = ObjectiveFunction(
    "dixon_price", _dixon_price, optimum=_dixon_price_optimum, bounds=_box(-10, 10)
)
# minimum depends on d and is only known numerically
michalewicz = ObjectiveFunction("michalewicz", _michalewicz, bounds=_box(0, np.pi))
booth = ObjectiveFunction(
    "booth", _booth, arity=2, optimum=_point((1.0, 3.0), 0.0), bounds=_box(-10, 10)
)
beale = ObjectiveFunction(
    "beale", _beale, arity=2, optimum=_point((3.0, 0.5), 0.0), bounds=_box(-4.5, 4.5)
)
matyas = ObjectiveFunction(
    "matyas", _matyas, arity=2, optimum=_point((0.0, 0.0), 0.0), bounds=_box(-10, 10)
)
himmelblau = ObjectiveFunction(
    "himmelblau", _himmelblau, arity=2, optimum=_point((3.0, 2.0), 0.0), bounds=_box(-5, 5)
)
easom = ObjectiveFunction(
    "easom", _easom, arity=2, optimum=_point((np.pi, np.pi), -1.0), bounds=_box(-100, 100)
)
branin = ObjectiveFunction(
    "branin",
    _branin,
    arity=2,
    optimum=_point((-np.pi, 12.275), 5.0 / (4.0 * np.pi)),
    bounds=_fixed_box((-5.0, 0.0), (10.0, 15.0)),
)
goldstein_price = ObjectiveFunction(
    "goldstein_price",
    _goldstein_price,
    arity=2,
    optimum=_point((0.0, -1.0), 3.0),
    bounds=_box(-2, 2),
)
six_hump_camel = ObjectiveFunction(
    "six_hump_camel",
    _six_hump_camel,
    arity=2,
    optimum=_point((0.08984201368301331, -0.7126564032704135), -1.0316284534898774),
    bounds=_fixed_box((-3.0, -2.0), (3.0, 2.0)),
)

CATALOG: Dict[str, ObjectiveFunction] = {}


def register(function: ObjectiveFunction) -> ObjectiveFunction:
    """adds a function to the catalog under its lower-cased name"""
    key = function.name.lower()
    if key in CATALOG:
        raise ValueError(f"A benchmark function named {function.name!r} is already registered")
    CATALOG[key] = function
    return function


for _function in (
    my_function,
    sphere,
    rastrigin,
    rosenbrock,
    ackley,
    griewank,
    schwefel_226,
    levy,
    zakharov,
    styblinski_tang,
    sum_squares,
    dixon_price,
    michalewicz,
    booth,
    beale,
    matyas,
    himmelblau,
    easom,
    branin,
    goldstein_price,
    six_hump_camel,
):
    register(_function)


def function_names() -> List[str]:
    return list(CATALOG)


def lookup(name: str) -> ObjectiveFunction:
    """finds a catalog function by case-insensitive name

    Raises:
        UnknownFunctionError: listing the closest catalog names
    """
    key = str(name).strip().lower()
    if key in CATALOG:
        return CATALOG[key]
    raise UnknownFunctionError(name, difflib.get_close_matches(key, CATALOG, n=3, cutoff=0.6))
