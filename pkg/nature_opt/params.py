from enum import Enum
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import warnings


class Technique(str, Enum):
    PSO = "PSO"
    AIWPSO = "AIWPSO"
    BA = "BA"
    FPA = "FPA"
    FA = "FA"
    CS = "CS"
    BH = "BH"
    MBO = "MBO"
    ABC = "ABC"
    WCA = "WCA"
    HS = "HS"
    IHS = "IHS"
    PSFHS = "PSFHS"

    def __str__(self) -> str:
        return self.value


# techniques that also run over hypercomplex (quaternion, octonion, ...) search spaces
HYPERCOMPLEX_TECHNIQUES = frozenset(
    [
        Technique.PSO,
        Technique.AIWPSO,
        Technique.BA,
        Technique.FPA,
        Technique.FA,
        Technique.CS,
        Technique.BH,
        Technique.ABC,
        Technique.HS,
        Technique.IHS,
        Technique.PSFHS,
    ]
)


class Field(NamedTuple):
    name: str
    kind: type  # int or float


class SchemaLine(NamedTuple):
    """One record of a model file.

    `line` is the 1-based record number once comments and blank lines are
    stripped; `repeated` marks the trailing per-variable bounds records.
    """

    line: int
    fields: Tuple[Field, ...]
    repeated: bool = False

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f.name for f in self.fields)


class Range(NamedTuple):
    low: Optional[float] = None
    high: Optional[float] = None
    low_open: bool = False
    high_open: bool = False

    def contains(self, value: float) -> bool:
        if self.low is not None:
            if value < self.low or (self.low_open and value == self.low):
                return False
        if self.high is not None:
            if value > self.high or (self.high_open and value == self.high):
                return False
        return True

    def describe(self) -> str:
        lo = "-inf" if self.low is None else repr(self.low)
        hi = "inf" if self.high is None else repr(self.high)
        left = "(" if self.low_open or self.low is None else "["
        right = ")" if self.high_open or self.high is None else "]"
        return f"{left}{lo}, {hi}{right}"


def _f(name: str) -> Field:
    return Field(name, float)


def _i(name: str) -> Field:
    return Field(name, int)


HEADER = (_i("m"), _i("n"), _i("iterations"))
BOUNDS = (_f("LB"), _f("UB"))

POSITIVE = Range(0.0, None, low_open=True)
NON_NEGATIVE = Range(0.0, None)
PROBABILITY = Range(0.0, 1.0)
LEVY_EXPONENT = Range(0.0, 2.0, low_open=True)
AT_LEAST_ONE = Range(1, None)

# parameter lines per technique, in model-file order
_PARAM_LINES: Dict[Technique, List[Tuple[Field, ...]]] = {
    Technique.PSO: [(_f("c1"), _f("c2")), (_f("w"), _f("w_min"), _f("w_max"))],
    Technique.AIWPSO: [(_f("c1"), _f("c2")), (_f("w"), _f("w_min"), _f("w_max"))],
    Technique.BA: [
        (_f("f_min"), _f("f_max")),
        (_f("A"), _f("r"), _f("alpha"), _f("gamma")),
    ],
    Technique.FPA: [(_f("p"), _f("beta"))],
    Technique.FA: [(_f("alpha"), _f("beta0"), _f("gamma"))],
    Technique.CS: [(_f("beta"), _f("p_a"), _f("alpha"))],
    Technique.BH: [],
    Technique.MBO: [(_i("k"), _i("x"), _i("period"))],
    Technique.ABC: [(_i("limit"),)],
    Technique.WCA: [(_i("n_sr"), _f("d_max"))],
    Technique.HS: [(_f("HMCR"), _f("PAR"), _f("bw"))],
    Technique.IHS: [
        (_f("HMCR"),),
        (_f("PAR_min"), _f("PAR_max")),
        (_f("bw_min"), _f("bw_max")),
    ],
    Technique.PSFHS: [],
}

_RANGES: Dict[Technique, Dict[str, Range]] = {
    Technique.PSO: {
        "c1": POSITIVE,
        "c2": POSITIVE,
        "w": NON_NEGATIVE,
        "w_min": NON_NEGATIVE,
        "w_max": NON_NEGATIVE,
    },
    Technique.AIWPSO: {
        "c1": POSITIVE,
        "c2": POSITIVE,
        "w": NON_NEGATIVE,
        "w_min": NON_NEGATIVE,
        "w_max": NON_NEGATIVE,
    },
    Technique.BA: {
        "A": POSITIVE,
        "r": PROBABILITY,
        "alpha": Range(0.0, 1.0, low_open=True),
        "gamma": POSITIVE,
    },
    Technique.FPA: {"p": PROBABILITY, "beta": LEVY_EXPONENT},
    Technique.FA: {"alpha": NON_NEGATIVE, "beta0": NON_NEGATIVE, "gamma": NON_NEGATIVE},
    Technique.CS: {"beta": LEVY_EXPONENT, "p_a": PROBABILITY, "alpha": POSITIVE},
    Technique.BH: {},
    Technique.MBO: {"k": AT_LEAST_ONE, "x": Range(0, None), "period": AT_LEAST_ONE},
    Technique.ABC: {"limit": AT_LEAST_ONE},
    Technique.WCA: {"n_sr": AT_LEAST_ONE, "d_max": POSITIVE},
    Technique.HS: {"HMCR": PROBABILITY, "PAR": PROBABILITY, "bw": NON_NEGATIVE},
    Technique.IHS: {
        "HMCR": PROBABILITY,
        "PAR_min": PROBABILITY,
        "PAR_max": PROBABILITY,
        "bw_min": POSITIVE,
        "bw_max": POSITIVE,
    },
    Technique.PSFHS: {},
}

# (message, predicate(params, m)) checks spanning several fields
CrossCheck = Tuple[str, Callable[[dict, int], bool]]

_CROSS_CHECKS: Dict[Technique, List[CrossCheck]] = {
    Technique.AIWPSO: [("w_min must be < w_max", lambda p, m: p["w_min"] < p["w_max"])],
    Technique.BA: [("f_min must be <= f_max", lambda p, m: p["f_min"] <= p["f_max"])],
    Technique.MBO: [("x must be < k", lambda p, m: p["x"] < p["k"])],
    Technique.WCA: [("n_sr must be < m", lambda p, m: p["n_sr"] < m)],
    Technique.IHS: [
        ("PAR_min must be <= PAR_max", lambda p, m: p["PAR_min"] <= p["PAR_max"]),
        ("bw_min must be <= bw_max", lambda p, m: p["bw_min"] <= p["bw_max"]),
    ],
}

_DEFAULTS: Dict[Technique, dict] = {
    Technique.PSO: {"c1": 1.7, "c2": 1.7, "w": 0.7, "w_min": 0.0, "w_max": 0.0},
    Technique.AIWPSO: {"c1": 1.7, "c2": 1.7, "w": 0.7, "w_min": 0.3, "w_max": 0.7},
    Technique.BA: {
        "f_min": 0.0,
        "f_max": 2.0,
        "A": 1.0,
        "r": 0.5,
        "alpha": 0.9,
        "gamma": 0.9,
    },
    Technique.FPA: {"p": 0.8, "beta": 1.5},
    Technique.FA: {"alpha": 0.2, "beta0": 1.0, "gamma": 1.0},
    Technique.CS: {"beta": 1.5, "p_a": 0.25, "alpha": 0.01},
    Technique.BH: {},
    Technique.MBO: {"k": 3, "x": 1, "period": 10},
    Technique.ABC: {"limit": 20},
    Technique.WCA: {"n_sr": 4, "d_max": 1e-3},
    Technique.HS: {"HMCR": 0.9, "PAR": 0.3, "bw": 0.01},
    Technique.IHS: {
        "HMCR": 0.9,
        "PAR_min": 0.01,
        "PAR_max": 0.99,
        "bw_min": 1e-4,
        "bw_max": 1.0,
    },
    Technique.PSFHS: {},
}

# what the model-file header comment calls the agents of each technique
AGENT_NOUNS: Dict[Technique, str] = {
    Technique.PSO: "particles",
    Technique.AIWPSO: "particles",
    Technique.BA: "bats",
    Technique.FPA: "flowers",
    Technique.FA: "fireflies",
    Technique.CS: "nests",
    Technique.BH: "stars",
    Technique.MBO: "birds",
    Technique.ABC: "food_sources",
    Technique.WCA: "raindrops",
    Technique.HS: "harmonies",
    Technique.IHS: "harmonies",
    Technique.PSFHS: "harmonies",
}


def to_technique(technique: Union[str, Technique]) -> Technique:
    """resolves a technique identifier, case-insensitively

    Raises:
        ValueError: if the identifier is not one of the known techniques
    """
    if isinstance(technique, Technique):
        return technique
    try:
        return Technique(str(technique).strip().upper())
    except ValueError:
        raise ValueError(
            f"Unknown technique {technique!r}, must be one of {[t.value for t in Technique]}"
        )


def schema_for(technique: Union[str, Technique]) -> List[SchemaLine]:
    """ordered description of a technique's model file

    Returns:
        list: header line, one line per parameter record, and the repeated
        bounds line last
    """
    technique = to_technique(technique)
    lines = [SchemaLine(1, HEADER)]
    for i, fields in enumerate(_PARAM_LINES[technique]):
        lines.append(SchemaLine(i + 2, fields))
    lines.append(SchemaLine(len(lines) + 1, BOUNDS, repeated=True))
    return lines


def param_fields(technique: Union[str, Technique]) -> List[Field]:
    technique = to_technique(technique)
    return [f for fields in _PARAM_LINES[technique] for f in fields]


def default_params(technique: Union[str, Technique]) -> dict:
    return dict(_DEFAULTS[to_technique(technique)])


def validate_params(technique: Union[str, Technique], params: dict, m: int) -> List[str]:
    """checks technique parameters against their documented ranges

    Args:
        technique: technique identifier
        params (dict): parameter values by name
        m (int): population size, needed by checks such as WCA's n_sr < m

    Returns:
        list: one message per failed check, empty when valid
    """
    technique = to_technique(technique)
    problems = []
    fields = param_fields(technique)
    for field in fields:
        if field.name not in params or params[field.name] is None:
            problems.append(f"{technique}: missing parameter {field.name}")
            continue
        value = params[field.name]
        if field.kind is int and int(value) != value:
            problems.append(f"{technique}: {field.name} must be an integer, got {value}")
        allowed = _RANGES[technique].get(field.name)
        if allowed is not None and not allowed.contains(value):
            problems.append(
                f"{technique}: {field.name}={value} outside {allowed.describe()}"
            )
    if problems:
        return problems
    for message, predicate in _CROSS_CHECKS.get(technique, []):
        if not predicate(params, m):
            problems.append(f"{technique}: {message}")

    if technique == Technique.PSO and (params["w_min"] or params["w_max"]):
        warnings.warn("PSO ignores w_min and w_max, they are only used by AIWPSO")
    return problems


class TechniqueParamService:
    def __init__(self, include_hypercomplex_only: bool = False):
        self.include_hypercomplex_only = include_hypercomplex_only

    @property
    def technique_names(self) -> List[str]:
        if self.include_hypercomplex_only:
            return [t.value for t in Technique if t in HYPERCOMPLEX_TECHNIQUES]
        return [t.value for t in Technique]

    def technique_names_from_patterns(
        self, patterns: Union[Sequence[str], str]
    ) -> List[Technique]:
        """resolves a list of technique patterns

        Args:
            patterns: "all", or a list of technique ids / case-insensitive
                substrings of technique ids, e.g. ```["PSO", "hs"]```. An exact
                id match only selects that technique, so "PSO" does not pull in
                "AIWPSO".

        Returns:
            list: matching techniques in declaration order
        """
        if patterns == "all":
            return [Technique(t) for t in self.technique_names]
        if isinstance(patterns, str):
            patterns = [patterns]
        try:
            for p in patterns:
                assert isinstance(p, str)
        except Exception:
            raise ValueError(
                "Invalid technique list, must be 'all' or a list of strings"
            )

        selected = set()
        for p in patterns:
            p = p.strip().upper()
            if p in self.technique_names:
                selected.add(p)
            else:
                selected.update(t for t in self.technique_names if p and p in t)
        return [Technique(t) for t in self.technique_names if t in selected]
