import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from nature_opt.core import SearchSpace, create_search_space
from nature_opt.params import (
    AGENT_NOUNS,
    Field,
    SchemaLine,
    Technique,
    schema_for,
    to_technique,
)

logger = logging.getLogger(__name__)

MODEL_FILES_DIR = os.path.join(os.path.dirname(__file__), "model_files")

__all__ = [
    "ModelFile",
    "ModelFileError",
    "parse_model_file",
    "write_model_file",
    "read_model_file",
    "schema_for",
    "search_space_from_model",
    "read_search_space_from_file",
    "load_example_model",
]


class ModelFileError(ValueError):
    """parse failure, `line` is the 1-based line of the offending record"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass
class ModelFile:
    technique: Technique
    m: int
    n: int
    iterations: int
    params: Dict[str, Union[int, float]] = field(default_factory=dict)
    bounds: Tuple[Tuple[float, float], ...] = ()

    @property
    def LB(self) -> np.ndarray:
        return np.array([b[0] for b in self.bounds], dtype=float)

    @property
    def UB(self) -> np.ndarray:
        return np.array([b[1] for b in self.bounds], dtype=float)


def _records(text: str) -> List[Tuple[int, List[str]]]:
    """(1-based line number, tokens) of every line with content left after comments"""
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            records.append((number, content.split()))
    return records


def _value(token: str, f: Field, line: int) -> Union[int, float]:
    if f.kind is int:
        try:
            return int(token)
        except ValueError:
            raise ModelFileError(f"{f.name} must be an integer, got {token!r}", line)
    try:
        value = float(token)
    except ValueError:
        raise ModelFileError(f"{f.name} must be a number, got {token!r}", line)
    if not np.isfinite(value):
        raise ModelFileError(f"{f.name} must be finite, got {token!r}", line)
    return value


def _fields(tokens: List[str], schema: SchemaLine, line: int) -> Dict[str, Union[int, float]]:
    if len(tokens) != len(schema.fields):
        raise ModelFileError(
            f"expected {len(schema.fields)} fields ({' '.join(schema.names)}), found {len(tokens)}",
            line,
        )
    return {f.name: _value(token, f, line) for token, f in zip(tokens, schema.fields)}


def parse_model_file(text: str, technique: Union[str, Technique]) -> ModelFile:
    """reads a model file: header, the technique's parameter records, then n bounds records

    Everything from '#' to the end of a line is a comment; blank lines are
    skipped and both LF and CRLF line endings are accepted.

    Raises:
        ModelFileError: naming the line of the first malformed record
    """
    technique = to_technique(technique)
    schema = schema_for(technique)
    header_schema, param_schemas, bounds_schema = schema[0], schema[1:-1], schema[-1]
    records = _records(text)
    if not records:
        raise ModelFileError("model file is empty", 1)

    line, tokens = records[0]
    header = _fields(tokens, header_schema, line)
    for name in header_schema.names:
        if header[name] < 1:
            raise ModelFileError(f"{name} must be >= 1, got {header[name]}", line)

    params: Dict[str, Union[int, float]] = {}
    for i, line_schema in enumerate(param_schemas):
        if i + 1 >= len(records):
            raise ModelFileError(
                f"missing {technique} parameter record ({' '.join(line_schema.names)})",
                records[-1][0] + 1,
            )
        line, tokens = records[i + 1]
        params.update(_fields(tokens, line_schema, line))

    n = header["n"]
    bounds_records = records[1 + len(param_schemas):]
    if len(bounds_records) < n:
        raise ModelFileError(
            f"expected {n} bounds records (LB UB), found {len(bounds_records)}",
            records[-1][0] + 1,
        )
    if len(bounds_records) > n:
        line = bounds_records[n][0]
        raise ModelFileError(f"unexpected record after the {n} bounds records", line)

    bounds = []
    for j, (line, tokens) in enumerate(bounds_records):
        values = _fields(tokens, bounds_schema, line)
        if not values["LB"] < values["UB"]:
            raise ModelFileError(
                f"LB must be < UB for x[{j}], got {values['LB']} and {values['UB']}", line
            )
        bounds.append((values["LB"], values["UB"]))

    return ModelFile(
        technique=technique,
        m=header["m"],
        n=n,
        iterations=header["iterations"],
        params=params,
        bounds=tuple(bounds),
    )


def _format(value, kind: type) -> str:
    return str(int(value)) if kind is int else repr(float(value))


def write_model_file(mf: ModelFile) -> str:
    """canonical layout, one record per line with a trailing comment naming its fields"""
    technique = to_technique(mf.technique)
    schema = schema_for(technique)
    noun = AGENT_NOUNS[technique]
    lines = [f"{mf.m} {mf.n} {mf.iterations} #<n_{noun}> <dimension> <max_iterations>"]
    for line_schema in schema[1:-1]:
        values = " ".join(_format(mf.params[f.name], f.kind) for f in line_schema.fields)
        names = " ".join(f"<{name}>" for name in line_schema.names)
        lines.append(f"{values} #{names}")
    for j, (low, high) in enumerate(mf.bounds):
        lines.append(f"{_format(low, float)} {_format(high, float)} #<LB> <UB> x[{j}]")
    return "\n".join(lines) + "\n"


def read_model_file(path: str, technique: Union[str, Technique]) -> ModelFile:
    with open(path, encoding="utf-8") as f:
        return parse_model_file(f.read(), technique)


def search_space_from_model(mf: ModelFile) -> SearchSpace:
    """allocates a search space sized, bounded and parameterised by a model file"""
    s = create_search_space(mf.m, mf.n, mf.technique, mf.iterations)
    s.params = dict(mf.params)
    s.set_bounds(mf.LB, mf.UB)
    return s


def read_search_space_from_file(path: str, technique: Union[str, Technique]) -> SearchSpace:
    mf = read_model_file(path, technique)
    logger.info(f"Read {mf.technique} model file {path}: m={mf.m}, n={mf.n}, iterations={mf.iterations}")
    return search_space_from_model(mf)


def example_model_path(technique: Union[str, Technique]) -> str:
    return os.path.join(MODEL_FILES_DIR, f"{to_technique(technique).value.lower()}.txt")


def load_example_model(technique: Union[str, Technique]) -> ModelFile:
    """the model file shipped with the package for a technique"""
    return read_model_file(example_model_path(technique), technique)
