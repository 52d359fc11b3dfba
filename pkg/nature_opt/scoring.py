import glob
import json
import os
from dataclasses import asdict, dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd

from nature_opt.core import RunResult

TRACE_COLUMNS = ["iteration", "gfit"]
# columns that can be rebuilt from trace files alone
FITNESS_COLUMNS = ["technique", "function", "k", "seeds", "best", "median", "worst"]


@dataclass(frozen=True)
class SummaryRow:
    technique: str
    function: str
    k: str  # "real" or "k=<hypercomplex dimension>"
    seeds: int
    best: float
    median: float
    worst: float
    mean_evaluations: float
    mean_elapsed: float
    config_hash: str = ""


class RunRecord(NamedTuple):
    function: str
    result: RunResult
    config_hash: str = ""


def k_label(k: Optional[int]) -> str:
    return "real" if k is None else f"k={k}"


def trace_file_name(technique: str, function: str, k: Optional[int], seed: int, fmt: str) -> str:
    """e.g. PSO__sphere__real__seed3.csv, HS__sphere__k4__seed1.json"""
    tag = "real" if k is None else f"k{k}"
    return f"{technique}__{function}__{tag}__seed{seed}.{fmt}"


def _statistics(finals: Sequence[float]):
    finals = np.asarray(finals, dtype=float)
    return float(np.min(finals)), float(np.median(finals)), float(np.max(finals))


def summarize(records: Iterable[RunRecord]) -> pd.DataFrame:
    """one SummaryRow per (technique, function, k, config) group, in first-seen order"""
    groups = {}
    for record in records:
        result = record.result
        key = (result.technique, record.function, k_label(result.k), record.config_hash)
        groups.setdefault(key, []).append(result)

    rows = []
    for (technique, function, k, config_hash), results in groups.items():
        best, median, worst = _statistics([r.best_fitness for r in results])
        rows.append(
            SummaryRow(
                technique=technique,
                function=function,
                k=k,
                seeds=len(results),
                best=best,
                median=median,
                worst=worst,
                mean_evaluations=float(np.mean([r.evaluations for r in results])),
                mean_elapsed=float(np.mean([r.elapsed for r in results])),
                config_hash=config_hash,
            )
        )
    columns = list(SummaryRow.__dataclass_fields__)
    return pd.DataFrame([asdict(row) for row in rows], columns=columns)


def trace_frame(result: RunResult) -> pd.DataFrame:
    return pd.DataFrame(
        {"iteration": np.arange(1, len(result.trace) + 1), "gfit": list(result.trace)},
        columns=TRACE_COLUMNS,
    )


def read_trace(path: str) -> List[float]:
    if path.endswith(".json"):
        with open(path, encoding="utf-8") as f:
            return [float(v) for v in json.load(f)["trace"]]
    df = pd.read_csv(path, float_precision="round_trip")
    return df["gfit"].astype(float).tolist()


def summary_from_traces(directory: str) -> pd.DataFrame:
    """recomputes the fitness columns of the summary from the trace files of a directory

    Runs with an empty trace (zero iterations) cannot be recovered and are skipped.
    """
    groups = {}
    paths = sorted(glob.glob(os.path.join(directory, "*__*__*__seed*.*")))
    for path in paths:
        name, _ = os.path.splitext(os.path.basename(path))
        technique, function, tag, _seed = name.split("__")
        trace = read_trace(path)
        if not trace:
            continue
        k = "real" if tag == "real" else f"k={tag[1:]}"
        groups.setdefault((technique, function, k), []).append(trace[-1])

    rows = []
    for (technique, function, k), finals in groups.items():
        best, median, worst = _statistics(finals)
        rows.append([technique, function, k, len(finals), best, median, worst])
    return pd.DataFrame(rows, columns=FITNESS_COLUMNS)
