import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from nature_opt.benchmarks import CATALOG, ObjectiveFunction, lookup
from nature_opt.core import check_arity, optimize, validate_search_space
from nature_opt.hypercomplex import HypercomplexConfig, lift, supported_technique
from nature_opt.modelfile import (
    ModelFile,
    ModelFileError,
    load_example_model,
    read_model_file,
    search_space_from_model,
    write_model_file,
)
from nature_opt.params import (
    HYPERCOMPLEX_TECHNIQUES,
    Technique,
    TechniqueParamService,
    schema_for,
    to_technique,
)
from nature_opt.scoring import (
    RunRecord,
    k_label,
    summarize,
    trace_file_name,
    trace_frame,
)
from nature_opt.serialization import get_hash, json_dumps
from nature_opt.utils import atomic_write, parse_seeds

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_RUNTIME = 4

FORMATS = ("csv", "json")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunSpec:
    model: Optional[str]
    function: str
    technique: Technique
    seeds: Tuple[int, ...]
    k: Optional[int]
    out: str
    fmt: str = "csv"
    jobs: int = -1

    def __post_init__(self):
        if not self.seeds:
            raise UsageError("At least one seed is required")
        if self.fmt not in FORMATS:
            raise UsageError(f"Unknown output format {self.fmt!r}, must be one of {FORMATS}")
        if self.k is not None:
            HypercomplexConfig(self.k)


class Job(NamedTuple):
    model: ModelFile
    function: str
    seed: int
    k: Optional[int]
    config_hash: str


def config_hash(mf: ModelFile, function: str, k: Optional[int]) -> str:
    return get_hash({"model": write_model_file(mf), "function": function, "k": k})


def example_model_for(
    technique: Technique,
    f: ObjectiveFunction,
    agents: Optional[int] = None,
    dimension: Optional[int] = None,
    iterations: Optional[int] = None,
) -> ModelFile:
    """the packaged model file of a technique, resized and bounded for a function"""
    mf = load_example_model(technique)
    n = dimension or f.arity or mf.n
    LB, UB = f.suggested_bounds(n)
    return ModelFile(
        technique=mf.technique,
        m=agents or mf.m,
        n=n,
        iterations=mf.iterations if iterations is None else iterations,
        params=dict(mf.params),
        bounds=tuple((float(lo), float(hi)) for lo, hi in zip(LB, UB)),
    )


def validate_job(mf: ModelFile, function: str, k: Optional[int]) -> None:
    """everything that can fail before a run starts, raised as ValueError"""
    f = lookup(function)
    if k is not None:
        supported_technique(mf.technique)
    s = search_space_from_model(mf)
    check_arity(s, f)
    problems = validate_search_space(s)
    if problems:
        raise ValueError(f"Invalid {mf.technique} configuration: " + "; ".join(problems))


def run_job(job: Job) -> RunRecord:
    f = lookup(job.function)
    s = search_space_from_model(job.model)
    if job.k is None:
        result = optimize(s, f, job.model.technique, job.seed)
    else:
        result = lift(job.model.technique, s, f, job.k, job.seed)
    return RunRecord(job.function, result, job.config_hash)


def execute(jobs: Sequence[Job], n_jobs: int) -> List[RunRecord]:
    logger.info(f"Running {len(jobs)} runs with n_jobs={n_jobs}")
    return Parallel(n_jobs=n_jobs)(delayed(run_job)(job) for job in jobs)


def trace_text(record: RunRecord, fmt: str) -> str:
    result = record.result
    if fmt == "csv":
        return trace_frame(result).to_csv(index=False, lineterminator="\n")
    return json_dumps(
        {
            "technique": result.technique,
            "function": record.function,
            "k": k_label(result.k),
            "seed": result.seed,
            "trace": list(result.trace),
            "best_fitness": result.best_fitness,
            "best_position": list(result.best_position),
            "evaluations": result.evaluations,
        },
        indent=2,
    )


def write_artifacts(records: Sequence[RunRecord], out: str, fmt: str) -> List[str]:
    """writes every trace and the summary once all runs have finished"""
    summary = summarize(records)
    files = []
    for record in records:
        result = record.result
        name = trace_file_name(result.technique, record.function, result.k, result.seed, fmt)
        files.append((os.path.join(out, name), trace_text(record, fmt)))
    files.append(
        (os.path.join(out, "summary.json"), json_dumps(summary.to_dict(orient="records"), indent=2))
    )
    if fmt == "csv":
        summary_csv = summary.to_csv(index=False, lineterminator="\n")
        files.append((os.path.join(out, "summary.csv"), summary_csv))

    for path, text in files:
        atomic_write(path, text)
    return [path for path, _ in files]


def cmd_run(spec: RunSpec) -> int:
    f = lookup(spec.function)
    if spec.model is None:
        mf = example_model_for(spec.technique, f)
    else:
        try:
            mf = read_model_file(spec.model, spec.technique)
        except OSError as e:
            raise ModelFileError(f"cannot read model file {spec.model}: {e}")
    validate_job(mf, spec.function, spec.k)

    h = config_hash(mf, spec.function, spec.k)
    jobs = [Job(mf, spec.function, seed, spec.k, h) for seed in spec.seeds]
    records = execute(jobs, spec.jobs)
    written = write_artifacts(records, spec.out, spec.fmt)
    logger.info(f"Wrote {len(written)} files to {spec.out}")
    return EXIT_OK


def cmd_sweep(
    techniques: Sequence[str],
    functions: Sequence[str],
    seeds: Sequence[int],
    out: str,
    fmt: str = "csv",
    k: Optional[int] = None,
    agents: Optional[int] = None,
    dimension: Optional[int] = None,
    iterations: Optional[int] = None,
    n_jobs: int = -1,
) -> int:
    """runs techniques x functions x seeds and writes one combined summary

    Every name and configuration is resolved before the first run starts.
    """
    patterns = [t for t in techniques if t.strip()]
    if not patterns:
        raise UsageError("No techniques given")
    functions = [name for name in functions if name.strip()]
    if not functions:
        raise UsageError("No functions given")
    if not seeds:
        raise UsageError("No seeds given")
    if k is not None:
        HypercomplexConfig(k)

    # "all" with a hypercomplex k means every technique that can be lifted
    if patterns == ["all"]:
        service = TechniqueParamService(include_hypercomplex_only=k is not None)
        selected = service.technique_names_from_patterns("all")
    else:
        selected = TechniqueParamService().technique_names_from_patterns(patterns)
    if not selected:
        raise UsageError(f"No technique matches {patterns}")

    jobs = []
    for technique in selected:
        for name in functions:
            f = lookup(name)
            mf = example_model_for(technique, f, agents, dimension, iterations)
            validate_job(mf, f.name, k)
            h = config_hash(mf, f.name, k)
            jobs.extend(Job(mf, f.name, seed, k, h) for seed in seeds)

    records = execute(jobs, n_jobs)
    write_artifacts(records, out, fmt)
    return EXIT_OK


def _format_bounds(f: ObjectiveFunction) -> str:
    d = f.arity or f.min_arity
    LB, UB = f.suggested_bounds(d)
    if f.arity is None and len(set(LB)) == 1 and len(set(UB)) == 1:
        return f"[{LB[0]:g}, {UB[0]:g}] per variable"
    return " x ".join(f"[{lo:g}, {hi:g}]" for lo, hi in zip(LB, UB))


def _format_optimum(f: ObjectiveFunction) -> str:
    d = f.arity or max(f.min_arity, 2)
    optimum = f.known_optimum(d)
    if optimum is None:
        return "numerical only"
    position, value = optimum
    where = ", ".join(f"{v:.6g}" for v in position)
    suffix = "" if f.arity is not None else f" (d={d})"
    return f"{value:.10g} at ({where}){suffix}"


def cmd_list() -> str:
    lines = ["Techniques (* has a hypercomplex version):"]
    for technique in Technique:
        marker = "*" if technique in HYPERCOMPLEX_TECHNIQUES else " "
        records = " | ".join(
            " ".join(line.names) + (" (x n)" if line.repeated else "")
            for line in schema_for(technique)
        )
        lines.append(f"  {marker} {technique.value:<7} {records}")
    lines.append("")
    lines.append("Functions:")
    for f in CATALOG.values():
        lines.append(
            f"  {f.name:<16} {f.describe_arity():<6} bounds {_format_bounds(f)}; optimum {_format_optimum(f)}"
        )
    return "\n".join(lines) + "\n"


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return number


def _n_jobs(value: str) -> int:
    number = int(value)
    if number == 0:
        raise argparse.ArgumentTypeError("0 runs nothing, use a positive count or -1 for every core")
    return number


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seeds", default="1", help="Seeds, e.g. 1..25,30 (default: 1)")
    parser.add_argument(
        "--hypercomplex-k",
        type=_positive_int,
        default=None,
        metavar="K",
        help="Run the hypercomplex version with K coefficients per variable",
    )
    parser.add_argument("--out", default="results", help="Output directory (default: results)")
    parser.add_argument("--format", choices=FORMATS, default="csv", help="Trace file format")
    parser.add_argument(
        "--jobs", type=_n_jobs, default=-1, help="Parallel runs, -1 uses every core (default: -1)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nature-opt", description="Nature-inspired metaheuristics on benchmark functions."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-vv for debug)")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run one technique on one function")
    run.add_argument("--model", default=None, help="Model file, defaults to the packaged example")
    run.add_argument("--function", required=True, help="Benchmark function name")
    run.add_argument("--technique", default="PSO", help="Technique id (default: PSO)")
    _add_output_arguments(run)

    sweep = commands.add_parser("sweep", help="Run techniques x functions x seeds")
    sweep.add_argument("--techniques", required=True, help="Comma separated ids or substrings, or all")
    sweep.add_argument("--functions", required=True, help="Comma separated function names")
    sweep.add_argument("--agents", type=_positive_int, default=None, help="Override m")
    sweep.add_argument("--dimension", type=_positive_int, default=None, help="Override n")
    sweep.add_argument("--iterations", type=int, default=None, help="Override the iteration budget")
    _add_output_arguments(sweep)

    commands.add_parser("list", help="List techniques and benchmark functions")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "list":
        sys.stdout.write(cmd_list())
        return EXIT_OK

    try:
        seeds = tuple(parse_seeds(args.seeds))
    except ValueError as e:
        raise UsageError(str(e))

    if args.command == "run":
        try:
            technique = to_technique(args.technique)
        except ValueError as e:
            raise UsageError(str(e))
        spec = RunSpec(
            model=args.model,
            function=args.function,
            technique=technique,
            seeds=seeds,
            k=args.hypercomplex_k,
            out=args.out,
            fmt=args.format,
            jobs=args.jobs,
        )
        return cmd_run(spec)

    return cmd_sweep(
        techniques=args.techniques.split(","),
        functions=args.functions.split(","),
        seeds=seeds,
        out=args.out,
        fmt=args.format,
        k=args.hypercomplex_k,
        agents=args.agents,
        dimension=args.dimension,
        iterations=args.iterations,
        n_jobs=args.jobs,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return _dispatch(args)
    except UsageError as e:
        print(f"nature-opt: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"nature-opt: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as e:
        logger.exception("Run failed")
        print(f"nature-opt: run failed: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
