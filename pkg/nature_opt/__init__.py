from nature_opt.core import (
    RunResult,
    SearchSpace,
    check_search_space,
    create_search_space,
    initialize_search_space,
    make_rng,
    optimize,
)
from nature_opt.hypercomplex import lift
from nature_opt.modelfile import parse_model_file, read_search_space_from_file
from nature_opt.params import Technique

__all__ = [
    "RunResult",
    "SearchSpace",
    "Technique",
    "check_search_space",
    "create_search_space",
    "initialize_search_space",
    "lift",
    "make_rng",
    "optimize",
    "parse_model_file",
    "read_search_space_from_file",
]
