import dataclasses
import hashlib
import json
from enum import Enum

import numpy as np


# stable hashing: sorted keys, no whitespace, fixed float repr
def get_hash(thing) -> str:
    return hashlib.md5(json_dumps(thing).encode("utf-8")).digest().hex()


def json_dumps(thing, indent=None) -> str:
    return json.dumps(
        thing,
        default=json_default,
        ensure_ascii=False,
        sort_keys=True,
        indent=indent,
        separators=(",", ":") if indent is None else (",", ": "),
    )


def json_default(thing):
    if isinstance(thing, Enum):
        return thing.value
    if isinstance(thing, np.ndarray):
        return thing.tolist()
    if isinstance(thing, np.generic):
        return thing.item()
    if dataclasses.is_dataclass(thing) and not isinstance(thing, type):
        return dataclasses.asdict(thing)
    raise TypeError(f"object of type {type(thing).__name__} not serializable")
