import os
import tempfile
from typing import List


def parse_seeds(spec: str) -> List[int]:
    """expands a seed list such as "1..25,30" into integers

    Items are comma separated, each a non-negative integer or an inclusive
    range a..b. Duplicates are dropped, first occurrence wins.

    Raises:
        ValueError: on an empty list, a malformed item or a decreasing range
    """
    seeds: List[int] = []
    seen = set()
    for item in str(spec).split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if ".." in item:
                low, high = (int(v) for v in item.split("..", 1))
                if low > high:
                    raise ValueError(f"decreasing seed range {item!r}")
                values = range(low, high + 1)
            else:
                values = [int(item)]
        except ValueError as e:
            raise ValueError(f"Invalid seed list {spec!r}: {e}")
        for seed in values:
            if seed < 0:
                raise ValueError(f"Invalid seed list {spec!r}: seeds must be >= 0, got {seed}")
            if seed not in seen:
                seen.add(seed)
                seeds.append(seed)
    if not seeds:
        raise ValueError(f"Invalid seed list {spec!r}: no seeds given")
    return seeds


def atomic_write(path: str, text: str) -> None:
    """writes text to a temporary file next to path, then renames it into place"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
