"""Counts of unlabeled graphs on n vertices.

Two sources, cross-validated in the test suite:

* ``compute_gn`` sums the exact class weights over every partition of n and
  divides by n!; practical up to n = 60 (p(60) is under a million).
* an embedded table covering n = 1..100, generated once by
  ``tools/generate_graph_counts.c`` with the same Burnside sum in C/GMP.

Computed values can be cached to disk as decimal text, one "n value" record
per line; the small-n prefix is pinned and re-checked on every load.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InternalInvariantError, UnsupportedSizeError
from .partitions import class_weight, partition_stream

COMPUTE_MAX_N = 60
PINNED_PREFIX = (1, 2, 4, 11)


@dataclass(frozen=True)
class GraphCountTable:
    """Unlabeled-graph counts g_1..g_max_n."""

    max_n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.max_n:
            raise ValueError("table length does not match max_n")
        prefix = self.values[:len(PINNED_PREFIX)]
        if prefix != PINNED_PREFIX[:len(prefix)]:
            raise InternalInvariantError(
                f"graph count table prefix {prefix} does not match the pinned values")

    def get(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise UnsupportedSizeError(f"no tabulated count for n={n}")
        return self.values[n - 1]


_EMBEDDED = None


def embedded_table() -> GraphCountTable:
    global _EMBEDDED
    if _EMBEDDED is None:
        text = resources.files("lightsout").joinpath("data/graph_counts.txt").read_text()
        values = []
        for line in text.splitlines():
            if not line.strip():
                continue
            n_str, v_str = line.split()
            if int(n_str) != len(values) + 1:
                raise InternalInvariantError("embedded graph count table is not contiguous")
            values.append(int(v_str))
        _EMBEDDED = GraphCountTable(len(values), tuple(values))
    return _EMBEDDED


def compute_gn(n: int) -> int:
    """Sum of class weights over all partitions of n, divided exactly by n!."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > COMPUTE_MAX_N:
        raise UnsupportedSizeError(
            f"direct computation is limited to n <= {COMPUTE_MAX_N}; use the embedded table")
    total = sum(class_weight(p).weight for p in partition_stream(n))
    q, r = divmod(total, math.factorial(n))
    if r:
        raise InternalInvariantError(f"weight sum for n={n} is not divisible by n!")
    return q


def default_cache_path() -> Path:
    base = os.environ.get("LIGHTSOUT_CACHE_DIR")
    if base:
        return Path(base) / "gn_cache.txt"
    return Path.home() / ".cache" / "lightsout" / "gn_cache.txt"


def load_cache(path) -> dict:
    """Read a cache file; validates the pinned prefix of any small entries."""
    path = Path(path)
    if not path.exists():
        return {}
    cached = {}
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        n_str, v_str = line.split()
        cached[int(n_str)] = int(v_str)
    for n, pinned in enumerate(PINNED_PREFIX, start=1):
        if n in cached and cached[n] != pinned:
            raise InternalInvariantError(f"cache file disagrees with pinned g_{n}")
    return cached


def save_cache(cached: dict, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(f"{n} {cached[n]}\n" for n in sorted(cached)))
    tmp.replace(path)


def graph_count(n: int, compute: bool = False, cache_path=None) -> int:
    """g_n, from the embedded table or (``compute=True``) the exact sum.

    Computed values go through the on-disk cache so repeated CLI runs do not
    redo the partition sweep.
    """
    if n < 1:
        raise ValueError("n must be positive")
    table = embedded_table()
    if not compute and n <= table.max_n:
        return table.get(n)
    if n > COMPUTE_MAX_N:
        if n <= table.max_n:
            return table.get(n)
        raise UnsupportedSizeError(f"no graph count available for n={n}")
    path = Path(cache_path) if cache_path is not None else default_cache_path()
    cached = load_cache(path)
    if n in cached:
        return cached[n]
    value = compute_gn(n)
    cached[n] = value
    try:
        save_cache(cached, path)
    except OSError:
        pass  # read-only cache dir; the value is still returned
    return value
