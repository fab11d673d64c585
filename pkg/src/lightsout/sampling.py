"""Uniform random unlabeled graphs via the Dixon-Wilf construction.

A sample is drawn in two stages: pick a conjugacy class of S_n with
probability class_size * 2^c / (n! * g_n), then flip one fair coin per pair
orbit of a class representative to build a graph fixed by it.  The induced
distribution on isomorphism classes is uniform.

The class draw uses an exact uniform big integer T in [0, n! * g_n) and a
lazy walk over the partition stream; no probability is ever materialized as
a float.
"""

from __future__ import annotations

import bisect
import functools
import math
from dataclasses import dataclass

from .counts import graph_count
from .errors import InternalInvariantError
from .graphs import Graph, Permutation, pair_count, pair_index, pair_list
from .partitions import Partition, class_weight, partition_stream, \
    representative_permutation
from .rng import uniform_below

__all__ = [
    "PairOrbits", "pair_orbits", "select_partition", "sample_fixed_graph",
    "sample_uniform_graph", "sample_uniform_connected_graph",
]


@dataclass(frozen=True)
class PairOrbits:
    """Orbit decomposition of all unordered vertex pairs under a permutation.

    Orbits are ordered by their minimal pair (smallest bit position) and each
    orbit's pairs are in bit order.
    """

    n: int
    orbits: tuple

    @property
    def count(self) -> int:
        return len(self.orbits)


def orbit_masks(p: Permutation):
    """Pair orbits of ``p`` as edge-bit masks, sorted by lowest set bit."""
    n = p.n
    m = pair_count(n)
    pairs = pair_list(n)
    seen = 0
    masks = []
    for t in range(m):
        if (seen >> t) & 1:
            continue
        mask = 0
        u = t
        while not (mask >> u) & 1:
            mask |= 1 << u
            i, j = pairs[u]
            u = pair_index(p(i), p(j))
        seen |= mask
        masks.append(mask)
    return masks


@functools.lru_cache(maxsize=512)
def _cached_orbit_masks(n: int, images: tuple) -> tuple:
    return tuple(orbit_masks(Permutation(n, images)))


def pair_orbits(p: Permutation) -> PairOrbits:
    pairs = pair_list(p.n)
    orbits = []
    for mask in orbit_masks(p):
        members = []
        while mask:
            low = mask & -mask
            members.append(pairs[low.bit_length() - 1])
            mask ^= low
        orbits.append(tuple(members))
    return PairOrbits(p.n, tuple(orbits))


class _WeightWalk:
    """Lazily extended cumulative weights over the partition stream of n."""

    def __init__(self, n: int):
        self.n = n
        self.total_weight = math.factorial(n) * graph_count(n)
        self._stream = partition_stream(n)
        self._partitions = []
        self._cum = []
        self._sum = 0

    def partition_for(self, t: int) -> Partition:
        if not 0 <= t < self.total_weight:
            raise ValueError("draw outside [0, n! * g_n)")
        while self._sum <= t:
            try:
                p = next(self._stream)
            except StopIteration:
                raise InternalInvariantError(
                    f"partition weights for n={self.n} sum below n! * g_n") from None
            self._sum += class_weight(p).weight
            self._partitions.append(p)
            self._cum.append(self._sum)
        idx = bisect.bisect_right(self._cum, t)
        return self._partitions[idx]


_WALKS = {}


def _walk(n: int) -> _WeightWalk:
    walk = _WALKS.get(n)
    if walk is None:
        walk = _WALKS[n] = _WeightWalk(n)
    return walk


def select_partition(n: int, rng) -> Partition:
    """Draw a partition of n with probability weight / (n! * g_n)."""
    if n < 1:
        raise ValueError("n must be positive")
    walk = _walk(n)
    t = uniform_below(rng, walk.total_weight)
    return walk.partition_for(t)


def sample_fixed_graph(p: Permutation, rng) -> Graph:
    """Uniform sample from the graphs fixed by ``p``: one coin per pair orbit.

    Coin t (bit t of one block draw) decides the t-th orbit in minimal-pair
    order, so a fixed seed reproduces the same graph.
    """
    masks = _cached_orbit_masks(p.n, p.images)
    m = len(masks)
    coins = rng.getrandbits(m) if m else 0
    if m == pair_count(p.n):
        # Identity: every orbit is a singleton in bit order.
        return Graph(p.n, coins)
    bits = 0
    c = coins
    while c:
        low = c & -c
        bits |= masks[low.bit_length() - 1]
        c ^= low
    return Graph(p.n, bits)


def sample_uniform_graph(n: int, rng) -> Graph:
    """One graph uniform over the isomorphism classes on n vertices."""
    p = select_partition(n, rng)
    return sample_fixed_graph(representative_permutation(p), rng)


def sample_uniform_connected_graph(n: int, rng) -> Graph:
    """Rejection-sample uniform graphs until one is connected."""
    from .graphs import is_connected
    while True:
        g = sample_uniform_graph(n, rng)
        if is_connected(g):
            return g
