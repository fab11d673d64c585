"""Labeled simple graphs and Lights Out solvability.

Vertices are labeled 1..n externally.  Edge sets are bit-packed over a fixed
pair ordering: the pairs {i, j} with i < j sorted by (j, i) ascending, i.e.
(1,2), (1,3), (2,3), (1,4), ...  This is the graph6 column-major order, so
serialization is a straight bit copy.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import UnsupportedSizeError
from .gf2 import Gf2Matrix, Gf2Vector, rank_of_rows, solve

CANONICAL_MAX_N = 8


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair {i, j} (1-based labels, any order)."""
    if i == j:
        raise ValueError("a pair needs two distinct vertices")
    if i > j:
        i, j = j, i
    return (j - 1) * (j - 2) // 2 + (i - 1)


@functools.lru_cache(maxsize=None)
def pair_list(n: int) -> tuple:
    """All pairs (i, j), i < j, 1-based, in bit order."""
    return tuple((i, j) for j in range(2, n + 1) for i in range(1, j))


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges bit-packed in pair order."""

    n: int
    edge_bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if not 0 <= self.edge_bits < (1 << pair_count(self.n)):
            raise ValueError("edge bits outside the pair set")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        bits = 0
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            bits |= 1 << pair_index(i, j)
        return cls(n, bits)

    @property
    def edges(self) -> frozenset:
        pairs = pair_list(self.n)
        bits = self.edge_bits
        out = []
        while bits:
            low = bits & -bits
            out.append(pairs[low.bit_length() - 1])
            bits ^= low
        return frozenset(out)

    @property
    def edge_count(self) -> int:
        return self.edge_bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return (self.edge_bits >> pair_index(i, j)) & 1 == 1


@dataclass(frozen=True)
class Configuration:
    """A set of lights that are on."""

    n: int
    on_set: frozenset

    def __post_init__(self):
        if not all(1 <= v <= self.n for v in self.on_set):
            raise ValueError("configuration contains labels out of range")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable) -> "Configuration":
        return cls(n, frozenset(vertices))

    def to_vector(self) -> Gf2Vector:
        bits = 0
        for v in self.on_set:
            bits |= 1 << (v - 1)
        return Gf2Vector(self.n, bits)

    @classmethod
    def from_vector(cls, v: Gf2Vector) -> "Configuration":
        return cls(v.n, frozenset(i + 1 for i in range(v.n) if (v.bits >> i) & 1))


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; ``images[i-1]`` is the image of label i."""

    n: int
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError("images must be a bijection on 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycle_type(self) -> tuple:
        """Multiplicity vector: entry i-1 is the number of i-cycles."""
        counts = [0] * self.n
        seen = [False] * self.n
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            v = start
            while not seen[v]:
                seen[v] = True
                v = self.images[v] - 1
                length += 1
            counts[length - 1] += 1
        return tuple(counts)


def neighborhood_rows(n: int, edge_bits: int):
    """Bit-packed rows of adjacency + identity (0-based bit columns).

    The bits for column j (0-based) against all i < j are contiguous in pair
    order, so each column is peeled off as one small-integer slice.
    """
    rows = [1 << i for i in range(n)]
    offset = 0
    for j in range(1, n):
        col = (edge_bits >> offset) & ((1 << j) - 1)
        if col:
            rows[j] |= col
            high = 1 << j
            while col:
                low = col & -col
                rows[low.bit_length() - 1] |= high
                col ^= low
        offset += j
    return rows


def reachable_from_first(n: int, rows) -> bool:
    """Whether every vertex is reachable from vertex 1 over ``rows``."""
    visited = 1
    stack = [0]
    while stack:
        v = stack[-1]
        unvisited = rows[v] & ~visited
        if unvisited:
            w = (unvisited & -unvisited).bit_length() - 1
            visited |= 1 << w
            stack.append(w)
        else:
            stack.pop()
    return visited == (1 << n) - 1


def neighborhood_matrix(g: Graph) -> Gf2Matrix:
    """Adjacency matrix plus the identity; symmetric with unit diagonal."""
    return Gf2Matrix(g.n, tuple(neighborhood_rows(g.n, g.edge_bits)))


def is_universally_solvable(g: Graph) -> bool:
    """True iff every initial configuration on ``g`` can be switched off."""
    rows = neighborhood_rows(g.n, g.edge_bits)
    return rank_of_rows(rows) == g.n


def solve_configuration(g: Graph, c: Configuration) -> Optional[frozenset]:
    """A press-set turning off exactly ``c``, or ``None`` if unsolvable."""
    if c.n != g.n:
        raise ValueError("configuration size does not match graph")
    x = solve(neighborhood_matrix(g), c.to_vector())
    if x is None:
        return None
    return frozenset(i + 1 for i in range(g.n) if (x.bits >> i) & 1)


def is_connected(g: Graph) -> bool:
    """Depth-first reachability from vertex 1, smallest label first."""
    return reachable_from_first(g.n, neighborhood_rows(g.n, g.edge_bits))


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel ``g``: each edge {i, j} becomes {p(i), p(j)}."""
    if p.n != g.n:
        raise ValueError("permutation degree does not match graph")
    pairs = pair_list(g.n)
    bits = g.edge_bits
    out = 0
    while bits:
        low = bits & -bits
        i, j = pairs[low.bit_length() - 1]
        out |= 1 << pair_index(p(i), p(j))
        bits ^= low
    return Graph(g.n, out)


@functools.lru_cache(maxsize=None)
def _perm_pair_maps(n: int):
    # For each permutation of 1..n, where each pair-bit position lands.
    maps = []
    for images in itertools.permutations(range(1, n + 1)):
        maps.append(tuple(pair_index(images[i - 1], images[j - 1])
                          for i, j in pair_list(n)))
    return maps


@functools.lru_cache(maxsize=1 << 16)
def _canonical_bits(n: int, edge_bits: int) -> int:
    m = pair_count(n)
    best = None
    for pmap in _perm_pair_maps(n):
        val = 0
        bits = edge_bits
        while bits:
            low = bits & -bits
            val |= 1 << (m - 1 - pmap[low.bit_length() - 1])
            bits ^= low
        if best is None or val < best:
            best = val
    return best


def canonical_form(g: Graph) -> str:
    """Lexicographically minimal edge bit-string over all n! relabelings.

    Equal exactly for isomorphic graphs.  Brute force, so limited to
    n <= 8; larger sizes are out of scope for this helper.
    """
    if g.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical_form supports n <= {CANONICAL_MAX_N}")
    m = pair_count(g.n)
    return format(_canonical_bits(g.n, g.edge_bits), f"0{m}b") if m else ""
