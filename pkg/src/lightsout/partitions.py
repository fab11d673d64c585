"""Integer partitions as conjugacy classes of the symmetric group.

A partition of n is held as a multiplicity vector [k_1..k_n], k_i parts of
size i.  Each partition labels the class of permutations with k_i cycles of
length i; the class weight class_size * 2^c drives uniform unlabeled-graph
sampling, where c is the number of pair orbits of a class representative:

    c = (sum_i l(i)^2 phi(i) - l(1) + l(2)) / 2,    l(i) = sum_{i|j} k_j.

All sizes and weights are exact big integers; the weight for n = 100 has
thousands of bits and floats would bias selection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List

from .errors import InternalInvariantError
from .graphs import Permutation


@dataclass(frozen=True)
class Partition:
    """Multiplicity vector of a partition of ``n`` (``n = 0`` is the empty one)."""

    n: int
    counts: tuple

    def __post_init__(self):
        if self.n < 0 or len(self.counts) != self.n:
            raise ValueError("counts must have length n")
        if any(k < 0 for k in self.counts):
            raise ValueError("multiplicities must be nonnegative")
        if sum((i + 1) * k for i, k in enumerate(self.counts)) != self.n:
            raise ValueError("multiplicities do not sum to n")

    @classmethod
    def from_parts(cls, n: int, parts) -> "Partition":
        counts = [0] * n
        for p in parts:
            counts[p - 1] += 1
        return cls(n, tuple(counts))

    def parts(self) -> List[int]:
        """Part sizes in non-increasing order."""
        out = []
        for i in range(self.n, 0, -1):
            out.extend([i] * self.counts[i - 1])
        return out


@dataclass(frozen=True)
class ClassWeight:
    """Exact weight data for one conjugacy class."""

    partition: Partition
    class_size: int
    l: tuple
    c: int
    weight: int


def euler_phi(i: int) -> int:
    """Count of integers in 1..i coprime to i."""
    if i < 1:
        raise ValueError("euler_phi needs a positive integer")
    result = i
    d = 2
    m = i
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def class_weight(p: Partition) -> ClassWeight:
    n = p.n
    denom = 1
    for i, k in enumerate(p.counts, start=1):
        denom *= (i ** k) * math.factorial(k)
    class_size = math.factorial(n) // denom

    l = tuple(sum(p.counts[j - 1] for j in range(i, n + 1, i))
              for i in range(1, n + 1))
    twice_c = sum(l[i - 1] ** 2 * euler_phi(i) for i in range(1, n + 1))
    twice_c -= l[0]
    if n >= 2:
        twice_c += l[1]
    if twice_c < 0 or twice_c % 2:
        raise InternalInvariantError(f"pair-orbit count 2c = {twice_c} is not even")
    c = twice_c // 2
    return ClassWeight(p, class_size, l, c, class_size << c)


def _no_ones_parts(k: int, max_part: int) -> Iterator[tuple]:
    # Part lists without 1s, largest part first, recursing on the remainder.
    if k == 0:
        yield ()
        return
    for m in range(min(max_part, k), 1, -1):
        for rest in _no_ones_parts(k - m, m):
            yield (m,) + rest


def partitions_no_ones(k: int) -> List[Partition]:
    """Partitions of ``k`` with no parts of size 1, in generation order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [Partition.from_parts(k, parts) for parts in _no_ones_parts(k, k)]


def partition_stream(n: int) -> Iterator[Partition]:
    """All partitions of ``n``, most parts of size 1 first.

    Ordered by ascending k = n - k_1 (k = 0, 2, 3, ...); within fixed k the
    size-1-free core follows the partitions_no_ones order.  Lazy: sampling
    consumers normally read only a short prefix.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for k in range(0, n + 1):
        if k == 1:
            continue
        for core in _no_ones_parts(k, k):
            counts = [0] * n
            counts[0] = n - k
            for part in core:
                counts[part - 1] += 1
            yield Partition(n, tuple(counts))


def representative_permutation(p: Partition) -> Permutation:
    """A permutation with the given cycle type.

    Cycles sit on consecutive labels, longer cycles first.
    """
    images = [0] * p.n
    start = 0
    for length in p.parts():
        for t in range(length):
            images[start + t] = start + (t + 1) % length + 1
        start += length
    return Permutation(p.n, tuple(images))
