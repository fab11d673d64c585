"""Exact counts of unlabeled graphs by predicate, and tiny brute-force oracles.

``exact_counts`` applies the orbit-counting identity: for an isomorphism-
invariant predicate Q, the number of unlabeled n-vertex graphs satisfying Q
is (1/n!) * sum over conjugacy classes of class_size * |{G fixed by a class
representative : Q(G)}|.  Each class's fixed graphs are the 2^c unions of
pair orbits of the representative; the n = 8 identity class alone is 2^28
graphs, so the per-class scan is vectorized with numpy (bit-packed rows,
batched GF(2) elimination and reachability).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import InternalInvariantError, UnsupportedSizeError
from .graphs import Graph, Permutation, neighborhood_rows, pair_count
from .partitions import class_weight, partition_stream, representative_permutation
from .sampling import orbit_masks

EXACT_MAX_N = 8
BRUTE_FORCE_MAX_N = 5
_CHUNK = 1 << 20


@dataclass(frozen=True)
class ExactCountRow:
    """One row of the exact census for a vertex count n."""

    n: int
    total: int
    solvable: int
    connected: int
    connected_solvable: int

    def __post_init__(self):
        ok = (self.solvable <= self.total
              and self.connected_solvable <= self.connected <= self.total)
        if not ok:
            raise InternalInvariantError("census counts are inconsistent")


def enumerate_fixed_graphs(p: Permutation) -> Iterator[Graph]:
    """All 2^c graphs fixed by ``p``, each exactly once.

    Subsets of the orbit set are visited in Gray-code order, so consecutive
    graphs differ by a single orbit toggle.
    """
    masks = orbit_masks(p)
    c = len(masks)
    if c > 30:
        raise UnsupportedSizeError(f"2^{c} fixed graphs is beyond enumeration")
    bits = 0
    yield Graph(p.n, bits)
    for s in range(1, 1 << c):
        bits ^= masks[(s & -s).bit_length() - 1]
        yield Graph(p.n, bits)


def _count_class(n: int, masks) -> tuple:
    """(solvable, connected, connected_solvable) over the 2^c fixed graphs."""
    c = len(masks)
    total = 1 << c
    masks_arr = np.asarray(masks, dtype=np.uint32)
    full = np.uint8((1 << n) - 1)
    n_solv = n_conn = n_both = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.uint32)
        edge = np.zeros(idx.shape, np.uint32)
        for t in range(c):
            edge |= ((idx >> np.uint32(t)) & np.uint32(1)) * masks_arr[t]

        # Bit-packed neighborhood rows: row v in rows[:, v], diagonal set.
        rows = np.empty((idx.shape[0], n), np.uint8)
        for v in range(n):
            rows[:, v] = np.uint8(1 << v)
        t = 0
        for j in range(1, n):
            for i in range(j):
                bit = ((edge >> np.uint32(t)) & np.uint32(1)).astype(np.uint8)
                rows[:, i] |= bit << np.uint8(j)
                rows[:, j] |= bit << np.uint8(i)
                t += 1

        # Batched GF(2) elimination: insert each row into a pivot table
        # indexed by leading bit.
        piv = np.zeros((idx.shape[0], n), np.uint8)
        nonsingular_rank = np.zeros(idx.shape[0], np.uint8)
        for r in range(n):
            cur = rows[:, r].copy()
            placed = np.zeros(idx.shape[0], bool)
            for b in range(n - 1, -1, -1):
                hasb = ((cur >> np.uint8(b)) & np.uint8(1)).astype(bool) & ~placed
                pb = piv[:, b]
                exists = pb != 0
                red = hasb & exists
                cur ^= red * pb
                new = hasb & ~exists
                piv[:, b] = np.where(new, cur, pb)
                placed |= new
            nonsingular_rank += placed
        solv = nonsingular_rank == n

        # Reachability from vertex 0 over closed neighborhoods.
        reach = rows[:, 0].copy()
        for _ in range(n - 1):
            new = reach.copy()
            for v in range(1, n):
                new |= ((reach >> np.uint8(v)) & np.uint8(1)) * rows[:, v]
            if np.array_equal(new, reach):
                break
            reach = new
        conn = reach == full

        n_solv += int(np.count_nonzero(solv))
        n_conn += int(np.count_nonzero(conn))
        n_both += int(np.count_nonzero(solv & conn))
    return n_solv, n_conn, n_both


def exact_counts(n: int) -> ExactCountRow:
    """Exact Tables row: totals of all / solvable / connected / both."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > EXACT_MAX_N:
        raise UnsupportedSizeError(f"exact counts are limited to n <= {EXACT_MAX_N}")
    sums = [0, 0, 0, 0]  # total, solvable, connected, connected_solvable
    for p in partition_stream(n):
        cw = class_weight(p)
        masks = orbit_masks(representative_permutation(p))
        if len(masks) != cw.c:
            raise InternalInvariantError("orbit count disagrees with closed form")
        solv, conn, both = _count_class(n, masks)
        sums[0] += cw.weight  # class_size * 2^c
        sums[1] += cw.class_size * solv
        sums[2] += cw.class_size * conn
        sums[3] += cw.class_size * both
    fact = math.factorial(n)
    out = []
    for s in sums:
        q, r = divmod(s, fact)
        if r:
            raise InternalInvariantError("orbit-count sum does not divide by n!")
        out.append(q)
    return ExactCountRow(n, *out)


def brute_force_universally_solvable(g: Graph) -> bool:
    """Literal check of the definition by simulating presses; no linear algebra.

    Universally solvable iff the 2^n press-sets reach all 2^n configurations.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise UnsupportedSizeError(
            f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    press_effects = neighborhood_rows(n, g.edge_bits)
    reached = set()
    state = 0
    reached.add(state)
    for s in range(1, 1 << n):
        state ^= press_effects[(s & -s).bit_length() - 1]
        reached.add(state)
    return len(reached) == 1 << n
