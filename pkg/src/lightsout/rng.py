"""Counter-based random bit streams.

A ``TrialStream`` is keyed by (seed, index) and derives its bits from a keyed
BLAKE2b hash of a running block counter.  Streams for different indices are
independent, and a trial's bits depend only on its own key, never on how
trials are partitioned across workers.

Anything with a ``getrandbits(k)`` method (e.g. ``random.Random``) can stand
in wherever the samplers take a random stream.
"""

from __future__ import annotations

import hashlib

_BLOCK_BITS = 512


class TrialStream:
    """Deterministic bit stream for one (seed, index) pair."""

    def __init__(self, seed: int, index: int):
        if not 0 <= seed < (1 << 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if index < 0:
            raise ValueError("index must be nonnegative")
        self._key = seed.to_bytes(8, "little") + index.to_bytes(8, "little")
        self._counter = 0
        self._buf = 0
        self._avail = 0

    def getrandbits(self, k: int) -> int:
        if k < 0:
            raise ValueError("number of bits must be nonnegative")
        while self._avail < k:
            block = hashlib.blake2b(self._counter.to_bytes(8, "little"),
                                    key=self._key, digest_size=64).digest()
            self._counter += 1
            self._buf |= int.from_bytes(block, "little") << self._avail
            self._avail += _BLOCK_BITS
        out = self._buf & ((1 << k) - 1)
        self._buf >>= k
        self._avail -= k
        return out


def uniform_below(rng, bound: int) -> int:
    """Exact uniform integer in [0, bound) by fixed-width rejection.

    Draws blocks of exactly ``bound.bit_length()`` bits and rejects values
    >= bound; acceptance probability is always > 1/2 and no floating point
    is involved.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if bound == 1:
        return 0
    k = bound.bit_length()
    while True:
        r = rng.getrandbits(k)
        if r < bound:
            return r
