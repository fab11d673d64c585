"""Reproducible Monte Carlo estimates of solvability probabilities.

Every trial draws its randomness from a counter-based stream keyed by
(seed, trial index), so results are bit-identical for a fixed request no
matter how trials are split across worker processes.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import NormalDist
from typing import Optional

from .counts import graph_count
from .gf2 import rank_of_rows
from .graphs import is_universally_solvable, neighborhood_rows, \
    reachable_from_first
from .rng import TrialStream
from .sampling import sample_uniform_connected_graph, sample_uniform_graph

MODE_ALL = "all"
MODE_CONNECTED = "connected"

WORKERS_ENV_VAR = "LIGHTSOUT_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class EstimateRequest:
    n: int
    trials: int
    mode: str = MODE_ALL
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.mode not in (MODE_ALL, MODE_CONNECTED):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.workers < 1:
            raise ValueError("workers must be positive")


@dataclass(frozen=True)
class EstimateResult:
    request: EstimateRequest
    solvable_count: int
    connected_count: Optional[int]
    p_solvable: float
    p_connected: Optional[float]
    moe95: float
    elapsed_seconds: float


def margin_of_error(p_hat: float, trials: int, confidence: float = 0.95) -> float:
    """Wald half-width z * sqrt(p(1-p)/N) of a binomial estimate."""
    if not 0 <= p_hat <= 1:
        raise ValueError("p_hat must be in [0, 1]")
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 0 < confidence < 1:
        raise ValueError("confidence must be in (0, 1)")
    z = NormalDist().inv_cdf(0.5 + confidence / 2)
    return z * math.sqrt(p_hat * (1 - p_hat) / trials)


def _run_range(args) -> tuple:
    n, mode, seed, start, stop = args
    solvable = connected = 0
    if mode == MODE_CONNECTED:
        for i in range(start, stop):
            g = sample_uniform_connected_graph(n, TrialStream(seed, i))
            if is_universally_solvable(g):
                solvable += 1
    else:
        for i in range(start, stop):
            g = sample_uniform_graph(n, TrialStream(seed, i))
            rows = neighborhood_rows(n, g.edge_bits)
            if rank_of_rows(rows) == n:
                solvable += 1
            if reachable_from_first(n, rows):
                connected += 1
    return solvable, connected


def run_estimate(req: EstimateRequest) -> EstimateResult:
    """Run ``req.trials`` independent trials and aggregate the counts.

    Rejections in connected mode draw from the same per-trial stream as the
    accepted sample; they do not consume trial indices.
    """
    graph_count(req.n)  # fail fast, and warm the table before forking
    t0 = time.perf_counter()

    if req.workers == 1 or req.trials < 2 * req.workers:
        solvable, connected = _run_range((req.n, req.mode, req.seed, 0, req.trials))
    else:
        chunk = max(1, math.ceil(req.trials / (req.workers * 4)))
        jobs = [(req.n, req.mode, req.seed, s, min(s + chunk, req.trials))
                for s in range(0, req.trials, chunk)]
        solvable = connected = 0
        with ProcessPoolExecutor(max_workers=req.workers) as pool:
            for s, c in pool.map(_run_range, jobs):
                solvable += s
                connected += c

    elapsed = time.perf_counter() - t0
    p_solv = solvable / req.trials
    if req.mode == MODE_CONNECTED:
        conn_count = None
        p_conn = None
    else:
        conn_count = connected
        p_conn = connected / req.trials
    return EstimateResult(
        request=req,
        solvable_count=solvable,
        connected_count=conn_count,
        p_solvable=p_solv,
        p_connected=p_conn,
        moe95=margin_of_error(p_solv, req.trials, 0.95),
        elapsed_seconds=elapsed,
    )
