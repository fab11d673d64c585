"""Monte Carlo estimates of the solvability probability.

For vertex counts beyond the exact-census range, the library samples unlabeled
graphs uniformly and reports the fraction that are universally solvable,
together with a 95% margin of error.  The random stream is counter-based, so
the same seed reproduces the same counts regardless of the worker count.

This demo estimates at a few sizes with 40,000 trials each (about a dozen
seconds total) and compares the small-n estimates against the exact values.
"""

from lightsout import EstimateRequest, exact_counts, run_estimate

TRIALS = 40_000

print(f"{'n':>3} {'p_solvable':>10} {'±moe95':>8} {'p_connected':>11} "
      f"{'exact':>8}")
for n in (5, 7, 12, 20, 40):
    res = run_estimate(EstimateRequest(n=n, trials=TRIALS, seed=2026))
    if n <= 8:
        row = exact_counts(n)
        exact = f"{row.solvable / row.total:.5f}"
    else:
        exact = "-"
    print(f"{n:>3} {res.p_solvable:>10.5f} {res.moe95:>8.5f} "
          f"{res.p_connected:>11.5f} {exact:>8}")

print("\nRestricting to connected graphs (rejection sampling), n=7:")
res = run_estimate(EstimateRequest(n=7, trials=TRIALS, seed=2026,
                                   mode="connected"))
row = exact_counts(7)
print(f"    estimate {res.p_solvable:.5f} ± {res.moe95:.5f}, "
      f"exact {row.connected_solvable / row.connected:.5f}")

print("\nSame seed, different worker counts, identical counts:")
for workers in (1, 4):
    res = run_estimate(EstimateRequest(n=10, trials=5000, seed=3,
                                       workers=workers))
    print(f"    workers={workers}: solvable_count={res.solvable_count}")
