"""Generic ultra summit search against the periodic algorithms as n grows.

Each instance gets the same wall-clock budget.  The generic search tries every
permutation braid as a conjugator, so it stops finishing within a handful of
strands, while the band-structure algorithms keep going to n = 50.
"""

from periodic_braids.bench import BenchConfig, bench_run, records_csv

budget_ms = 2_000
records = []
for n in (4, 6, 8, 10):
    records += bench_run(BenchConfig(n=n, k=1, c=10, samples=3, time_budget_ms=budget_ms,
                                     algorithms=("U-delta", "B")))
for n in (20, 50):
    records += bench_run(BenchConfig(n=n, k=1, c=10, samples=3, time_budget_ms=budget_ms,
                                     algorithms=("B", "C")))
print(records_csv(records), end="")
