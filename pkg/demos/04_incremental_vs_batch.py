"""Why incremental: membership tests are cheap, basis recomputation is not.

On a duplicates-heavy generator family the number of update steps stays
bounded (independently of m) while batch reduction has to chew through all
m vectors; the timing gap grows with m.
"""

from latkit.cli import bench_row
from latkit.reduction import DEFAULT_PARAMS

print(f"{'m':>5} {'updates':>8} {'bound':>8} {'t_incr':>9} {'t_batch':>9}")
for m in (50, 100, 200):
    row = bench_row(seed=7, d=4, m=m, entry_range=10, duplicates=True,
                    params=DEFAULT_PARAMS)
    print(f"{row['m']:>5} {row['update_count']:>8} "
          f"{row['theorem_bound']:>8.2f} {row['t_incremental']:>9.4f} "
          f"{row['t_batch_mlll']:>9.4f}")
