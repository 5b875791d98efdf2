"""Robots that agree only on which way is north.

On a common horizontal they cannot tell who is left, so both head for the
apex of the equilateral triangle above them.  If the environment stops them
after equal distances they stay level and the gap shrinks by exactly delta
per round; any unequal stop puts one robot higher, which orients the
joining line, and the mod-3 algorithm finishes the job.
"""

from suir import TruncationSpec, run
from suir.checker import check_symmetric_decrease, symmetric_scenario

trace = run(symmetric_scenario(10.0, 0.25))
gaps = trace.distances()
print(f"symmetric stops: {trace.terminal}; gaps {[round(g, 3) for g in gaps[:5]]} ...")
rep = check_symmetric_decrease(trace, 0.25)
print(f"  decrease equals delta in all {rep.samples} rounds: {rep.passed}")

for seed in range(3):
    trace = run(symmetric_scenario(10.0, 0.25, truncation=TruncationSpec("uniform_random", seed)))
    p, q = trace.configurations()[1]
    print(f"random stops (seed {seed}): heights {p.y:.3f} / {q.y:.3f} after one round, {trace.terminal}")
