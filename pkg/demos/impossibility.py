"""A fair semi-synchronous schedule that keeps two correct robots apart.

The adversary watches where each robot would go.  If robot 0 would not land
on robot 1 it moves alone; if both would move, both move and swap roles; if
robot 0 would join a robot that stays put, only robot 1 moves.  Both robots
are still activated infinitely often.  The luminous three-color algorithm,
shipped only as a subject for this adversary, fails the same way as the
naive go-to-the-other rule.
"""

from suir import AgreementMode, Scenario, SchedulerSpec, Similarity1D, run
from suir.checker import activation_counts, audit_fairness

for protocol, lights in (("goto_other", None), ("luminous_ssync", (0, 0))):
    sc = Scenario(AgreementMode.Line1DOriented, (0.0, 1.0), (Similarity1D(), Similarity1D()),
                  protocol, scheduler=SchedulerSpec("impossibility"), lights=lights,
                  max_rounds=10_000)
    trace = run(sc)
    print(f"{protocol}: {trace.terminal} after {len(trace.records)} rounds")
    print(f"  smallest distance seen {min(trace.distances())}")
    print(f"  activations {activation_counts(trace)}, longest idle streaks {audit_fairness(trace)}")
    print("  first rounds:", [(r.active, r.after) for r in trace.records[:4]])
