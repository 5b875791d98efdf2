"""Two robots sharing a unit of length, one of which may crash.

Far apart (more than one unit) both head for the middle.  Within one unit
the left robot jumps one unit past the right robot while the right robot
joins the left one, so a fault-free pair is together after two rounds.  A
lone correct robot halves the gap until it is within a unit and then needs
at most two more rounds.
"""

import math

from suir import AgreementMode, CrashPlan, Scenario, Similarity1D, run

unit = (Similarity1D(), Similarity1D())

print("fault free")
for d0 in (0.25, 1.0, 40.0):
    trace = run(Scenario(AgreementMode.Line1DOriented, (0.0, d0), unit, "rigid_common"))
    print(f"  d0={d0:6}: {trace.terminal}, configurations {trace.configurations()[:3]}")

print("one crash at round 0")
for d0 in (3.0, 1000.0, 1e6):
    for victim in (0, 1):
        sc = Scenario(AgreementMode.Line1DOriented, (0.0, d0), unit, "rigid_common",
                      crash=CrashPlan(victim, 0))
        trace = run(sc)
        bound = math.ceil(math.log2(d0)) + 2
        side = "right" if victim == 0 else "left"
        print(f"  d0={d0:9}: correct robot on the {side:5} -> {trace.terminal} (bound {bound})")
