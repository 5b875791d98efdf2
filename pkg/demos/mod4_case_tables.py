"""The mod-4 algorithm for robots that share nothing.

Each robot measures the distance d in its own unit, takes the level i with
2**-i <= d < 2**(1-i), and decides by i mod 4 and by which side of the line
it believes it is on.  One rigid round either ends in rendezvous or maps the
pair of residues to another pair; this script prints both tables as
simulated, next to the expected entries.
"""

from suir import checker

print("common orientation (left residue, right residue)")
for (i, j), expected in checker.COMMON_TABLE.items():
    got = checker.case_table_common(i, j)
    print(f"  ({i},{j}) -> {str(got):22} {'ok' if got == expected else 'MISMATCH'}")

print("opposite orientations (both see themselves L or R)")
for (kind, i, j), expected in checker.OPPOSITE_TABLE.items():
    got = checker.case_table_opposite(kind, i, j)
    print(f"  {kind}({i},{j}) -> {str(got):22} {'ok' if got == expected else 'MISMATCH'}")

rep = checker.check_case_tables(fuzz=32)
print(f"with 32 random distances per class: {rep.samples} rounds, {len(rep.violations)} mismatches")
