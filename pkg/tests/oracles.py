"""Independent reference implementations used only by the tests.

They share no code with the package: exact rational arithmetic for levels
and line rounds, complex numbers for planar similarities.
"""

from __future__ import annotations

import cmath
from fractions import Fraction


def level_exact(d) -> int:
    """Smallest-search for i with 2**-i <= d < 2**(1-i), in exact arithmetic."""
    d = Fraction(d)
    assert d > 0
    i = 0
    while not (Fraction(2) ** -i <= d):
        i += 1
    while not (d < Fraction(2) ** (1 - i)):
        i -= 1
    return i


def similarity_complex(scale, rotation, reflect, x, y):
    """p -> scale * e^{i rot} * F(p) with F the mirror x -> -x."""
    z = complex(-x if reflect else x, y)
    w = scale * cmath.exp(1j * rotation) * z
    return w.real, w.imag


# move rules written out from the algorithm descriptions, keyed by
# (level residue, side) -> "middle" | "other"
MOD4_MOVES = {
    (0, "L"): "middle", (0, "R"): "middle",
    (1, "L"): "middle", (1, "R"): "other",
    (2, "L"): "middle", (2, "R"): "middle",
    (3, "L"): "other", (3, "R"): "middle",
}
MOD3_MOVES = {
    (0, "L"): "middle", (0, "R"): "middle",
    (1, "L"): "middle", (1, "R"): "other",
    (2, "L"): "other", (2, "R"): "middle",
}


def line_round(positions, scales, signs, moves, period, active=(0, 1)):
    """One rigid round on a line in exact arithmetic.

    Robot r sees the other at ``signs[r] * scales[r] * (other - me)``;
    returns the new positions.
    """
    positions = [Fraction(p) for p in positions]
    out = list(positions)
    for r in active:
        me, other = positions[r], positions[1 - r]
        if me == other:
            continue
        b = signs[r] * Fraction(scales[r]) * (other - me)
        side = "L" if b > 0 else "R"
        move = moves[(level_exact(abs(b)) % period, side)]
        out[r] = (me + other) / 2 if move == "middle" else other
    return out


def classify_exact(positions, scales, signs):
    """("rendezvous",) or (kind, lower, higher) / ("common", left, right)."""
    p0, p1 = (Fraction(p) for p in positions)
    if p0 == p1:
        return ("rendezvous",)
    sides, levels = [], []
    for r, (me, other) in enumerate(((p0, p1), (p1, p0))):
        b = signs[r] * Fraction(scales[r]) * (other - me)
        sides.append("L" if b > 0 else "R")
        levels.append(level_exact(abs(b)) % 4)
    if sides[0] != sides[1]:
        left = sides.index("L")
        return ("common", levels[left], levels[1 - left])
    lo, hi = sorted(levels)
    return (sides[0], lo, hi)
