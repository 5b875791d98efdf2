"""Everything the environment controls: who is activated, who crashes, and
where a non-rigid move stops."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .geometry import DomainError, Point, Vec2

ROBOTS = (0, 1)


# --- activation -------------------------------------------------------------


def fsync_activation(correct) -> frozenset[int]:
    if not correct:
        raise DomainError("no correct robot left to activate")
    return frozenset(correct)


def _nonempty_subsets(robots: Sequence[int]) -> list[frozenset[int]]:
    n = len(robots)
    return [
        frozenset(r for b, r in enumerate(robots) if mask >> b & 1)
        for mask in range(1, 1 << n)
    ]


def ssync_fair_activation(
    round: int,
    k: int,
    seed: int,
    correct,
    idle: Optional[Mapping[int, int]] = None,
) -> frozenset[int]:
    """Pseudo-random non-empty subset of ``correct``.

    The draw depends only on ``(seed, round)``.  A robot whose idle streak
    has reached ``k - 1`` is forced in, so every window of ``k`` rounds
    activates every correct robot.
    """
    if k < 1:
        raise DomainError(f"fairness window must be >= 1, got {k}")
    robots = sorted(correct)
    if not robots:
        raise DomainError("no correct robot left to activate")
    rng = random.Random(f"ssync/{seed}/{round}")
    chosen = set(rng.choice(_nonempty_subsets(robots)))
    idle = idle or {}
    chosen.update(r for r in robots if idle.get(r, 0) >= k - 1)
    return frozenset(chosen)


def impossibility_adversary(dictated, positions, designated: int = 0, eps: float = 1e-9):
    """One round of the schedule that keeps two correct robots apart forever.

    ``dictated`` holds each robot's global destination for the current
    configuration.  ``designated`` plays the role of the fixed robot r.
    """
    r, rp = designated, 1 - designated
    if abs(dictated[r] - positions[r]) <= eps:
        return frozenset({r})
    if abs(dictated[r] - positions[rp]) > eps:
        return frozenset({r})
    if abs(dictated[rp] - positions[rp]) > eps:
        return frozenset({r, rp})
    return frozenset({rp})


class FSync:
    kind = "fsync"

    def activate(self, round, correct, positions, dictated):
        return fsync_activation(correct)


class SSyncFair:
    kind = "ssync_fair"

    def __init__(self, k: int, seed: int):
        self.k = k
        self.seed = seed
        self.idle = {r: 0 for r in ROBOTS}

    def activate(self, round, correct, positions, dictated):
        active = ssync_fair_activation(round, self.k, self.seed, correct, self.idle)
        for r in correct:
            self.idle[r] = 0 if r in active else self.idle[r] + 1
        return active


class Impossibility:
    kind = "impossibility"

    def __init__(self, designated: int = 0, eps: float = 1e-9):
        self.designated = designated
        self.eps = eps

    def activate(self, round, correct, positions, dictated):
        if len(correct) < 2:
            # the construction assumes two correct robots; degrade to FSYNC
            return fsync_activation(correct)
        return impossibility_adversary(dictated, positions, self.designated, self.eps)


@dataclass(frozen=True)
class SchedulerSpec:
    kind: str = "fsync"
    k: int = 1
    seed: Optional[int] = None

    KINDS = ("fsync", "ssync_fair", "impossibility")

    def problems(self) -> list[str]:
        out = []
        if self.kind not in self.KINDS:
            out.append(f"scheduler.type: unknown scheduler {self.kind!r}")
        if self.kind == "ssync_fair" and (not isinstance(self.k, int) or self.k < 1):
            out.append(f"scheduler.k: fairness window must be an integer >= 1, got {self.k!r}")
        return out

    def build(self, default_seed: int = 0, eps: float = 1e-9):
        if self.kind == "fsync":
            return FSync()
        if self.kind == "ssync_fair":
            return SSyncFair(self.k, default_seed if self.seed is None else self.seed)
        if self.kind == "impossibility":
            return Impossibility(0, eps)
        raise DomainError(f"unknown scheduler {self.kind!r}")

    def to_dict(self) -> dict:
        d = {"type": self.kind}
        if self.kind == "ssync_fair":
            d["k"] = self.k
            if self.seed is not None:
                d["seed"] = self.seed
        return d


@dataclass(frozen=True)
class CrashPlan:
    victim: Optional[int] = None
    round: int = 0

    def problems(self) -> list[str]:
        out = []
        if self.victim not in (None, 0, 1):
            out.append(f"crash.victim: must be 0, 1 or null, got {self.victim!r}")
        if not isinstance(self.round, int) or self.round < 0:
            out.append(f"crash.round: must be an integer >= 0, got {self.round!r}")
        return out

    def crashed(self, robot: int, round: int) -> bool:
        return self.victim == robot and round >= self.round

    def to_dict(self) -> dict:
        return {"victim": self.victim, "round": self.round}


# --- non-rigid movement -----------------------------------------------------


def _stop_at(start: Point, dest: Point, t: float) -> Point:
    if t >= 1.0:
        return dest
    return start + (dest - start) * t


def min_fraction(length: float, delta: float) -> float:
    """Smallest admissible fraction of a segment of the given length."""
    return min(delta, length) / length


class TruncationStrategy:
    """Chooses how far along its segment each moving robot gets."""

    kind = "rigid"

    def fraction(self, start, dest, delta, round, robot) -> float:
        return 1.0

    def stop(self, start, dest, delta, round=0, robot=0):
        length = abs(dest - start)
        if length == 0:
            return start
        lo = min_fraction(length, delta)
        t = min(1.0, max(lo, self.fraction(start, dest, delta, round, robot)))
        if length <= delta:
            t = 1.0
        return _stop_at(start, dest, t)

    def realize(self, moves: Mapping[int, tuple], delta: float, round: int) -> dict:
        return {r: self.stop(s, d, delta, round, r) for r, (s, d) in sorted(moves.items())}


class Rigid(TruncationStrategy):
    kind = "rigid"


class MinimalDelta(TruncationStrategy):
    kind = "minimal_delta"

    def fraction(self, start, dest, delta, round, robot):
        return 0.0  # clamped up to the minimum


class UniformRandom(TruncationStrategy):
    kind = "uniform_random"

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = random.Random(f"truncation/{seed}")

    def fraction(self, start, dest, delta, round, robot):
        lo = min_fraction(abs(dest - start), delta)
        return self.rng.uniform(lo, 1.0)


class Custom(TruncationStrategy):
    """Fractions listed per round, either one number for both robots or a
    pair; rounds past the end of the list move rigidly."""

    kind = "custom"

    def __init__(self, fractions):
        self.fractions = list(fractions)

    def fraction(self, start, dest, delta, round, robot):
        if round >= len(self.fractions):
            return 1.0
        f = self.fractions[round]
        return float(f[robot]) if isinstance(f, (list, tuple)) else float(f)


class SymmetryPreserving(TruncationStrategy):
    """Stops two robots heading for the same equilateral apex after equal
    distances, keeping their y-coordinates identical.  Other rounds are
    truncated as :class:`MinimalDelta`."""

    kind = "symmetry_preserving"

    def __init__(self, tol: float = 1e-9):
        self.tol = tol
        self._fallback = MinimalDelta()

    def realize(self, moves, delta, round):
        if len(moves) == 2 and all(isinstance(s, Vec2) for s, _ in moves.values()):
            try:
                p0, p1 = symmetry_preserving_truncation((moves[0], moves[1]), delta, self.tol)
                return {0: p0, 1: p1}
            except DomainError:
                pass
        return self._fallback.realize(moves, delta, round)


def truncate_move(start, dest, delta, strategy="rigid", round=0, robot=0):
    """Where a robot heading from ``start`` to ``dest`` ends up this round."""
    if not delta > 0:
        raise DomainError(f"delta must be > 0, got {delta}")
    if isinstance(strategy, str):
        strategy = TruncationSpec(strategy).build()
    return strategy.stop(start, dest, delta, round, robot)


def symmetry_preserving_truncation(intended, delta: float, tol: float = 1e-9):
    """Stop points for two robots moving to the apex above their midpoint.

    Both travel ``delta`` (or reach the apex if it is closer), and end on a
    common y-coordinate.
    """
    if not delta > 0:
        raise DomainError(f"delta must be > 0, got {delta}")
    (s0, d0), (s1, d1) = intended
    d = abs(s1 - s0)
    if d == 0:
        raise DomainError("robots are gathered")
    if abs(s0.y - s1.y) > tol * d:
        raise DomainError("robots are not at the same height")
    if abs(d0 - d1) > tol * d:
        raise DomainError("robots are not heading to the same point")
    apex = (d0 + d1) * 0.5
    if abs(apex.x - (s0.x + s1.x) * 0.5) > tol * d:
        raise DomainError("target is off the perpendicular bisector")
    if apex.y <= (s0.y + s1.y) * 0.5:
        raise DomainError("target is not north of the robots")
    length = (abs(apex - s0) + abs(apex - s1)) * 0.5
    if length <= delta:
        return apex, apex
    t = delta / length
    base_y = (s0.y + s1.y) * 0.5
    y = base_y + t * (apex.y - base_y)
    return (
        Vec2(s0.x + t * (apex.x - s0.x), y),
        Vec2(s1.x + t * (apex.x - s1.x), y),
    )


@dataclass(frozen=True)
class TruncationSpec:
    kind: str = "rigid"
    seed: Optional[int] = None
    fractions: tuple = field(default_factory=tuple)

    KINDS = ("rigid", "minimal_delta", "uniform_random", "symmetry_preserving", "custom")

    def problems(self) -> list[str]:
        out = []
        if self.kind not in self.KINDS:
            out.append(f"truncation.type: unknown truncation {self.kind!r}")
        if self.kind == "custom" and not self.fractions:
            out.append("truncation.fractions: custom truncation needs a list of fractions")
        return out

    def build(self, default_seed: int = 0) -> TruncationStrategy:
        if self.kind == "rigid":
            return Rigid()
        if self.kind == "minimal_delta":
            return MinimalDelta()
        if self.kind == "uniform_random":
            return UniformRandom(default_seed if self.seed is None else self.seed)
        if self.kind == "symmetry_preserving":
            return SymmetryPreserving()
        if self.kind == "custom":
            return Custom(self.fractions)
        raise DomainError(f"unknown truncation {self.kind!r}")

    @property
    def rigid(self) -> bool:
        return self.kind == "rigid"

    def to_dict(self) -> dict:
        d = {"type": self.kind}
        if self.seed is not None:
            d["seed"] = self.seed
        if self.fractions:
            d["fractions"] = [list(f) if isinstance(f, (list, tuple)) else f for f in self.fractions]
        return d
