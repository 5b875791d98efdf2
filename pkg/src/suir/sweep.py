"""Random scenario generation and seed sweeps."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Optional

from .adversary import CrashPlan
from .engine import Scenario, run
from .geometry import AgreementMode, Similarity, Similarity1D, Vec2


def loguniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def random_similarity(mode: AgreementMode, rng: random.Random, scales=(0.1, 10.0)):
    """A transformation drawn from the set admitted by ``mode``."""
    if mode is AgreementMode.BothAxesCommonUnit:
        return Similarity()
    scale = loguniform(rng, *scales)
    if mode is AgreementMode.BothAxesAnyUnit:
        return Similarity(scale)
    if mode is AgreementMode.OneCommonAxis:
        return Similarity(scale, 0.0, rng.random() < 0.5)
    if mode is AgreementMode.Disoriented:
        return Similarity(scale, rng.uniform(0.0, 2 * math.pi), rng.random() < 0.5)
    if mode is AgreementMode.Line1DOriented:
        return Similarity1D(scale, 1)
    return Similarity1D(scale, rng.choice((1, -1)))


def random_positions(dim: int, rng: random.Random, dmin=0.01, dmax=10.0, spread=10.0,
                     horizontal=False):
    """Two positions at a log-uniform distance in ``[dmin, dmax]``."""
    d = loguniform(rng, dmin, dmax) if dmin < dmax else dmin
    if dim == 1:
        c = rng.uniform(-spread, spread)
        a, b = c - d / 2, c + d / 2
        return (a, b) if rng.random() < 0.5 else (b, a)
    c = Vec2(rng.uniform(-spread, spread), rng.uniform(-spread, spread))
    theta = 0.0 if horizontal else rng.uniform(0.0, 2 * math.pi)
    u = Vec2(math.cos(theta), math.sin(theta)) * (d / 2)
    p, q = c - u, c + u
    return (p, q) if rng.random() < 0.5 else (q, p)


@dataclass(frozen=True)
class SweepOptions:
    min_distance: float = 0.01
    max_distance: float = 10.0
    vary_similarities: bool = True
    vary_crash: bool = False  # alternate the crash victim between the robots
    horizontal: bool = False

    @classmethod
    def from_dict(cls, d: Optional[dict]) -> "SweepOptions":
        d = dict(d or {})
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"sweep: unknown options {sorted(unknown)}")
        return cls(**d)


def randomize(template: Scenario, rng: random.Random, index: int,
              options: SweepOptions = SweepOptions()) -> Scenario:
    positions = random_positions(
        template.dim, rng, options.min_distance, options.max_distance,
        horizontal=options.horizontal,
    )
    sims = template.similarities
    if options.vary_similarities:
        sims = (random_similarity(template.mode, rng), random_similarity(template.mode, rng))
    crash = template.crash
    if options.vary_crash:
        crash = CrashPlan(index % 2, template.crash.round)
    seed = rng.randrange(2**31)
    return replace(template, positions=positions, similarities=sims, crash=crash, seed=seed,
                   name=f"{template.name}#{index}")


@dataclass
class SweepSummary:
    template: str
    seeds_run: int = 0
    gathered: int = 0
    max_rounds: Optional[int] = None
    mean_rounds: Optional[float] = None
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "template": self.template,
            "seeds_run": self.seeds_run,
            "gathered": self.gathered,
            "max_rounds": self.max_rounds,
            "mean_rounds": self.mean_rounds,
            "violations": self.violations,
        }


def run_sweep(template: Scenario, n: int, master_seed: int = 0,
              options: SweepOptions = SweepOptions()) -> SweepSummary:
    """Run ``n`` randomized copies of ``template``.

    A violation is a run whose outcome contradicts the scenario's expected
    outcome (explicit ``expect`` or the protocol's own claim).
    """
    if n < 1:
        raise ValueError("a sweep needs at least one seed")
    summary = SweepSummary(template.name or template.protocol)
    rounds = []
    for i in range(n):
        rng = random.Random(f"sweep/{master_seed}/{i}")
        sc = randomize(template, rng, i, options)
        trace = run(sc)
        summary.seeds_run += 1
        if trace.terminal.gathered:
            summary.gathered += 1
            rounds.append(trace.terminal.round)
        expected = sc.expected_outcome()
        got = "gather" if trace.terminal.gathered else "no_gather"
        if expected is not None and expected != got:
            summary.violations.append({"index": i, "expected": expected, "terminal": str(trace.terminal)})
    if rounds:
        summary.max_rounds = max(rounds)
        summary.mean_rounds = sum(rounds) / len(rounds)
    return summary
