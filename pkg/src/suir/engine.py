"""Look-Compute-Move round loop for two robots."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from .adversary import CrashPlan, SchedulerSpec, TruncationSpec
from .geometry import (
    AgreementMode,
    AnySimilarity,
    DomainError,
    LocalView,
    Point,
    Vec2,
    admissible,
    check_finite,
    local_view,
    origin_like,
)
from .protocols import Protocol, get_protocol

DEFAULT_EPSILON = 1e-9
DEFAULT_MAX_ROUNDS = 10_000

# protocol families and the assumptions under which they are claimed to solve SUIR
_ORIENTED_MODES = {
    AgreementMode.Line1DOriented,
    AgreementMode.BothAxesCommonUnit,
    AgreementMode.BothAxesAnyUnit,
}


class ScenarioError(ValueError):
    """A scenario failed validation; ``fields`` lists every problem found."""

    def __init__(self, fields: list[str]):
        self.fields = list(fields)
        super().__init__("invalid scenario: " + "; ".join(self.fields))


class EngineError(RuntimeError):
    """An internal invariant of the round loop was broken."""


@dataclass(frozen=True)
class Scenario:
    mode: AgreementMode
    positions: tuple
    similarities: tuple
    protocol: str
    scheduler: SchedulerSpec = field(default_factory=SchedulerSpec)
    crash: CrashPlan = field(default_factory=CrashPlan)
    delta: float = 1.0
    truncation: TruncationSpec = field(default_factory=TruncationSpec)
    epsilon: float = DEFAULT_EPSILON
    max_rounds: int = DEFAULT_MAX_ROUNDS
    seed: int = 0
    lights: Optional[tuple] = None
    expect: Optional[str] = None  # "gather", "no_gather" or None (derived)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.mode.dim

    def problems(self) -> list[str]:
        out: list[str] = []
        if len(self.positions) != 2:
            out.append("positions: exactly two robots are required")
        else:
            for i, p in enumerate(self.positions):
                if self.dim == 2 and not isinstance(p, Vec2):
                    out.append(f"positions[{i}]: expected a 2D point for mode {self.mode.value}")
                elif self.dim == 1 and (isinstance(p, Vec2) or not math.isfinite(p)):
                    out.append(f"positions[{i}]: expected a finite line coordinate")
        if len(self.similarities) != 2:
            out.append("similarities: exactly two transformations are required")
        else:
            for i, h in enumerate(self.similarities):
                if not admissible(self.mode, h):
                    out.append(f"similarities[{i}]: {h} is not admissible for {self.mode.value}")
        try:
            proto = get_protocol(self.protocol)
        except (KeyError, DomainError) as exc:
            out.append(f"protocol: {exc.args[0]}")
        else:
            if proto.dim is not None and proto.dim != self.dim:
                out.append(f"protocol: {self.protocol} runs in {proto.dim}D but mode is {self.dim}D")
            if proto.uses_lights and self.lights is None:
                out.append(f"lights: {self.protocol} needs initial colors")
        if self.lights is not None:
            if len(self.lights) != 2 or any(c not in (0, 1, 2) for c in self.lights):
                out.append(f"lights: two colors in {{0,1,2}} required, got {self.lights!r}")
        out += self.scheduler.problems() + self.crash.problems() + self.truncation.problems()
        if not (isinstance(self.delta, (int, float)) and self.delta > 0 and math.isfinite(self.delta)):
            out.append(f"delta: must be finite and > 0, got {self.delta!r}")
        if not (isinstance(self.epsilon, (int, float)) and self.epsilon > 0):
            out.append(f"epsilon: must be > 0, got {self.epsilon!r}")
        if not isinstance(self.max_rounds, int) or self.max_rounds < 1:
            out.append(f"max_rounds: must be an integer >= 1, got {self.max_rounds!r}")
        if self.expect not in (None, "gather", "no_gather"):
            out.append(f"expect: must be 'gather', 'no_gather' or null, got {self.expect!r}")
        return out

    def validate(self) -> "Scenario":
        problems = self.problems()
        if problems:
            raise ScenarioError(problems)
        return self

    def claims_suir(self) -> bool:
        """Whether the protocol's own correctness result covers this scenario."""
        name = self.protocol.removeprefix("lift:")
        fsync = self.scheduler.kind == "fsync"
        if name == "rigid_common":
            unit = all(h.scale == 1.0 for h in self.similarities)
            return fsync and self.truncation.rigid and unit and self.mode in _ORIENTED_MODES
        if name == "mod3_both_axes":
            return fsync and self.mode in _ORIENTED_MODES
        if name == "mod4_disoriented":
            return fsync
        if name == "one_axis_suir":
            return fsync and self.mode in _ORIENTED_MODES | {AgreementMode.OneCommonAxis}
        if name == "one_axis_fault_free":
            return (
                self.crash.victim is None
                and self.scheduler.kind != "impossibility"
                and self.mode in _ORIENTED_MODES | {AgreementMode.OneCommonAxis}
            )
        return False

    def expected_outcome(self) -> Optional[str]:
        if self.expect is not None:
            return self.expect
        if self.scheduler.kind == "impossibility" and self.truncation.rigid and self.crash.victim is None:
            return "no_gather"
        if self.claims_suir():
            return "gather"
        return None


@dataclass(frozen=True)
class WorldState:
    positions: tuple
    crashed: tuple
    round: int
    similarities: tuple
    lights: Optional[tuple] = None
    gathered_since: Optional[int] = None


@dataclass(frozen=True)
class RoundRecord:
    round: int
    before: tuple
    active: tuple
    views: dict
    local_destinations: dict
    global_destinations: dict
    after: tuple
    lights_before: Optional[tuple] = None
    lights_after: Optional[tuple] = None
    crashed: tuple = (False, False)


@dataclass(frozen=True)
class Terminal:
    status: str  # "Gathered" or "RoundLimit"
    round: Optional[int] = None

    @property
    def gathered(self) -> bool:
        return self.status == "Gathered"

    def __str__(self):
        return f"Gathered({self.round})" if self.gathered else "RoundLimit"


@dataclass
class Trace:
    scenario: Scenario
    records: list
    terminal: Terminal

    def configurations(self) -> list[tuple]:
        """``C_0, C_1, ...``: the configuration before the first round and
        after each recorded round."""
        if not self.records:
            return [self.scenario.positions]
        return [self.records[0].before] + [r.after for r in self.records]

    def distances(self) -> list[float]:
        return [abs(p[1] - p[0]) for p in self.configurations()]

    @property
    def rounds_to_gather(self) -> Optional[int]:
        return self.terminal.round if self.terminal.gathered else None


def detect_gathering(positions, eps: float = DEFAULT_EPSILON) -> bool:
    return abs(positions[1] - positions[0]) <= eps


def initial_state(scenario: Scenario) -> WorldState:
    positions = tuple(check_finite(p) for p in scenario.positions)
    return WorldState(
        positions=positions,
        crashed=(False, False),
        round=0,
        similarities=tuple(scenario.similarities),
        lights=tuple(scenario.lights) if scenario.lights is not None else None,
        gathered_since=0 if detect_gathering(positions, scenario.epsilon) else None,
    )


class Simulation:
    """One execution.  Owns the scheduler and truncation state."""

    def __init__(self, scenario: Scenario, protocol: Protocol | None = None):
        self.scenario = scenario.validate()
        self.protocol = protocol or get_protocol(scenario.protocol)
        self.scheduler = scenario.scheduler.build(scenario.seed, scenario.epsilon)
        self.truncation = scenario.truncation.build(scenario.seed)
        self.state = initial_state(scenario)
        self.records: list[RoundRecord] = []
        self._inverses = tuple(h.inverse() for h in scenario.similarities)

    def step(self) -> RoundRecord:
        sc, st = self.scenario, self.state
        if st.round >= sc.max_rounds:
            raise EngineError(f"round limit {sc.max_rounds} reached")
        t = st.round
        crashed = tuple(st.crashed[r] or sc.crash.crashed(r, t) for r in (0, 1))
        correct = [r for r in (0, 1) if not crashed[r]]
        views: dict[int, LocalView] = {}
        local_dest: dict[int, Point] = {}
        global_dest: dict[int, Point] = {}
        new_colors: dict[int, Optional[int]] = {}
        for r in correct:
            h: AnySimilarity = st.similarities[r]
            view = local_view(st.positions, r, h, sc.epsilon)
            own = other = None
            if st.lights is not None:
                own, other = st.lights[r], st.lights[1 - r]
            out = self.protocol(view, own, other)
            dest = out.destination
            if abs(dest) == 0:
                dest = origin_like(st.positions[r])
            views[r] = view
            local_dest[r] = dest
            global_dest[r] = st.positions[r] + self._inverses[r].apply(dest)
            new_colors[r] = out.new_color
        active = self.scheduler.activate(t, frozenset(correct), st.positions, global_dest)
        if not active or not set(active) <= set(correct):
            raise EngineError(
                f"round {t}: scheduler {self.scheduler.kind} activated {sorted(active)} "
                f"with correct robots {correct}"
            )
        moves = {r: (st.positions[r], global_dest[r]) for r in sorted(active)}
        realized = self.truncation.realize(moves, sc.delta, t)
        after = tuple(realized.get(r, st.positions[r]) for r in (0, 1))
        lights = st.lights
        if lights is not None:
            lights = tuple(
                new_colors[r] if r in active and new_colors[r] is not None else lights[r]
                for r in (0, 1)
            )
        gathered = detect_gathering(after, sc.epsilon)
        since = (st.gathered_since if st.gathered_since is not None else t + 1) if gathered else None
        record = RoundRecord(
            round=t,
            before=st.positions,
            active=tuple(sorted(active)),
            views={r: views[r] for r in sorted(active)},
            local_destinations={r: local_dest[r] for r in sorted(active)},
            global_destinations={r: global_dest[r] for r in sorted(active)},
            after=after,
            lights_before=st.lights,
            lights_after=lights,
            crashed=crashed,
        )
        self.state = replace(
            st, positions=after, crashed=crashed, round=t + 1, lights=lights, gathered_since=since
        )
        self.records.append(record)
        return record

    def run(self) -> Trace:
        max_rounds = self.scenario.max_rounds
        while self.state.round < max_rounds:
            since = self.state.gathered_since
            if since is not None and self.state.round > since:
                break  # one confirmation round already happened
            self.step()
        since = self.state.gathered_since
        terminal = Terminal("Gathered", since) if since is not None else Terminal("RoundLimit")
        return Trace(self.scenario, self.records, terminal)


def run(scenario: Scenario) -> Trace:
    return Simulation(scenario).run()


def step(state: WorldState, scenario: Scenario, sim: Simulation | None = None):
    """Advance ``state`` by one round; returns ``(new_state, record)``.

    Without a ``sim`` the scheduler and truncation start fresh, which is
    exact for the stateless ones (FSYNC, impossibility, rigid, minimal-delta).
    """
    sim = sim or Simulation(scenario)
    sim.state = state
    record = sim.step()
    return sim.state, record
