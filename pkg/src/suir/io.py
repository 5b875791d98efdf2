"""JSON scenario files and JSON-lines traces.

Scenario schema (all keys but ``mode``, ``protocol`` and ``positions`` are
optional)::

    {
      "name": "mod4-demo",
      "mode": "Disoriented",                  # an AgreementMode name
      "protocol": "lift:mod4_disoriented",
      "positions": [[0, 0], [3, 4]],          # or [0.0, 2.0] on a line
      "similarities": [{"scale": 1, "rotation": 0, "reflect": false}, ...],
                                              # on a line: {"scale": 1, "sign": -1}
      "lights": [0, 0],
      "scheduler": {"type": "ssync_fair", "k": 4, "seed": 7},
      "crash": {"victim": 1, "round": 0},
      "truncation": {"type": "uniform_random", "seed": 3},
      "delta": 0.1, "epsilon": 1e-9, "max_rounds": 10000, "seed": 0,
      "expect": "gather"
    }

Floats are written with ``repr``, the shortest string that reads back to
the same double, so traces replay bit for bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .adversary import CrashPlan, SchedulerSpec, TruncationSpec
from .engine import ScenarioError, Scenario, Trace
from .geometry import AgreementMode, DomainError, LocalView, Similarity, Similarity1D, Vec2

_KNOWN_KEYS = {
    "name", "mode", "protocol", "positions", "similarities", "lights", "scheduler",
    "crash", "truncation", "delta", "epsilon", "max_rounds", "seed", "expect", "sweep",
}


def point_to_json(p):
    return p.as_list() if isinstance(p, Vec2) else p


def _point(raw, dim, where, problems):
    try:
        if dim == 2:
            x, y = raw
            return Vec2(float(x), float(y))
        if isinstance(raw, (list, tuple)):
            raise TypeError
        value = float(raw)
        if not math.isfinite(value):
            raise DomainError
        return value
    except (TypeError, ValueError):
        problems.append(f"{where}: expected {'[x, y]' if dim == 2 else 'a number'}, got {raw!r}")
        return None


def _similarity(raw, dim, where, problems):
    if not isinstance(raw, dict):
        problems.append(f"{where}: expected an object, got {raw!r}")
        return None
    try:
        if dim == 2:
            return Similarity(
                float(raw.get("scale", 1.0)),
                float(raw.get("rotation", 0.0)),
                bool(raw.get("reflect", False)),
            )
        return Similarity1D(float(raw.get("scale", 1.0)), int(raw.get("sign", 1)))
    except (TypeError, ValueError) as exc:
        problems.append(f"{where}: {exc}")
        return None


def scenario_from_dict(data: dict) -> Scenario:
    """Parse and validate; every problem is reported at once."""
    problems: list[str] = []
    if not isinstance(data, dict):
        raise ScenarioError(["<root>: expected a JSON object"])
    for key in sorted(set(data) - _KNOWN_KEYS):
        problems.append(f"{key}: unknown field")
    for key in ("mode", "protocol", "positions"):
        if key not in data:
            problems.append(f"{key}: required field missing")
    try:
        mode = AgreementMode(data.get("mode"))
    except ValueError:
        if "mode" in data:
            problems.append(
                f"mode: unknown mode {data.get('mode')!r}; "
                f"known: {', '.join(m.value for m in AgreementMode)}"
            )
        mode = None
    if problems and mode is None:
        raise ScenarioError(problems)

    dim = mode.dim
    raw_pos = data.get("positions") or []
    positions = tuple(_point(p, dim, f"positions[{i}]", problems) for i, p in enumerate(raw_pos))
    identity = {"scale": 1.0}
    raw_sims = data.get("similarities") or [identity, identity]
    similarities = tuple(
        _similarity(h, dim, f"similarities[{i}]", problems) for i, h in enumerate(raw_sims)
    )
    sched = data.get("scheduler") or {}
    crash = data.get("crash") or {}
    trunc = data.get("truncation") or {}
    lights = data.get("lights")
    if problems:
        raise ScenarioError(problems)
    scenario = Scenario(
        mode=mode,
        positions=positions,
        similarities=similarities,
        protocol=str(data.get("protocol")),
        scheduler=SchedulerSpec(sched.get("type", "fsync"), sched.get("k", 1), sched.get("seed")),
        crash=CrashPlan(crash.get("victim"), crash.get("round", 0)),
        delta=data.get("delta", 1.0),
        truncation=TruncationSpec(
            trunc.get("type", "rigid"),
            trunc.get("seed"),
            tuple(tuple(f) if isinstance(f, list) else f for f in trunc.get("fractions", ())),
        ),
        epsilon=data.get("epsilon", 1e-9),
        max_rounds=data.get("max_rounds", 10_000),
        seed=data.get("seed", 0),
        lights=tuple(lights) if lights is not None else None,
        expect=data.get("expect"),
        name=str(data.get("name", "")),
    )
    return scenario.validate()


def scenario_to_dict(s: Scenario) -> dict:
    d = {
        "name": s.name,
        "mode": s.mode.value,
        "protocol": s.protocol,
        "positions": [point_to_json(p) for p in s.positions],
        "similarities": [h.to_dict() for h in s.similarities],
        "scheduler": s.scheduler.to_dict(),
        "crash": s.crash.to_dict(),
        "truncation": s.truncation.to_dict(),
        "delta": s.delta,
        "epsilon": s.epsilon,
        "max_rounds": s.max_rounds,
        "seed": s.seed,
    }
    if s.lights is not None:
        d["lights"] = list(s.lights)
    if s.expect is not None:
        d["expect"] = s.expect
    return d


def load_scenario(path) -> Scenario:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"<file>: not valid JSON ({exc})"]) from None
    return scenario_from_dict(data)


def _view_json(v: LocalView):
    return "gathered" if v.gathered else point_to_json(v.other)


def record_to_dict(rec) -> dict:
    d = {
        "round": rec.round,
        "before": [point_to_json(p) for p in rec.before],
        "active": list(rec.active),
        "views": {str(r): _view_json(v) for r, v in rec.views.items()},
        "local_destinations": {str(r): point_to_json(p) for r, p in rec.local_destinations.items()},
        "global_destinations": {str(r): point_to_json(p) for r, p in rec.global_destinations.items()},
        "after": [point_to_json(p) for p in rec.after],
        "crashed": list(rec.crashed),
    }
    if rec.lights_before is not None:
        d["lights_before"] = list(rec.lights_before)
        d["lights_after"] = list(rec.lights_after)
    return d


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, allow_nan=False)


def trace_lines(trace: Trace):
    yield dumps({"scenario": scenario_to_dict(trace.scenario)})
    for rec in trace.records:
        yield dumps(record_to_dict(rec))
    yield dumps({"terminal": trace.terminal.status, "round": trace.terminal.round})


def write_trace(trace: Trace, fh) -> None:
    for line in trace_lines(trace):
        fh.write(line + "\n")


def read_trace_lines(path) -> list[dict]:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]
