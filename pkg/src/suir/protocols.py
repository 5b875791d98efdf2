"""Robot algorithms.

Every algorithm maps a local view (and, for luminous robots, the two light
colors) to a destination in the robot's own frame.  The level-based
algorithms are written against :class:`SidedView1D`; :func:`get_protocol`
wraps them so the engine can call any of them the same way.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .geometry import (
    ORIGIN,
    DomainError,
    LocalView,
    Point,
    Vec2,
    level,
    origin_like,
)

SQRT3_2 = math.sqrt(3.0) / 2.0
COLORS = (0, 1, 2)
# The unit-distance jump lands exactly on the d = 1 threshold, where planar
# rounding (hypot of a rotated vector) would otherwise decide the branch.
UNIT_SLACK = 1e-9


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Move(enum.Enum):
    STAY = "stay"
    MIDDLE = "middle"
    OTHER = "other"


@dataclass(frozen=True)
class SidedView1D:
    d: float
    side: Side

    def __post_init__(self):
        if not self.d > 0:
            raise DomainError(f"sided view needs d > 0, got {self.d}")

    @property
    def offset(self) -> float:
        """Signed local coordinate of the other robot."""
        return self.d if self.side is Side.LEFT else -self.d


@dataclass(frozen=True)
class ProtocolOutput:
    destination: Point
    new_color: Optional[int] = None


def sided(view: LocalView) -> SidedView1D:
    """The viewer is on the left iff it sees the other robot at a positive
    coordinate."""
    b = view.other
    if b is None or isinstance(b, Vec2):
        raise DomainError("sided views need a non-gathered one-dimensional view")
    return SidedView1D(abs(b), Side.LEFT if b > 0 else Side.RIGHT)


def _target(offset: Point, move: Move) -> Point:
    if move is Move.MIDDLE:
        return offset * 0.5
    if move is Move.OTHER:
        return offset
    return origin_like(offset)


def mod3_rule(i: int, side: Side) -> Move:
    r = i % 3
    if r == 0:
        return Move.MIDDLE
    if r == 1:
        return Move.MIDDLE if side is Side.LEFT else Move.OTHER
    return Move.OTHER if side is Side.LEFT else Move.MIDDLE


def mod4_rule(i: int, side: Side) -> Move:
    r = i % 4
    if r % 2 == 0:
        return Move.MIDDLE
    if r == 1:
        return Move.MIDDLE if side is Side.LEFT else Move.OTHER
    return Move.OTHER if side is Side.LEFT else Move.MIDDLE


def alg_mod3_both_axes(view: SidedView1D) -> ProtocolOutput:
    move = mod3_rule(level(view.d), view.side)
    return ProtocolOutput(_target(view.offset, move))


def alg_mod4_disoriented(view: SidedView1D) -> ProtocolOutput:
    move = mod4_rule(level(view.d), view.side)
    return ProtocolOutput(_target(view.offset, move))


def alg_rigid_common(view: LocalView) -> ProtocolOutput:
    """Unit-distance algorithm for robots agreeing on the line orientation."""
    if view.gathered:
        return ProtocolOutput(0.0)
    sv = sided(view)
    if sv.d > 1.0 + UNIT_SLACK:
        return ProtocolOutput(sv.offset * 0.5)
    if sv.side is Side.LEFT:
        return ProtocolOutput(sv.offset + 1.0)
    return ProtocolOutput(sv.offset)


def alg_goto_other(view: LocalView) -> ProtocolOutput:
    if view.gathered:
        return ProtocolOutput(ORIGIN)
    return ProtocolOutput(view.other)


def _apex(x: float) -> Vec2:
    return Vec2(x * 0.5, abs(x * SQRT3_2))


def alg_one_axis_fault_free(view: LocalView) -> ProtocolOutput:
    """Fault-free rendezvous for robots sharing only the y-axis.

    Symmetric views go to the northern apex of the equilateral triangle; in
    any other view the southern robot joins the northern one, which stays.
    """
    if view.gathered:
        return ProtocolOutput(ORIGIN)
    q = view.other
    if q.y == 0:
        return ProtocolOutput(_apex(q.x))
    if q.y > 0:
        return ProtocolOutput(q)
    return ProtocolOutput(ORIGIN)


def alg_one_axis_suir(view: LocalView) -> ProtocolOutput:
    """SUIR for robots sharing only the y-axis.

    Off the horizontal, both robots orient the joining line south to north
    (this does not depend on the x-axis direction) and run the mod-3
    algorithm on it, the southern robot being the left one.
    """
    if view.gathered:
        return ProtocolOutput(ORIGIN)
    q = view.other
    if q.y == 0:
        return ProtocolOutput(_apex(q.x))
    dist = abs(q)
    north = q.y > 0
    out = alg_mod3_both_axes(SidedView1D(dist, Side.LEFT if north else Side.RIGHT))
    return ProtocolOutput(_embed(out.destination, dist if north else -dist, q))


def alg_luminous_ssync(view: LocalView, own: int, other: int) -> ProtocolOutput:
    """Three-color luminous algorithm.

    KNOWN FLAWED: its correctness argument does not hold, and it is shipped
    only as a subject for the SSYNC impossibility adversary.
    """
    if own not in COLORS or other not in COLORS:
        raise DomainError(f"colors must be in {COLORS}, got {own}, {other}")
    if view.gathered:
        return ProtocolOutput(ORIGIN, own)
    q = view.other
    if own == other:
        return ProtocolOutput(q * 0.5, (own + 1) % 3)
    if own == (other + 1) % 3:
        return ProtocolOutput(q, own)
    return ProtocolOutput(origin_like(q), (own - 1) % 3)


def _embed(p: float, b: float, q: Vec2) -> Vec2:
    """Map a 1D destination ``p`` back to the plane, where the other robot's
    line coordinate ``b`` corresponds to the local point ``q``."""
    if p == b:
        return q
    if p == 0:
        return ORIGIN
    if p == 0.5 * b:
        return q * 0.5
    return q * (p / b)


def line_orientation(q: Vec2) -> tuple[Vec2, float]:
    """Viewer's orientation vector of the line to ``q`` and the signed
    coordinate ``b`` with ``q = b * v``."""
    dist = abs(q)
    if q.lex_positive():
        return q / dist, dist
    return -q / dist, -dist


Compute = Callable[[LocalView, Optional[int], Optional[int]], ProtocolOutput]


@dataclass(frozen=True)
class Protocol:
    name: str
    compute: Compute
    dim: Optional[int]  # None: works in either dimension
    uses_lights: bool = False
    known_flawed: bool = False

    def __call__(self, view: LocalView, own: int | None = None, other: int | None = None):
        return self.compute(view, own, other)


def _sided_protocol(rule_alg: Callable[[SidedView1D], ProtocolOutput]) -> Compute:
    def compute(view, own=None, other=None):
        if view.gathered:
            return ProtocolOutput(0.0, own)
        out = rule_alg(sided(view))
        return ProtocolOutput(out.destination, own)

    return compute


def lift_1d_to_2d(inner: Protocol) -> Protocol:
    """Run a line algorithm in the plane along the line joining the robots."""
    if inner.dim == 2:
        raise DomainError(f"{inner.name} is not a line algorithm")

    def compute(view, own=None, other=None):
        if view.gathered:
            return ProtocolOutput(ORIGIN, own)
        q = view.other
        _, b = line_orientation(q)
        out = inner.compute(LocalView(b), own, other)
        return ProtocolOutput(_embed(out.destination, b, q), out.new_color)

    return Protocol(f"lift:{inner.name}", compute, 2, inner.uses_lights, inner.known_flawed)


def _rigid(view, own=None, other=None):
    out = alg_rigid_common(view)
    return ProtocolOutput(out.destination, own)


def _goto(view, own=None, other=None):
    return ProtocolOutput(alg_goto_other(view).destination, own)


def _plain_2d(alg):
    def compute(view, own=None, other=None):
        return ProtocolOutput(alg(view).destination, own)

    return compute


def _luminous(view, own=None, other=None):
    if own is None or other is None:
        raise DomainError("luminous_ssync needs both light colors")
    return alg_luminous_ssync(view, own, other)


_BASE = {
    "rigid_common": lambda: Protocol("rigid_common", _rigid, 1),
    "mod3_both_axes": lambda: Protocol(
        "mod3_both_axes", _sided_protocol(lambda v: alg_mod3_both_axes(v)), 1
    ),
    "mod4_disoriented": lambda: Protocol(
        "mod4_disoriented", _sided_protocol(lambda v: alg_mod4_disoriented(v)), 1
    ),
    "one_axis_fault_free": lambda: Protocol(
        "one_axis_fault_free", _plain_2d(lambda v: alg_one_axis_fault_free(v)), 2
    ),
    "one_axis_suir": lambda: Protocol(
        "one_axis_suir", _plain_2d(lambda v: alg_one_axis_suir(v)), 2
    ),
    "luminous_ssync": lambda: Protocol(
        "luminous_ssync", _luminous, None, uses_lights=True, known_flawed=True
    ),
    "goto_other": lambda: Protocol("goto_other", _goto, None),
}

PROTOCOL_IDS = tuple(_BASE) + tuple(f"lift:{k}" for k in _BASE if k not in (
    "one_axis_fault_free", "one_axis_suir"))


def get_protocol(name: str) -> Protocol:
    """Look up a protocol by identifier, e.g. ``"mod4_disoriented"`` or
    ``"lift:mod4_disoriented"``."""
    if name.startswith("lift:"):
        return lift_1d_to_2d(get_protocol(name[len("lift:"):]))
    try:
        return _BASE[name]()
    except KeyError:
        raise KeyError(f"unknown protocol {name!r}; known: {', '.join(PROTOCOL_IDS)}") from None
