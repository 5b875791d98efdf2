"""Frames, similarities and local views for two robots on the plane or a line.

Positions in the plane are :class:`Vec2`; positions on a line are plain
floats.  Both support ``+``, ``-``, scalar ``*`` and ``abs`` so most code in
the package is written once for both dimensions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

TWO_PI = 2.0 * math.pi

# rotations that have exact cos/sin in binary floating point
_EXACT_TRIG = {
    0.0: (1.0, 0.0),
    math.pi / 2: (0.0, 1.0),
    math.pi: (-1.0, 0.0),
    3 * math.pi / 2: (0.0, -1.0),
}


class DomainError(ValueError):
    """An argument lies outside the domain of a geometric operation."""


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite vector ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Vec2:
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Vec2:
        return Vec2(self.x / k, self.y / k)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)

    def dot(self, other: Vec2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Vec2) -> float:
        return self.x * other.y - self.y * other.x

    def lex_positive(self) -> bool:
        """True if the vector points from the lexicographically smaller end."""
        return self.x > 0 or (self.x == 0 and self.y > 0)

    def as_list(self) -> list[float]:
        return [self.x, self.y]


Point = Union[Vec2, float]
ORIGIN = Vec2(0.0, 0.0)


def origin_like(p: Point) -> Point:
    return ORIGIN if isinstance(p, Vec2) else 0.0


def check_finite(p: Point) -> Point:
    if isinstance(p, Vec2):
        return p
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f"non-finite coordinate {p}")
    return p


class AgreementMode(enum.Enum):
    BothAxesCommonUnit = "BothAxesCommonUnit"
    BothAxesAnyUnit = "BothAxesAnyUnit"
    OneCommonAxis = "OneCommonAxis"
    Disoriented = "Disoriented"
    Line1DDisoriented = "Line1DDisoriented"
    Line1DOriented = "Line1DOriented"

    @property
    def dim(self) -> int:
        return 1 if self.name.startswith("Line1D") else 2


@dataclass(frozen=True)
class Similarity:
    """Linear conformal map ``p -> scale * R(rotation) * F(p)``.

    ``F`` is the reflection across the y-axis (x -> -x) when ``reflect`` is
    set, the identity otherwise.
    """

    scale: float = 1.0
    rotation: float = 0.0
    reflect: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise DomainError(f"scale must be finite and positive, got {self.scale}")
        if not math.isfinite(self.rotation):
            raise DomainError(f"non-finite rotation {self.rotation}")
        object.__setattr__(self, "rotation", float(self.rotation) % TWO_PI)
        object.__setattr__(self, "reflect", bool(self.reflect))

    def _cos_sin(self) -> tuple[float, float]:
        exact = _EXACT_TRIG.get(self.rotation)
        if exact is not None:
            return exact
        return math.cos(self.rotation), math.sin(self.rotation)

    def apply(self, p: Vec2) -> Vec2:
        x = -p.x if self.reflect else p.x
        y = p.y
        if self.rotation == 0.0:
            return Vec2(self.scale * x, self.scale * y)
        c, s = self._cos_sin()
        return Vec2(self.scale * (c * x - s * y), self.scale * (s * x + c * y))

    def inverse(self) -> Similarity:
        # F R(-t) = R(t) F, so a reflecting map keeps its angle
        rot = self.rotation if self.reflect else -self.rotation
        return Similarity(1.0 / self.scale, rot, self.reflect)

    def compose(self, inner: Similarity) -> Similarity:
        """The map ``p -> self(inner(p))``."""
        sign = -1.0 if self.reflect else 1.0
        return Similarity(
            self.scale * inner.scale,
            self.rotation + sign * inner.rotation,
            self.reflect != inner.reflect,
        )

    def to_dict(self) -> dict:
        return {"scale": self.scale, "rotation": self.rotation, "reflect": self.reflect}


@dataclass(frozen=True)
class Similarity1D:
    """``a -> sign * scale * a`` on a line."""

    scale: float = 1.0
    sign: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise DomainError(f"scale must be finite and positive, got {self.scale}")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")

    def apply(self, a: float) -> float:
        return self.sign * (self.scale * a)

    def inverse(self) -> Similarity1D:
        return Similarity1D(1.0 / self.scale, self.sign)

    def compose(self, inner: Similarity1D) -> Similarity1D:
        return Similarity1D(self.scale * inner.scale, self.sign * inner.sign)

    def to_dict(self) -> dict:
        return {"scale": self.scale, "sign": self.sign}


AnySimilarity = Union[Similarity, Similarity1D]
IDENTITY = Similarity()
IDENTITY_1D = Similarity1D()


def identity_for(mode: AgreementMode) -> AnySimilarity:
    return IDENTITY_1D if mode.dim == 1 else IDENTITY


def admissible(mode: AgreementMode, h: AnySimilarity) -> bool:
    """Whether ``h`` belongs to the transformation set of ``mode``."""
    if mode.dim == 1:
        if not isinstance(h, Similarity1D):
            return False
        if mode is AgreementMode.Line1DOriented:
            return h.sign == 1
        return True
    if not isinstance(h, Similarity):
        return False
    if mode is AgreementMode.BothAxesCommonUnit:
        return h.scale == 1.0 and h.rotation == 0.0 and not h.reflect
    if mode is AgreementMode.BothAxesAnyUnit:
        return h.rotation == 0.0 and not h.reflect
    if mode is AgreementMode.OneCommonAxis:
        return h.rotation == 0.0
    return True


def apply_similarity(h: AnySimilarity, p: Point) -> Point:
    return h.apply(check_finite(p))


def invert_similarity(h: AnySimilarity) -> AnySimilarity:
    return h.inverse()


def level(d: float) -> int:
    """The integer ``i`` with ``2**-i <= d < 2**(1 - i)``.

    Exact for every positive double: ``frexp`` splits off the binary exponent
    without rounding.
    """
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"level is defined for finite d > 0, got {d}")
    _, e = math.frexp(d)
    return 1 - e


@dataclass(frozen=True)
class LocalView:
    """What a robot sees: nothing (``other is None``, gathered) or the other
    robot's position in its own frame, itself at the origin."""

    other: Point | None = None

    def __post_init__(self):
        if self.other is not None and abs(self.other) == 0:
            raise DomainError("a non-gathered view cannot place the other robot at the origin")

    @property
    def gathered(self) -> bool:
        return self.other is None

    def to_json(self):
        if self.other is None:
            return None
        return self.other.as_list() if isinstance(self.other, Vec2) else self.other


GATHERED = LocalView(None)


def local_view(positions, viewer: int, h: AnySimilarity, eps: float) -> LocalView:
    me = check_finite(positions[viewer])
    other = check_finite(positions[1 - viewer])
    offset = other - me
    if abs(offset) <= eps:
        return GATHERED
    return LocalView(h.apply(offset))


def lex_order(p: Vec2, q: Vec2) -> tuple[Vec2, Vec2]:
    """``(r_min, r_max)`` under (x, then y) ordering."""
    return (p, q) if (p.x, p.y) <= (q.x, q.y) else (q, p)


@dataclass(frozen=True)
class LineFrame:
    origin: Vec2
    direction: Vec2

    def __post_init__(self):
        if abs(abs(self.direction) - 1.0) > 1e-12:
            raise DomainError(f"direction {self.direction} is not a unit vector")


def line_frame(config) -> LineFrame:
    p, q = config
    if p == q:
        raise DomainError("a line frame needs two distinct positions")
    lo, hi = lex_order(p, q)
    diff = hi - lo
    return LineFrame(lo, diff / abs(diff))


def to_line(frame: LineFrame, p: Vec2, tol: float = 1e-9) -> float:
    rel = p - frame.origin
    a = rel.dot(frame.direction)
    residual = abs(rel - frame.direction * a)
    if residual > tol * max(1.0, abs(a)):
        raise DomainError(f"{p} is {residual:.3g} off the line")
    return a


def from_line(frame: LineFrame, a: float) -> Vec2:
    return frame.origin + frame.direction * a
