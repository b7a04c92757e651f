"""Closed 2D pattern curves built from cubic Hermite segments.

A beat pattern is a cyclic sequence of anchor points that alternate between
preparations (local tops of the gesture) and icti (local bottoms, where the
beat lands).  Each anchor carries a signed roundness value ``r``; the curve
crosses the anchor with the horizontal tangent ``(r, 0)``, which makes every
anchor a vertical extremum of the trajectory.  Adjacent anchors are joined by
cubic Hermite segments, so the whole curve is closed and continuously
differentiable (C1, not C2).

The curve parameter advances by exactly 1 per segment: an N-beat pattern
spans ``[0, 2N)`` and is evaluated periodically for any finite parameter.
The plane is oriented with y growing upward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Role",
    "View",
    "Point2",
    "AnchorPoint",
    "HermiteSegment",
    "Pattern",
    "hermite_eval",
    "hermite_tangent",
    "pattern_segment",
    "curve_point",
    "curve_tangent",
]


class Role(str, Enum):
    """Anchor kind: a preparation tops the rebound, an ictus marks the beat."""

    PREPARATION = "prep"
    ICTUS = "ictus"


class View(str, Enum):
    """Which side of the mirror the pattern is authored for."""

    CONDUCTOR = "conductor"
    PERFORMER = "performer"

    def toggled(self) -> "View":
        return View.PERFORMER if self is View.CONDUCTOR else View.CONDUCTOR


@dataclass(frozen=True)
class Point2:
    """Point (or vector) in the drawing plane. y grows upward."""

    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class AnchorPoint:
    """One preparation or ictus: a position plus its signed roundness.

    Roundness is the horizontal tangent magnitude at the anchor.  Small |r|
    gives a sharp (staccato) corner, large |r| a rounder (legato) sweep, the
    sign picks the travel direction across the anchor, and r = 0 is a cusp.
    """

    role: Role
    position: Point2
    roundness: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "role", Role(self.role))
        object.__setattr__(self, "roundness", float(self.roundness))
        if not math.isfinite(self.roundness):
            raise ValueError(f"roundness must be finite, got {self.roundness}")

    @property
    def tangent(self) -> Point2:
        """Tangent vector at the anchor; horizontal by construction."""
        return Point2(self.roundness, 0.0)


@dataclass(frozen=True)
class HermiteSegment:
    """One cubic Hermite piece: endpoints p0, p1 with tangents m0, m1."""

    p0: Point2
    p1: Point2
    m0: Point2
    m1: Point2


@dataclass(frozen=True)
class Pattern:
    """Cyclic sequence of 2N anchors defining a closed pattern curve.

    Anchors run P1, I1, P2, I2, ..., PN, IN and wrap around, so the full
    geometry of an N-beat pattern is 6N free real numbers (x, y, roundness
    per anchor).
    """

    beats: int
    anchors: tuple[AnchorPoint, ...]
    view: View = View.CONDUCTOR

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchors", tuple(self.anchors))
        object.__setattr__(self, "view", View(self.view))
        if not isinstance(self.beats, int) or isinstance(self.beats, bool):
            raise ValueError(f"beats must be an integer, got {self.beats!r}")
        if self.beats < 1:
            raise ValueError(f"beats must be >= 1, got {self.beats}")
        if len(self.anchors) != 2 * self.beats:
            raise ValueError(
                f"anchor count {len(self.anchors)} != 2N = {2 * self.beats}"
            )
        for i, anchor in enumerate(self.anchors):
            expected = Role.PREPARATION if i % 2 == 0 else Role.ICTUS
            if anchor.role is not expected:
                raise ValueError(
                    f"anchor roles must alternate starting with a preparation: "
                    f"anchors[{i}] is {anchor.role.value!r}, expected {expected.value!r}"
                )

    @property
    def segment_count(self) -> int:
        return 2 * self.beats


def _check_unit(u: float) -> float:
    u = float(u)
    if not (0.0 <= u <= 1.0):
        raise ValueError(f"local parameter must be in [0, 1], got {u}")
    return u


def hermite_eval(seg: HermiteSegment, u: float) -> Point2:
    """Evaluate the cubic Hermite segment at local parameter u in [0, 1].

    The four basis weights interpolate positions and tangents so that the
    segment hits p0/p1 exactly at the ends with derivatives m0/m1.
    """
    u = _check_unit(u)
    h00 = (2.0 * u - 3.0) * u * u + 1.0
    h10 = ((u - 2.0) * u + 1.0) * u
    h01 = (3.0 - 2.0 * u) * u * u
    h11 = (u - 1.0) * u * u
    return Point2(
        h00 * seg.p0.x + h10 * seg.m0.x + h01 * seg.p1.x + h11 * seg.m1.x,
        h00 * seg.p0.y + h10 * seg.m0.y + h01 * seg.p1.y + h11 * seg.m1.y,
    )


def hermite_tangent(seg: HermiteSegment, u: float) -> Point2:
    """Derivative of :func:`hermite_eval` with respect to u.

    Basis derivatives are kept in factored form so the endpoint values are
    exactly m0 at u = 0 and m1 at u = 1.
    """
    u = _check_unit(u)
    d00 = 6.0 * u * (u - 1.0)
    d10 = (3.0 * u - 1.0) * (u - 1.0)
    d01 = 6.0 * u * (1.0 - u)
    d11 = (3.0 * u - 2.0) * u
    return Point2(
        d00 * seg.p0.x + d10 * seg.m0.x + d01 * seg.p1.x + d11 * seg.m1.x,
        d00 * seg.p0.y + d10 * seg.m0.y + d01 * seg.p1.y + d11 * seg.m1.y,
    )


def pattern_segment(pattern: Pattern, index: int) -> HermiteSegment:
    """Hermite segment from anchor ``index`` to the cyclically next anchor."""
    n = pattern.segment_count
    if not isinstance(index, int) or isinstance(index, bool) or not 0 <= index < n:
        raise ValueError(f"segment index must be in [0, {n - 1}], got {index!r}")
    a0 = pattern.anchors[index]
    a1 = pattern.anchors[(index + 1) % n]
    return HermiteSegment(p0=a0.position, p1=a1.position, m0=a0.tangent, m1=a1.tangent)


def _reduce(pattern: Pattern, s: float) -> tuple[int, float]:
    """Split a curve parameter into (segment index, local u), wrapping mod 2N."""
    s = float(s)
    if not math.isfinite(s):
        raise ValueError(f"curve parameter must be finite, got {s}")
    period = float(pattern.segment_count)
    s %= period
    if s >= period:  # fmod rounding can land exactly on the period
        s = 0.0
    i = int(s)
    return i, s - i


def curve_point(pattern: Pattern, s: float) -> Point2:
    """Point on the closed pattern curve at parameter s (any finite real)."""
    i, u = _reduce(pattern, s)
    return hermite_eval(pattern_segment(pattern, i), u)


def curve_tangent(pattern: Pattern, s: float) -> Point2:
    """Tangent d/ds of the pattern curve; horizontal at every integer s."""
    i, u = _reduce(pattern, s)
    return hermite_tangent(pattern_segment(pattern, i), u)
