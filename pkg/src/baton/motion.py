"""Baton kinematics: geometry traversed under a timing law.

The tip position at time t is the pattern curve evaluated at the phase
reached by the timing law, so the motion repeats every cycle.  Everything
here derives from that composition: velocities by the chain rule, sampled
trajectories, speed profiles, beat schedules, and trailing polylines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .geometry import Pattern, Point2, Role, curve_point, curve_tangent
from .timing import TimingLaw, phase, phase_rate

__all__ = [
    "MotionSample",
    "BeatEvent",
    "Trail",
    "SpeedPoint",
    "baton_position",
    "baton_velocity",
    "motion_sample",
    "sample_trajectory",
    "speed_profile",
    "beat_events",
    "trail",
]


@dataclass(frozen=True)
class MotionSample:
    """One instant of baton motion.

    ``s`` is the accumulated curve parameter, velocity is the curve tangent
    scaled by the phase rate, and spatial_speed its Euclidean norm.
    """

    t: float
    s: float
    position: Point2
    velocity: Point2
    phase_rate: float
    spatial_speed: float


@dataclass(frozen=True)
class BeatEvent:
    """A preparation or ictus instant.

    ``time`` is absolute seconds; ``curve_parameter`` is the within-cycle
    parameter of the anchor: 2k - 2 for preparation k, 2k - 1 for ictus k.
    The downbeat is ictus 1.
    """

    beat_index: int
    kind: Role
    time: float
    curve_parameter: float


@dataclass(frozen=True)
class Trail:
    """Recent history of the baton tip, ordered by increasing time."""

    points: tuple[Point2, ...]
    duration: float
    end_time: float


class SpeedPoint(NamedTuple):
    t: float
    phase_rate: float
    spatial_speed: float


def _check_config(pattern: Pattern, law: TimingLaw) -> None:
    if pattern.beats != law.tempo.beats:
        raise ValueError(
            f"pattern has {pattern.beats} beats but the timing law counts "
            f"{law.tempo.beats}; geometry and timing must share one beat count"
        )


def baton_position(pattern: Pattern, law: TimingLaw, t: float) -> Point2:
    """Baton tip position at time t seconds; periodic with the cycle."""
    _check_config(pattern, law)
    return curve_point(pattern, phase(law, t))


def baton_velocity(pattern: Pattern, law: TimingLaw, t: float) -> Point2:
    """Tip velocity at time t: curve tangent times the phase rate."""
    _check_config(pattern, law)
    s = phase(law, t)
    rate = phase_rate(law, t)
    tangent = curve_tangent(pattern, s)
    return Point2(tangent.x * rate, tangent.y * rate)


def motion_sample(pattern: Pattern, law: TimingLaw, t: float) -> MotionSample:
    """Full motion record (position, velocity, rates) at time t."""
    _check_config(pattern, law)
    s = phase(law, t)
    rate = phase_rate(law, t)
    tangent = curve_tangent(pattern, s)
    velocity = Point2(tangent.x * rate, tangent.y * rate)
    return MotionSample(
        t=t,
        s=s,
        position=curve_point(pattern, s),
        velocity=velocity,
        phase_rate=rate,
        spatial_speed=math.hypot(velocity.x, velocity.y),
    )


def _grid(t0: float, t1: float, count: int) -> list[float]:
    # Lerp form keeps both endpoints exact.
    last = count - 1
    return [(t0 * (last - i) + t1 * i) / last for i in range(count)]


def sample_trajectory(
    pattern: Pattern, law: TimingLaw, t0: float, t1: float, count: int
) -> list[MotionSample]:
    """Motion samples at ``count`` uniform times over [t0, t1], ends included."""
    _check_config(pattern, law)
    if not (math.isfinite(t0) and math.isfinite(t1)) or not 0.0 <= t0 < t1:
        raise ValueError(f"need 0 <= t0 < t1, got t0={t0}, t1={t1}")
    if not isinstance(count, int) or isinstance(count, bool) or count < 2:
        raise ValueError(f"count must be an integer >= 2, got {count!r}")
    return [motion_sample(pattern, law, t) for t in _grid(t0, t1, count)]


def speed_profile(
    pattern: Pattern, law: TimingLaw, samples_per_segment: int
) -> list[SpeedPoint]:
    """Phase rate and tip speed over one cycle.

    Samples 2N * samples_per_segment + 1 uniform times covering [0, T], so
    every anchor instant lands exactly on a sample.  Both rate columns are
    emitted: the phase rate is what the timing law prescribes, the spatial
    speed is what the eye sees (they differ because the parameterization is
    not arc length).
    """
    _check_config(pattern, law)
    if (
        not isinstance(samples_per_segment, int)
        or isinstance(samples_per_segment, bool)
        or samples_per_segment < 2
    ):
        raise ValueError(
            f"samples_per_segment must be an integer >= 2, got {samples_per_segment!r}"
        )
    count = 2 * pattern.beats * samples_per_segment + 1
    out = []
    for t in _grid(0.0, law.tempo.cycle_duration, count):
        sample = motion_sample(pattern, law, t)
        out.append(SpeedPoint(t=t, phase_rate=sample.phase_rate,
                              spatial_speed=sample.spatial_speed))
    return out


def beat_events(law: TimingLaw, t0: float, t1: float) -> list[BeatEvent]:
    """All preparation and ictus instants in the half-open window [t0, t1).

    Within cycle c, preparation k falls at (2N*c + 2k - 2) * segment_duration
    and ictus k one segment later.
    """
    if not (math.isfinite(t0) and math.isfinite(t1)) or not 0.0 <= t0 < t1:
        raise ValueError(f"need 0 <= t0 < t1, got t0={t0}, t1={t1}")
    n = 2 * law.tempo.beats
    delta = law.tempo.segment_duration
    events: list[BeatEvent] = []
    cycle = max(0, math.floor(t0 / law.tempo.cycle_duration))
    while True:
        for m in range(n):
            time = (cycle * n + m) * delta
            if time < t0:
                continue
            if time >= t1:
                return events
            events.append(
                BeatEvent(
                    beat_index=m // 2 + 1,
                    kind=Role.PREPARATION if m % 2 == 0 else Role.ICTUS,
                    time=time,
                    curve_parameter=float(m),
                )
            )
        cycle += 1


def trail(
    pattern: Pattern,
    law: TimingLaw,
    end_time: float,
    duration: float,
    count: int,
) -> Trail:
    """Tip positions over the window leading up to end_time.

    The window is [end_time - duration, end_time], clipped at t = 0; the last
    point is always the current tip position.
    """
    _check_config(pattern, law)
    if not math.isfinite(end_time) or end_time < 0.0:
        raise ValueError(f"end_time must be finite and >= 0, got {end_time}")
    if not math.isfinite(duration) or duration <= 0.0:
        raise ValueError(f"duration must be positive, got {duration}")
    if not isinstance(count, int) or isinstance(count, bool) or count < 2:
        raise ValueError(f"count must be an integer >= 2, got {count!r}")
    start = max(0.0, end_time - duration)
    if start == end_time:
        points = (baton_position(pattern, law, end_time),)
    else:
        points = tuple(
            baton_position(pattern, law, t) for t in _grid(start, end_time, count)
        )
    return Trail(points=points, duration=duration, end_time=end_time)
