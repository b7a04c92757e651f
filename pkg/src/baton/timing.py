"""Quintic ease timing and the phase map from seconds to curve parameter.

A cycle of an N-beat pattern takes ``T = 60 * N / bpm`` seconds and is cut
into 2N equal time segments, alternating preparation-to-ictus (speeding up)
and ictus-to-preparation (slowing down).  Inside one segment, normalized
time tau in [0, 1] maps to local curve progress through

    ease(a, b, tau) = a*tau + c3*tau^3 + c4*tau^4 + c5*tau^5

whose coefficients are fixed by the endpoint conditions ease(0) = 0,
ease(1) = 1, ease'(0) = a, ease'(1) = b and zero second derivative at both
ends.  A single speed balance in [0, 1] picks the endpoint rates: 0 gives
uniform motion, 1 brings the gesture to a standstill at each preparation
and makes it fastest at each ictus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Tempo",
    "TimingLaw",
    "EaseCoefficients",
    "ease_coefficients",
    "ease",
    "ease_rate",
    "segment_rates",
    "phase",
    "phase_rate",
]


@dataclass(frozen=True)
class Tempo:
    """Cycle clock for an N-beat pattern at a metronome mark in BPM."""

    beats: int
    bpm: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "bpm", float(self.bpm))
        if not isinstance(self.beats, int) or isinstance(self.beats, bool):
            raise ValueError(f"beats must be an integer, got {self.beats!r}")
        if self.beats < 1:
            raise ValueError(f"beats must be >= 1, got {self.beats}")
        if not (math.isfinite(self.bpm) and self.bpm > 0.0):
            raise ValueError(f"bpm must be a positive finite number, got {self.bpm}")

    @property
    def cycle_duration(self) -> float:
        """Seconds per full cycle: one beat per metronome tick, N beats."""
        return 60.0 * self.beats / self.bpm

    @property
    def segment_duration(self) -> float:
        """Seconds per half-beat segment (2N segments per cycle)."""
        return self.cycle_duration / (2 * self.beats)


@dataclass(frozen=True)
class TimingLaw:
    """Tempo plus the speed balance that shapes motion within each segment."""

    tempo: Tempo
    speed_balance: float = 0.6

    def __post_init__(self) -> None:
        object.__setattr__(self, "speed_balance", float(self.speed_balance))
        if not (
            math.isfinite(self.speed_balance) and 0.0 <= self.speed_balance <= 1.0
        ):
            raise ValueError(
                f"speed balance must be in [0, 1], got {self.speed_balance}"
            )

    @property
    def rate_min(self) -> float:
        """Phase rate at preparations, in segment units: 1 - balance."""
        return 1.0 - self.speed_balance

    @property
    def rate_max(self) -> float:
        """Phase rate at icti, in segment units: 1 + balance."""
        return 1.0 + self.speed_balance


@dataclass(frozen=True)
class EaseCoefficients:
    """Quintic coefficients for prescribed endpoint rates a and b."""

    a: float
    b: float
    c3: float
    c4: float
    c5: float


def ease_coefficients(a: float, b: float) -> EaseCoefficients:
    """Coefficients of the quintic ease with endpoint rates a and b."""
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"endpoint rates must be finite, got a={a}, b={b}")
    c3 = 10.0 - 6.0 * a - 4.0 * b
    c4 = 8.0 * a + 7.0 * b - 15.0
    # Grouped so that balanced rate pairs (a + b = 2) cancel to exactly zero.
    c5 = -3.0 * ((a - 1.0) + (b - 1.0))
    return EaseCoefficients(a=a, b=b, c3=c3, c4=c4, c5=c5)


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not (0.0 <= tau <= 1.0):
        raise ValueError(f"normalized time must be in [0, 1], got {tau}")
    return tau


def ease(a: float, b: float, tau: float) -> float:
    """Segment progress at normalized time tau in [0, 1]."""
    tau = _check_tau(tau)
    c = ease_coefficients(a, b)
    return tau * (c.a + tau * tau * (c.c3 + tau * (c.c4 + tau * c.c5)))


def ease_rate(a: float, b: float, tau: float) -> float:
    """Derivative of :func:`ease` with respect to tau; a at 0, b at 1."""
    tau = _check_tau(tau)
    c = ease_coefficients(a, b)
    return c.a + tau * tau * (3.0 * c.c3 + tau * (4.0 * c.c4 + tau * 5.0 * c.c5))


def segment_rates(law: TimingLaw, segment_index: int) -> tuple[float, float]:
    """Endpoint rates (a, b) for one time segment.

    Even indices run preparation to ictus and speed up; odd indices run ictus
    to preparation and slow down.  Uses 0-based indexing, so the first
    segment of the cycle (index 0) is the one leaving the downbeat
    preparation.
    """
    n = 2 * law.tempo.beats
    if (
        not isinstance(segment_index, int)
        or isinstance(segment_index, bool)
        or not 0 <= segment_index < n
    ):
        raise ValueError(f"segment index must be in [0, {n - 1}], got {segment_index!r}")
    if segment_index % 2 == 0:
        return law.rate_min, law.rate_max
    return law.rate_max, law.rate_min


def _locate(law: TimingLaw, t: float) -> tuple[int, int, float]:
    """Split absolute time into (cycle index, segment index, local tau)."""
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise ValueError(f"time must be finite and >= 0, got {t}")
    period = law.tempo.cycle_duration
    delta = law.tempo.segment_duration
    n = 2 * law.tempo.beats
    cycle = math.floor(t / period)
    t_in = t - cycle * period
    if t_in < 0.0:  # t/period rounded up to the next integer
        cycle -= 1
        t_in = t - cycle * period
    x = t_in / delta
    j = math.floor(x)
    if j >= n:
        j = n - 1
    tau = x - j
    if tau < 0.0:
        tau = 0.0
    elif tau > 1.0:
        tau = 1.0
    return cycle, j, tau


def phase(law: TimingLaw, t: float) -> float:
    """Curve parameter reached at time t seconds (t >= 0).

    Each cycle advances the parameter by exactly 2N, so the map accumulates:
    phase(t + T) = phase(t) + 2N.  Within a cycle, each segment eases from
    its integer start value to the next.
    """
    cycle, j, tau = _locate(law, t)
    a, b = segment_rates(law, j)
    return 2 * law.tempo.beats * cycle + j + ease(a, b, tau)


def phase_rate(law: TimingLaw, t: float) -> float:
    """Time derivative of :func:`phase`, in curve-parameter units per second.

    Equals (1 + balance) / segment_duration at every ictus instant and
    (1 - balance) / segment_duration at every preparation instant.
    """
    _, j, tau = _locate(law, t)
    a, b = segment_rates(law, j)
    return ease_rate(a, b, tau) / law.tempo.segment_duration
