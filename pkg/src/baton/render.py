"""Deterministic emitters: curve diagrams, speed plots, sample tables.

All output is plain text (SVG 1.1 or comma-separated columns) built with
shortest round-trippable number rendering, so identical inputs always
produce byte-identical documents and golden-file tests are meaningful.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

from .geometry import Pattern, Point2, Role, curve_point
from .motion import MotionSample, speed_profile
from .timing import TimingLaw

__all__ = [
    "RenderOptions",
    "Viewport",
    "curve_viewport",
    "render_curve",
    "render_speed_plot",
    "export_samples",
]

SAMPLE_COLUMNS = ("t", "s", "x", "y", "vx", "vy", "phase_rate", "spatial_speed")


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    height: int = 480
    margin: float = 40.0
    stroke_width: float = 2.0
    show_anchors: bool = True
    show_labels: bool = False
    samples_per_segment: int = 32

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"canvas must be positive, got {self.width}x{self.height}")
        if not math.isfinite(self.margin) or self.margin < 0:
            raise ValueError(f"margin must be >= 0, got {self.margin}")
        if not math.isfinite(self.stroke_width) or self.stroke_width <= 0:
            raise ValueError(f"stroke width must be positive, got {self.stroke_width}")
        if self.samples_per_segment < 8:
            raise ValueError(
                f"samples_per_segment must be >= 8, got {self.samples_per_segment}"
            )


class Viewport(NamedTuple):
    """Affine world-to-screen map: uniform scale, centering, y flipped."""

    scale: float
    world_min_x: float
    world_min_y: float
    offset_x: float
    offset_y: float
    height: float

    def to_screen(self, p: Point2) -> tuple[float, float]:
        return (
            self.offset_x + (p.x - self.world_min_x) * self.scale,
            self.height - (self.offset_y + (p.y - self.world_min_y) * self.scale),
        )


def _curve_samples(pattern: Pattern, samples_per_segment: int) -> list[Point2]:
    steps = pattern.segment_count * samples_per_segment
    return [curve_point(pattern, i / samples_per_segment) for i in range(steps + 1)]


def curve_viewport(pattern: Pattern, opts: RenderOptions) -> Viewport:
    """Viewport fitting the sampled curve and anchors into the canvas."""
    pts = _curve_samples(pattern, opts.samples_per_segment)
    pts += [a.position for a in pattern.anchors]
    min_x = min(p.x for p in pts)
    max_x = max(p.x for p in pts)
    min_y = min(p.y for p in pts)
    max_y = max(p.y for p in pts)
    span_x = max(max_x - min_x, 1e-9)
    span_y = max(max_y - min_y, 1e-9)
    scale = min(
        (opts.width - 2.0 * opts.margin) / span_x,
        (opts.height - 2.0 * opts.margin) / span_y,
    )
    return Viewport(
        scale=scale,
        world_min_x=min_x,
        world_min_y=min_y,
        offset_x=(opts.width - scale * span_x) / 2.0,
        offset_y=(opts.height - scale * span_y) / 2.0,
        height=float(opts.height),
    )


def _svg_open(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _points_attr(points: list[tuple[float, float]]) -> str:
    return " ".join(f"{x!r},{y!r}" for x, y in points)


def render_curve(pattern: Pattern, opts: RenderOptions = RenderOptions()) -> str:
    """SVG diagram of the closed pattern curve with anchor markers.

    Preparations are open circles, icti filled discs; with labels enabled
    each anchor is tagged P1, I1, ... in cyclic order.
    """
    view = curve_viewport(pattern, opts)
    screen = [view.to_screen(p) for p in _curve_samples(pattern, opts.samples_per_segment)]
    lines = _svg_open(opts.width, opts.height)
    lines.append(
        f'<polyline fill="none" stroke="#222222" stroke-width="{opts.stroke_width!r}" '
        f'points="{_points_attr(screen)}"/>'
    )
    if opts.show_anchors:
        for i, anchor in enumerate(pattern.anchors):
            cx, cy = view.to_screen(anchor.position)
            if anchor.role is Role.PREPARATION:
                lines.append(
                    f'<circle cx="{cx!r}" cy="{cy!r}" r="5" fill="white" '
                    f'stroke="#222222" stroke-width="1.5"/>'
                )
            else:
                lines.append(f'<circle cx="{cx!r}" cy="{cy!r}" r="5" fill="#222222"/>')
            if opts.show_labels:
                tag = ("P" if anchor.role is Role.PREPARATION else "I") + str(i // 2 + 1)
                lines.append(
                    f'<text x="{cx + 8.0!r}" y="{cy - 8.0!r}" '
                    f'font-family="sans-serif" font-size="12">{tag}</text>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_speed_plot(
    pattern: Pattern, law: TimingLaw, opts: RenderOptions = RenderOptions()
) -> str:
    """SVG plot of phase rate and tip speed over one cycle.

    Vertical gridlines mark the segment boundaries: solid for icti (where
    the phase rate peaks), dashed for preparations.
    """
    profile = speed_profile(pattern, law, opts.samples_per_segment)
    period = law.tempo.cycle_duration
    top = 1.05 * max(max(p.phase_rate for p in profile),
                     max(p.spatial_speed for p in profile))
    plot_w = opts.width - 2.0 * opts.margin
    plot_h = opts.height - 2.0 * opts.margin

    def to_screen(t: float, value: float) -> tuple[float, float]:
        return (
            opts.margin + (t / period) * plot_w,
            opts.height - opts.margin - (value / top) * plot_h,
        )

    lines = _svg_open(opts.width, opts.height)
    n = pattern.segment_count
    for m in range(n + 1):
        x, _ = to_screen(m * law.tempo.segment_duration, 0.0)
        ictus = m % 2 == 1
        dash = "" if ictus else ' stroke-dasharray="4 4"'
        color = "#888888" if ictus else "#cccccc"
        lines.append(
            f'<line x1="{x!r}" y1="{opts.margin!r}" x2="{x!r}" '
            f'y2="{opts.height - opts.margin!r}" stroke="{color}"{dash}/>'
        )
        if opts.show_labels and m < n:
            tag = ("P" if m % 2 == 0 else "I") + str(m // 2 + 1)
            lines.append(
                f'<text x="{x + 3.0!r}" y="{opts.height - opts.margin + 14.0!r}" '
                f'font-family="sans-serif" font-size="11">{tag}</text>'
            )
    lines.append(
        f'<line x1="{opts.margin!r}" y1="{opts.height - opts.margin!r}" '
        f'x2="{opts.width - opts.margin!r}" y2="{opts.height - opts.margin!r}" '
        f'stroke="#222222"/>'
    )
    lines.append(
        f'<line x1="{opts.margin!r}" y1="{opts.margin!r}" x2="{opts.margin!r}" '
        f'y2="{opts.height - opts.margin!r}" stroke="#222222"/>'
    )
    rate_pts = [to_screen(p.t, p.phase_rate) for p in profile]
    speed_pts = [to_screen(p.t, p.spatial_speed) for p in profile]
    lines.append(
        f'<polyline fill="none" stroke="#1f77b4" '
        f'stroke-width="{opts.stroke_width!r}" points="{_points_attr(rate_pts)}"/>'
    )
    lines.append(
        f'<polyline fill="none" stroke="#ff7f0e" '
        f'stroke-width="{opts.stroke_width!r}" points="{_points_attr(speed_pts)}"/>'
    )
    if opts.show_labels:
        lines.append(
            f'<text x="{opts.margin + 6.0!r}" y="{opts.margin + 14.0!r}" '
            f'font-family="sans-serif" font-size="12" fill="#1f77b4">phase rate</text>'
        )
        lines.append(
            f'<text x="{opts.margin + 6.0!r}" y="{opts.margin + 30.0!r}" '
            f'font-family="sans-serif" font-size="12" fill="#ff7f0e">tip speed</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _sample_row(sample: MotionSample) -> tuple[float, ...]:
    return (
        sample.t,
        sample.s,
        sample.position.x,
        sample.position.y,
        sample.velocity.x,
        sample.velocity.y,
        sample.phase_rate,
        sample.spatial_speed,
    )


def export_samples(samples: list[MotionSample], format: str = "table") -> str:
    """Motion samples as comma-separated columns or a JSON array.

    Numbers are written at full round-trip precision, so re-parsing the
    output reproduces the inputs exactly.
    """
    if not samples:
        raise ValueError("no samples to export")
    if format == "table":
        lines = [",".join(SAMPLE_COLUMNS)]
        for sample in samples:
            lines.append(",".join(f"{v!r}" for v in _sample_row(sample)))
        return "\n".join(lines) + "\n"
    if format == "structured":
        rows = [dict(zip(SAMPLE_COLUMNS, _sample_row(s))) for s in samples]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"format must be 'table' or 'structured', got {format!r}")
