"""Conducting beat patterns as geometry plus timing.

The model keeps the two concerns separate: a closed piecewise cubic Hermite
curve describes *where* the baton tip travels (anchors with horizontal
tangents at the tops and bottoms of the gesture), and a quintic ease timing
law describes *when* it gets there (one speed-balance knob between uniform
motion and full stop-and-snap emphasis).  Composing the two gives the
periodic tip motion, from which samples, speed profiles, trails, and beat
schedules are derived.
"""

from .geometry import (
    AnchorPoint,
    HermiteSegment,
    Pattern,
    Point2,
    Role,
    View,
    curve_point,
    curve_tangent,
    hermite_eval,
    hermite_tangent,
    pattern_segment,
)
from .motion import (
    BeatEvent,
    MotionSample,
    SpeedPoint,
    Trail,
    baton_position,
    baton_velocity,
    beat_events,
    motion_sample,
    sample_trajectory,
    speed_profile,
    trail,
)
from .patterns import (
    PatternDocument,
    PatternFormatError,
    Severity,
    ValidationFinding,
    ValidationReport,
    default_document,
    default_pattern,
    parse_document,
    parse_pattern,
    reflect_pattern,
    serialize_document,
    serialize_pattern,
    validate_pattern,
)
from .render import (
    RenderOptions,
    Viewport,
    curve_viewport,
    export_samples,
    render_curve,
    render_speed_plot,
)
from .timing import (
    EaseCoefficients,
    Tempo,
    TimingLaw,
    ease,
    ease_coefficients,
    ease_rate,
    phase,
    phase_rate,
    segment_rates,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # geometry
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
    # timing
    "Tempo",
    "TimingLaw",
    "EaseCoefficients",
    "ease_coefficients",
    "ease",
    "ease_rate",
    "segment_rates",
    "phase",
    "phase_rate",
    # motion
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
    # patterns
    "PatternDocument",
    "PatternFormatError",
    "Severity",
    "ValidationFinding",
    "ValidationReport",
    "parse_document",
    "parse_pattern",
    "serialize_document",
    "serialize_pattern",
    "validate_pattern",
    "reflect_pattern",
    "default_document",
    "default_pattern",
    # render
    "RenderOptions",
    "Viewport",
    "curve_viewport",
    "render_curve",
    "render_speed_plot",
    "export_samples",
]
