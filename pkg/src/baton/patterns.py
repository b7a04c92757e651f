"""Pattern interchange documents, validation, reflection, built-in defaults.

Interchange format
------------------
Patterns persist as JSON documents::

    {
      "format_version": 1,
      "name": "Four-beat",              // optional
      "description": "...",             // optional
      "beats": 4,
      "view": "conductor",              // or "performer"
      "anchors": [
        {"role": "prep", "beat": 1, "x": 0.0, "y": 3.0, "roundness": 0.0},
        {"role": "ictus", "beat": 1, "x": 0.0, "y": 0.0, "roundness": 1.6},
        ...                             // 2N anchors in cyclic order
      ]
    }

Anchors may start at any point of the cycle; parsing rotates them into the
canonical order beginning with the beat-1 preparation.  Serialization is
canonical and deterministic: fixed field order, anchors starting at the
beat-1 preparation, shortest round-trippable number rendering, two-space
indentation, trailing newline.  In strict mode unknown fields are rejected;
in lenient mode they are preserved and re-emitted after the known fields.

The built-in 2-, 3-, 4- and 6-beat patterns are shipped as documents in
``baton/data/``.  Their coordinates are editorial: chosen to match the
shapes taught in conducting pedagogy, not measured from anything.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Any, Mapping

from .geometry import AnchorPoint, Pattern, Point2, Role, View, curve_point

__all__ = [
    "FORMAT_VERSION",
    "SUPPORTED_DEFAULT_BEATS",
    "PatternFormatError",
    "PatternDocument",
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
]

FORMAT_VERSION = 1
SUPPORTED_DEFAULT_BEATS = (2, 3, 4, 6)

_TOP_KEYS = ("format_version", "name", "description", "beats", "view", "anchors")
_ANCHOR_KEYS = ("role", "beat", "x", "y", "roundness")


class PatternFormatError(ValueError):
    """A pattern document could not be read."""


@dataclass(frozen=True)
class PatternDocument:
    """A pattern plus the persistence-only metadata around it."""

    pattern: Pattern
    name: str | None = None
    description: str | None = None
    format_version: int = FORMAT_VERSION
    extras: Mapping[str, Any] = field(default_factory=dict)


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ValidationFinding:
    severity: Severity
    code: str
    message: str
    anchor_index: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    """Findings from checking a pattern against the model's conventions."""

    findings: tuple[ValidationFinding, ...]

    @property
    def errors(self) -> tuple[ValidationFinding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.ERROR)

    @property
    def warnings(self) -> tuple[ValidationFinding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.WARNING)

    @property
    def ok(self) -> bool:
        """True when the pattern is accepted (warnings do not block)."""
        return not self.errors


def _reject_constant(token: str) -> float:
    raise PatternFormatError(f"non-finite number {token!r} is not allowed")


def _require_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise PatternFormatError(f"{where} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise PatternFormatError(f"{where} must be finite, got {value}")
    return value


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise PatternFormatError(f"{where} must be an integer, got {value!r}")
    return value


def parse_document(
    source: str | bytes | Mapping[str, Any], strict: bool = True
) -> PatternDocument:
    """Read a pattern document from JSON text, bytes, or a parsed mapping.

    Raises :class:`PatternFormatError` with a precise diagnostic for any
    structural violation: malformed JSON, wrong anchor count, roles that do
    not alternate, beats out of cyclic order, unknown format version, and
    (in strict mode) unknown fields.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8", errors="replace")
    if isinstance(source, str):
        try:
            raw = json.loads(source, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise PatternFormatError(f"malformed document: {exc}") from exc
    else:
        raw = source
    if not isinstance(raw, Mapping):
        raise PatternFormatError(
            f"document must be a JSON object, got {type(raw).__name__}"
        )

    extras: dict[str, Any] = {}
    for key in raw:
        if key not in _TOP_KEYS:
            if strict:
                raise PatternFormatError(f"unknown field {key!r}")
            extras[key] = raw[key]
    for key in ("format_version", "beats", "view", "anchors"):
        if key not in raw:
            raise PatternFormatError(f"missing required field {key!r}")

    version = _require_int(raw["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise PatternFormatError(
            f"unknown format_version {version}; this reader understands "
            f"version {FORMAT_VERSION}"
        )
    beats = _require_int(raw["beats"], "beats")
    if beats < 1:
        raise PatternFormatError(f"beats must be >= 1, got {beats}")
    view_raw = raw["view"]
    try:
        view = View(view_raw)
    except ValueError:
        raise PatternFormatError(
            f"view must be 'conductor' or 'performer', got {view_raw!r}"
        ) from None

    name = raw.get("name")
    description = raw.get("description")
    for label, value in (("name", name), ("description", description)):
        if value is not None and not isinstance(value, str):
            raise PatternFormatError(f"{label} must be a string, got {value!r}")

    anchors_raw = raw["anchors"]
    if not isinstance(anchors_raw, list):
        raise PatternFormatError("anchors must be an array")
    if len(anchors_raw) != 2 * beats:
        raise PatternFormatError(
            f"anchor count {len(anchors_raw)} != 2N = {2 * beats}"
        )

    parsed: list[tuple[Role, int, float, float, float]] = []
    for i, entry in enumerate(anchors_raw):
        where = f"anchors[{i}]"
        if not isinstance(entry, Mapping):
            raise PatternFormatError(f"{where} must be an object")
        if strict:
            for key in entry:
                if key not in _ANCHOR_KEYS:
                    raise PatternFormatError(f"{where}: unknown field {key!r}")
        for key in _ANCHOR_KEYS:
            if key not in entry:
                raise PatternFormatError(f"{where}: missing field {key!r}")
        role_raw = entry["role"]
        try:
            role = Role(role_raw)
        except ValueError:
            raise PatternFormatError(
                f"{where}: role must be 'prep' or 'ictus', got {role_raw!r}"
            ) from None
        beat = _require_int(entry["beat"], f"{where}.beat")
        if not 1 <= beat <= beats:
            raise PatternFormatError(
                f"{where}: beat must be in [1, {beats}], got {beat}"
            )
        parsed.append(
            (
                role,
                beat,
                _require_number(entry["x"], f"{where}.x"),
                _require_number(entry["y"], f"{where}.y"),
                _require_number(entry["roundness"], f"{where}.roundness"),
            )
        )

    count = len(parsed)
    for i in range(count):
        if parsed[i][0] is parsed[(i + 1) % count][0]:
            raise PatternFormatError(
                f"anchors[{i}] and anchors[{(i + 1) % count}] are both "
                f"{parsed[i][0].value!r}; roles must alternate"
            )
    try:
        start = next(
            i for i, (role, beat, *_) in enumerate(parsed)
            if role is Role.PREPARATION and beat == 1
        )
    except StopIteration:
        raise PatternFormatError(
            "no anchor with role 'prep' and beat 1 to start the cycle"
        ) from None
    rotated = parsed[start:] + parsed[:start]
    for i, (role, beat, *_) in enumerate(rotated):
        expected_role = Role.PREPARATION if i % 2 == 0 else Role.ICTUS
        expected_beat = i // 2 + 1
        if role is not expected_role or beat != expected_beat:
            original = (start + i) % count
            raise PatternFormatError(
                f"anchors[{original}]: expected {expected_role.value!r} of beat "
                f"{expected_beat} at this point of the cycle, got "
                f"{role.value!r} of beat {beat}"
            )

    pattern = Pattern(
        beats=beats,
        anchors=tuple(
            AnchorPoint(role=role, position=Point2(x, y), roundness=roundness)
            for role, _, x, y, roundness in rotated
        ),
        view=view,
    )
    return PatternDocument(
        pattern=pattern,
        name=name,
        description=description,
        format_version=version,
        extras=extras,
    )


def parse_pattern(source: str | bytes | Mapping[str, Any]) -> Pattern:
    """Parse a document and return just the pattern."""
    return parse_document(source).pattern


def serialize_document(doc: PatternDocument) -> str:
    """Render a document in canonical form (deterministic bytes)."""
    obj: dict[str, Any] = {"format_version": doc.format_version}
    if doc.name is not None:
        obj["name"] = doc.name
    if doc.description is not None:
        obj["description"] = doc.description
    pattern = doc.pattern
    obj["beats"] = pattern.beats
    obj["view"] = pattern.view.value
    obj["anchors"] = [
        {
            "role": anchor.role.value,
            "beat": i // 2 + 1,
            "x": anchor.position.x,
            "y": anchor.position.y,
            "roundness": anchor.roundness,
        }
        for i, anchor in enumerate(pattern.anchors)
    ]
    for key in sorted(doc.extras):
        obj[key] = doc.extras[key]
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def serialize_pattern(pattern: Pattern) -> str:
    """Render a bare pattern (no metadata) in canonical form."""
    return serialize_document(PatternDocument(pattern=pattern))


def reflect_pattern(pattern: Pattern) -> Pattern:
    """Mirror between conductor and performer views.

    Maps every anchor (x, y, r) to (-x, y, -r) and toggles the view flag.
    Negating the roundness along with x keeps the curve shape: the mirrored
    curve is the pointwise mirror image of the original.  Applying the
    reflection twice returns the original pattern.
    """
    return Pattern(
        beats=pattern.beats,
        anchors=tuple(
            AnchorPoint(
                role=a.role,
                position=Point2(-a.position.x, a.position.y),
                roundness=-a.roundness,
            )
            for a in pattern.anchors
        ),
        view=pattern.view.toggled(),
    )


_NEIGHBORHOOD_OFFSETS = (0.0125, 0.025, 0.0375, 0.05)


def validate_pattern(pattern: Pattern, tolerance: float = 1e-9) -> ValidationReport:
    """Check a structurally valid pattern against the model's conventions.

    Errors:
      * ``coincident_anchors``: cyclically adjacent anchors share a position.
      * ``extremum_order``: a preparation that does not sit strictly above
        both neighboring icti (or an ictus not strictly below its
        preparations).  Equal heights are rejected too: a flat beat has no
        visible extremum.
      * ``extremum_neighborhood``: the sampled curve near an anchor crosses
        the anchor height in the wrong direction.

    Warnings:
      * ``cusp``: zero roundness, legal but worth knowing about.
      * ``extremum_neighborhood``: the neighborhood of a cusp anchor is too
        flat for the sampled check to be conclusive.
    """
    if not (math.isfinite(tolerance) and tolerance > 0.0):
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    findings: list[ValidationFinding] = []
    anchors = pattern.anchors
    n = len(anchors)

    for i, anchor in enumerate(anchors):
        nxt = anchors[(i + 1) % n]
        if (
            abs(anchor.position.x - nxt.position.x) <= tolerance
            and abs(anchor.position.y - nxt.position.y) <= tolerance
        ):
            findings.append(
                ValidationFinding(
                    severity=Severity.ERROR,
                    code="coincident_anchors",
                    message=(
                        f"anchors[{i}] and anchors[{(i + 1) % n}] coincide; "
                        f"the segment between them is degenerate"
                    ),
                    anchor_index=i,
                )
            )

    for i, anchor in enumerate(anchors):
        prev = anchors[(i - 1) % n]
        nxt = anchors[(i + 1) % n]
        y = anchor.position.y
        label = f"{anchor.role.value} {i // 2 + 1}"
        if anchor.role is Role.PREPARATION:
            for other, rel in ((prev, "preceding"), (nxt, "following")):
                if not y > other.position.y + tolerance:
                    findings.append(
                        ValidationFinding(
                            severity=Severity.ERROR,
                            code="extremum_order",
                            message=(
                                f"{label} (y={y}) must sit strictly above the "
                                f"{rel} ictus (y={other.position.y})"
                            ),
                            anchor_index=i,
                        )
                    )
        else:
            for other, rel in ((prev, "preceding"), (nxt, "following")):
                if not y < other.position.y - tolerance:
                    findings.append(
                        ValidationFinding(
                            severity=Severity.ERROR,
                            code="extremum_order",
                            message=(
                                f"{label} (y={y}) must sit strictly below the "
                                f"{rel} preparation (y={other.position.y})"
                            ),
                            anchor_index=i,
                        )
                    )

    for i, anchor in enumerate(anchors):
        y = anchor.position.y
        label = f"{anchor.role.value} {i // 2 + 1}"
        worst = 0.0
        wrong = False
        for offset in _NEIGHBORHOOD_OFFSETS:
            for s in (i - offset, i + offset):
                dy = curve_point(pattern, s).y - y
                worst = max(worst, abs(dy))
                if anchor.role is Role.PREPARATION and dy > tolerance:
                    wrong = True
                elif anchor.role is Role.ICTUS and dy < -tolerance:
                    wrong = True
        if wrong:
            findings.append(
                ValidationFinding(
                    severity=Severity.ERROR,
                    code="extremum_neighborhood",
                    message=(
                        f"curve near {label} crosses its height in the wrong "
                        f"direction; the anchor is not a local "
                        f"{'maximum' if anchor.role is Role.PREPARATION else 'minimum'}"
                    ),
                    anchor_index=i,
                )
            )
        elif anchor.roundness == 0.0 and worst <= tolerance:
            findings.append(
                ValidationFinding(
                    severity=Severity.WARNING,
                    code="extremum_neighborhood",
                    message=(
                        f"neighborhood of {label} is flat at a cusp; the "
                        f"sampled extremum check is inconclusive"
                    ),
                    anchor_index=i,
                )
            )

    for i, anchor in enumerate(anchors):
        if anchor.roundness == 0.0:
            findings.append(
                ValidationFinding(
                    severity=Severity.WARNING,
                    code="cusp",
                    message=(
                        f"{anchor.role.value} {i // 2 + 1} has zero roundness "
                        f"and forms a cusp"
                    ),
                    anchor_index=i,
                )
            )

    return ValidationReport(findings=tuple(findings))


@lru_cache(maxsize=None)
def default_document(beats: int) -> PatternDocument:
    """Built-in pattern document for a supported beat count (2, 3, 4, 6)."""
    if beats not in SUPPORTED_DEFAULT_BEATS:
        raise ValueError(
            f"no built-in pattern for {beats} beats; "
            f"supported counts are {', '.join(map(str, SUPPORTED_DEFAULT_BEATS))}"
        )
    text = (
        resources.files("baton").joinpath(f"data/default_{beats}.json").read_text("utf-8")
    )
    return parse_document(text)


def default_pattern(beats: int) -> Pattern:
    """Built-in pattern for a supported beat count (2, 3, 4, 6)."""
    return default_document(beats).pattern
