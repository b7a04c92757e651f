import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baton import (
    AnchorPoint,
    Pattern,
    PatternFormatError,
    Point2,
    Role,
    Severity,
    View,
    curve_point,
    default_document,
    default_pattern,
    parse_document,
    parse_pattern,
    reflect_pattern,
    serialize_document,
    serialize_pattern,
    validate_pattern,
)

from conftest import make_random_pattern


def doc_dict(beats=1, **overrides):
    base = {
        "format_version": 1,
        "beats": beats,
        "view": "conductor",
        "anchors": [
            {"role": "prep" if i % 2 == 0 else "ictus", "beat": i // 2 + 1,
             "x": float(i), "y": 2.0 if i % 2 == 0 else 0.0, "roundness": 1.0}
            for i in range(2 * beats)
        ],
    }
    base.update(overrides)
    return base


class TestParse:
    def test_round_trip_of_default(self):
        for beats in (2, 3, 4, 6):
            pattern = default_pattern(beats)
            assert parse_pattern(serialize_pattern(pattern)) == pattern

    def test_serialization_is_canonical_after_one_pass(self):
        text = json.dumps(doc_dict(beats=2))
        once = serialize_document(parse_document(text))
        twice = serialize_document(parse_document(once))
        assert once == twice

    def test_wrong_anchor_count_message(self):
        bad = doc_dict(beats=4)
        del bad["anchors"][3]
        with pytest.raises(PatternFormatError, match="anchor count 7 != 2N = 8"):
            parse_pattern(json.dumps(bad))

    def test_consecutive_equal_roles_rejected(self):
        bad = doc_dict(beats=2)
        bad["anchors"][2]["role"] = "ictus"
        with pytest.raises(PatternFormatError, match="roles must alternate"):
            parse_pattern(json.dumps(bad))

    def test_unknown_format_version(self):
        with pytest.raises(PatternFormatError, match="format_version"):
            parse_pattern(json.dumps(doc_dict(format_version=2)))

    def test_malformed_json(self):
        with pytest.raises(PatternFormatError, match="malformed"):
            parse_pattern('{"format_version": 1,')

    def test_non_finite_numbers_rejected(self):
        text = json.dumps(doc_dict()).replace("2.0", "NaN")
        with pytest.raises(PatternFormatError, match="non-finite"):
            parse_pattern(text)

    def test_missing_required_field(self):
        bad = doc_dict()
        del bad["view"]
        with pytest.raises(PatternFormatError, match="view"):
            parse_pattern(json.dumps(bad))

    def test_rotated_anchor_order_is_normalized(self):
        rotated = doc_dict(beats=3)
        rotated["anchors"] = rotated["anchors"][2:] + rotated["anchors"][:2]
        pattern = parse_pattern(json.dumps(rotated))
        assert pattern.anchors[0].role is Role.PREPARATION
        assert pattern.anchors[0].position.x == 0.0
        assert pattern == parse_pattern(json.dumps(doc_dict(beats=3)))

    def test_duplicate_beats_rejected(self):
        bad = doc_dict(beats=2)
        bad["anchors"][2]["beat"] = 1
        bad["anchors"][3]["beat"] = 1
        with pytest.raises(PatternFormatError, match="cycle"):
            parse_pattern(json.dumps(bad))

    def test_strict_rejects_unknown_fields(self):
        with pytest.raises(PatternFormatError, match="unknown field"):
            parse_document(json.dumps(doc_dict(color="red")))
        bad = doc_dict()
        bad["anchors"][0]["weight"] = 2
        with pytest.raises(PatternFormatError, match="unknown field"):
            parse_document(json.dumps(bad))

    def test_lenient_preserves_unknown_fields(self):
        doc = parse_document(json.dumps(doc_dict(color="red")), strict=False)
        assert doc.extras == {"color": "red"}
        again = parse_document(serialize_document(doc), strict=False)
        assert again.extras == {"color": "red"}

    def test_metadata_round_trip(self):
        doc = parse_document(json.dumps(doc_dict(name="n", description="d")))
        assert doc.name == "n"
        assert doc.description == "d"
        assert parse_document(serialize_document(doc)) == doc


class TestSerialize:
    def test_deterministic(self):
        pattern = default_pattern(4)
        assert serialize_pattern(pattern) == serialize_pattern(pattern)

    def test_two_beat_default_has_four_anchors(self):
        payload = json.loads(serialize_pattern(default_pattern(2)))
        assert payload["beats"] == 2
        assert len(payload["anchors"]) == 4

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_round_trip_random_patterns(self, seed):
        import random

        pattern = make_random_pattern(random.Random(seed))
        assert parse_pattern(serialize_pattern(pattern)) == pattern


class TestReflect:
    def test_involution(self):
        for beats in (2, 3, 4, 6):
            pattern = default_pattern(beats)
            assert reflect_pattern(reflect_pattern(pattern)) == pattern

    def test_anchor_mapping(self):
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(2.0, 1.0), 0.8),
            AnchorPoint(Role.ICTUS, Point2(0.5, 0.0), -0.25),
        )
        mirrored = reflect_pattern(Pattern(beats=1, anchors=anchors))
        assert mirrored.anchors[0].position == Point2(-2.0, 1.0)
        assert mirrored.anchors[0].roundness == -0.8
        assert mirrored.anchors[1].roundness == 0.25
        assert mirrored.view is View.PERFORMER

    def test_curve_commutes_with_mirror(self, rng):
        pattern = make_random_pattern(rng, beats=4)
        mirrored = reflect_pattern(pattern)
        for _ in range(500):
            s = rng.uniform(0, 8)
            a = curve_point(pattern, s)
            b = curve_point(mirrored, s)
            assert abs(b.x - (-a.x)) <= 1e-12
            assert abs(b.y - a.y) <= 1e-12


class TestValidate:
    def test_defaults_have_no_errors(self):
        for beats in (2, 3, 4, 6):
            report = validate_pattern(default_pattern(beats))
            assert report.ok
            assert report.errors == ()

    def test_four_beat_cusp_is_a_warning(self):
        report = validate_pattern(default_pattern(4))
        assert any(f.code == "cusp" for f in report.warnings)
        assert all(f.severity is Severity.WARNING for f in report.findings)

    def test_inverted_heights_are_an_error(self):
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(0.0, 0.0), 1.0),
            AnchorPoint(Role.ICTUS, Point2(1.0, 2.0), 1.0),
        )
        report = validate_pattern(Pattern(beats=1, anchors=anchors))
        assert not report.ok
        assert any(f.code == "extremum_order" for f in report.errors)
        assert any(f.code == "extremum_neighborhood" for f in report.errors)

    def test_equal_heights_are_an_error(self):
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(0.0, 1.0), 1.0),
            AnchorPoint(Role.ICTUS, Point2(1.0, 1.0), 1.0),
        )
        report = validate_pattern(Pattern(beats=1, anchors=anchors))
        assert any(f.code == "extremum_order" for f in report.errors)

    def test_coincident_anchors_are_an_error(self):
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(0.0, 1.0), 1.0),
            AnchorPoint(Role.ICTUS, Point2(0.0, 1.0), 1.0),
        )
        report = validate_pattern(Pattern(beats=1, anchors=anchors))
        assert any(f.code == "coincident_anchors" for f in report.errors)

    def test_findings_carry_anchor_indices(self):
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(0.0, 0.0), 1.0),
            AnchorPoint(Role.ICTUS, Point2(1.0, 2.0), 1.0),
        )
        report = validate_pattern(Pattern(beats=1, anchors=anchors))
        assert {f.anchor_index for f in report.errors} <= {0, 1}

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            validate_pattern(default_pattern(2), tolerance=0.0)


class TestDefaults:
    def test_structure(self):
        pattern = default_pattern(4)
        assert len(pattern.anchors) == 8
        roles = [a.role for a in pattern.anchors]
        assert roles[::2] == [Role.PREPARATION] * 4
        assert roles[1::2] == [Role.ICTUS] * 4

    def test_parameter_count_is_six_per_beat(self):
        for beats in (2, 3, 4, 6):
            pattern = default_pattern(beats)
            free_reals = sum(3 for _ in pattern.anchors)  # x, y, roundness
            assert free_reals == 6 * beats

    def test_four_beat_downbeat_preparation_is_highest(self):
        pattern = default_pattern(4)
        top = pattern.anchors[0].position.y
        assert all(a.position.y <= top for a in pattern.anchors[1:])

    def test_four_beat_starts_with_a_cusp(self):
        assert default_pattern(4).anchors[0].roundness == 0.0

    def test_unsupported_beat_count(self):
        with pytest.raises(ValueError, match="supported"):
            default_pattern(5)

    def test_documents_carry_names(self):
        for beats in (2, 3, 4, 6):
            assert default_document(beats).name
