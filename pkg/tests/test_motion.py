import math

import pytest

from baton import (
    AnchorPoint,
    Pattern,
    Point2,
    Role,
    Tempo,
    TimingLaw,
    baton_position,
    baton_velocity,
    beat_events,
    curve_tangent,
    default_pattern,
    motion_sample,
    phase_rate,
    sample_trajectory,
    speed_profile,
    trail,
)

LAW = TimingLaw(Tempo(beats=4, bpm=120.0), speed_balance=0.7)
PATTERN = default_pattern(4)
DELTA = LAW.tempo.segment_duration


def test_beats_mismatch_is_rejected():
    with pytest.raises(ValueError, match="beats"):
        baton_position(default_pattern(3), LAW, 0.0)


class TestBatonPosition:
    def test_anchor_instants(self):
        assert baton_position(PATTERN, LAW, 0.0) == PATTERN.anchors[0].position
        p = baton_position(PATTERN, LAW, DELTA)
        ictus = PATTERN.anchors[1].position
        assert p.x == pytest.approx(ictus.x, abs=1e-12)
        assert p.y == pytest.approx(ictus.y, abs=1e-12)

    def test_periodic(self, rng):
        period = LAW.tempo.cycle_duration
        for _ in range(200):
            t = rng.uniform(0, 10 * period)
            a = baton_position(PATTERN, LAW, t)
            b = baton_position(PATTERN, LAW, t + period)
            assert abs(a.x - b.x) <= 1e-9
            assert abs(a.y - b.y) <= 1e-9

    def test_hits_every_anchor_in_time(self):
        for m in range(17):
            p = baton_position(PATTERN, LAW, m * DELTA)
            anchor = PATTERN.anchors[m % 8].position
            assert abs(p.x - anchor.x) <= 1e-9
            assert abs(p.y - anchor.y) <= 1e-9


class TestBatonVelocity:
    def test_still_at_preparations_under_full_balance(self):
        law = TimingLaw(LAW.tempo, speed_balance=1.0)
        for k in range(4):
            v = baton_velocity(PATTERN, law, 2 * k * DELTA)
            assert math.hypot(v.x, v.y) <= 1e-9

    def test_matches_finite_difference(self):
        h = 1e-6
        for t in (0.1, 0.42, 0.9, 1.3, 1.86):
            a = baton_position(PATTERN, LAW, t - h)
            b = baton_position(PATTERN, LAW, t + h)
            v = baton_velocity(PATTERN, LAW, t)
            scale = max(1.0, math.hypot(v.x, v.y))
            assert abs(v.x - (b.x - a.x) / (2 * h)) <= 1e-5 * scale
            assert abs(v.y - (b.y - a.y) / (2 * h)) <= 1e-5 * scale

    def test_vertical_velocity_changes_sign_across_ictus(self):
        # Down into the beat, up out of it.
        anchors = (
            AnchorPoint(Role.PREPARATION, Point2(0.0, 2.0), 1.0),
            AnchorPoint(Role.ICTUS, Point2(0.5, 0.0), 1.0),
        )
        pattern = Pattern(beats=1, anchors=anchors)
        law = TimingLaw(Tempo(beats=1, bpm=60.0), speed_balance=0.0)
        delta = law.tempo.segment_duration
        before = baton_velocity(pattern, law, delta * 0.9)
        after = baton_velocity(pattern, law, delta * 1.1)
        assert before.y < 0 < after.y

    def test_zero_vertical_velocity_at_beat_instants(self):
        for m in range(9):
            v = baton_velocity(PATTERN, LAW, m * DELTA)
            assert abs(v.y) <= 1e-9


class TestSampleTrajectory:
    def test_endpoints_of_one_period_coincide(self):
        period = LAW.tempo.cycle_duration
        samples = sample_trajectory(PATTERN, LAW, 0.0, period, 2)
        assert len(samples) == 2
        assert samples[0].position.x == pytest.approx(samples[1].position.x, abs=1e-9)
        assert samples[0].position.y == pytest.approx(samples[1].position.y, abs=1e-9)

    def test_uniform_spacing_includes_endpoints(self):
        period = LAW.tempo.cycle_duration
        samples = sample_trajectory(PATTERN, LAW, 0.0, period, 5)
        assert [s.t for s in samples] == [0.0, period / 4, period / 2, 3 * period / 4, period]

    def test_samples_are_internally_consistent(self):
        samples = sample_trajectory(PATTERN, LAW, 0.0, 2.0, 101)
        for s in samples:
            tangent = curve_tangent(PATTERN, s.s)
            assert abs(s.velocity.x - tangent.x * s.phase_rate) <= 1e-9
            assert abs(s.velocity.y - tangent.y * s.phase_rate) <= 1e-9
            assert s.spatial_speed == math.hypot(s.velocity.x, s.velocity.y)

    @pytest.mark.parametrize("t0,t1,count", [(0.0, 0.0, 5), (1.0, 0.5, 5), (-1.0, 1.0, 5), (0.0, 1.0, 1)])
    def test_rejects_bad_ranges(self, t0, t1, count):
        with pytest.raises(ValueError):
            sample_trajectory(PATTERN, LAW, t0, t1, count)


class TestSpeedProfile:
    def test_uniform_balance_is_flat(self):
        law = TimingLaw(LAW.tempo, speed_balance=0.0)
        profile = speed_profile(PATTERN, law, 8)
        expect = 8.0 / law.tempo.cycle_duration
        assert len(profile) == 8 * 8 + 1
        for point in profile:
            assert point.phase_rate == pytest.approx(expect, abs=1e-12)

    def test_extremes_line_up_with_beats(self):
        spp = 16
        profile = speed_profile(PATTERN, LAW, spp)
        rates = [p.phase_rate for p in profile]
        hi = max(rates)
        lo = min(rates)
        assert hi == pytest.approx(1.7 / DELTA, abs=1e-9)
        assert lo == pytest.approx(0.3 / DELTA, abs=1e-9)
        for m in range(9):
            expected = (1.7 if m % 2 == 1 else 0.3) / DELTA
            assert rates[m * spp] == pytest.approx(expected, abs=1e-9)

    def test_full_balance_reaches_zero(self):
        law = TimingLaw(LAW.tempo, speed_balance=1.0)
        profile = speed_profile(PATTERN, law, 8)
        assert min(p.phase_rate for p in profile) == 0.0

    def test_phase_rate_column_matches_scalar_api(self):
        profile = speed_profile(PATTERN, LAW, 8)
        for point in profile[:20]:
            assert point.phase_rate == phase_rate(LAW, point.t)


class TestBeatEvents:
    def test_full_cycle_has_two_events_per_beat(self):
        events = beat_events(LAW, 0.0, LAW.tempo.cycle_duration)
        assert len(events) == 8
        icti = [e for e in events if e.kind is Role.ICTUS]
        assert [e.time for e in icti] == [0.25, 0.75, 1.25, 1.75]
        assert [e.beat_index for e in icti] == [1, 2, 3, 4]
        assert [e.curve_parameter for e in icti] == [1.0, 3.0, 5.0, 7.0]

    def test_first_segment_window_holds_only_the_opening_preparation(self):
        events = beat_events(LAW, 0.0, DELTA)
        assert len(events) == 1
        assert events[0].kind is Role.PREPARATION
        assert events[0].beat_index == 1
        assert events[0].time == 0.0

    def test_any_period_long_window_has_2n_events(self, rng):
        period = LAW.tempo.cycle_duration
        for _ in range(25):
            t0 = rng.uniform(0, 3 * period)
            events = beat_events(LAW, t0, t0 + period)
            assert len(events) == 8

    def test_window_is_half_open(self):
        events = beat_events(LAW, 0.0, 2.0)
        assert len(events) == 8
        assert all(e.time < 2.0 for e in events)

    def test_rejects_bad_window(self):
        with pytest.raises(ValueError):
            beat_events(LAW, 1.0, 1.0)
        with pytest.raises(ValueError):
            beat_events(LAW, -1.0, 1.0)


class TestTrail:
    def test_covers_whole_loop_when_long_enough(self):
        period = LAW.tempo.cycle_duration
        t = trail(PATTERN, LAW, end_time=period, duration=period, count=257)
        xs = [p.x for p in t.points]
        ys = [p.y for p in t.points]
        # spans the pattern's bounding box, so the loop was traced
        assert max(xs) - min(xs) > 2.0
        assert max(ys) - min(ys) > 2.0

    def test_degenerate_at_time_zero(self):
        t = trail(PATTERN, LAW, end_time=0.0, duration=1.0, count=16)
        assert t.points == (PATTERN.anchors[0].position,)

    def test_last_point_is_current_position(self):
        end = 1.234
        t = trail(PATTERN, LAW, end_time=end, duration=0.5, count=33)
        tip = baton_position(PATTERN, LAW, end)
        assert t.points[-1].x == pytest.approx(tip.x, abs=1e-12)
        assert t.points[-1].y == pytest.approx(tip.y, abs=1e-12)

    def test_clips_at_start_of_time(self):
        t = trail(PATTERN, LAW, end_time=0.1, duration=5.0, count=11)
        sample = motion_sample(PATTERN, LAW, 0.0)
        assert t.points[0] == sample.position
