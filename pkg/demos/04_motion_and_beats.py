"""
Baton motion, beat schedule, and trail
======================================

Composes the 3-beat pattern with a timing law and samples the resulting tip
motion.  The beat schedule lists every preparation and ictus instant in a
window; the trail is the recent path of the tip, the thing a player would
draw behind the moving dot.
"""

from pathlib import Path

from baton import (
    Tempo,
    TimingLaw,
    beat_events,
    default_pattern,
    export_samples,
    sample_trajectory,
    trail,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

pattern = default_pattern(3)
law = TimingLaw(Tempo(beats=3, bpm=90.0), speed_balance=0.6)
period = law.tempo.cycle_duration

print(f"3 beats at 90 bpm: cycle {period} s, segment {law.tempo.segment_duration} s\n")

print("beat schedule over two cycles:")
for event in beat_events(law, 0.0, 2 * period):
    print(f"  {event.time:6.3f} s  {event.kind.value:<5}  beat {event.beat_index}"
          + ("  <- downbeat" if event.kind.value == "ictus" and event.beat_index == 1 else ""))

# Sample one cycle and export both formats.
samples = sample_trajectory(pattern, law, 0.0, period, count=121)
(out_dir / "motion_3beat.csv").write_text(export_samples(samples, "table"))
(out_dir / "motion_3beat.json").write_text(export_samples(samples, "structured"))
print(f"\nwrote {out_dir / 'motion_3beat.csv'} and .json ({len(samples)} samples)")

# A half-second trail ending just after the second downbeat.
t = trail(pattern, law, end_time=period + 0.1, duration=0.5, count=48)
print(f"trail: {len(t.points)} points ending at "
      f"({t.points[-1].x:.3f}, {t.points[-1].y:.3f})")
