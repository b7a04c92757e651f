"""
Speed profiles over one cycle
=============================

Renders the speed plot of the 4-beat pattern for a range of speed balances.
Each plot shows two series: the phase rate prescribed by the timing law
(peaks at every ictus gridline, dips at every preparation) and the spatial
tip speed, which also depends on how the geometry stretches the curve
parameter.  At balance 0 the phase rate is flat; at balance 1 it touches
zero at every preparation.
"""

from pathlib import Path

from baton import (
    RenderOptions,
    Tempo,
    TimingLaw,
    default_pattern,
    render_speed_plot,
    speed_profile,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

pattern = default_pattern(4)
tempo = Tempo(beats=4, bpm=120.0)
opts = RenderOptions(width=800, height=400, show_labels=True)

for balance in (0.0, 0.3, 0.7, 1.0):
    law = TimingLaw(tempo, speed_balance=balance)
    path = out_dir / f"speed_balance_{balance}.svg"
    path.write_text(render_speed_plot(pattern, law, opts))

    profile = speed_profile(pattern, law, samples_per_segment=32)
    rates = [p.phase_rate for p in profile]
    print(f"balance {balance}: phase rate in [{min(rates):.3f}, {max(rates):.3f}] "
          f"per second, wrote {path.name}")
