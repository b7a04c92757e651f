"""
The quintic ease and the speed balance
======================================

Inside each half-beat segment, normalized time maps to curve progress
through a quintic ease with prescribed endpoint rates and zero endpoint
acceleration.  The speed balance picks those rates: 0 means uniform motion,
1 means the baton freezes at each preparation and snaps through each ictus.

This script tabulates the ease for a few balances and shows how the phase
map accumulates exactly one geometric cycle per temporal cycle.
"""

from baton import Tempo, TimingLaw, ease, ease_coefficients, phase

print("ease(a, b, tau) for balanced endpoint rate pairs\n")
header = "tau     " + "".join(f"balance={beta:<8}" for beta in (0.0, 0.5, 1.0))
print(header)
for k in range(11):
    tau = k / 10
    row = f"{tau:<8.2f}"
    for beta in (0.0, 0.5, 1.0):
        row += f"{ease(1 - beta, 1 + beta, tau):<16.6f}"
    print(row)

# The quintic term vanishes whenever the endpoint rates are balanced
# (a + b = 2), so each segment is effectively a quartic.
for beta in (0.0, 0.3, 0.7, 1.0):
    c = ease_coefficients(1 - beta, 1 + beta)
    print(f"\nbalance {beta}: c3={c.c3:+.3f} c4={c.c4:+.3f} c5={c.c5 + 0.0:+.3f}")

# Phase accumulation: each cycle advances the curve parameter by 2N.
law = TimingLaw(Tempo(beats=4, bpm=120.0), speed_balance=0.7)
period = law.tempo.cycle_duration
print(f"\n4 beats at 120 bpm: cycle duration {period} s")
for t in (0.0, 0.25, 1.0, 2.0, 2.25, 5.0):
    print(f"  phase({t:>5}) = {phase(law, t):.6f}")
