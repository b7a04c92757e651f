/**
 * Playback clock, sample interpolation, and frame assembly.
 *
 * The viewer animates by linear interpolation between samples prefetched
 * from the service (one cycle, uniform in time); no curve or timing math
 * happens here beyond that lerp.  The downbeat flash turns on at the first
 * frame on or after each beat-1 ictus and stays on for a short window.
 */

import type { BeatEvent, MotionSample, Point } from './types.js';

export const FLASH_WINDOW_SECONDS = 0.12;

/** Wall-clock driven playback time with pause/resume continuity. */
export class PlaybackClock {
  private accumulated = 0;
  private anchoredAt: number | null = null;

  get playing(): boolean {
    return this.anchoredAt !== null;
  }

  start(wallTime: number): void {
    if (this.anchoredAt === null) this.anchoredAt = wallTime;
  }

  pause(wallTime: number): void {
    if (this.anchoredAt !== null) {
      this.accumulated += wallTime - this.anchoredAt;
      this.anchoredAt = null;
    }
  }

  reset(): void {
    this.accumulated = 0;
    this.anchoredAt = null;
  }

  /** Seconds of playback elapsed at the given wall time. */
  timeAt(wallTime: number): number {
    if (this.anchoredAt === null) return this.accumulated;
    return this.accumulated + (wallTime - this.anchoredAt);
  }
}

/**
 * One prefetched cycle of motion samples, interpolated cyclically.
 * Samples must be uniform in time from t = 0 to t = period inclusive.
 */
export class CycleSamples {
  readonly period: number;

  constructor(readonly samples: MotionSample[]) {
    if (samples.length < 2) throw new RangeError('need at least two samples');
    this.period = samples[samples.length - 1].t;
    if (!(this.period > 0)) throw new RangeError('samples must span a cycle');
  }

  positionAt(time: number): Point {
    const cyclic = ((time % this.period) + this.period) % this.period;
    const step = this.period / (this.samples.length - 1);
    const slot = Math.min(Math.floor(cyclic / step), this.samples.length - 2);
    const frac = cyclic / step - slot;
    const a = this.samples[slot];
    const b = this.samples[slot + 1];
    return { x: a.x + (b.x - a.x) * frac, y: a.y + (b.y - a.y) * frac };
  }

  /** Trail polyline: positions over [time - duration, time], oldest first. */
  trailAt(time: number, duration: number, count: number): Point[] {
    const start = Math.max(0, time - duration);
    if (start === time) return [this.positionAt(time)];
    const points: Point[] = [];
    for (let i = 0; i < count; i++) {
      const t = start + ((time - start) * i) / (count - 1);
      points.push(this.positionAt(t));
    }
    return points;
  }
}

/** Downbeat instants (beat-1 icti) within one cycle, from server events. */
export const downbeatTimes = (events: BeatEvent[]): number[] =>
  events
    .filter((e) => e.kind === 'ictus' && e.beat_index === 1)
    .map((e) => e.time);

/**
 * Whether the downbeat flash is active at playback time `time`, given the
 * within-cycle downbeat instants.  Active on [downbeat, downbeat + window).
 */
export const flashActive = (
  time: number,
  downbeats: number[],
  period: number,
  window: number = FLASH_WINDOW_SECONDS,
): boolean => {
  const cyclic = ((time % period) + period) % period;
  return downbeats.some((d) => {
    const since = (((cyclic - d) % period) + period) % period;
    return since >= 0 && since < window;
  });
};

export interface FrameView {
  tip: Point;
  trail: Point[];
  batonOrigin: Point;
  flash: boolean;
}

/**
 * Assemble everything one animation frame needs.  The baton is drawn as a
 * line from a fixed origin below the pattern to the tip.
 */
export const frameView = (
  cycle: CycleSamples,
  downbeats: number[],
  time: number,
  trailSeconds: number,
  batonOrigin: Point,
  trailPoints = 64,
): FrameView => ({
  tip: cycle.positionAt(time),
  trail: cycle.trailAt(time, trailSeconds, trailPoints),
  batonOrigin,
  flash: flashActive(time, downbeats, cycle.period),
});
