/**
 * Glue between the editor state, the service, and the viewer.
 *
 * Any parameter or geometry edit triggers a refetch of one cycle of motion
 * samples (64 per segment) plus validation findings.  Responses are tagged
 * with a monotonic request id and stale ones are dropped, so rapid edits
 * never paint an outdated curve.
 */

import { ApiClient } from './api.js';
import { EditorHistory, type EditorState } from './state.js';
import { CycleSamples, downbeatTimes } from './playback.js';
import type { PatternDocument, ValidationFinding } from './types.js';

export const SAMPLES_PER_SEGMENT = 64;

export interface CycleData {
  cycle: CycleSamples;
  downbeats: number[];
  findings: ValidationFinding[];
}

export class EditorController {
  readonly history: EditorHistory;
  cycleData: CycleData | null = null;
  lastError: string | null = null;
  private appliedRequestId = 0;
  private listeners: Array<() => void> = [];

  constructor(
    private readonly api: ApiClient,
    readonly state: EditorState,
  ) {
    this.history = new EditorHistory(state);
  }

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  private period(): number {
    return (60 * this.state.document.beats) / this.state.bpm;
  }

  /** Fetch one cycle of samples and the validation report for the edit. */
  async refetch(): Promise<void> {
    const requestId = this.api.allocateRequestId();
    const doc = this.state.document;
    const count = 2 * doc.beats * SAMPLES_PER_SEGMENT + 1;
    try {
      const [report, body] = await Promise.all([
        this.api.validate(doc),
        this.api.sample({
          pattern: doc,
          bpm: this.state.bpm,
          beta: this.state.beta,
          t0: 0,
          t1: this.period(),
          count,
        }),
      ]);
      if (requestId < this.appliedRequestId) return; // stale response
      this.appliedRequestId = requestId;
      this.cycleData = {
        cycle: new CycleSamples(body.samples),
        downbeats: downbeatTimes(body.beat_events),
        findings: report.findings,
      };
      this.lastError = null;
    } catch (error) {
      if (requestId < this.appliedRequestId) return;
      this.appliedRequestId = requestId;
      // An invalid pattern still returns findings via the 422 detail; any
      // failure pauses playback with a visible notice instead of guessing.
      this.cycleData = null;
      this.lastError = error instanceof Error ? error.message : String(error);
      this.state.playing = false;
    }
    this.notify();
  }

  async loadDefault(beats: number): Promise<void> {
    const doc = await this.api.defaultPattern(beats);
    this.history.loadDocument(doc);
    await this.refetch();
  }

  loadDocument(doc: PatternDocument): Promise<void> {
    this.history.loadDocument(doc);
    return this.refetch();
  }

  dragAnchor(index: number, x: number, y: number): Promise<void> {
    this.history.dragAnchor(index, x, y);
    return this.refetch();
  }

  adjustRoundness(index: number, roundness: number): Promise<void> {
    this.history.adjustRoundness(index, roundness);
    return this.refetch();
  }

  toggleView(): Promise<void> {
    this.history.toggleView();
    return this.refetch();
  }

  setBpm(bpm: number): Promise<void> {
    this.state.bpm = bpm;
    return this.refetch();
  }

  setBeta(beta: number): Promise<void> {
    this.state.beta = beta;
    return this.refetch();
  }

  undo(): Promise<void> | undefined {
    return this.history.undo() ? this.refetch() : undefined;
  }

  redo(): Promise<void> | undefined {
    return this.history.redo() ? this.refetch() : undefined;
  }
}
