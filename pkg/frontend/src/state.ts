/**
 * Editor state and history.
 *
 * The working document is always structurally valid: edits can move anchors
 * and change roundness but never add, remove, or reorder them, so the
 * alternation invariant cannot break.  Every edit snapshots the previous
 * document onto a bounded undo stack.
 */

import { cloneDocument, reflectDocument } from './document.js';
import type { PatternDocument } from './types.js';

export const UNDO_DEPTH = 50;

export interface EditorState {
  document: PatternDocument;
  selectedAnchor: number | null;
  bpm: number;
  beta: number;
  playing: boolean;
  trailSeconds: number;
}

export const createState = (document: PatternDocument): EditorState => ({
  document: cloneDocument(document),
  selectedAnchor: null,
  bpm: 120,
  beta: 0.6,
  playing: false,
  trailSeconds: 0.8,
});

export class EditorHistory {
  private undoStack: PatternDocument[] = [];
  private redoStack: PatternDocument[] = [];

  constructor(public state: EditorState) {}

  /** Number of undo steps currently available. */
  get depth(): number {
    return this.undoStack.length;
  }

  private snapshot(): void {
    this.undoStack.push(cloneDocument(this.state.document));
    if (this.undoStack.length > UNDO_DEPTH) this.undoStack.shift();
    this.redoStack = [];
  }

  /** Replace the whole document (load, defaults switch). Clears history. */
  loadDocument(document: PatternDocument): void {
    this.state.document = cloneDocument(document);
    this.state.selectedAnchor = null;
    this.undoStack = [];
    this.redoStack = [];
  }

  dragAnchor(index: number, x: number, y: number): void {
    const anchor = this.state.document.anchors[index];
    if (!anchor) throw new RangeError(`no anchor ${index}`);
    this.snapshot();
    anchor.x = x;
    anchor.y = y;
  }

  adjustRoundness(index: number, roundness: number): void {
    const anchor = this.state.document.anchors[index];
    if (!anchor) throw new RangeError(`no anchor ${index}`);
    this.snapshot();
    anchor.roundness = roundness;
  }

  toggleView(): void {
    this.snapshot();
    this.state.document = reflectDocument(this.state.document);
  }

  undo(): boolean {
    const previous = this.undoStack.pop();
    if (!previous) return false;
    this.redoStack.push(cloneDocument(this.state.document));
    this.state.document = previous;
    return true;
  }

  redo(): boolean {
    const next = this.redoStack.pop();
    if (!next) return false;
    this.undoStack.push(cloneDocument(this.state.document));
    this.state.document = next;
    return true;
  }
}

/**
 * Roundness handle geometry: the handle is a horizontal arm whose length
 * and direction encode |r| and sign.  The mapping is linear both ways so
 * reading the handle back yields the value that was set.
 */
export const ROUNDNESS_PIXELS_PER_UNIT = 40;

export const roundnessToHandleOffset = (roundness: number): number =>
  roundness * ROUNDNESS_PIXELS_PER_UNIT;

export const handleOffsetToRoundness = (offsetPx: number): number =>
  offsetPx / ROUNDNESS_PIXELS_PER_UNIT;
