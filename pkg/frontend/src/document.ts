/**
 * Pure document operations.
 *
 * These are data edits only (positions, roundness, the mirror map); all
 * curve and timing math stays on the service side.
 */

import type { PatternDocument } from './types.js';

export const cloneDocument = (doc: PatternDocument): PatternDocument =>
  JSON.parse(JSON.stringify(doc)) as PatternDocument;

export const sameDocument = (a: PatternDocument, b: PatternDocument): boolean =>
  JSON.stringify(a) === JSON.stringify(b);

/**
 * Mirror between conductor and performer views: (x, y, r) -> (-x, y, -r)
 * with the view flag toggled.  Negating roundness along with x preserves
 * the curve shape, so applying this twice restores the exact document.
 */
export const reflectDocument = (doc: PatternDocument): PatternDocument => ({
  ...cloneDocument(doc),
  view: doc.view === 'conductor' ? 'performer' : 'conductor',
  anchors: doc.anchors.map((anchor) => ({
    ...anchor,
    x: anchor.x === 0 ? 0 : -anchor.x,
    roundness: anchor.roundness === 0 ? 0 : -anchor.roundness,
  })),
});

export const documentBounds = (doc: PatternDocument) => {
  const xs = doc.anchors.map((a) => a.x);
  const ys = doc.anchors.map((a) => a.y);
  return {
    minX: Math.min(...xs),
    maxX: Math.max(...xs),
    minY: Math.min(...ys),
    maxY: Math.max(...ys),
  };
};
