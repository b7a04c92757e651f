/**
 * Canvas drawing for the editor and viewer.
 *
 * World coordinates come from the document and the server samples; a single
 * affine transform (uniform scale, centered, y flipped) maps them to the
 * canvas.  The fixed baton origin sits below the pattern at its horizontal
 * center.
 */

import type { CycleData } from './controller.js';
import type { FrameView } from './playback.js';
import { roundnessToHandleOffset } from './state.js';
import type { PatternDocument, Point, ValidationFinding } from './types.js';

export interface WorldTransform {
  scale: number;
  minX: number;
  minY: number;
  offsetX: number;
  offsetY: number;
  height: number;
}

export const worldTransform = (
  points: Point[],
  width: number,
  height: number,
  margin: number,
): WorldTransform => {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const minY = Math.min(...ys);
  const spanX = Math.max(Math.max(...xs) - minX, 1e-9);
  const spanY = Math.max(Math.max(...ys) - minY, 1e-9);
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  return {
    scale,
    minX,
    minY,
    offsetX: (width - scale * spanX) / 2,
    offsetY: (height - scale * spanY) / 2,
    height,
  };
};

export const toScreen = (view: WorldTransform, p: Point): Point => ({
  x: view.offsetX + (p.x - view.minX) * view.scale,
  y: view.height - (view.offsetY + (p.y - view.minY) * view.scale),
});

export const toWorld = (view: WorldTransform, p: Point): Point => ({
  x: view.minX + (p.x - view.offsetX) / view.scale,
  y: view.minY + (view.height - p.y - view.offsetY) / view.scale,
});

/** Fixed baton origin: below the pattern box, at its horizontal center. */
export const batonOrigin = (doc: PatternDocument): Point => {
  const xs = doc.anchors.map((a) => a.x);
  const ys = doc.anchors.map((a) => a.y);
  const spanY = Math.max(Math.max(...ys) - Math.min(...ys), 1e-9);
  return {
    x: (Math.min(...xs) + Math.max(...xs)) / 2,
    y: Math.min(...ys) - 0.6 * spanY,
  };
};

const polyline = (
  ctx: CanvasRenderingContext2D,
  view: WorldTransform,
  points: Point[],
): void => {
  ctx.beginPath();
  points.forEach((p, i) => {
    const q = toScreen(view, p);
    if (i === 0) ctx.moveTo(q.x, q.y);
    else ctx.lineTo(q.x, q.y);
  });
  ctx.stroke();
};

export const drawCurve = (
  ctx: CanvasRenderingContext2D,
  view: WorldTransform,
  data: CycleData,
): void => {
  ctx.strokeStyle = '#2a2a2a';
  ctx.lineWidth = 2;
  polyline(ctx, view, data.cycle.samples);
};

export const drawAnchors = (
  ctx: CanvasRenderingContext2D,
  view: WorldTransform,
  doc: PatternDocument,
  selected: number | null,
  findings: ValidationFinding[],
): void => {
  const flagged = new Set(
    findings.filter((f) => f.anchor_index !== null).map((f) => f.anchor_index),
  );
  doc.anchors.forEach((anchor, i) => {
    const p = toScreen(view, anchor);
    const handle = roundnessToHandleOffset(anchor.roundness);

    ctx.strokeStyle = '#7a7a7a';
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.moveTo(p.x, p.y);
    ctx.lineTo(p.x + handle, p.y);
    ctx.stroke();
    ctx.fillStyle = '#7a7a7a';
    ctx.beginPath();
    ctx.arc(p.x + handle, p.y, 3.5, 0, 2 * Math.PI);
    ctx.fill();

    const warn = flagged.has(i);
    ctx.beginPath();
    ctx.arc(p.x, p.y, i === selected ? 8 : 6, 0, 2 * Math.PI);
    if (anchor.role === 'prep') {
      ctx.fillStyle = 'white';
      ctx.strokeStyle = warn ? '#d62728' : '#1f77b4';
      ctx.lineWidth = 2;
      ctx.fill();
      ctx.stroke();
    } else {
      ctx.fillStyle = warn ? '#d62728' : '#1f77b4';
      ctx.fill();
    }
    ctx.fillStyle = '#444444';
    ctx.font = '11px sans-serif';
    ctx.fillText(`${anchor.role === 'prep' ? 'P' : 'I'}${anchor.beat}`, p.x + 9, p.y - 9);
  });
};

export const drawFrame = (
  ctx: CanvasRenderingContext2D,
  view: WorldTransform,
  frame: FrameView,
): void => {
  ctx.strokeStyle = '#9ecae1';
  ctx.lineWidth = 3;
  polyline(ctx, view, frame.trail);

  const origin = toScreen(view, frame.batonOrigin);
  const tip = toScreen(view, frame.tip);
  ctx.strokeStyle = '#8c564b';
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(origin.x, origin.y);
  ctx.lineTo(tip.x, tip.y);
  ctx.stroke();

  // The fat dot at the tip; it swaps color momentarily at the downbeat.
  ctx.fillStyle = frame.flash ? '#d62728' : '#1f77b4';
  ctx.beginPath();
  ctx.arc(tip.x, tip.y, 9, 0, 2 * Math.PI);
  ctx.fill();
};

export const drawSpeedPanel = (
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  profile: Array<{ t: number; phase_rate: number; spatial_speed: number }>,
  period: number,
  segments: number,
): void => {
  ctx.clearRect(0, 0, width, height);
  if (profile.length === 0) return;
  const margin = 8;
  const top = 1.05 * Math.max(...profile.map((p) => Math.max(p.phase_rate, p.spatial_speed)));
  const sx = (t: number) => margin + (t / period) * (width - 2 * margin);
  const sy = (v: number) => height - margin - (v / top) * (height - 2 * margin);

  ctx.strokeStyle = '#dddddd';
  for (let m = 0; m <= segments; m++) {
    const x = sx((m * period) / segments);
    ctx.beginPath();
    ctx.moveTo(x, margin);
    ctx.lineTo(x, height - margin);
    ctx.stroke();
  }
  const series: Array<['phase_rate' | 'spatial_speed', string]> = [
    ['phase_rate', '#1f77b4'],
    ['spatial_speed', '#ff7f0e'],
  ];
  for (const [key, color] of series) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    profile.forEach((p, i) => {
      if (i === 0) ctx.moveTo(sx(p.t), sy(p[key]));
      else ctx.lineTo(sx(p.t), sy(p[key]));
    });
    ctx.stroke();
  }
};
