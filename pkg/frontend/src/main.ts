/**
 * Editor entry point: DOM wiring and the animation loop.
 *
 * Drag anchors to reshape the pattern, drag the small horizontal handle at
 * each anchor to tune roundness, and use the controls for tempo, speed
 * balance, view mirroring, playback, and undo/redo.  The curve on screen is
 * always the service's answer, refetched after every edit.
 */

import { ApiClient } from './api.js';
import { EditorController } from './controller.js';
import { batonOrigin, drawAnchors, drawCurve, drawFrame, drawSpeedPanel, toScreen, toWorld, worldTransform } from './render.js';
import { PlaybackClock, frameView } from './playback.js';
import { createState, handleOffsetToRoundness, roundnessToHandleOffset } from './state.js';
import type { Point } from './types.js';

const SERVICE_URL =
  new URLSearchParams(window.location.search).get('service') ?? 'http://127.0.0.1:8000';

const canvas = document.getElementById('editor') as HTMLCanvasElement;
const speedCanvas = document.getElementById('speed') as HTMLCanvasElement;
const ctx = canvas.getContext('2d')!;
const speedCtx = speedCanvas.getContext('2d')!;

const statusLine = document.getElementById('status') as HTMLElement;
const findingsBox = document.getElementById('findings') as HTMLElement;
const beatsSelect = document.getElementById('beats') as HTMLSelectElement;
const bpmSlider = document.getElementById('bpm') as HTMLInputElement;
const bpmLabel = document.getElementById('bpm-label') as HTMLElement;
const betaSlider = document.getElementById('beta') as HTMLInputElement;
const betaLabel = document.getElementById('beta-label') as HTMLElement;
const playButton = document.getElementById('play') as HTMLButtonElement;
const viewButton = document.getElementById('view') as HTMLButtonElement;
const undoButton = document.getElementById('undo') as HTMLButtonElement;
const redoButton = document.getElementById('redo') as HTMLButtonElement;
const saveButton = document.getElementById('save') as HTMLButtonElement;
const loadInput = document.getElementById('load') as HTMLInputElement;

const api = new ApiClient(SERVICE_URL);
const controller = new EditorController(api, createState({
  format_version: 1,
  beats: 4,
  view: 'conductor',
  anchors: [],
}));
const clock = new PlaybackClock();

let speedProfile: Array<{ t: number; phase_rate: number; spatial_speed: number }> = [];

const period = () => (60 * controller.state.document.beats) / controller.state.bpm;

const currentTransform = () => {
  const data = controller.cycleData;
  const pts: Point[] = data ? [...data.cycle.samples] : [];
  controller.state.document.anchors.forEach((a) => pts.push(a));
  pts.push(batonOrigin(controller.state.document));
  return worldTransform(pts, canvas.width, canvas.height, 48);
};

const redraw = (wallSeconds: number) => {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const data = controller.cycleData;
  const doc = controller.state.document;
  if (!data) {
    statusLine.textContent = controller.lastError ?? 'loading...';
    return;
  }
  const view = currentTransform();
  drawCurve(ctx, view, data);
  drawAnchors(ctx, view, doc, controller.state.selectedAnchor, data.findings);
  const t = clock.timeAt(wallSeconds);
  drawFrame(ctx, view, frameView(
    data.cycle, data.downbeats, t, controller.state.trailSeconds, batonOrigin(doc),
  ));
  statusLine.textContent =
    `${doc.name ?? 'pattern'} | ${doc.view} view | ` +
    `${controller.state.bpm} bpm | balance ${controller.state.beta.toFixed(2)} | ` +
    `t = ${(t % period()).toFixed(2)} s`;
};

const renderFindings = () => {
  const data = controller.cycleData;
  if (controller.lastError) {
    findingsBox.textContent = `service: ${controller.lastError}`;
    return;
  }
  if (!data || data.findings.length === 0) {
    findingsBox.textContent = 'no findings';
    return;
  }
  findingsBox.innerHTML = data.findings
    .map((f) => `<span class="${f.severity}">${f.severity}: ${f.message}</span>`)
    .join('<br>');
};

const refreshSpeedPanel = async () => {
  try {
    const body = await api.speedProfile(
      controller.state.document, controller.state.bpm, controller.state.beta, 16,
    );
    speedProfile = body.profile;
  } catch {
    speedProfile = [];
  }
  drawSpeedPanel(
    speedCtx, speedCanvas.width, speedCanvas.height,
    speedProfile, period(), 2 * controller.state.document.beats,
  );
};

controller.onChange(() => {
  renderFindings();
  void refreshSpeedPanel();
});

// ---- pointer interaction: drag anchors and roundness handles ----

type DragTarget =
  | { kind: 'anchor'; index: number }
  | { kind: 'handle'; index: number };

let dragging: DragTarget | null = null;

const hitTest = (screen: Point): DragTarget | null => {
  const view = currentTransform();
  const doc = controller.state.document;
  for (let i = 0; i < doc.anchors.length; i++) {
    const p = toScreen(view, doc.anchors[i]);
    const handleX = p.x + roundnessToHandleOffset(doc.anchors[i].roundness);
    if (Math.hypot(screen.x - handleX, screen.y - p.y) < 7) {
      return { kind: 'handle', index: i };
    }
    if (Math.hypot(screen.x - p.x, screen.y - p.y) < 10) {
      return { kind: 'anchor', index: i };
    }
  }
  return null;
};

const canvasPoint = (event: PointerEvent): Point => {
  const rect = canvas.getBoundingClientRect();
  return { x: event.clientX - rect.left, y: event.clientY - rect.top };
};

canvas.addEventListener('pointerdown', (event) => {
  const hit = hitTest(canvasPoint(event));
  dragging = hit;
  controller.state.selectedAnchor = hit ? hit.index : null;
  canvas.setPointerCapture(event.pointerId);
});

canvas.addEventListener('pointermove', (event) => {
  if (!dragging) return;
  const view = currentTransform();
  const doc = controller.state.document;
  const screen = canvasPoint(event);
  if (dragging.kind === 'anchor') {
    const world = toWorld(view, screen);
    void controller.dragAnchor(dragging.index, world.x, world.y);
  } else {
    const p = toScreen(view, doc.anchors[dragging.index]);
    void controller.adjustRoundness(
      dragging.index, handleOffsetToRoundness(screen.x - p.x),
    );
  }
});

canvas.addEventListener('pointerup', () => {
  dragging = null;
});

// ---- controls ----

beatsSelect.addEventListener('change', () => {
  void controller.loadDefault(parseInt(beatsSelect.value, 10));
});

bpmSlider.addEventListener('input', () => {
  bpmLabel.textContent = bpmSlider.value;
  void controller.setBpm(parseFloat(bpmSlider.value));
});

betaSlider.addEventListener('input', () => {
  betaLabel.textContent = parseFloat(betaSlider.value).toFixed(2);
  void controller.setBeta(parseFloat(betaSlider.value));
});

playButton.addEventListener('click', () => {
  const now = performance.now() / 1000;
  if (clock.playing) {
    clock.pause(now);
    controller.state.playing = false;
    playButton.textContent = 'play';
  } else {
    clock.start(now);
    controller.state.playing = true;
    playButton.textContent = 'pause';
  }
});

viewButton.addEventListener('click', () => {
  void controller.toggleView();
});

undoButton.addEventListener('click', () => {
  void controller.undo();
});

redoButton.addEventListener('click', () => {
  void controller.redo();
});

saveButton.addEventListener('click', () => {
  const blob = new Blob(
    [JSON.stringify(controller.state.document, null, 2) + '\n'],
    { type: 'application/json' },
  );
  const link = document.createElement('a');
  link.href = URL.createObjectURL(blob);
  link.download = `pattern_${controller.state.document.beats}beat.json`;
  link.click();
  URL.revokeObjectURL(link.href);
});

loadInput.addEventListener('change', async () => {
  const file = loadInput.files?.[0];
  if (!file) return;
  try {
    const doc = JSON.parse(await file.text());
    await controller.loadDocument(doc);
  } catch (error) {
    findingsBox.textContent = `load failed: ${error}`;
  }
  loadInput.value = '';
});

// ---- animation loop ----

const loop = (wallMillis: number) => {
  redraw(wallMillis / 1000);
  requestAnimationFrame(loop);
};

void controller.loadDefault(4).then(() => {
  requestAnimationFrame(loop);
});
