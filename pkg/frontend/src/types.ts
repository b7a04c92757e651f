/** Wire types shared with the playback service. */

export type AnchorRole = 'prep' | 'ictus';
export type ViewSide = 'conductor' | 'performer';

export interface AnchorEntry {
  role: AnchorRole;
  beat: number;
  x: number;
  y: number;
  roundness: number;
}

export interface PatternDocument {
  format_version: number;
  name?: string;
  description?: string;
  beats: number;
  view: ViewSide;
  anchors: AnchorEntry[];
}

export interface MotionSample {
  t: number;
  s: number;
  x: number;
  y: number;
  vx: number;
  vy: number;
  phase_rate: number;
  spatial_speed: number;
}

export interface BeatEvent {
  beat_index: number;
  kind: AnchorRole;
  time: number;
  curve_parameter: number;
}

export interface SampleResponse {
  samples: MotionSample[];
  beat_events: BeatEvent[];
}

export interface SpeedPoint {
  t: number;
  phase_rate: number;
  spatial_speed: number;
}

export interface SpeedProfileResponse {
  profile: SpeedPoint[];
}

export interface ValidationFinding {
  severity: 'error' | 'warning';
  code: string;
  message: string;
  anchor_index: number | null;
}

export interface ValidationReport {
  ok: boolean;
  findings: ValidationFinding[];
}

export interface ApiError {
  code: string;
  message: string;
  detail?: unknown;
}

export interface Point {
  x: number;
  y: number;
}
