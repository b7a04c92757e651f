/**
 * Typed client for the playback service.
 *
 * The fetch implementation is injectable so tests can run against a mock,
 * and every mutating call carries a monotonic request id so the controller
 * can discard stale responses when edits overlap in flight.
 */

import type {
  PatternDocument,
  SampleResponse,
  SpeedProfileResponse,
  ValidationReport,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface SampleRequest {
  pattern: PatternDocument;
  bpm: number;
  beta: number;
  t0: number;
  t1: number;
  count: number;
}

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail?: unknown,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let code = 'unknown';
  let message = `service error ${response.status}`;
  let detail: unknown;
  try {
    const body = await response.json();
    code = body.code ?? code;
    message = body.message ?? message;
    detail = body.detail;
  } catch {
    // non-JSON error body; keep the fallback message
  }
  throw new ServiceError(response.status, code, message, detail);
}

export class ApiClient {
  private nextRequestId = 1;

  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  allocateRequestId(): number {
    return this.nextRequestId++;
  }

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`);
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  health(): Promise<{ status: string; version: string }> {
    return this.get('/api/v1/health');
  }

  defaultPattern(beats: number): Promise<PatternDocument> {
    return this.get(`/api/v1/patterns/defaults/${beats}`);
  }

  validate(pattern: PatternDocument): Promise<ValidationReport> {
    return this.post('/api/v1/patterns/validate', pattern);
  }

  sample(request: SampleRequest): Promise<SampleResponse> {
    return this.post('/api/v1/sample', request);
  }

  speedProfile(
    pattern: PatternDocument,
    bpm: number,
    beta: number,
    samplesPerSegment: number,
  ): Promise<SpeedProfileResponse> {
    return this.post('/api/v1/speed-profile', {
      pattern,
      bpm,
      beta,
      samples_per_segment: samplesPerSegment,
    });
  }
}
