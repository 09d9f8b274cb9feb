/**
 * Thin typed client for the facultas HTTP service.
 *
 * The fetch implementation is injectable so tests can run against an
 * in-memory server. Validation failures surface as ApiError carrying the
 * service's violation list.
 */

import type {
  Assignment,
  CandidateRecord,
  FacultySchema,
  Health,
  KbDoc,
  Recommendation,
  WeightConfig,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly violations: string[],
  ) {
    super(violations.join('; ') || `request failed with status ${status}`);
  }
}

export interface KbSnapshot {
  doc: KbDoc;
  /** Raw ETag value; must be echoed back verbatim on PUT. */
  revision: string;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function violationsOf(response: Response): Promise<string[]> {
  try {
    const body = await response.json();
    if (Array.isArray(body.violations)) return body.violations.map(String);
    if (typeof body.error === 'string') return [body.error];
  } catch {
    /* non-JSON error body */
  }
  return [];
}

export class ApiClient {
  constructor(
    private readonly base: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await violationsOf(response));
    }
    return response;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await this.request(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    return (await response.json()) as T;
  }

  async health(): Promise<Health> {
    return (await (await this.request('/health')).json()) as Health;
  }

  async getSchema(): Promise<FacultySchema> {
    return (await (await this.request('/schema')).json()) as FacultySchema;
  }

  async getKb(): Promise<KbSnapshot> {
    const response = await this.request('/kb');
    return {
      doc: (await response.json()) as KbDoc,
      revision: response.headers.get('ETag') ?? '"1"',
    };
  }

  /** Whole-document replace; resolves to the new revision. */
  async putKb(doc: KbDoc, revision: string): Promise<string> {
    const response = await this.request('/kb', {
      method: 'PUT',
      headers: { 'Content-Type': 'application/json', 'If-Match': revision },
      body: JSON.stringify(doc),
    });
    return response.headers.get('ETag') ?? String((await response.json()).revision);
  }

  async recommend(candidate: CandidateRecord, weights: 'on' | 'off' = 'on'): Promise<Recommendation> {
    const query = weights === 'off' ? '?weights=off' : '';
    return this.postJson(`/recommend${query}`, candidate);
  }

  /** Preview under an overridden weight config; the stored KB is untouched. */
  async whatIf(candidate: CandidateRecord, weightConfig: WeightConfig): Promise<Recommendation> {
    return this.postJson('/recommend/whatif', { candidate, weight_config: weightConfig });
  }

  async assign(course: string, candidates: CandidateRecord[]): Promise<Assignment> {
    return this.postJson('/assign', { course, candidates });
  }
}
