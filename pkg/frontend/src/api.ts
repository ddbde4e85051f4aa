import type { AnalyzeResponse, GenerateResponse, RepairCandidate } from './types.js';

/** Error raised when the service answers with a non-2xx status. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = 'ApiError';
    this.status = status;
    this.code = code;
  }
}

/**
 * The slice of the service the grid controller depends on. Production code
 * uses PcmApiClient; tests substitute a scripted fake.
 */
export interface AnalysisApi {
  analyze(entries: number[][]): Promise<AnalyzeResponse>;
  proposeRepairs(entries: number[][]): Promise<RepairCandidate[]>;
}

/** Thin fetch-based client for the pcmkit JSON endpoints. */
export class PcmApiClient implements AnalysisApi {
  private readonly baseUrl: string;

  /** baseUrl has no trailing slash; '' targets the origin serving the page. */
  constructor(baseUrl = '') {
    this.baseUrl = baseUrl.replace(/\/$/, '');
  }

  async analyze(entries: number[][]): Promise<AnalyzeResponse> {
    return this.post<AnalyzeResponse>('/api/analyze', { entries });
  }

  async proposeRepairs(entries: number[][]): Promise<RepairCandidate[]> {
    return this.post<RepairCandidate[]>('/api/propose-repairs', { entries });
  }

  async generate(family: string, x: number, n: number): Promise<GenerateResponse> {
    const params = new URLSearchParams({ family, x: String(x), n: String(n) });
    return this.request<GenerateResponse>(`/api/generate?${params.toString()}`, { method: 'GET' });
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  private async request<T>(path: string, init: RequestInit): Promise<T> {
    const res = await fetch(this.baseUrl + path, init);
    if (!res.ok) {
      throw await this.extractError(res);
    }
    return res.json() as Promise<T>;
  }

  private async extractError(res: Response): Promise<ApiError> {
    try {
      const body = (await res.json()) as { error?: { code?: string; message?: string } };
      if (body.error && typeof body.error.message === 'string') {
        return new ApiError(res.status, body.error.code ?? 'error', body.error.message);
      }
    } catch {
      // Non-JSON error body; fall through to the generic message.
    }
    return new ApiError(res.status, 'http_error', `request failed with status ${res.status}`);
  }
}
