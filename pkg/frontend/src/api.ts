// Typed client for the tail-estimation HTTP API. Every number shown in the
// UI comes through this module; the client does no estimator math itself.

export interface TailEstimate {
  kind: 'classic' | 'trimmed' | 'biased'
  k0: number
  k: number
  xi_hat: number
  se: number
}

export interface TestRecord {
  j: number
  u: number
  threshold: number
  rejected: boolean
}

export interface Detection {
  k0_hat: number
  rejection_index: number | null
  q: number
  a: number
  tests: TestRecord[]
}

export interface Series {
  label: string
  points: [number, number][]
  band: [number, number, number][] | null
}

export interface UploadResult {
  id: string
  n: number
}

export interface EstimateResponse {
  tail_estimate: TailEstimate
  detection?: Detection
}

export interface HillPlotResponse {
  classic: Series
  trimmed: Series
  biased: Series
}

export interface UploadOptions {
  tiePolicy?: string
  epsilon?: number
  seed?: number
  column?: string
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message)
  }
}

type FetchLike = typeof fetch

async function parse<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => null)
  if (!response.ok) {
    const err = body?.error
    throw new ApiError(
      response.status,
      err?.code ?? 'HttpError',
      err?.message ?? `HTTP ${response.status}`,
    )
  }
  return body as T
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private url(path: string, params: Record<string, string | number | undefined> = {}): string {
    const query = Object.entries(params)
      .filter(([, v]) => v !== undefined)
      .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
      .join('&')
    return `${this.baseUrl}${path}${query ? '?' + query : ''}`
  }

  async upload(csv: string, opts: UploadOptions = {}): Promise<UploadResult> {
    const response = await this.fetchImpl(
      this.url('/v1/datasets', {
        tie_policy: opts.tiePolicy,
        epsilon: opts.epsilon,
        seed: opts.seed,
        column: opts.column,
      }),
      { method: 'POST', body: csv, headers: { 'Content-Type': 'text/csv' } },
    )
    return parse<UploadResult>(response)
  }

  async estimate(
    id: string,
    k: number,
    k0: number | 'auto',
    q?: number,
    a?: number,
  ): Promise<EstimateResponse> {
    const response = await this.fetchImpl(
      this.url(`/v1/datasets/${id}/estimate`, { k, k0, q, a }),
    )
    return parse<EstimateResponse>(response)
  }

  async detect(id: string, k: number, q?: number, a?: number): Promise<Detection> {
    const response = await this.fetchImpl(this.url(`/v1/datasets/${id}/detect`, { k, q, a }))
    return parse<Detection>(response)
  }

  async diagnostic(id: string, k: number): Promise<Series> {
    const response = await this.fetchImpl(this.url(`/v1/datasets/${id}/diagnostic`, { k }))
    return parse<Series>(response)
  }

  async hillplot(id: string, k0: number, kmin: number, kmax: number): Promise<HillPlotResponse> {
    const response = await this.fetchImpl(
      this.url(`/v1/datasets/${id}/hillplot`, { k0, kmin, kmax }),
    )
    return parse<HillPlotResponse>(response)
  }

  async qq(id: string): Promise<Series> {
    const response = await this.fetchImpl(this.url(`/v1/datasets/${id}/qq`))
    return parse<Series>(response)
  }
}
