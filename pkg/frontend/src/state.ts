// Session state and request sequencing.
//
// Each refetchable resource carries a monotonically increasing sequence
// number; a response is applied only if it is still the latest request for
// that resource, so out-of-order arrivals are discarded instead of
// clobbering fresher data.

export type K0Mode = { kind: 'auto' } | { kind: 'manual'; k0: number }

export interface SessionState {
  datasetId: string | null
  datasetName: string
  n: number
  k: number
  q: number
  a: number
  k0Mode: K0Mode
}

export const DEFAULT_Q = 0.05
export const DEFAULT_A = 1.2

export function initialState(): SessionState {
  return {
    datasetId: null,
    datasetName: '',
    n: 0,
    k: 2,
    q: DEFAULT_Q,
    a: DEFAULT_A,
    k0Mode: { kind: 'auto' },
  }
}

// Clamp k to the API's accepted range [2, n-1] for the loaded dataset.
export function clampK(k: number, n: number): number {
  return Math.min(Math.max(Math.round(k), 2), Math.max(n - 1, 2))
}

// Clamp a manual trimming parameter to [0, k-1].
export function clampK0(k0: number, k: number): number {
  return Math.min(Math.max(Math.round(k0), 0), k - 1)
}

export class Sequencer {
  private latest = new Map<string, number>()

  // Mark a new in-flight request for the resource and get its token.
  begin(resource: string): number {
    const token = (this.latest.get(resource) ?? 0) + 1
    this.latest.set(resource, token)
    return token
  }

  // True when the token still belongs to the newest request.
  isCurrent(resource: string, token: number): boolean {
    return this.latest.get(resource) === token
  }
}
