import { describe, expect, it } from 'vitest'

import { ApiClient, ApiError } from '../src/api.js'

function fakeFetch(status: number, body: unknown) {
  const calls: { url: string; init?: RequestInit }[] = []
  const impl = (async (url: string, init?: RequestInit) => {
    calls.push({ url, init })
    return new Response(JSON.stringify(body), {
      status,
      headers: { 'Content-Type': 'application/json' },
    })
  }) as typeof fetch
  return { impl, calls }
}

describe('ApiClient', () => {
  it('posts CSV with tie-policy query parameters', async () => {
    const { impl, calls } = fakeFetch(200, { id: 'abc', n: 5 })
    const client = new ApiClient('http://host', impl)
    const result = await client.upload('1\n2\n', { tiePolicy: 'dither', epsilon: 0.5, seed: 7 })
    expect(result).toEqual({ id: 'abc', n: 5 })
    expect(calls[0].url).toBe('http://host/v1/datasets?tie_policy=dither&epsilon=0.5&seed=7')
    expect(calls[0].init?.method).toBe('POST')
    expect(calls[0].init?.body).toBe('1\n2\n')
  })

  it('omits undefined query parameters', async () => {
    const { impl, calls } = fakeFetch(200, { id: 'abc', n: 5 })
    await new ApiClient('http://host', impl).upload('1\n2\n')
    expect(calls[0].url).toBe('http://host/v1/datasets')
  })

  it('builds estimate URLs with auto k0', async () => {
    const { impl, calls } = fakeFetch(200, { tail_estimate: {} })
    await new ApiClient('http://host', impl).estimate('abc', 40, 'auto', 0.05, 1.2)
    expect(calls[0].url).toBe('http://host/v1/datasets/abc/estimate?k=40&k0=auto&q=0.05&a=1.2')
  })

  it('builds the remaining endpoint URLs', async () => {
    const { impl, calls } = fakeFetch(200, {})
    const client = new ApiClient('http://host', impl)
    await client.detect('d1', 30)
    await client.diagnostic('d1', 30)
    await client.hillplot('d1', 2, 3, 40)
    await client.qq('d1')
    expect(calls.map((c) => c.url)).toEqual([
      'http://host/v1/datasets/d1/detect?k=30',
      'http://host/v1/datasets/d1/diagnostic?k=30',
      'http://host/v1/datasets/d1/hillplot?k0=2&kmin=3&kmax=40',
      'http://host/v1/datasets/d1/qq',
    ])
  })

  it('maps the error envelope to ApiError', async () => {
    const { impl } = fakeFetch(422, {
      error: { code: 'KOutOfRange', message: 'k=99 outside [2, n-1=4]' },
    })
    const client = new ApiClient('http://host', impl)
    const err = await client.detect('d1', 99).catch((e) => e)
    expect(err).toBeInstanceOf(ApiError)
    expect(err.status).toBe(422)
    expect(err.code).toBe('KOutOfRange')
    expect(err.message).toContain('outside')
  })

  it('copes with non-JSON error bodies', async () => {
    const impl = (async () => new Response('boom', { status: 500 })) as typeof fetch
    const err = await new ApiClient('http://host', impl).qq('x').catch((e) => e)
    expect(err).toBeInstanceOf(ApiError)
    expect(err.code).toBe('HttpError')
  })
})
