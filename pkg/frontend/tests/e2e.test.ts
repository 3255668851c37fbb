// End-to-end: the real app DOM driven against a live API server process.

import { ChildProcess, spawn } from 'node:child_process'
import { afterAll, beforeAll, describe, expect, it } from 'vitest'

import { ApiClient } from '../src/api.js'
import { App } from '../src/app.js'
import { mountDom, readPublicFile } from './helpers.js'

const PORT = 8791
const BASE = `http://127.0.0.1:${PORT}`

let server: ChildProcess

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt++) {
    try {
      await fetch(`${BASE}/v1/datasets/none/qq`)
      return
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 250))
    }
  }
  throw new Error('API server did not come up')
}

beforeAll(async () => {
  server = spawn(
    'python3',
    [
      '-c',
      'import uvicorn; from trimhill.service import create_app; ' +
        `uvicorn.run(create_app(), host="127.0.0.1", port=${PORT}, log_level="warning")`,
    ],
    { stdio: 'ignore' },
  )
  await waitForServer()
})

afterAll(() => {
  server?.kill()
})

function makeApp(): App {
  mountDom()
  return new App(document, new ApiClient(BASE, fetch), async (name) => readPublicFile(name))
}

describe('contaminated demo', () => {
  it('marker and headline come from the API', async () => {
    const app = makeApp()
    await app.loadCsvText(readPublicFile('demo_contaminated.csv'), 'demo_contaminated.csv')

    // detection marker at the planted outlier count
    expect(app.currentDetection()?.k0_hat).toBe(15)
    const marker = document.querySelector('#diagnostic-chart [data-marker-x]')
    expect(marker?.getAttribute('data-marker-x')).toBe('15')

    // auto headline equals the trimmed estimate at the detected k0
    const headline = document.querySelector('#headline') as HTMLElement
    expect(headline.dataset.k0).toBe('15')
    const reference = await new ApiClient(BASE, fetch).estimate(
      app.state.datasetId!,
      app.state.k,
      'auto',
    )
    expect(Number(headline.dataset.xiHat)).toBe(reference.tail_estimate.xi_hat)

    // the diagnostic plot drops once the planted outliers are trimmed away
    const points = (await new ApiClient(BASE, fetch).diagnostic(app.state.datasetId!, 499))
      .points
    const inflated = points[0][1]
    const settled = points[15][1]
    expect(inflated).toBeGreaterThan(settled * 1.1)
    expect(points[14][1]).toBeGreaterThan(settled)
  })

  it('manual k0 = 0 headline equals the classic value', async () => {
    const app = makeApp()
    await app.loadCsvText(readPublicFile('demo_contaminated.csv'), 'demo_contaminated.csv')
    await app.setK0Mode({ kind: 'manual', k0: 0 })

    const headline = document.querySelector('#headline') as HTMLElement
    const classic = await new ApiClient(BASE, fetch).estimate(
      app.state.datasetId!,
      app.state.k,
      0,
    )
    expect(classic.tail_estimate.kind).toBe('classic')
    expect(Number(headline.dataset.xiHat)).toBe(classic.tail_estimate.xi_hat)
    expect(headline.textContent).toContain('classic')
  })
})

describe('clean demo', () => {
  it('marker sits at zero and the audit table accepts everywhere', async () => {
    const app = makeApp()
    await app.loadCsvText(readPublicFile('demo_clean.csv'), 'demo_clean.csv')
    expect(app.currentDetection()?.k0_hat).toBe(0)
    const marker = document.querySelector('#diagnostic-chart [data-marker-x]')
    expect(marker?.getAttribute('data-marker-x')).toBe('0')
    expect(document.querySelectorAll('#audit-body tr.rejected').length).toBe(0)
  })
})

describe('error surfacing', () => {
  it('shows the server message for an invalid upload', async () => {
    const app = makeApp()
    await app.loadCsvText('loss\n-3\n1\n', 'bad.csv')
    const box = document.querySelector('#error-box') as HTMLElement
    expect(box.hidden).toBe(false)
    expect(box.textContent).toContain('NonPositiveValue')
  })
})
