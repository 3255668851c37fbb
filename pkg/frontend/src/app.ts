// Application wiring: upload, controls, plots and the estimate headline.
//
// All displayed numbers come from API responses. The diagnostic marker is
// the server's k0_hat, and the headline for auto mode is the trimmed
// estimate at that k0_hat, so the UI never re-derives estimator math.

import { ApiClient, ApiError, Detection, EstimateResponse, Series } from './api.js'
import { renderChart, seriesToCsv } from './charts.js'
import { SessionState, Sequencer, clampK, clampK0, initialState } from './state.js'

const CHART = { width: 640, height: 360, margin: 46 }

function el<T extends HTMLElement>(root: ParentNode, id: string): T {
  const node = root.querySelector(`#${id}`)
  if (!node) throw new Error(`missing element #${id}`)
  return node as T
}

export class App {
  readonly state: SessionState = initialState()
  private readonly seq = new Sequencer()

  private detection: Detection | null = null
  private estimate: EstimateResponse | null = null
  private diagnostic: Series | null = null
  private qqSeries: Series | null = null

  private readonly fileInput: HTMLInputElement
  private readonly tiePolicy: HTMLSelectElement
  private readonly epsilon: HTMLInputElement
  private readonly ditherSeed: HTMLInputElement
  private readonly columnField: HTMLInputElement
  private readonly kInput: HTMLInputElement
  private readonly qInput: HTMLInputElement
  private readonly aInput: HTMLInputElement
  private readonly modeAuto: HTMLInputElement
  private readonly modeManual: HTMLInputElement
  private readonly k0Input: HTMLInputElement
  private readonly headline: HTMLElement
  private readonly datasetInfo: HTMLElement
  private readonly errorBox: HTMLElement
  private readonly auditBody: HTMLElement
  private readonly diagnosticSvg: SVGSVGElement
  private readonly hillSvg: SVGSVGElement
  private readonly qqSvg: SVGSVGElement

  constructor(
    private readonly doc: Document,
    private readonly client: ApiClient,
    private readonly demoFetch: (path: string) => Promise<string> = defaultDemoFetch,
  ) {
    this.fileInput = el(doc, 'file-input')
    this.tiePolicy = el(doc, 'tie-policy')
    this.epsilon = el(doc, 'epsilon')
    this.ditherSeed = el(doc, 'dither-seed')
    this.columnField = el(doc, 'column-field')
    this.kInput = el(doc, 'k-input')
    this.qInput = el(doc, 'q-input')
    this.aInput = el(doc, 'a-input')
    this.modeAuto = el(doc, 'mode-auto')
    this.modeManual = el(doc, 'mode-manual')
    this.k0Input = el(doc, 'k0-input')
    this.headline = el(doc, 'headline')
    this.datasetInfo = el(doc, 'dataset-info')
    this.errorBox = el(doc, 'error-box')
    this.auditBody = el(doc, 'audit-body')
    this.diagnosticSvg = doc.querySelector('#diagnostic-chart') as SVGSVGElement
    this.hillSvg = doc.querySelector('#hill-chart') as SVGSVGElement
    this.qqSvg = doc.querySelector('#qq-chart') as SVGSVGElement
    this.bindEvents()
  }

  private bindEvents(): void {
    el<HTMLButtonElement>(this.doc, 'upload-button').addEventListener('click', () => {
      void this.uploadFromInput()
    })
    el<HTMLButtonElement>(this.doc, 'demo-contaminated').addEventListener('click', () => {
      void this.loadDemo('demo_contaminated.csv')
    })
    el<HTMLButtonElement>(this.doc, 'demo-clean').addEventListener('click', () => {
      void this.loadDemo('demo_clean.csv')
    })
    this.kInput.addEventListener('change', () => {
      void this.setK(Number(this.kInput.value))
    })
    this.qInput.addEventListener('change', () => {
      void this.setQA(Number(this.qInput.value), this.state.a)
    })
    this.aInput.addEventListener('change', () => {
      void this.setQA(this.state.q, Number(this.aInput.value))
    })
    this.modeAuto.addEventListener('change', () => void this.setK0Mode({ kind: 'auto' }))
    this.modeManual.addEventListener('change', () => {
      void this.setK0Mode({ kind: 'manual', k0: Number(this.k0Input.value) || 0 })
    })
    this.k0Input.addEventListener('change', () => {
      if (this.state.k0Mode.kind === 'manual') {
        void this.setK0Mode({ kind: 'manual', k0: Number(this.k0Input.value) })
      }
    })
    el<HTMLButtonElement>(this.doc, 'download-json').addEventListener('click', () =>
      this.download('json'),
    )
    el<HTMLButtonElement>(this.doc, 'download-csv').addEventListener('click', () =>
      this.download('csv'),
    )
  }

  private async uploadFromInput(): Promise<void> {
    const file = this.fileInput.files?.[0]
    if (!file) {
      this.showError('choose a CSV file first')
      return
    }
    const text = await file.text()
    await this.loadCsvText(text, file.name)
  }

  private async loadDemo(name: string): Promise<void> {
    try {
      const text = await this.demoFetch(name)
      await this.loadCsvText(text, name)
    } catch (err) {
      this.showError(`could not load demo: ${describe(err)}`)
    }
  }

  // Upload CSV text and reset the session to the new dataset. Also the
  // entry point the end-to-end tests drive directly.
  async loadCsvText(text: string, name: string): Promise<void> {
    this.clearError()
    const tiePolicy = this.tiePolicy.value
    try {
      const result = await this.client.upload(text, {
        tiePolicy,
        epsilon: this.epsilon.value ? Number(this.epsilon.value) : undefined,
        seed: this.ditherSeed.value ? Number(this.ditherSeed.value) : undefined,
        column: this.columnField.value || undefined,
      })
      this.state.datasetId = result.id
      this.state.datasetName = name
      this.state.n = result.n
      this.state.k = result.n - 1
      this.datasetInfo.textContent = `${name}: n = ${result.n} (tie policy ${tiePolicy})`
      this.syncControls()
      await this.refresh({ detection: true, series: true })
    } catch (err) {
      this.showError(describe(err))
    }
  }

  async setK(k: number): Promise<void> {
    if (!this.state.datasetId) return
    this.state.k = clampK(k, this.state.n)
    if (this.state.k0Mode.kind === 'manual') {
      this.state.k0Mode = { kind: 'manual', k0: clampK0(this.state.k0Mode.k0, this.state.k) }
    }
    this.syncControls()
    await this.refresh({ detection: true, series: true })
  }

  // q and a only affect the sequential test, so this triggers exactly one
  // /detect refetch (plus the headline estimate) and leaves the series alone.
  async setQA(q: number, a: number): Promise<void> {
    if (!this.state.datasetId) return
    this.state.q = q
    this.state.a = a
    this.syncControls()
    await this.refresh({ detection: true, series: false })
  }

  async setK0Mode(mode: SessionState['k0Mode']): Promise<void> {
    if (!this.state.datasetId) return
    this.state.k0Mode =
      mode.kind === 'manual' ? { kind: 'manual', k0: clampK0(mode.k0, this.state.k) } : mode
    this.syncControls()
    await this.refresh({ detection: false, series: false })
  }

  private async refresh(parts: { detection: boolean; series: boolean }): Promise<void> {
    const { datasetId, k, q, a } = this.state
    if (!datasetId) return
    this.clearError()
    try {
      if (parts.detection) {
        const token = this.seq.begin('detect')
        const detection = await this.client.detect(datasetId, k, q, a)
        if (!this.seq.isCurrent('detect', token)) return
        this.detection = detection
      }
      const k0 =
        this.state.k0Mode.kind === 'manual'
          ? this.state.k0Mode.k0
          : (this.detection?.k0_hat ?? 0)
      const estToken = this.seq.begin('estimate')
      const estimate = await this.client.estimate(datasetId, k, k0)
      if (!this.seq.isCurrent('estimate', estToken)) return
      this.estimate = estimate

      if (parts.series) {
        const token = this.seq.begin('series')
        const [diagnostic, qqSeries] = await Promise.all([
          this.client.diagnostic(datasetId, k),
          this.client.qq(datasetId),
        ])
        if (!this.seq.isCurrent('series', token)) return
        this.diagnostic = diagnostic
        this.qqSeries = qqSeries
      }
      await this.renderHillPlot(k0)
      this.render()
    } catch (err) {
      this.showError(describe(err))
    }
  }

  private async renderHillPlot(k0: number): Promise<void> {
    const { datasetId, n } = this.state
    if (!datasetId) return
    const kmin = Math.max(2, k0 + 1)
    const kmax = n - 1
    if (kmin > kmax) return
    const token = this.seq.begin('hillplot')
    const plot = await this.client.hillplot(datasetId, k0, kmin, kmax)
    if (!this.seq.isCurrent('hillplot', token)) return
    renderChart(this.hillSvg, plot.classic, {
      ...CHART,
      color: '#1f6feb',
      markerX: this.state.k,
      extraSeries: [
        { series: plot.trimmed, color: '#d1242f' },
        { series: plot.biased, color: '#8957e5' },
      ],
    })
  }

  private render(): void {
    const est = this.estimate?.tail_estimate
    if (est) {
      this.headline.textContent =
        `xi_hat = ${est.xi_hat.toFixed(4)} +/- ${est.se.toFixed(4)} ` +
        `(${est.kind}, k0 = ${est.k0}, k = ${est.k})`
      this.headline.dataset.xiHat = String(est.xi_hat)
      this.headline.dataset.k0 = String(est.k0)
    }
    if (this.detection) {
      el(this.doc, 'detection-summary').textContent =
        this.detection.k0_hat > 0
          ? `detected k0_hat = ${this.detection.k0_hat} suspicious extremes`
          : 'no suspicious extremes detected (k0_hat = 0)'
      this.auditBody.innerHTML = this.detection.tests
        .map(
          (t) =>
            `<tr class="${t.rejected ? 'rejected' : ''}"><td>${t.j}</td>` +
            `<td>${t.u.toFixed(6)}</td><td>${t.threshold.toFixed(6)}</td>` +
            `<td>${t.rejected ? 'yes' : 'no'}</td></tr>`,
        )
        .join('')
    }
    if (this.diagnostic) {
      renderChart(this.diagnosticSvg, this.diagnostic, {
        ...CHART,
        markerX: this.detection?.k0_hat,
      })
    }
    if (this.qqSeries) {
      renderChart(this.qqSvg, this.qqSeries, { ...CHART, color: '#1a7f37' })
    }
  }

  private syncControls(): void {
    const { n, k } = this.state
    this.kInput.max = String(Math.max(n - 1, 2))
    this.kInput.min = '2'
    this.kInput.value = String(k)
    this.qInput.value = String(this.state.q)
    this.aInput.value = String(this.state.a)
    const manual = this.state.k0Mode.kind === 'manual'
    this.modeManual.checked = manual
    this.modeAuto.checked = !manual
    this.k0Input.disabled = !manual
    this.k0Input.min = '0'
    this.k0Input.max = String(k - 1)
    if (manual) this.k0Input.value = String((this.state.k0Mode as { k0: number }).k0)
  }

  private download(format: 'json' | 'csv'): void {
    if (!this.diagnostic) return
    const body =
      format === 'json' ? JSON.stringify(this.diagnostic) : seriesToCsv(this.diagnostic)
    const blob = new Blob([body], { type: format === 'json' ? 'application/json' : 'text/csv' })
    const link = this.doc.createElement('a')
    link.href = URL.createObjectURL(blob)
    link.download = `diagnostic.${format}`
    link.click()
    URL.revokeObjectURL(link.href)
  }

  private showError(message: string): void {
    this.errorBox.textContent = message
    this.errorBox.hidden = false
  }

  private clearError(): void {
    this.errorBox.textContent = ''
    this.errorBox.hidden = true
  }

  // Test hooks: current rendered values without reaching into the DOM.
  currentDetection(): Detection | null {
    return this.detection
  }

  currentEstimate(): EstimateResponse | null {
    return this.estimate
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`
  return err instanceof Error ? err.message : String(err)
}

async function defaultDemoFetch(path: string): Promise<string> {
  const response = await fetch(`public/${path}`)
  if (!response.ok) throw new Error(`HTTP ${response.status}`)
  return response.text()
}
