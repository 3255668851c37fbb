// SVG rendering of the series JSON the API returns. Pure string-building
// helpers are exported separately so they can be unit tested.

import type { Series } from './api.js'

export interface ChartOptions {
  width: number
  height: number
  margin: number
  markerX?: number
  color?: string
  extraSeries?: { series: Series; color: string }[]
}

export interface LinearScale {
  (value: number): number
  domain: [number, number]
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity
  let hi = -Infinity
  for (const v of values) {
    if (v < lo) lo = v
    if (v > hi) hi = v
  }
  if (!isFinite(lo)) return [0, 1]
  if (lo === hi) return [lo - 0.5, hi + 0.5]
  return [lo, hi]
}

export function scaleLinear(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain
  const [r0, r1] = range
  const scale = ((value: number) => r0 + ((value - d0) / (d1 - d0)) * (r1 - r0)) as LinearScale
  scale.domain = domain
  return scale
}

export function linePath(points: [number, number][], xs: LinearScale, ys: LinearScale): string {
  return points
    .map(([x, y], i) => `${i === 0 ? 'M' : 'L'}${xs(x).toFixed(2)},${ys(y).toFixed(2)}`)
    .join('')
}

// Closed polygon walking the upper edge left to right, then the lower edge back.
export function bandPolygon(
  band: [number, number, number][],
  xs: LinearScale,
  ys: LinearScale,
): string {
  const upper = band.map(([x, , hi]) => `${xs(x).toFixed(2)},${ys(hi).toFixed(2)}`)
  const lower = band
    .slice()
    .reverse()
    .map(([x, lo]) => `${xs(x).toFixed(2)},${ys(lo).toFixed(2)}`)
  return upper.concat(lower).join(' ')
}

function axisTicks([lo, hi]: [number, number], count = 5): number[] {
  const step = (hi - lo) / (count - 1)
  return Array.from({ length: count }, (_, i) => lo + i * step)
}

function formatTick(value: number): string {
  const magnitude = Math.abs(value)
  if (magnitude >= 1000 || (magnitude > 0 && magnitude < 0.01)) return value.toExponential(1)
  return Number(value.toPrecision(4)).toString()
}

export function renderChart(svg: SVGSVGElement, series: Series, opts: ChartOptions): void {
  const { width, height, margin } = opts
  const all = [series, ...(opts.extraSeries ?? []).map((s) => s.series)]
  const xValues = all.flatMap((s) => s.points.map((p) => p[0]))
  const yValues = all.flatMap((s) => s.points.map((p) => p[1]))
  if (series.band) {
    for (const [, lo, hi] of series.band) {
      yValues.push(lo, hi)
    }
  }
  const xs = scaleLinear(extent(xValues), [margin, width - margin])
  const ys = scaleLinear(extent(yValues), [height - margin, margin])

  const parts: string[] = []
  for (const tick of axisTicks(xs.domain)) {
    const px = xs(tick).toFixed(2)
    parts.push(
      `<line x1="${px}" y1="${margin}" x2="${px}" y2="${height - margin}" class="grid"/>`,
      `<text x="${px}" y="${height - margin + 14}" class="tick" text-anchor="middle">${formatTick(tick)}</text>`,
    )
  }
  for (const tick of axisTicks(ys.domain)) {
    const py = ys(tick).toFixed(2)
    parts.push(
      `<line x1="${margin}" y1="${py}" x2="${width - margin}" y2="${py}" class="grid"/>`,
      `<text x="${margin - 4}" y="${py}" class="tick" text-anchor="end" dominant-baseline="middle">${formatTick(tick)}</text>`,
    )
  }
  if (series.band) {
    parts.push(`<polygon points="${bandPolygon(series.band, xs, ys)}" class="band"/>`)
  }
  parts.push(
    `<path d="${linePath(series.points, xs, ys)}" fill="none" stroke="${opts.color ?? '#1f6feb'}" stroke-width="1.5" data-label="${series.label}"/>`,
  )
  for (const { series: extra, color } of opts.extraSeries ?? []) {
    parts.push(
      `<path d="${linePath(extra.points, xs, ys)}" fill="none" stroke="${color}" stroke-width="1.5" data-label="${extra.label}"/>`,
    )
  }
  if (opts.markerX !== undefined) {
    const px = xs(opts.markerX).toFixed(2)
    parts.push(
      `<line x1="${px}" y1="${margin}" x2="${px}" y2="${height - margin}" class="marker" data-marker-x="${opts.markerX}"/>`,
      `<text x="${px}" y="${margin - 4}" class="marker-label" text-anchor="middle">k0=${opts.markerX}</text>`,
    )
  }
  svg.setAttribute('viewBox', `0 0 ${width} ${height}`)
  svg.innerHTML = parts.join('')
}

export function seriesToCsv(series: Series): string {
  const lines: string[] = []
  if (series.band) {
    lines.push('x,y,lo,hi')
    series.points.forEach(([x, y], i) => {
      const [, lo, hi] = series.band![i]
      lines.push(`${x},${y},${lo},${hi}`)
    })
  } else {
    lines.push('x,y')
    for (const [x, y] of series.points) lines.push(`${x},${y}`)
  }
  return lines.join('\n') + '\n'
}
