import { readFileSync } from 'node:fs'
import { dirname, join } from 'node:path'
import { fileURLToPath } from 'node:url'

const here = dirname(fileURLToPath(import.meta.url))

// Mount the real page markup into the test document.
export function mountDom(): void {
  const html = readFileSync(join(here, '..', 'index.html'), 'utf-8')
  const body = html.slice(html.indexOf('<body>') + '<body>'.length, html.indexOf('</body>'))
  // the module script tag only matters in a real browser
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/g, '')
}

export function readPublicFile(name: string): string {
  return readFileSync(join(here, '..', 'public', name), 'utf-8')
}
