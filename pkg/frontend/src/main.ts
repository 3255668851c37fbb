import { ApiClient } from './api.js'
import { App } from './app.js'

const API_BASE = (window as { API_BASE?: string }).API_BASE ?? 'http://127.0.0.1:8000'

document.addEventListener('DOMContentLoaded', () => {
  new App(document, new ApiClient(API_BASE))
})
