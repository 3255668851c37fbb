"""JSON-over-HTTP facade for ingestion, estimation, detection and plot series.

Datasets live in memory for the process lifetime; all computation downstream
of the store is pure, so repeated GETs return byte-identical bodies.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import serialize
from .errors import TrimHillError
from .estimators import classic_hill, trimmed_hill
from .ingest import IngestOptions, ingest_csv
from .montecarlo import run_mc
from .plots import diagnostic_series, hill_series, pareto_qq_series
from .sample import Sample
from .selection import DEFAULT_A, DEFAULT_Q, adaptive_trimmed_hill

DEFAULT_MAX_VALUES = 10_000_000
DEFAULT_SIM_BUDGET = 500_000_000  # reps * n * |k_grid|


@dataclass(frozen=True)
class StoredDataset:
    sample: Sample
    created_at: float
    tie_policy_applied: IngestOptions


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _json(payload: dict) -> Response:
    return Response(content=serialize.dumps(payload), media_type="application/json")


def create_app(
    max_values: int = DEFAULT_MAX_VALUES,
    sim_budget: int = DEFAULT_SIM_BUDGET,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    app = FastAPI(title="trimhill", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store: dict[str, StoredDataset] = {}
    lock = threading.Lock()

    @app.exception_handler(TrimHillError)
    async def _domain_error(_req: Request, exc: TrimHillError):
        return _error(422, type(exc).__name__, str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return _error(400, "MalformedRequest", str(exc.errors()))

    def _get(dataset_id: str) -> StoredDataset | None:
        with lock:
            return store.get(dataset_id)

    def _parse_k(ds: StoredDataset, k: int) -> int | JSONResponse:
        if not (2 <= k <= ds.sample.n - 1):
            return _error(422, "KOutOfRange", f"k={k} outside [2, n-1={ds.sample.n - 1}]")
        return k

    @app.post("/v1/datasets")
    async def upload(
        request: Request,
        tie_policy: str = Query("unique"),
        epsilon: float = Query(0.1),
        seed: int | None = Query(None),
        column: str | None = Query(None),
        header: str = Query("auto"),
    ):
        body = await request.body()
        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError:
            return _error(400, "MalformedBody", "body must be UTF-8 CSV text")
        if not text.strip():
            return _error(400, "MalformedBody", "empty body")
        opts = IngestOptions(
            column=column,
            header=header,
            tie_policy=tie_policy,
            epsilon=epsilon,
            dither_seed=seed,
        )
        s = ingest_csv(text, opts)
        if s.n > max_values:
            return _error(422, "TooLarge", f"dataset exceeds {max_values} values")
        dataset_id = uuid.uuid4().hex
        with lock:
            store[dataset_id] = StoredDataset(
                sample=s, created_at=time.time(), tie_policy_applied=opts
            )
        return _json({"id": dataset_id, "n": s.n})

    @app.get("/v1/datasets/{dataset_id}/estimate")
    async def estimate(
        dataset_id: str,
        k: int,
        k0: str = Query("0"),
        q: float = Query(DEFAULT_Q),
        a: float = Query(DEFAULT_A),
    ):
        ds = _get(dataset_id)
        if ds is None:
            return _error(404, "UnknownDataset", f"no dataset {dataset_id!r}")
        kk = _parse_k(ds, k)
        if isinstance(kk, JSONResponse):
            return kk
        if k0 == "auto":
            detection, est = adaptive_trimmed_hill(ds.sample, kk, q, a)
            return _json(
                {
                    "tail_estimate": serialize.estimate_to_dict(est),
                    "detection": serialize.detection_to_dict(detection),
                }
            )
        try:
            k0_val = int(k0)
        except ValueError:
            return _error(400, "MalformedRequest", f"k0 must be an integer or 'auto', got {k0!r}")
        if k0_val == 0:
            est = classic_hill(ds.sample, kk)
        else:
            est = trimmed_hill(ds.sample, k0_val, kk)
        return _json({"tail_estimate": serialize.estimate_to_dict(est)})

    @app.get("/v1/datasets/{dataset_id}/detect")
    async def detect(
        dataset_id: str,
        k: int,
        q: float = Query(DEFAULT_Q),
        a: float = Query(DEFAULT_A),
    ):
        ds = _get(dataset_id)
        if ds is None:
            return _error(404, "UnknownDataset", f"no dataset {dataset_id!r}")
        kk = _parse_k(ds, k)
        if isinstance(kk, JSONResponse):
            return kk
        detection, _ = adaptive_trimmed_hill(ds.sample, kk, q, a)
        return _json(serialize.detection_to_dict(detection))

    @app.get("/v1/datasets/{dataset_id}/diagnostic")
    async def diagnostic(dataset_id: str, k: int):
        ds = _get(dataset_id)
        if ds is None:
            return _error(404, "UnknownDataset", f"no dataset {dataset_id!r}")
        kk = _parse_k(ds, k)
        if isinstance(kk, JSONResponse):
            return kk
        return _json(serialize.series_to_dict(diagnostic_series(ds.sample, kk)))

    @app.get("/v1/datasets/{dataset_id}/hillplot")
    async def hillplot(dataset_id: str, k0: int, kmin: int, kmax: int):
        ds = _get(dataset_id)
        if ds is None:
            return _error(404, "UnknownDataset", f"no dataset {dataset_id!r}")
        classic, trimmed, biased = hill_series(ds.sample, k0, kmin, kmax)
        return _json(
            {
                "classic": serialize.series_to_dict(classic),
                "trimmed": serialize.series_to_dict(trimmed),
                "biased": serialize.series_to_dict(biased),
            }
        )

    @app.get("/v1/datasets/{dataset_id}/qq")
    async def qq(dataset_id: str):
        ds = _get(dataset_id)
        if ds is None:
            return _error(404, "UnknownDataset", f"no dataset {dataset_id!r}")
        return _json(serialize.series_to_dict(pareto_qq_series(ds.sample)))

    @app.post("/v1/simulate")
    async def simulate(request: Request):
        try:
            doc = await request.json()
        except Exception:
            return _error(400, "MalformedBody", "body must be JSON")
        cfg = serialize.mcconfig_from_dict(doc)
        cost = cfg.reps * cfg.n * len(cfg.k_grid)
        if cost > sim_budget:
            return _error(
                422, "BudgetExceeded",
                f"reps*n*|k_grid|={cost} exceeds budget {sim_budget}",
            )
        report = run_mc(cfg)
        return _json(serialize.report_to_dict(report))

    return app
