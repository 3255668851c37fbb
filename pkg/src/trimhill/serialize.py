"""JSON/CSV wire formats shared by the CLI and the HTTP service.

Field names are stable; floats are emitted with Python's shortest
round-trip repr so parsed-and-re-emitted documents are byte-identical.
"""

from __future__ import annotations

import io
import json
from typing import Any

from .distributions import (
    AbsT,
    Burr,
    Exponentiated,
    Mixed,
    ModelSpec,
    OutlierSpec,
    Pareto,
    Scaled,
)
from .errors import DomainError
from .estimators import TailEstimate
from .montecarlo import McConfig, McReport
from .plots import Series
from .selection import DetectionResult


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def estimate_to_dict(e: TailEstimate) -> dict:
    return {
        "kind": e.kind.value,
        "k0": e.k0,
        "k": e.k,
        "xi_hat": e.xi_hat,
        "se": e.se,
    }


def detection_to_dict(d: DetectionResult) -> dict:
    return {
        "k0_hat": d.k0_hat,
        "rejection_index": d.rejection_index,
        "q": d.schedule.q,
        "a": d.schedule.a,
        "tests": [
            {"j": t.j, "u": t.u, "threshold": t.threshold, "rejected": t.rejected}
            for t in d.u_tested
        ],
    }


def series_to_dict(s: Series) -> dict:
    out: dict = {
        "label": s.label,
        "points": [[x, y] for x, y in s.points],
    }
    out["band"] = [[x, lo, hi] for x, lo, hi in s.band] if s.band else None
    return out


def series_to_csv(s: Series) -> str:
    buf = io.StringIO()
    if s.band is not None:
        buf.write("x,y,lo,hi\n")
        for (x, y), (_, lo, hi) in zip(s.points, s.band):
            buf.write(f"{x!r},{y!r},{lo!r},{hi!r}\n")
    else:
        buf.write("x,y\n")
        for x, y in s.points:
            buf.write(f"{x!r},{y!r}\n")
    return buf.getvalue()


def model_to_dict(m: ModelSpec) -> dict:
    if isinstance(m, Pareto):
        return {"variant": "pareto", "sigma": m.sigma, "xi": m.xi}
    if isinstance(m, Burr):
        return {"variant": "burr", "eta": m.eta, "lam": m.lam, "xi": m.xi}
    if isinstance(m, AbsT):
        return {"variant": "abst", "xi": m.xi}
    raise DomainError(f"unknown model {m!r}")


def model_from_dict(d: dict) -> ModelSpec:
    try:
        variant = d["variant"]
        if variant == "pareto":
            return Pareto(sigma=float(d.get("sigma", 1.0)), xi=float(d.get("xi", 2.0)))
        if variant == "burr":
            return Burr(
                eta=float(d.get("eta", 1.0)),
                lam=float(d.get("lam", 0.5)),
                xi=float(d.get("xi", 2.0)),
            )
        if variant == "abst":
            return AbsT(xi=float(d.get("xi", 2.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed model spec: {d!r}") from exc
    raise DomainError(f"unknown model variant {d.get('variant')!r}")


def outlier_to_dict(o: OutlierSpec | None) -> dict | None:
    if o is None:
        return None
    if isinstance(o, Exponentiated):
        return {"variant": "exponentiated", "k0": o.k0, "L": o.L}
    if isinstance(o, Scaled):
        return {"variant": "scaled", "k0": o.k0, "C": o.C}
    if isinstance(o, Mixed):
        return {"variant": "mixed", "tau": o.tau, "M": o.M}
    raise DomainError(f"unknown outlier spec {o!r}")


def outlier_from_dict(d: dict | None) -> OutlierSpec | None:
    if d is None:
        return None
    try:
        variant = d["variant"]
        if variant == "exponentiated":
            return Exponentiated(k0=int(d["k0"]), L=float(d["L"]))
        if variant == "scaled":
            return Scaled(k0=int(d["k0"]), C=float(d["C"]))
        if variant == "mixed":
            return Mixed(tau=float(d["tau"]), M=float(d["M"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed outlier spec: {d!r}") from exc
    raise DomainError(f"unknown outlier variant {d.get('variant')!r}")


def mcconfig_to_dict(cfg: McConfig) -> dict:
    return {
        "model": model_to_dict(cfg.model),
        "outliers": outlier_to_dict(cfg.outliers),
        "n": cfg.n,
        "k_grid": list(cfg.k_grid),
        "reps": cfg.reps,
        "q": cfg.q,
        "a": cfg.a,
        "seed": cfg.seed,
        "estimators": list(cfg.estimators),
    }


def mcconfig_from_dict(d: dict) -> McConfig:
    try:
        return McConfig(
            model=model_from_dict(d["model"]),
            outliers=outlier_from_dict(d.get("outliers")),
            n=int(d["n"]),
            k_grid=tuple(int(k) for k in d["k_grid"]),
            reps=int(d.get("reps", 2500)),
            q=float(d.get("q", 0.05)),
            a=float(d.get("a", 1.2)),
            seed=int(d.get("seed", 0)),
            estimators=tuple(d.get("estimators", ("classic", "adaptive"))),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed simulation config: {exc}") from exc


def report_to_dict(rep: McReport, include_elapsed: bool = False) -> dict:
    """Canonical report document. elapsed is excluded by default so that
    reports from different worker counts compare byte-identical."""
    out = {
        "config": mcconfig_to_dict(rep.config),
        "estimates": [
            {"estimator": r.estimator, "k": r.k, "rmse": r.rmse} for r in rep.estimates
        ],
        "detection": [
            {
                "k": r.k,
                "k0_mean": r.k0_mean,
                "k0_sd": r.k0_sd,
                "type1_rate": r.type1_rate,
            }
            for r in rep.detection
        ],
        "true_k0_mean": rep.true_k0_mean,
        "reps_used": rep.reps_used,
    }
    if include_elapsed:
        out["elapsed"] = rep.elapsed
    return out


def report_to_csv(rep: McReport) -> str:
    buf = io.StringIO()
    buf.write("record,estimator,k,rmse,k0_mean,k0_sd,type1_rate\n")
    for r in rep.estimates:
        buf.write(f"estimate,{r.estimator},{r.k},{r.rmse!r},,,\n")
    for r in rep.detection:
        t1 = "" if r.type1_rate is None else repr(r.type1_rate)
        buf.write(f"detection,,{r.k},,{r.k0_mean!r},{r.k0_sd!r},{t1}\n")
    return buf.getvalue()
