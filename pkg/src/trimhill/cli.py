"""Command-line interface: estimate, detect, diagnose, hillplot, qq, simulate, serve.

Exit codes: 0 success, 1 data error (located message on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .distributions import AbsT, Burr, Pareto, k_opt_default
from .errors import TrimHillError
from .estimators import biased_hill, classic_hill, trimmed_hill
from .ingest import IngestOptions, ingest_csv
from .montecarlo import run_mc
from .plots import diagnostic_series, hill_series, pareto_qq_series
from .selection import DEFAULT_A, DEFAULT_Q, adaptive_trimmed_hill

_MODEL_HINTS = {
    "pareto": Pareto(1.0, 2.0),
    "burr": Burr(1.0, 0.5, 2.0),
    "abst": AbsT(2.0),
}


def _add_ingest_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="CSV file to read")
    p.add_argument("--column", default=None, help="column name or index")
    p.add_argument("--header", choices=("auto", "yes", "no"), default="auto")
    p.add_argument("--tie-policy", choices=("none", "unique", "dither"), default="unique")
    p.add_argument("--epsilon", type=float, default=0.1, help="dither noise bound")
    p.add_argument("--dither-seed", type=int, default=None)
    p.add_argument("--delimiter", default=",")


def _add_detect_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=float, default=DEFAULT_Q, help="global test level")
    p.add_argument("--a", type=float, default=DEFAULT_A, help="geometric weight")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text} must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trimhill")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="tail-index estimate, optionally with auto k0")
    _add_ingest_args(p)
    p.add_argument("--k", required=True, help="number of top order statistics, or 'auto'")
    p.add_argument("--k0", default="0", help="trimming parameter, or 'auto'")
    _add_detect_args(p)
    p.add_argument("--model", choices=sorted(_MODEL_HINTS), default=None,
                   help="model hint for --k auto")
    p.add_argument("--biased", action="store_true", help="report the biased Hill variant")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("detect", help="run the sequential test for k0")
    _add_ingest_args(p)
    p.add_argument("--k", required=True, type=_positive_int)
    _add_detect_args(p)

    p = sub.add_parser("diagnose", help="diagnostic series (trimmed Hill vs k0)")
    _add_ingest_args(p)
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("hillplot", help="classic/trimmed/biased Hill vs k")
    _add_ingest_args(p)
    p.add_argument("--k0", required=True, type=int)
    p.add_argument("--kmin", required=True, type=_positive_int)
    p.add_argument("--kmax", required=True, type=_positive_int)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("qq", help="Pareto quantile plot series")
    _add_ingest_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("simulate", help="run a Monte Carlo scenario from a config file")
    p.add_argument("--config", required=True, help="TOML or JSON config mirroring McConfig")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=_positive_int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    return parser


def _load_sample(args):
    opts = IngestOptions(
        column=args.column,
        header=args.header,
        tie_policy=args.tie_policy,
        epsilon=args.epsilon,
        dither_seed=args.dither_seed,
        delimiter=args.delimiter,
    )
    return ingest_csv(Path(args.input).read_text(), opts)


def _load_config(path: str) -> dict:
    text = Path(path).read_text()
    if path.endswith(".json"):
        return json.loads(text)
    try:
        import tomllib  # py311+
    except ModuleNotFoundError:
        import tomli as tomllib
    return tomllib.loads(text)


def _write_series(out: str, fmt: str | None, payload) -> None:
    fmt = fmt or ("json" if out.endswith(".json") else "csv")
    if isinstance(payload, dict):  # several series keyed by name
        if fmt == "json":
            doc = {name: serialize.series_to_dict(s) for name, s in payload.items()}
            Path(out).write_text(serialize.dumps(doc) + "\n")
        else:
            chunks = [f"# {name}\n{serialize.series_to_csv(s)}" for name, s in payload.items()]
            Path(out).write_text("".join(chunks))
    else:
        if fmt == "json":
            Path(out).write_text(serialize.dumps(serialize.series_to_dict(payload)) + "\n")
        else:
            Path(out).write_text(serialize.series_to_csv(payload))


def _cmd_estimate(args, parser) -> int:
    s = _load_sample(args)
    if args.k == "auto":
        if args.model is None:
            parser.error("--k auto requires --model")
        k = k_opt_default(_MODEL_HINTS[args.model], s.n)
    else:
        try:
            k = int(args.k)
        except ValueError:
            parser.error(f"--k must be an integer or 'auto', got {args.k!r}")
        if k <= 0:
            parser.error(f"--k must be positive, got {k}")

    detection = None
    if args.k0 == "auto":
        detection, estimate = adaptive_trimmed_hill(s, k, args.q, args.a)
        if args.biased:
            estimate = biased_hill(s, detection.k0_hat, k)
    else:
        try:
            k0 = int(args.k0)
        except ValueError:
            parser.error(f"--k0 must be an integer or 'auto', got {args.k0!r}")
        if k0 < 0:
            parser.error(f"--k0 must be >= 0, got {k0}")
        if args.biased:
            estimate = biased_hill(s, k0, k)
        elif k0 == 0:
            estimate = classic_hill(s, k)
        else:
            estimate = trimmed_hill(s, k0, k)

    doc = {"tail_estimate": serialize.estimate_to_dict(estimate)}
    if detection is not None:
        doc["detection"] = serialize.detection_to_dict(detection)
    if args.format == "json":
        print(serialize.dumps(doc))
    else:
        print("kind,k0,k,xi_hat,se")
        e = estimate
        print(f"{e.kind.value},{e.k0},{e.k},{e.xi_hat!r},{e.se!r}")
        if detection is not None:
            print(f"# k0_hat={detection.k0_hat}")
    return 0


def _cmd_detect(args) -> int:
    s = _load_sample(args)
    detection, _ = adaptive_trimmed_hill(s, args.k, args.q, args.a)
    print(serialize.dumps(serialize.detection_to_dict(detection)))
    return 0


def _cmd_simulate(args) -> int:
    cfg = serialize.mcconfig_from_dict(_load_config(args.config))
    report = run_mc(cfg, workers=args.workers)
    fmt = args.format or ("csv" if args.out.endswith(".csv") else "json")
    if fmt == "json":
        Path(args.out).write_text(serialize.dumps(serialize.report_to_dict(report)) + "\n")
    else:
        Path(args.out).write_text(serialize.report_to_csv(report))
    print(f"wrote {args.out} ({report.reps_used} reps, {report.elapsed:.1f}s)")
    return 0


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "estimate":
            return _cmd_estimate(args, parser)
        if args.command == "detect":
            return _cmd_detect(args)
        if args.command == "diagnose":
            s = _load_sample(args)
            _write_series(args.out, args.format, diagnostic_series(s, args.k))
            return 0
        if args.command == "hillplot":
            s = _load_sample(args)
            classic, trimmed, biased = hill_series(s, args.k0, args.kmin, args.kmax)
            _write_series(
                args.out, args.format,
                {"classic": classic, "trimmed": trimmed, "biased": biased},
            )
            return 0
        if args.command == "qq":
            s = _load_sample(args)
            _write_series(args.out, args.format, pareto_qq_series(s))
            return 0
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(create_app(), host=args.bind, port=args.port)
            return 0
    except (TrimHillError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser.error(f"unknown command {args.command!r}")
    return 2


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
