"""RMSE of the classic vs adaptive estimator on clean data.

On outlier-free samples the adaptive estimator should track the classic
one closely (ratio near 1 at every k), which is the price-of-adaptivity
check for the sequential test.
"""

import argparse

from trimhill import AbsT, Burr, McConfig, Pareto, run_mc

MODELS = {
    "pareto": (Pareto(1.0, 2.0), (50, 100, 200, 500, 800)),
    "burr": (Burr(1.0, 0.5, 2.0), (25, 50, 97, 150)),
    "abst": (AbsT(2.0), (100, 200, 464, 600)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--reps", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=707)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    print(f"{'model':8s} {'k':>5s} {'rmse_classic':>13s} {'rmse_adaptive':>14s} {'ratio':>6s}")
    for name, (model, k_grid) in MODELS.items():
        cfg = McConfig(model=model, n=args.n, k_grid=k_grid, reps=args.reps, seed=args.seed)
        report = run_mc(cfg, workers=args.workers)
        rmse = {(r.estimator, r.k): r.rmse for r in report.estimates}
        for k in k_grid:
            c, a = rmse[("classic", k)], rmse[("adaptive", k)]
            print(f"{name:8s} {k:5d} {c:13.4f} {a:14.4f} {a / c:6.3f}")


if __name__ == "__main__":
    main()
