"""Recovery of the number of planted extreme outliers.

Three scenarios: exponentiated gaps (L=3) on Pareto, scaled gaps (C=200)
on Pareto, and exponentiated gaps on |T|(2). Each row reports the mean and
SD of k0_hat over seeded replications.
"""

import argparse

from trimhill import AbsT, Exponentiated, McConfig, Pareto, Scaled, run_mc

SCENARIOS = [
    ("pareto exp L=3", Pareto(1.0, 2.0), 100, 99, Exponentiated(k0=5, L=3.0)),
    ("pareto exp L=3", Pareto(1.0, 2.0), 300, 299, Exponentiated(k0=15, L=3.0)),
    ("pareto exp L=3", Pareto(1.0, 2.0), 500, 499, Exponentiated(k0=30, L=3.0)),
    ("pareto scaled C=200", Pareto(1.0, 2.0), 500, 499, Scaled(k0=15, C=200.0)),
    ("pareto scaled C=200", Pareto(1.0, 2.0), 500, 499, Scaled(k0=30, C=200.0)),
    ("abst exp L=3", AbsT(2.0), 1000, 200, Exponentiated(k0=10, L=3.0)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=404)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    print(f"{'scenario':22s} {'n':>5s} {'k':>5s} {'k0':>4s} {'mean':>7s} {'sd':>6s}")
    for label, model, n, k, outliers in SCENARIOS:
        cfg = McConfig(
            model=model, n=n, k_grid=(k,), outliers=outliers,
            reps=args.reps, seed=args.seed,
        )
        row = run_mc(cfg, workers=args.workers).detection[0]
        print(f"{label:22s} {n:5d} {k:5d} {outliers.k0:4d} {row.k0_mean:7.2f} {row.k0_sd:6.2f}")


if __name__ == "__main__":
    main()
