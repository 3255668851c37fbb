"""Generate the bundled demo datasets for the web UI.

Writes a contaminated sample (seeded Pareto(1,2), n=500, the top 15 gaps
exponentiated with L=3) and a clean one, together with the generation
config, into frontend/public/. The seed below was chosen so that the
sequential test at k=499 recovers exactly 15 outliers; the script verifies
that before writing anything.
"""

import json
import pathlib

from trimhill import Exponentiated, Pareto, adaptive_trimmed_hill, inject, sample

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "public"

SEED = 2024
N = 500
K0 = 15
L = 3.0


def main() -> None:
    clean = sample(Pareto(1.0, 2.0), N, SEED)
    contaminated = inject(clean, Exponentiated(k0=K0, L=L))
    det, est = adaptive_trimmed_hill(contaminated, N - 1)
    if det.k0_hat != K0:
        raise SystemExit(f"seed {SEED} recovers k0_hat={det.k0_hat}, expected {K0}")
    det_clean, _ = adaptive_trimmed_hill(clean, N - 1)
    if det_clean.k0_hat != 0:
        raise SystemExit(f"clean sample flags k0_hat={det_clean.k0_hat}, expected 0")

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name, s in (("demo_contaminated.csv", contaminated), ("demo_clean.csv", clean)):
        path = OUT_DIR / name
        path.write_text("loss\n" + "".join(f"{float(v)!r}\n" for v in s.values))
        print(f"wrote {path} ({s.n} values)")
    config = {
        "model": {"variant": "pareto", "sigma": 1.0, "xi": 2.0},
        "n": N,
        "seed": SEED,
        "outliers": {"variant": "exponentiated", "k0": K0, "L": L},
        "verified": {
            "k0_hat_contaminated": det.k0_hat,
            "k0_hat_clean": det_clean.k0_hat,
            "adaptive_xi_hat": est.xi_hat,
        },
    }
    (OUT_DIR / "demo_config.json").write_text(json.dumps(config, indent=2) + "\n")
    print(f"wrote {OUT_DIR / 'demo_config.json'}")


if __name__ == "__main__":
    main()
