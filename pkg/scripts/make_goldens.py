"""Regenerate the golden HTTP response bodies under tests/golden/.

The fixture dataset is the five-point sample exp(0)..exp(4), whose classic
Hill value at k = 4 is exactly 2.5. Run from the repository root:

    python scripts/make_goldens.py
"""

import math
import pathlib

from fastapi.testclient import TestClient

from trimhill.service import create_app

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

CSV = "".join(f"{math.exp(i)!r}\n" for i in range(5))


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    dataset_id = client.post("/v1/datasets", content=CSV).json()["id"]
    base = f"/v1/datasets/{dataset_id}"
    cases = {
        "estimate_classic.json": f"{base}/estimate?k=4",
        "estimate_trimmed.json": f"{base}/estimate?k=4&k0=1",
        "estimate_auto.json": f"{base}/estimate?k=4&k0=auto",
        "detect.json": f"{base}/detect?k=4",
        "diagnostic.json": f"{base}/diagnostic?k=4",
        "hillplot.json": f"{base}/hillplot?k0=1&kmin=2&kmax=4",
        "qq.json": f"{base}/qq",
    }
    for name, url in cases.items():
        resp = client.get(url)
        resp.raise_for_status()
        (GOLDEN_DIR / name).write_bytes(resp.content)
        print(f"wrote tests/golden/{name} ({len(resp.content)} bytes)")


if __name__ == "__main__":
    main()
