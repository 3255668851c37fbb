import json
import math
import pathlib

import pytest
from fastapi.testclient import TestClient

from trimhill.service import create_app

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

S5_CSV = "".join(f"{math.exp(i)!r}\n" for i in range(5))


@pytest.fixture
def client():
    return TestClient(create_app())


@pytest.fixture
def dataset(client):
    resp = client.post("/v1/datasets", content=S5_CSV)
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["n"] == 5
    return doc["id"]


def golden(name: str) -> bytes:
    return (GOLDEN_DIR / name).read_bytes()


class TestGoldenBodies:
    # regenerate with scripts/make_goldens.py after an intentional format change

    @pytest.mark.parametrize(
        "name,path",
        [
            ("estimate_classic.json", "estimate?k=4"),
            ("estimate_trimmed.json", "estimate?k=4&k0=1"),
            ("estimate_auto.json", "estimate?k=4&k0=auto"),
            ("detect.json", "detect?k=4"),
            ("diagnostic.json", "diagnostic?k=4"),
            ("hillplot.json", "hillplot?k0=1&kmin=2&kmax=4"),
            ("qq.json", "qq"),
        ],
    )
    def test_body_byte_identical(self, client, dataset, name, path):
        resp = client.get(f"/v1/datasets/{dataset}/{path}")
        assert resp.status_code == 200
        assert resp.content == golden(name)

    def test_repeated_get_stable(self, client, dataset):
        url = f"/v1/datasets/{dataset}/estimate?k=4&k0=auto"
        assert client.get(url).content == client.get(url).content


class TestUpload:
    def test_tie_policy_query(self, client):
        resp = client.post("/v1/datasets?tie_policy=none", content="5\n5\n3\n")
        assert resp.json()["n"] == 3
        resp = client.post("/v1/datasets?tie_policy=unique", content="5\n5\n3\n")
        assert resp.json()["n"] == 2

    def test_dither_requires_seed(self, client):
        resp = client.post("/v1/datasets?tie_policy=dither", content="5\n5\n3\n")
        assert resp.status_code == 422
        assert "error" in resp.json()

    def test_empty_body(self, client):
        resp = client.post("/v1/datasets", content="")
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "MalformedBody"

    def test_nonpositive_rejected(self, client):
        resp = client.post("/v1/datasets", content="3\n-1\n")
        assert resp.status_code == 422
        assert resp.json()["error"]["code"] == "NonPositiveValue"

    def test_size_cap(self):
        client = TestClient(create_app(max_values=3))
        resp = client.post("/v1/datasets", content="1\n2\n3\n4\n")
        assert resp.status_code == 422
        assert resp.json()["error"]["code"] == "TooLarge"


class TestErrors:
    def test_unknown_dataset(self, client):
        resp = client.get("/v1/datasets/deadbeef/estimate?k=4")
        assert resp.status_code == 404
        assert resp.json()["error"]["code"] == "UnknownDataset"

    def test_k_out_of_range(self, client, dataset):
        for k in (1, 5):
            resp = client.get(f"/v1/datasets/{dataset}/estimate?k={k}")
            assert resp.status_code == 422
            assert resp.json()["error"]["code"] == "KOutOfRange"

    def test_malformed_k(self, client, dataset):
        resp = client.get(f"/v1/datasets/{dataset}/estimate?k=four")
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "MalformedRequest"

    def test_malformed_k0(self, client, dataset):
        resp = client.get(f"/v1/datasets/{dataset}/estimate?k=4&k0=some")
        assert resp.status_code == 400

    def test_k0_out_of_range(self, client, dataset):
        resp = client.get(f"/v1/datasets/{dataset}/estimate?k=4&k0=4")
        assert resp.status_code == 422
        assert resp.json()["error"]["code"] == "K0OutOfRange"


class TestSimulate:
    CONFIG = {
        "model": {"variant": "pareto", "sigma": 1.0, "xi": 2.0},
        "n": 40,
        "k_grid": [10, 20],
        "reps": 8,
        "seed": 2,
    }

    def test_runs_and_reports(self, client):
        resp = client.post("/v1/simulate", json=self.CONFIG)
        assert resp.status_code == 200
        doc = resp.json()
        assert doc["reps_used"] == 8
        assert len(doc["estimates"]) == 4
        assert "elapsed" not in doc

    def test_deterministic_body(self, client):
        a = client.post("/v1/simulate", json=self.CONFIG).content
        b = client.post("/v1/simulate", json=self.CONFIG).content
        assert a == b

    def test_budget(self):
        client = TestClient(create_app(sim_budget=100))
        resp = client.post("/v1/simulate", json=self.CONFIG)
        assert resp.status_code == 422
        assert resp.json()["error"]["code"] == "BudgetExceeded"

    def test_malformed_body(self, client):
        resp = client.post("/v1/simulate", content="not json")
        assert resp.status_code == 400
        resp = client.post("/v1/simulate", json={"model": {"variant": "zeta"}, "n": 5, "k_grid": [2]})
        assert resp.status_code == 422
