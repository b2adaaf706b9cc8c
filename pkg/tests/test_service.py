"""Service endpoints driven through the in-process client, plus config loading."""

import json

import pytest

from paperrec.errors import InvalidConfig, IoFailure
from paperrec.rec.index import index_cache_path
from paperrec.service.client import RemoteServiceError, ServiceClient
from paperrec.service.state import ServiceConfig


@pytest.fixture
def corpus_path(tmp_path):
    return tmp_path / "corpus.jsonl"


@pytest.fixture
def client(corpus_path):
    return ServiceClient(config=ServiceConfig(corpus=str(corpus_path)))


def seed_synthetic(client, **overrides):
    body = {"areas": 2, "papers_per_area": 8, "authors_per_area": 4, "seed": 3}
    body.update(overrides)
    return client.post("/synth", body)


class TestEndpoints:
    def test_health(self, client):
        data = client.get("/health")
        assert data["status"] == "ok"
        assert data["version"]

    def test_synth_then_stats(self, client):
        result = seed_synthetic(client)
        assert result["records_written"] == 16
        stats = client.get("/stats")
        assert stats["papers"] == 16
        assert stats["areas"] == {"area0": 8, "area1": 8}
        assert stats["authors"] == 8
        assert stats["rating_entries"] >= 16
        assert 0.0 < stats["pairwise_max"] <= 1.0

    def test_synth_append(self, client):
        seed_synthetic(client)
        seed_synthetic(client, append=True, seed=4)
        assert client.get("/stats")["papers"] == 32

    def test_recommend_known_author(self, client):
        seed_synthetic(client)
        data = client.post("/recommend", {"author": "Ida00 Area0Scholar00", "n": 5})
        assert data["author"] == "Ida00 Area0Scholar00"
        assert data["strategy"] == "naive"
        items = data["items"]
        assert items
        assert [item["rank"] for item in items] == list(range(1, len(items) + 1))
        scores = [item["score"] for item in items]
        assert scores == sorted(scores, reverse=True)
        assert all(item["title"] for item in items)
        assert all(0.0 < item["score"] <= 5.0 for item in items)

    def test_recommend_itemcf_strategy(self, client):
        seed_synthetic(client)
        data = client.post(
            "/recommend", {"author": "Ida00 Area0Scholar00", "n": 5, "strategy": "itemcf"}
        )
        assert data["strategy"] == "itemcf"
        assert all(item["basis"] in {"ratings", "content"} for item in data["items"])

    def test_unknown_author_is_404_with_suggestions(self, client):
        seed_synthetic(client)
        with pytest.raises(RemoteServiceError) as excinfo:
            client.post("/recommend", {"author": "Nobody Nowhere"})
        err = excinfo.value
        assert err.http_status == 404
        assert err.code == "unknown_user"
        assert err.exit_code == 2
        assert isinstance(err.payload()["suggestions"], list)
        assert err.payload()["suggestions"]

    def test_ambiguous_author_is_409(self, client, fixtures_root):
        client.post(
            "/ingest",
            {
                "site": "acm_dl",
                "venue": "CSCW",
                "year": 2006,
                "listings": [str(fixtures_root / "acm_dl" / "toc.html")],
                "fixtures": str(fixtures_root),
            },
        )
        with pytest.raises(RemoteServiceError) as excinfo:
            client.post("/recommend", {"author": "J. Doe"})
        err = excinfo.value
        assert err.http_status == 409
        assert err.code == "ambiguous_author"
        assert len(err.payload()["candidates"]) == 3

    def test_insufficient_eval_authors_is_409(self, client):
        seed_synthetic(client)
        with pytest.raises(RemoteServiceError) as excinfo:
            client.post("/evaluate", {"per_area": 999})
        assert excinfo.value.http_status == 409
        assert excinfo.value.code == "insufficient_authors"

    def test_request_validation_failure_is_io_failure(self, client):
        seed_synthetic(client)
        with pytest.raises(IoFailure):
            client.post("/recommend", {"author": ["not", "a", "string"]})
        with pytest.raises(IoFailure):
            client.post("/synth", {"areas": 2, "papers_per_area": 8, "authors_per_area": 4, "overlap": 2.0})

    def test_stats_without_corpus_is_usage_error(self, client):
        with pytest.raises(RemoteServiceError) as excinfo:
            client.get("/stats")
        err = excinfo.value
        assert err.code == "io_failure"
        assert err.http_status == 400
        assert err.exit_code == 1
        assert "ingest" in str(err)

    def test_ingest_counts(self, client, fixtures_root, corpus_path):
        site_dir = fixtures_root / "ieee_xplore"
        data = client.post(
            "/ingest",
            {
                "site": "ieee_xplore",
                "venue": "ICSE",
                "year": 2007,
                "listings": [str(site_dir / "listing_p1.html"), str(site_dir / "listing_p2.html")],
                "fixtures": str(fixtures_root),
            },
        )
        assert data["pages_parsed"] == 7
        assert data["records_written"] == 6
        assert data["malformed_skipped"] == 1
        assert data["corpus"] == str(corpus_path)
        assert client.get("/stats")["papers"] == 6

    def test_evaluate_endpoint(self, client):
        seed_synthetic(client, papers_per_area=12, authors_per_area=5)
        data = client.post("/evaluate", {"per_area": 3, "top_n": 5, "seed": 3})
        assert data["overall_accuracy"] == 1.0
        assert data["row_areas"] == ["area0", "area1"]
        assert "overall accuracy: 100.00%" in data["table"]
        assert any(line.startswith("accuracy.overall\t") for line in data["machine"])
        assert data["counts"]["area0"]["area1"] == 0

    def test_index_reports_vocabulary_and_terms(self, client):
        seed_synthetic(client)
        data = client.post("/index", {"dump_terms": True})
        assert data["papers"] == 16
        assert data["cached"] is False
        assert len(data["terms"]) == data["vocabulary_size"]
        assert all("\t" in line for line in data["terms"])
        plain = client.post("/index", {})
        assert plain["terms"] is None


class TestIndexCache:
    def test_second_process_loads_cache(self, corpus_path):
        config = ServiceConfig(corpus=str(corpus_path))
        first = ServiceClient(config=config)
        seed_synthetic(first)
        built = first.post("/index", {})
        assert built["cached"] is False
        assert index_cache_path(corpus_path).exists()

        second = ServiceClient(config=config)
        loaded = second.post("/index", {})
        assert loaded["cached"] is True
        assert loaded["pairwise_max"] == built["pairwise_max"]
        assert loaded["vocabulary_size"] == built["vocabulary_size"]

    def test_force_rebuild_skips_cache(self, corpus_path):
        config = ServiceConfig(corpus=str(corpus_path))
        first = ServiceClient(config=config)
        seed_synthetic(first)
        first.post("/index", {})

        second = ServiceClient(config=config)
        rebuilt = second.post("/index", {"force": True})
        assert rebuilt["cached"] is False

    def test_no_cache_config_writes_nothing(self, corpus_path):
        config = ServiceConfig(corpus=str(corpus_path), no_cache=True)
        client = ServiceClient(config=config)
        seed_synthetic(client)
        client.post("/index", {})
        assert not index_cache_path(corpus_path).exists()

    def test_corpus_edit_invalidates_cache(self, corpus_path):
        config = ServiceConfig(corpus=str(corpus_path))
        first = ServiceClient(config=config)
        seed_synthetic(first)
        first.post("/index", {})
        seed_synthetic(first, seed=9)  # rewrites the corpus file

        second = ServiceClient(config=config)
        assert second.post("/index", {})["cached"] is False


class TestServiceConfig:
    def test_from_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"corpus": "mine.jsonl", "top_n": 3, "seed": 7}))
        config = ServiceConfig.from_file(path)
        assert config.corpus == "mine.jsonl"
        assert config.top_n == 3
        assert config.seed == 7
        assert config.no_cache is False

    def test_unknown_keys_rejected(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"corpsu": "typo.jsonl"}))
        with pytest.raises(InvalidConfig) as excinfo:
            ServiceConfig.from_file(path)
        assert "corpsu" in str(excinfo.value)

    def test_invalid_json_rejected(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(InvalidConfig):
            ServiceConfig.from_file(path)
        path.write_text(json.dumps(["a", "list"]))
        with pytest.raises(InvalidConfig):
            ServiceConfig.from_file(path)

    def test_missing_file_is_io_failure(self, tmp_path):
        with pytest.raises(IoFailure):
            ServiceConfig.from_file(tmp_path / "absent.json")

    def test_top_n_validated(self):
        with pytest.raises(InvalidConfig):
            ServiceConfig(top_n=0)

    def test_override_skips_none(self):
        base = ServiceConfig(corpus="a.jsonl", top_n=5)
        changed = base.override(corpus="b.jsonl", top_n=None, seed=None)
        assert changed.corpus == "b.jsonl"
        assert changed.top_n == 5
        assert base.corpus == "a.jsonl"
