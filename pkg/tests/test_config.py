import json

import pytest

from data_utils import DEFAULT_CORPUS, load_corpus
from sparing.config import DEFAULT_BNB_CAP, DEFAULT_EXHAUSTIVE_CAP, Settings, load_settings
from sparing.errors import ConfigError
from sparing.services.audit_service import expand_range_spec
from sparing.utils.parsing import parse_family_spec

ENV_KEYS = ("SPARING_EXHAUSTIVE_CAP", "SPARING_BNB_CAP", "SPARING_WORKERS", "SPARING_LOG_LEVEL", "SPARING_CORPUS_PATH")


@pytest.fixture
def clean_env(monkeypatch):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    return monkeypatch


class TestSettings:
    def test_defaults(self, clean_env):
        s = load_settings()
        assert s == Settings()
        assert (s.exhaustive_cap, s.bnb_cap, s.workers) == (DEFAULT_EXHAUSTIVE_CAP, DEFAULT_BNB_CAP, 1)

    def test_environment(self, clean_env):
        clean_env.setenv("SPARING_EXHAUSTIVE_CAP", "12")
        clean_env.setenv("SPARING_WORKERS", "3")
        clean_env.setenv("SPARING_LOG_LEVEL", "debug")
        clean_env.setenv("SPARING_CORPUS_PATH", "/tmp/corpus.json")
        s = load_settings()
        assert (s.exhaustive_cap, s.workers, s.log_level, s.corpus_path) == (12, 3, "DEBUG", "/tmp/corpus.json")

    @pytest.mark.parametrize(
        "key, value",
        [
            ("SPARING_BNB_CAP", "lots"),
            ("SPARING_WORKERS", "0"),
            ("SPARING_LOG_LEVEL", "chatty"),
        ],
    )
    def test_invalid_environment(self, clean_env, key, value):
        clean_env.setenv(key, value)
        with pytest.raises(ConfigError):
            load_settings()

    def test_with_cap(self):
        s = Settings()
        assert s.with_cap("auto", None) is s
        assert s.with_cap("exhaustive", 10).exhaustive_cap == 10
        assert s.with_cap("bnb", 30).bnb_cap == 30
        auto = s.with_cap("auto", 12)
        assert (auto.exhaustive_cap, auto.bnb_cap) == (12, 12)
        with pytest.raises(ConfigError):
            s.with_cap("auto", 0)


class TestCorpus:
    def test_custom_file(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps({"specs": ["cycle:3..5", " ", "complete:4"]}), encoding="utf-8")
        assert load_corpus(str(path)) == ["cycle:3..5", "complete:4"]

    @pytest.mark.parametrize("content", ["not json", json.dumps(["cycle:3"]), json.dumps({"specs": [3]})])
    def test_malformed_file_falls_back(self, tmp_path, content):
        path = tmp_path / "corpus.json"
        path.write_text(content, encoding="utf-8")
        assert load_corpus(str(path)) == DEFAULT_CORPUS

    def test_missing_file_falls_back(self, tmp_path):
        assert load_corpus(str(tmp_path / "absent.json")) == DEFAULT_CORPUS

    def test_builtin_corpus_is_valid(self):
        for text in load_corpus():
            for instance in expand_range_spec(text):
                parse_family_spec(instance)
