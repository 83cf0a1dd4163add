from fractions import Fraction

import pytest

from sabar.config import Config


@pytest.fixture(autouse=True)
def no_thread_override(monkeypatch):
    monkeypatch.delenv("SABAR_THREADS", raising=False)


def test_defaults(tmp_path):
    config = Config.load(tmp_path / "missing.json")
    assert config.grid_n == 32
    assert config.approx_width == Fraction(1, 1000)
    assert config.dnf_atom_budget == 64
    assert config.max_exact_dim == 3
    assert config.threads == 1


def test_save_and_load(tmp_path):
    path = tmp_path / "nested" / "config.json"
    config = Config(data_dir=tmp_path, grid_n=16, approx_width=Fraction(1, 100), threads=2)
    config.save(path)
    loaded = Config.load(path)
    assert loaded.grid_n == 16
    assert loaded.approx_width == Fraction(1, 100)
    assert loaded.threads == 2
    assert loaded.data_dir == tmp_path


def test_from_dict():
    config = Config.from_dict({"log_level": "debug", "dnf_atom_budget": "8"})
    assert config.log_level == "DEBUG"
    assert config.dnf_atom_budget == 8
    assert config.grid_n == 32


def test_unreadable_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert Config.load(path).grid_n == 32


def test_environment_overrides_threads(tmp_path, monkeypatch):
    monkeypatch.setenv("SABAR_THREADS", "5")
    assert Config.load(tmp_path / "missing.json").threads == 5
