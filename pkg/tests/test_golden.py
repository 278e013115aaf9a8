import json
import shutil

import pytest

from scrollbetti.checks import check_fixture
from scrollbetti.golden import ENV_VAR, Fixture, fixture_dir, load_all, load_fixture
from scrollbetti.table import parse_json

STORE = load_all()


def test_store_is_complete():
    kinds = {fx.kind for fx in STORE.values()}
    assert kinds == {"divisor", "module_e", "surface", "reference", "formula_not_beta"}
    assert len(STORE) == 23


@pytest.mark.parametrize("name", sorted(STORE))
def test_fixture_agrees_with_engine(name):
    verdict = check_fixture(STORE[name], STORE)
    assert verdict.passed, str(verdict)


@pytest.mark.parametrize("name", sorted(STORE))
def test_fixture_file_parses_as_a_table(name):
    text = (fixture_dir() / f"{name}.json").read_text(encoding="utf-8")
    assert parse_json(text) == STORE[name].table


def test_env_override(tmp_path, monkeypatch):
    shutil.copy(fixture_dir() / "s23_h_11f.json", tmp_path)
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert fixture_dir() == tmp_path
    assert list(load_all()) == ["s23_h_11f"]
    assert load_fixture("s23_h_11f").params == {"a1": 2, "a2": 3, "a": 1, "b": 11}


def test_altered_fixture_is_caught(tmp_path):
    data = json.loads((fixture_dir() / "s23_h_11f.json").read_text(encoding="utf-8"))
    data["table"]["rows"][0]["entries"][0] += 1
    fx = Fixture.from_dict(data)
    verdict = check_fixture(fx)
    assert not verdict.passed
    assert "(0, 7)" in verdict.detail


def test_formula_fixture_needs_its_reference():
    fx = STORE["s22_h_4f_formula"]
    assert not check_fixture(fx, {}).passed


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        Fixture.from_dict({"name": "x", "kind": "guess", "params": {}, "table": {"columns": 1, "rows": []}})


def test_duplicate_names_rejected(tmp_path):
    src = fixture_dir() / "surface_r4.json"
    shutil.copy(src, tmp_path / "a.json")
    shutil.copy(src, tmp_path / "b.json")
    with pytest.raises(ValueError):
        load_all(tmp_path)
