import json
import logging
import os
from pathlib import Path

import pytest

from dcores.beta_search import EnumerationQuery, enumerate_ss1
from dcores.errors import ParameterError, UnboundedError
from dcores.partition_core import CoreSpec
from dcores.reports import (
    PAPER_TABLES,
    ResultCache,
    TableSpec,
    build_table,
    cache_key,
    cached_query,
    default_cache_dir,
    render_table,
    table_cells,
    verify_conjecture,
)

GOLDEN = Path(__file__).parent / "golden"
EXT = {"markdown": "md", "csv": "csv", "latex": "tex"}


@pytest.mark.parametrize("table", ["1", "2"])
@pytest.mark.parametrize("fmt", ["markdown", "csv", "latex"])
def test_paper_tables_match_golden(table, fmt):
    base = PAPER_TABLES[table]
    spec = TableSpec(base.r, base.d_values, base.s_values, "beta", fmt)
    expected = (GOLDEN / f"table{table}.{EXT[fmt]}").read_bytes().decode()
    assert build_table(spec) == expected


@pytest.mark.parametrize("table", ["1", "2"])
def test_table_sources_agree(table):
    base = PAPER_TABLES[table]
    cells = {src: table_cells(TableSpec(base.r, base.d_values, base.s_values, src))
             for src in ("beta", "brute", "formula")}
    assert cells["beta"] == cells["brute"] == cells["formula"]
    assert sum(len(row) for row in cells["beta"]) == (48 if table == "1" else 40)


def test_n2_row_from_formula():
    spec = TableSpec(1, [2], range(1, 9), "formula", "json")
    data = json.loads(build_table(spec))
    assert data["cells"] == [[1, 2, 3, 4, 6, 9, 13, 19]]
    assert data["conjectural"] is False


def test_conjectural_tables_are_labelled():
    spec = TableSpec(2, [3], range(1, 10), "formula", "markdown")
    text = build_table(spec)
    assert "CONJECTURAL" in text
    assert text.splitlines()[-1] == "| 3 | 1 | 2 | 3 | 5 | 6 | 8 | 11 | 16 | 22 |"
    assert json.loads(render_table(spec, table_cells(spec), "json"))["conjectural"] is True


def test_table_spec_validation():
    with pytest.raises(ParameterError):
        TableSpec(2, [], [1])
    with pytest.raises(ParameterError):
        TableSpec(2, [2], [1], source="guess")
    with pytest.raises(ParameterError):
        TableSpec(2, [2], [1], fmt="html")


def test_table_propagates_bound_errors():
    with pytest.raises(UnboundedError):
        build_table(TableSpec(2, [1], [2], "beta"))


def test_verify_paper_range():
    report = verify_conjecture(7, 9)
    summary = report.summary()
    assert summary["checked"] == 28 * 9
    assert summary["mismatched"] == 0 and summary["first_mismatch"] is None
    rec = next(r for r in report.records if (r.d, r.r, r.s) == (2, 2, 8))
    assert rec.enumerated == rec.predicted == 23


def test_verify_d1_is_fibonacci():
    report = verify_conjecture(1, 12)
    assert [r.enumerated for r in report.records] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
    assert report.summary()["mismatched"] == 0


def test_verify_reports_mismatch_without_raising(monkeypatch, tmp_path):
    import dcores.reports as rp
    real = rp.conjectured_count

    def planted(d, r, s):
        return 999 if (d, r, s) == (2, 2, 3) else real(d, r, s)

    monkeypatch.setattr(rp, "conjectured_count", planted)
    report = verify_conjecture(2, 4, d_min=2, witness_dir=tmp_path)
    summary = report.summary()
    assert summary["mismatched"] == 1
    first = summary["first_mismatch"]
    assert (first["d"], first["r"], first["s"], first["enumerated"]) == (2, 2, 3, 4)
    assert len(first["witnesses"]) == 4
    saved = json.loads((tmp_path / "mismatch_d2_r2_s3.json").read_text())
    assert saved["witnesses"] == first["witnesses"]
    assert json.loads(json.dumps(report.to_dict()))["prediction"] == "CONJECTURAL"


def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    q = EnumerationQuery(CoreSpec({6, 7}), 2, engine="beta")
    assert cache.load(q) is None
    fresh = cached_query(q, cache)
    loaded = cache.load(q)
    assert loaded is not None
    assert loaded.to_dict(q) == fresh.to_dict(q) == enumerate_ss1(6, 2).to_dict(q)
    assert loaded.partitions == fresh.partitions


def test_cache_stale_schema(tmp_path):
    q = EnumerationQuery(CoreSpec({6, 7}), 2, engine="beta")
    ResultCache(tmp_path, schema=0).store(q, enumerate_ss1(6, 2))
    path = ResultCache(tmp_path, schema=0).path(q)
    # Same file location, different schema inside: must miss.
    data = json.loads(path.read_text())
    target = ResultCache(tmp_path).path(q)
    target.write_text(json.dumps(data))
    assert ResultCache(tmp_path).load(q) is None


def test_cache_corruption_recomputes(tmp_path, caplog):
    cache = ResultCache(tmp_path)
    q = EnumerationQuery(CoreSpec({6, 7}), 2, engine="beta")
    cache.directory.mkdir(parents=True, exist_ok=True)
    cache.path(q).write_text("{not json")
    with caplog.at_level(logging.WARNING):
        assert cache.load(q) is None
        assert cached_query(q, cache).count == 9
    assert "corrupt" in caplog.text
    assert cache.load(q).count == 9


def test_cache_unwritable_dir(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cache = ResultCache(blocker / "sub")
    q = EnumerationQuery(CoreSpec({6, 7}), 2, engine="beta")
    with caplog.at_level(logging.WARNING):
        assert cached_query(q, cache).count == 9
    assert "not writable" in caplog.text


def test_cache_keys_distinct():
    a = EnumerationQuery(CoreSpec({6, 7}), 2)
    b = EnumerationQuery(CoreSpec({6, 7}), 3)
    c = EnumerationQuery(CoreSpec({6, 7}), 2, bound=6)
    d = EnumerationQuery(CoreSpec({6, 7}), 2, engine="brute")
    keys = {cache_key(q) for q in (a, b, c, d)}
    assert len(keys) == 4
    assert cache_key(a) == cache_key(EnumerationQuery(CoreSpec([7, 6]), 2))
    assert cache_key(a) != cache_key(a, schema=2)


def test_cache_dir_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("DCORES_CACHE_DIR", str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"
    monkeypatch.delenv("DCORES_CACHE_DIR")
    assert default_cache_dir() == Path.home() / ".cache" / "dcores"
