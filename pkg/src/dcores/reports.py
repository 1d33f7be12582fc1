"""Count tables, conjecture sweeps, and the on-disk result cache."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
import tempfile
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from .beta_search import ENGINES, EnumerationQuery, EnumerationResult, run_query
from .errors import ParameterError
from .formulas import conjectured_count, count_ss1
from .partition_core import CoreSpec

log = logging.getLogger(__name__)

FORMATS = ("markdown", "csv", "latex", "json")
SOURCES = ENGINES + ("formula",)
CACHE_SCHEMA = 1
CACHE_ENV = "DCORES_CACHE_DIR"


# -- cache --------------------------------------------------------------------

def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "dcores"


def cache_key(query: EnumerationQuery, schema: int = CACHE_SCHEMA) -> str:
    payload = dict(query.to_dict(), engine=query.engine, schema=schema)
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


class ResultCache:
    """Content-addressed JSON files, one per query.

    Anything unreadable or written under another schema is a miss.
    """

    def __init__(self, directory: str | os.PathLike | None = None, schema: int = CACHE_SCHEMA):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.schema = schema

    def path(self, query: EnumerationQuery) -> Path:
        return self.directory / f"{cache_key(query, self.schema)}.json"

    def load(self, query: EnumerationQuery) -> EnumerationResult | None:
        path = self.path(query)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
            if data.get("schema") != self.schema or data.get("query") != query.to_dict():
                return None
            return EnumerationResult.from_dict(data["result"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache entry %s (%s)", path, exc)
            return None

    def store(self, query: EnumerationQuery, result: EnumerationResult) -> bool:
        record = {"schema": self.schema, "query": query.to_dict(), "engine": query.engine,
                  "result": result.to_dict()}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(record, fh, separators=(",", ":"))
            os.replace(tmp, self.path(query))
        except OSError as exc:
            log.warning("cache directory %s not writable, continuing uncached (%s)",
                        self.directory, exc)
            return False
        return True


def cached_query(query: EnumerationQuery, cache: ResultCache | None = None) -> EnumerationResult:
    if cache is None:
        return run_query(query)
    hit = cache.load(query)
    if hit is not None:
        return hit
    result = run_query(query)
    cache.store(query, result)
    return result


# -- tables -------------------------------------------------------------------

@dataclass(frozen=True)
class TableSpec:
    r: int
    d_values: Sequence[int]
    s_values: Sequence[int]
    source: str = "beta"
    fmt: str = "markdown"

    def __post_init__(self):
        if not self.d_values or not self.s_values:
            raise ParameterError("table ranges must be nonempty")
        if self.source not in SOURCES:
            raise ParameterError(f"source must be one of {SOURCES}, got {self.source!r}")
        if self.fmt not in FORMATS:
            raise ParameterError(f"format must be one of {FORMATS}, got {self.fmt!r}")

    @property
    def conjectural(self) -> bool:
        return self.source == "formula" and self.r != 1


PAPER_TABLES = {
    "1": TableSpec(2, range(2, 8), range(1, 9)),
    "2": TableSpec(3, range(3, 8), range(1, 9)),
    "n2": TableSpec(1, [2], range(1, 9)),
    "n32": TableSpec(2, [3], range(1, 10)),
}


def table_cells(spec: TableSpec, cache: ResultCache | None = None) -> list[list[int]]:
    rows = []
    for d in spec.d_values:
        row = []
        for s in spec.s_values:
            if spec.source == "formula":
                row.append(count_ss1(d, s) if spec.r == 1 else conjectured_count(d, spec.r, s))
            else:
                query = EnumerationQuery(CoreSpec({s, s + spec.r}), d, engine=spec.source)
                row.append(cached_query(query, cache).count)
        rows.append(row)
    return rows


def _corner(spec: TableSpec) -> str:
    label = f"d\\(s,s+{spec.r})"
    return label + " [CONJECTURAL]" if spec.conjectural else label


def render_table(spec: TableSpec, cells: list[list[int]], fmt: str | None = None) -> str:
    fmt = fmt or spec.fmt
    cols = [f"({s},{s + spec.r})" for s in spec.s_values]
    if fmt == "markdown":
        lines = ["| " + " | ".join([_corner(spec)] + cols) + " |",
                 "|" + "---|" * (len(cols) + 1)]
        for d, row in zip(spec.d_values, cells):
            lines.append("| " + " | ".join(map(str, [d] + row)) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow([_corner(spec)] + cols)
        for d, row in zip(spec.d_values, cells):
            writer.writerow([d] + row)
        return buf.getvalue()
    if fmt == "latex":
        corner = f"\\backslashbox{{$d$}}{{$(s,s+{spec.r})$}}"
        if spec.conjectural:
            corner += " (conjectural)"
        lines = [f"\\begin{{tabular}}{{ *{{{len(cols) + 1}}}{{|c}}|}}",
                 "\\hline",
                 " & ".join([corner] + [f"${c}$" for c in cols]) + " \\\\",
                 "\\hline"]
        for d, row in zip(spec.d_values, cells):
            lines.append(" & ".join(map(str, [d] + row)) + " \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        data = {"r": spec.r, "source": spec.source, "conjectural": spec.conjectural,
                "d": list(spec.d_values), "s": list(spec.s_values), "cells": cells}
        return json.dumps(data, indent=2) + "\n"
    raise ParameterError(f"format must be one of {FORMATS}, got {fmt!r}")


def build_table(spec: TableSpec, cache: ResultCache | None = None) -> str:
    return render_table(spec, table_cells(spec, cache))


# -- conjecture sweep ---------------------------------------------------------

@dataclass
class VerificationRecord:
    d: int
    r: int
    s: int
    enumerated: int
    predicted: int
    match: bool
    wall_time: float
    witnesses: list[list[int]] | None = None


@dataclass
class VerificationReport:
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> list[VerificationRecord]:
        return [rec for rec in self.records if not rec.match]

    def summary(self) -> dict:
        bad = self.mismatches
        return {"checked": self.checked, "matched": self.checked - len(bad),
                "mismatched": len(bad),
                "first_mismatch": asdict(bad[0]) if bad else None}

    def to_dict(self) -> dict:
        return {"prediction": "CONJECTURAL", "summary": self.summary(),
                "records": [asdict(rec) for rec in self.records]}


def verify_conjecture(d_max: int, s_max: int, d_min: int = 1, engine: str = "beta",
                      witness_dir: str | os.PathLike | None = None,
                      cache: ResultCache | None = None) -> VerificationReport:
    """Compare enumerated counts of (s, s+r)-cores against the conjectured recurrence.

    Covers every ``d_min <= d <= d_max``, ``1 <= r <= d``, ``1 <= s <= s_max``.
    A mismatch is recorded with its full partition list (and written under
    ``witness_dir`` if given); it does not raise.
    """
    if engine not in ENGINES:
        raise ParameterError(f"engine must be one of {ENGINES}, got {engine!r}")
    report = VerificationReport()
    for d in range(d_min, d_max + 1):
        for r in range(1, d + 1):
            for s in range(1, s_max + 1):
                t0 = time.perf_counter()
                result = cached_query(EnumerationQuery(CoreSpec({s, s + r}), d, engine=engine), cache)
                elapsed = time.perf_counter() - t0
                predicted = conjectured_count(d, r, s)
                rec = VerificationRecord(d, r, s, result.count, predicted,
                                         result.count == predicted, round(elapsed, 6))
                if not rec.match:
                    rec.witnesses = [list(p) for p in result.partitions]
                    if witness_dir is not None:
                        out = Path(witness_dir)
                        out.mkdir(parents=True, exist_ok=True)
                        (out / f"mismatch_d{d}_r{r}_s{s}.json").write_text(
                            json.dumps(asdict(rec), indent=2))
                report.records.append(rec)
    return report
