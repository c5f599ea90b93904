"""Reading and writing designs, plus the on-disk seed cache.

Three formats are supported:

``text``
    A header line ``k m n q`` followed by m lines of n space-separated
    cells. For q <= 10 a cell is its k digits run together (``0110``);
    otherwise it is a parenthesised tuple (``(10,3)``). Lines starting with
    ``#`` are ignored on input.
``json``
    ``{"format_version": 1, "k": .., "m": .., "n": .., "q": .., "cells": [...]}``
    with cells as a row-major m x n x k nested list.
``csv``
    Long form for run sheets: header ``row,col,f0,...,f{k-1}`` and one line
    per cell in row-major order. CSV carries no q; readers take it as
    ``max entry + 1`` unless told otherwise.
"""
from __future__ import annotations

import csv
import io as _io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .core import Design, DesignParams
from .errors import DimensionMismatch, ParseError

FORMATS = ("text", "json", "csv")
FORMAT_VERSION = 1
SEED_CACHE_ENV = "RCFD_SEED_CACHE"


def _text_cell(cell, q):
    if q <= 10:
        return "".join(str(int(x)) for x in cell)
    return "(" + ",".join(str(int(x)) for x in cell) + ")"


def write_design(D: Design, fmt: str = "text") -> str:
    if fmt == "text":
        lines = [f"{D.k} {D.m} {D.n} {D.q}"]
        for row in D.grid:
            lines.append(" ".join(_text_cell(c, D.q) for c in row))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        obj = {"format_version": FORMAT_VERSION, "k": D.k, "m": D.m, "n": D.n, "q": D.q,
               "cells": D.grid.tolist()}
        return json.dumps(obj, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col"] + [f"f{c}" for c in range(D.k)])
        for i in range(D.m):
            for j in range(D.n):
                w.writerow([i, j, *D.grid[i, j].tolist()])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def _parse_text_cell(tok, k, q, line, col):
    if tok.startswith("("):
        if not tok.endswith(")"):
            raise ParseError(f"unterminated tuple {tok!r}", line, col)
        parts = tok[1:-1].split(",")
    else:
        if q > 10:
            raise ParseError(f"q = {q} > 10 needs tuple cells, got {tok!r}", line, col)
        parts = list(tok)
    try:
        vals = [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"bad cell {tok!r}", line, col) from None
    if len(vals) != k:
        raise DimensionMismatch(f"cell {tok!r} has {len(vals)} entries, expected k = {k}", line, col)
    if any(not 0 <= x < q for x in vals):
        raise ParseError(f"cell {tok!r} has entries outside [0, {q})", line, col)
    return vals


def _read_text(text):
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty design file")
    no, header = lines[0]
    try:
        k, m, n, q = (int(x) for x in header.split())
        DesignParams(k, m, n, q)
    except ValueError:
        raise ParseError(f"header must be 'k m n q', got {header!r}", no) from None
    body = lines[1:]
    if len(body) != m:
        raise DimensionMismatch(f"expected {m} rows, found {len(body)}", no)
    grid = []
    for no, ln in body:
        toks = ln.split()
        if len(toks) != n:
            raise DimensionMismatch(f"expected {n} cells, found {len(toks)}", no)
        grid.append([_parse_text_cell(t, k, q, no, c + 1) for c, t in enumerate(toks)])
    return Design(np.array(grid, dtype=np.int64), q)


def _read_json(text):
    try:
        obj = json.loads(text)
        k, m, n, q = (int(obj[key]) for key in ("k", "m", "n", "q"))
        cells = np.array(obj["cells"], dtype=np.int64)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON design: {exc}") from None
    if cells.shape != (m, n, k):
        raise DimensionMismatch(f"cells have shape {cells.shape}, header says {(m, n, k)}")
    try:
        return Design(cells, q)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _read_csv(text, q=None):
    rows = list(csv.reader(_io.StringIO(text)))
    if not rows or rows[0][:2] != ["row", "col"]:
        raise ParseError("CSV header must start with 'row,col'", 1)
    k = len(rows[0]) - 2
    if k < 1 or rows[0][2:] != [f"f{c}" for c in range(k)]:
        raise ParseError("CSV header must be row,col,f0,...,f{k-1}", 1)
    recs = []
    for no, r in enumerate(rows[1:], 2):
        if not r:
            continue
        if len(r) != k + 2:
            raise DimensionMismatch(f"expected {k + 2} fields, found {len(r)}", no)
        try:
            recs.append([int(x) for x in r])
        except ValueError:
            raise ParseError(f"non-integer field in {r}", no) from None
    if not recs:
        raise ParseError("CSV has no data rows")
    arr = np.array(recs, dtype=np.int64)
    m, n = int(arr[:, 0].max()) + 1, int(arr[:, 1].max()) + 1
    if len(arr) != m * n or arr[:, 0].min() < 0 or arr[:, 1].min() < 0:
        raise DimensionMismatch(f"{len(arr)} data rows do not fill a {m} x {n} grid")
    grid = np.full((m, n, k), -1, dtype=np.int64)
    grid[arr[:, 0], arr[:, 1]] = arr[:, 2:]
    if (grid < 0).any():
        raise DimensionMismatch("CSV has duplicate or missing cells")
    q = int(grid.max()) + 1 if q is None else q
    try:
        return Design(grid, q)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def sniff_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith("{"):
        return "json"
    if s.startswith("row,col"):
        return "csv"
    return "text"


def read_design(source, fmt: str | None = None, q: int | None = None) -> Design:
    """Parse a design from a path or from the file contents.

    ``fmt`` is guessed from the contents when omitted; ``q`` only matters
    for CSV input.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source
                                    and os.path.exists(source)):
        source = Path(source).read_text()
    fmt = fmt or sniff_format(source)
    if fmt == "text":
        return _read_text(source)
    if fmt == "json":
        return _read_json(source)
    if fmt == "csv":
        return _read_csv(source, q)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def atomic_write(path: Path, data: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def default_cache_dir() -> Path:
    env = os.environ.get(SEED_CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "rcfd" / "seeds"


class SeedCache:
    """A directory of text design files named ``I{k}_{m}x{n}_q{q}.txt``.

    Files are re-verified on every load; an irregular or mislabelled file is
    ignored rather than trusted.
    """

    def __init__(self, path: os.PathLike | str | None = None):
        self.path = Path(path) if path is not None else default_cache_dir()

    def path_for(self, params: DesignParams) -> Path:
        return self.path / f"I{params.k}_{params.m}x{params.n}_q{params.q}.txt"

    def load(self, params: DesignParams) -> Design | None:
        p = self.path_for(params)
        if not p.is_file():
            return None
        try:
            D = read_design(p.read_text(), "text")
        except ParseError:
            return None
        if D.params != params or not D.is_regular:
            return None
        return D

    def store(self, D: Design) -> Path:
        if not D.is_regular:
            raise ValueError("refusing to cache an irregular design")
        p = self.path_for(D.params)
        atomic_write(p, write_design(D, "text"))
        return p
