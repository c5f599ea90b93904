"""Design data model, the regularity verifier and structural operations."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import RangeError, ShapeMismatch


@dataclass(frozen=True)
class DesignParams:
    k: int
    m: int
    n: int
    q: int

    def __post_init__(self):
        for name in ("k", "m", "n", "q"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def replication(self):
        """``mn / q^k`` as an int when integral, else ``None``."""
        total, size = self.m * self.n, self.q**self.k
        return total // size if total % size == 0 else None

    def __str__(self) -> str:
        return f"I_{self.k}({self.m},{self.n};{self.q})"


@dataclass(frozen=True, eq=False)
class Design:
    """An m x n array whose cells are k-tuples over ``range(q)``.

    ``grid`` has shape ``(m, n, k)``. It is copied on construction and made
    read-only, so a Design can be shared freely. Being a Design says nothing
    about regularity; use :func:`verify_design` (or :attr:`is_regular`).
    """

    grid: np.ndarray
    q: int

    def __post_init__(self):
        g = np.array(self.grid, dtype=np.int64, copy=True)
        if g.ndim == 2:
            g = g[:, :, None]
        if g.ndim != 3 or 0 in g.shape:
            raise ShapeMismatch(f"grid must be a non-empty m x n x k array, got shape {g.shape}")
        if self.q < 1:
            raise ValueError("q must be positive")
        if g.min() < 0 or g.max() >= self.q:
            raise ValueError(f"grid entries must lie in [0, {self.q})")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def m(self) -> int:
        return self.grid.shape[0]

    @property
    def n(self) -> int:
        return self.grid.shape[1]

    @property
    def k(self) -> int:
        return self.grid.shape[2]

    @property
    def params(self) -> DesignParams:
        return DesignParams(self.k, self.m, self.n, self.q)

    @cached_property
    def report(self) -> "VerificationReport":
        return verify_design(self)

    @property
    def is_regular(self) -> bool:
        return self.report.passed

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.grid[i, j])

    def __eq__(self, other):
        if not isinstance(other, Design):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash((self.q, self.grid.shape, self.grid.tobytes()))

    def __repr__(self) -> str:
        return f"Design({self.params}, regular={self.is_regular})"


class Violation(NamedTuple):
    check: str  # "divisibility" | "factorial" | "row" | "column"
    location: str
    expected: int
    actual: int


@dataclass(frozen=True)
class VerificationReport:
    params: DesignParams
    violations: tuple[Violation, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def summary(self, limit: int = 10) -> str:
        if self.passed:
            return f"PASS: regular design of type {self.params}"
        lines = [f"FAIL: not of type {self.params} ({len(self.violations)} violations)"]
        for v in self.violations[:limit]:
            lines.append(f"  {v.check} at {v.location}: expected {v.expected}, got {v.actual}")
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)


def _line_counts(grid: np.ndarray, q: int) -> np.ndarray:
    """counts[c, i, e] = occurrences of symbol e at coordinate c in row i."""
    m, n, k = grid.shape
    idx = (np.arange(k)[None, :] * m + np.arange(m)[:, None]) * q  # (m, k)
    flat = (idx[:, None, :] + grid).ravel()
    return np.bincount(flat, minlength=k * m * q).reshape(k, m, q)


def verify_design(D: Design) -> VerificationReport:
    """Check every condition for D to be of type I_k(m, n; q).

    Failures are collected, never raised. The divisibility conditions are
    checked too, so arbitrary external grids can be certified.
    """
    k, m, n, q = D.k, D.m, D.n, D.q
    bad: list[Violation] = []
    for name, num, den in (("q | m", m, q), ("q | n", n, q), ("q^k | mn", m * n, q**k)):
        if num % den:
            bad.append(Violation("divisibility", name, 0, num % den))

    size = q**k
    if (m * n) % size:
        bad.append(Violation("factorial", "mn / q^k", 0, (m * n) % size))
    else:
        alpha = m * n // size
        codes = D.grid @ (q ** np.arange(k - 1, -1, -1, dtype=np.int64))
        counts = np.bincount(codes.ravel(), minlength=size)
        distinct = int(np.count_nonzero(counts))
        if distinct < size:
            bad.append(Violation("factorial", "distinct vectors", size, distinct))
        for v in np.flatnonzero(counts != alpha):
            c = counts[v]
            vec = tuple(int(v) // q**(k - 1 - t) % q for t in range(k))
            bad.append(Violation("factorial", f"vector {vec}", alpha, int(c)))

    if n % q == 0:
        rows = _line_counts(D.grid, q)
        for c, i, e in zip(*np.nonzero(rows != n // q)):
            bad.append(Violation("row", f"row {i}, coord {c}, symbol {e}", n // q, int(rows[c, i, e])))
    if m % q == 0:
        cols = _line_counts(D.grid.transpose(1, 0, 2), q)
        for c, j, e in zip(*np.nonzero(cols != m // q)):
            bad.append(Violation("column", f"col {j}, coord {c}, symbol {e}", m // q, int(cols[c, j, e])))
    return VerificationReport(D.params, tuple(bad))


def verify_orthogonal(F: Design, G: Design) -> bool:
    """True iff the superposition of two k=1 rectangles hits every ordered pair mn/q^2 times."""
    if F.k != 1 or G.k != 1 or (F.m, F.n, F.q) != (G.m, G.n, G.q):
        raise ShapeMismatch("orthogonality needs two k=1 designs with equal m, n, q")
    m, n, q = F.m, F.n, F.q
    if (m * n) % (q * q):
        return False
    pairs = (F.grid[:, :, 0] * q + G.grid[:, :, 0]).ravel()
    counts = np.bincount(pairs, minlength=q * q)
    return bool(np.all(counts == m * n // (q * q)))


def truncate(D: Design, ell: int) -> Design:
    """Keep coordinates ``0..ell-1`` of every cell."""
    if not 1 <= ell <= D.k:
        raise RangeError(f"truncation length {ell} outside 1..{D.k}")
    if ell == D.k:
        return D
    return Design(D.grid[:, :, :ell], D.q)


def transpose(D: Design) -> Design:
    return Design(D.grid.transpose(1, 0, 2), D.q)


def component(D: Design, i: int) -> Design:
    """The frequency rectangle formed by coordinate i."""
    if not 0 <= i < D.k:
        raise RangeError(f"coordinate {i} outside 0..{D.k - 1}")
    return Design(D.grid[:, :, i:i + 1], D.q)


def components(D: Design) -> list[Design]:
    return [component(D, i) for i in range(D.k)]


def oplus(parts: Sequence[Design]) -> Design:
    """Cellwise concatenation of designs sharing m, n and q."""
    if not parts:
        raise ShapeMismatch("oplus needs at least one design")
    m, n, q = parts[0].m, parts[0].n, parts[0].q
    for P in parts:
        if (P.m, P.n, P.q) != (m, n, q):
            raise ShapeMismatch(f"cannot concatenate {P.params} with shape ({m},{n};{q})")
    return Design(np.concatenate([P.grid for P in parts], axis=2), q)
