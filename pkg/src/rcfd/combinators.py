"""Ways of building new regular designs from old ones.

All combinators insist on regular inputs and raise :class:`UnverifiedInput`
otherwise; every theorem behind them assumes its inputs are of type I_k.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .core import Design, transpose
from .errors import KMismatch, ShapeMismatch, UnverifiedInput


def require_regular(*designs: Design) -> None:
    for D in designs:
        if not D.is_regular:
            raise UnverifiedInput(f"input is not regular:\n{D.report.summary(limit=3)}")


@dataclass(frozen=True)
class SymbolBijection:
    """A bijection ``[q] x [q'] -> [q q']``; defaults to ``(a, b) -> a q' + b``."""

    q: int
    q2: int
    table: np.ndarray | None = None

    def __post_init__(self):
        if self.table is None:
            t = np.arange(self.q * self.q2, dtype=np.int64).reshape(self.q, self.q2)
        else:
            t = np.asarray(self.table, dtype=np.int64)
            if t.shape != (self.q, self.q2) or sorted(t.ravel().tolist()) != list(range(self.q * self.q2)):
                raise ValueError("symbol map must be a bijection onto [q q']")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @classmethod
    def from_function(cls, q: int, q2: int, f: Callable[[int, int], int]) -> "SymbolBijection":
        return cls(q, q2, np.array([[f(a, b) for b in range(q2)] for a in range(q)]))

    def __call__(self, a, b):
        return self.table[a, b]


def glue_cols(D: Design, E: Design) -> Design:
    """Place E to the right of D."""
    if (D.m, D.k, D.q) != (E.m, E.k, E.q):
        raise ShapeMismatch(f"cannot glue columns of {D.params} and {E.params}")
    require_regular(D, E)
    return Design(np.concatenate([D.grid, E.grid], axis=1), D.q)


def glue_rows(D: Design, E: Design) -> Design:
    """Place E below D."""
    if (D.n, D.k, D.q) != (E.n, E.k, E.q):
        raise ShapeMismatch(f"cannot glue rows of {D.params} and {E.params}")
    require_regular(D, E)
    return Design(np.concatenate([D.grid, E.grid], axis=0), D.q)


def glue_cols_many(parts: Sequence[Design]) -> Design:
    return reduce(glue_cols, parts)


def glue_rows_many(parts: Sequence[Design]) -> Design:
    return reduce(glue_rows, parts)


def kronecker(D: Design, E: Design, f: SymbolBijection | None = None) -> Design:
    """Coordinatewise Kronecker product.

    Cell ``(i, j)`` of the result is ``f(D[i // m', j // n'], E[i % m', j % n'])``
    applied coordinate by coordinate, where E is m' x n'.
    """
    if D.k != E.k:
        raise KMismatch(f"kronecker needs equal k, got {D.k} and {E.k}")
    require_regular(D, E)
    if f is None:
        f = SymbolBijection(D.q, E.q)
    elif (f.q, f.q2) != (D.q, E.q):
        raise ShapeMismatch("symbol bijection does not match the input orders")
    a = D.grid[:, None, :, None, :]
    b = E.grid[None, :, None, :, :]
    out = f.table[a, b].reshape(D.m * E.m, D.n * E.n, D.k)
    return Design(out, D.q * E.q)


def kronecker_many(designs: Sequence[Design]) -> Design:
    if not designs:
        raise ValueError("kronecker_many needs at least one design")
    return reduce(kronecker, designs)


def blowup(D: Design, mm: int, nn: int) -> Design:
    """Replace every cell by an mm x nn block of copies of it."""
    if mm < 1 or nn < 1:
        raise ValueError("blow-up factors must be positive")
    require_regular(D)
    if mm == nn == 1:
        return D
    return Design(np.repeat(np.repeat(D.grid, mm, axis=0), nn, axis=1), D.q)


def tile(D: Design, rows: int, cols: int) -> Design:
    """``rows x cols`` copies of D side by side (a trivial design Kronecker D)."""
    require_regular(D)
    return Design(np.tile(D.grid, (rows, cols, 1)), D.q)


def trivial_design(k: int, m: int, n: int) -> Design:
    return Design(np.zeros((m, n, k), dtype=np.int64), 1)


__all__ = [
    "SymbolBijection", "glue_cols", "glue_rows", "glue_cols_many", "glue_rows_many",
    "kronecker", "kronecker_many", "blowup", "tile", "trivial_design", "require_regular",
    "transpose",
]
