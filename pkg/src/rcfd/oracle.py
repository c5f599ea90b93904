"""Exhaustive search for small designs.

The cell search fills cells in row-major order. Candidate vectors are tried
in increasing base-q code, which is lexicographic order on tuples. It
prunes on per-row, per-column and global vector counts. Symmetry is reduced
without losing any isomorphism class:

* cell (0, 0) is the all-zero vector (relabel coordinates 1..k-1, then sort
  row 0);
* row 0 is non-decreasing left to right (column permutation);
* column 0 is non-decreasing from row 1 downwards (permutation of rows 1..m-1).

So an exhausted search really does certify that no design exists.

For pairs of MOLS of larger order, :func:`find_mols_pair` uses a transversal
search: it fixes a Latin square and looks for v disjoint transversals.
"""
from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass

import numpy as np

from .core import Design, DesignParams, oplus

DEFAULT_MAX_NODES = 10**8
DEFAULT_TIME_LIMIT = 60.0


class Status(enum.Enum):
    FOUND = "Found"
    EXHAUSTED = "ExhaustedNone"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    design: Design | None
    nodes_explored: int
    max_nodes: int
    time_limit: float | None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class _Budget(Exception):
    pass


class _CellSearch:
    def __init__(self, k, m, n, q, max_nodes, time_limit):
        self.k, self.m, self.n, self.q = k, m, n, q
        self.size = q**k
        self.alpha = m * n // self.size
        self.row_cap = n // q
        self.col_cap = m // q
        self.digits = [tuple(v // q**(k - 1 - t) % q for t in range(k)) for v in range(self.size)]
        self.row_cnt = [[[0] * q for _ in range(k)] for _ in range(m)]
        self.col_cnt = [[[0] * q for _ in range(k)] for _ in range(n)]
        self.vec_cnt = [0] * self.size
        self.cells = [[0] * n for _ in range(m)]
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def _fits(self, i, j, v):
        if self.vec_cnt[v] >= self.alpha:
            return False
        rc, cc = self.row_cnt[i], self.col_cnt[j]
        for t, e in enumerate(self.digits[v]):
            if rc[t][e] >= self.row_cap or cc[t][e] >= self.col_cap:
                return False
        return True

    def _place(self, i, j, v, delta):
        self.vec_cnt[v] += delta
        rc, cc = self.row_cnt[i], self.col_cnt[j]
        for t, e in enumerate(self.digits[v]):
            rc[t][e] += delta
            cc[t][e] += delta

    def _lower_bound(self, i, j):
        if i == 0 and j > 0:
            return self.cells[0][j - 1]
        if j == 0 and i >= 2:
            return self.cells[i - 1][0]
        return 0

    def run(self):
        try:
            ok = self._solve(0)
        except _Budget:
            return Status.TIMEOUT
        return Status.FOUND if ok else Status.EXHAUSTED

    def _solve(self, pos):
        if pos == self.m * self.n:
            return True
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Budget
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _Budget
        i, j = divmod(pos, self.n)
        upper = 1 if pos == 0 else self.size
        for v in range(self._lower_bound(i, j), upper):
            if self._fits(i, j, v):
                self._place(i, j, v, 1)
                self.cells[i][j] = v
                if self._solve(pos + 1):
                    return True
                self._place(i, j, v, -1)
        return False

    def design(self):
        grid = np.array([[self.digits[v] for v in row] for row in self.cells], dtype=np.int64)
        return Design(grid, self.q)


def _admissible(k, m, n, q):
    return m % q == 0 and n % q == 0 and (m * n) % q**k == 0


def exhaustive_exists(k: int, m: int, n: int, q: int,
                      max_nodes: int = DEFAULT_MAX_NODES,
                      time_limit: float | None = DEFAULT_TIME_LIMIT) -> SearchOutcome:
    """Decide by exhaustive search whether an I_k(m, n; q) exists.

    Parameters failing the divisibility conditions give ``EXHAUSTED``
    immediately; counting shows no design can exist there.
    """
    DesignParams(k, m, n, q)
    if not _admissible(k, m, n, q):
        return SearchOutcome(Status.EXHAUSTED, None, 0, max_nodes, time_limit)
    s = _CellSearch(k, m, n, q, max_nodes, time_limit)
    status = s.run()
    design = None
    if status is Status.FOUND:
        design = s.design()
        assert design.is_regular, "search produced an irregular design"
    return SearchOutcome(status, design, s.nodes, max_nodes, time_limit)


# Transversal search for MOLS pairs.

def random_latin_square(v: int, rng: random.Random) -> np.ndarray:
    """A Latin square of order v built row by row with randomised backtracking."""
    rows: list[list[int]] = []
    col_used = [set() for _ in range(v)]

    def fill_row(row, j, used):
        if j == v:
            return True
        syms = [s for s in range(v) if s not in used and s not in col_used[j]]
        rng.shuffle(syms)
        for s in syms:
            row.append(s)
            used.add(s)
            if fill_row(row, j + 1, used):
                return True
            row.pop()
            used.discard(s)
        return False

    for _ in range(v):
        row: list[int] = []
        if not fill_row(row, 0, set()):  # cannot happen: Latin rectangles always extend
            raise AssertionError("Latin rectangle failed to extend")
        for j, s in enumerate(row):
            col_used[j].add(s)
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def transversals(L: np.ndarray, limit: int | None = None,
                 deadline: float | None = None) -> list[tuple[int, ...]]:
    """All transversals of L, each as the tuple of column indices by row.

    Stops early after ``limit`` transversals; raises ``_Budget`` once
    ``time.monotonic()`` passes ``deadline``.
    """
    v = L.shape[0]
    Ll = L.tolist()
    out: list[tuple[int, ...]] = []
    cols: list[int] = []
    calls = [0]

    def rec(i, col_mask, sym_mask):
        if limit is not None and len(out) >= limit:
            return
        calls[0] += 1
        if deadline is not None and calls[0] % 8192 == 0 and time.monotonic() > deadline:
            raise _Budget
        if i == v:
            out.append(tuple(cols))
            return
        row = Ll[i]
        for j in range(v):
            if not col_mask >> j & 1:
                s = row[j]
                if not sym_mask >> s & 1:
                    cols.append(j)
                    rec(i + 1, col_mask | 1 << j, sym_mask | 1 << s)
                    cols.pop()

    rec(0, 0, 0)
    return out


def _disjoint_cover(trans, v, deadline):
    """Pick v transversals that partition the cells.

    Every transversal meets row 0 exactly once, so the search picks, for each
    column j of row 0, a transversal through (0, j) disjoint from those chosen.
    """
    by_first_col: list[list[int]] = [[] for _ in range(v)]
    for t, T in enumerate(trans):
        by_first_col[T[0]].append(t)
    cell_sets = [frozenset(enumerate(T)) for T in trans]
    chosen: list[int] = []
    covered: set = set()

    def rec(j):
        if deadline is not None and time.monotonic() > deadline:
            raise _Budget
        if j == v:
            return True
        for t in by_first_col[j]:
            if covered.isdisjoint(cell_sets[t]):
                covered.update(cell_sets[t])
                chosen.append(t)
                if rec(j + 1):
                    return True
                chosen.pop()
                covered.difference_update(cell_sets[t])
        return False

    return [trans[t] for t in chosen] if rec(0) else None


def find_mols_pair(v: int, time_limit: float | None = DEFAULT_TIME_LIMIT,
                   seed: int = 0) -> SearchOutcome:
    """Search for an I_2(v, v; v) by finding an orthogonal mate of random Latin squares.

    Squares are drawn from ``random.Random(seed + attempt)`` for attempt =
    0, 1, ...; the first square with v disjoint transversals wins. This
    never proves nonexistence, so it ends in ``FOUND`` or ``TIMEOUT``.
    """
    deadline = None if time_limit is None else time.monotonic() + time_limit
    attempts = 0
    try:
        while True:
            rng = random.Random(seed + attempts)
            attempts += 1
            L = random_latin_square(v, rng)
            cover = _disjoint_cover(transversals(L, deadline=deadline), v, deadline)
            if cover is not None:
                mate = np.zeros_like(L)
                for t, T in enumerate(cover):
                    for i, j in enumerate(T):
                        mate[i, j] = t
                D = oplus([Design(L, v), Design(mate, v)])
                assert D.is_regular
                return SearchOutcome(Status.FOUND, D, attempts, attempts, time_limit)
            if deadline is not None and time.monotonic() > deadline:
                raise _Budget
    except _Budget:
        return SearchOutcome(Status.TIMEOUT, None, attempts, attempts, time_limit)


def find_seed(params: DesignParams, max_nodes: int = DEFAULT_MAX_NODES,
              time_limit: float | None = DEFAULT_TIME_LIMIT, cache=None) -> SearchOutcome:
    """Find any design with the given parameters and store it in ``cache``.

    Orders v >= 7 of I_2(v, v; v) go through the transversal search; everything
    else uses the exhaustive cell search.
    """
    k, m, n, q = params.k, params.m, params.n, params.q
    if k == 2 and m == n == q and q >= 7:
        outcome = find_mols_pair(q, time_limit=time_limit)
    else:
        outcome = exhaustive_exists(k, m, n, q, max_nodes=max_nodes, time_limit=time_limit)
    if outcome.found and cache is not None:
        cache.store(outcome.design)
    return outcome
