"""Prime-power designs from linear forms over GF(q).

A set of M+N linearly independent linear forms in M+N variables, each
depending on at least one of the first M variables and at least one of the
last N, gives an I_{M+N}(q^M, q^N; q) when evaluated on the grid whose rows
are indexed by GF(q)^M and columns by GF(q)^N.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf
from .core import Design, transpose
from .errors import FieldMismatch, InternalAssertion, UnsupportedShape


@dataclass(frozen=True)
class CoefficientMatrix:
    q: int
    M: int
    N: int
    rows: tuple[tuple[int, ...], ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)


def check_coefficients(C: CoefficientMatrix, F: gf.FieldTable) -> list[str]:
    """Return the list of broken invariants (empty when C is usable)."""
    problems = []
    size = C.M + C.N
    if len(C.rows) != size or any(len(r) != size for r in C.rows):
        return [f"matrix is not {size} x {size}"]
    if gf.rank(F, C.rows) != size:
        problems.append("rows are linearly dependent")
    for r, row in enumerate(C.rows):
        if not any(row[:C.M]):
            problems.append(f"row {r} vanishes on the row variables")
        if not any(row[C.M:]):
            problems.append(f"row {r} vanishes on the column variables")
    return problems


def _row_ops_matrix(F: gf.FieldTable, M: int, N: int) -> list[list[int]]:
    size = M + N
    add = F.add
    R = [[int(i == j) for j in range(size)] for i in range(size)]
    for s in range(1, size):
        R[s] = [int(add[a, b]) for a, b in zip(R[0], R[s])]
    if F.p == 2:
        extra = [int(add[a, b]) for a, b in zip(R[size - 2], R[size - 1])]
    else:
        extra = R[size - 1]
    for s in range(M):
        R[s] = [int(add[a, b]) for a, b in zip(R[s], extra)]
    return R


def _greedy_matrix(F: gf.FieldTable, M: int, N: int) -> list[list[int]]:
    """Lex-first basis drawn from the vectors meeting both support conditions."""
    size = M + N
    chosen: list[list[int]] = []
    for cand in itertools.product(range(F.q), repeat=size):
        if any(cand[:M]) and any(cand[M:]) and gf.rank(F, chosen + [list(cand)]) == len(chosen) + 1:
            chosen.append(list(cand))
            if len(chosen) == size:
                break
    return chosen


def lemma31_matrix(q: int, M: int, N: int) -> CoefficientMatrix:
    """Coefficient matrix of M+N independent forms meeting both support conditions.

    M = N = 1 (q > 2) uses ``x0 + x1`` and ``x0 + 2 x1``, where 2 is the
    element labelled 2. Otherwise N >= 2 is required; starting from the
    identity, each row ``s >= 1`` gets row 0 added, then each of the first M
    rows gets the sum of the last two rows (characteristic 2) or the last row
    (odd characteristic) added.
    """
    if M < 1 or N < 1:
        raise UnsupportedShape("M and N must be positive")
    if (M, N, q) == (1, 1, 2):
        raise UnsupportedShape("no such forms exist for (M, N, q) = (1, 1, 2)")
    if N == 1 and M > 1:
        raise UnsupportedShape("N = 1 < M: build the transposed shape instead")
    F = gf.build_field(q)
    if M == N == 1:
        rows = [[1, 1], [1, 2]]
    else:
        rows = _row_ops_matrix(F, M, N)
    C = CoefficientMatrix(q, M, N, tuple(map(tuple, rows)))
    if check_coefficients(C, F):
        C = CoefficientMatrix(q, M, N, tuple(map(tuple, _greedy_matrix(F, M, N))))
        if check_coefficients(C, F):
            raise InternalAssertion(f"no valid coefficient matrix for q={q}, M={M}, N={N}")
    return C


def _digits(count: int, width: int, q: int) -> np.ndarray:
    """Big-endian base-q digits of ``range(count)``, shape (count, width)."""
    idx = np.arange(count, dtype=np.int64)[:, None]
    powers = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (idx // powers) % q


def evaluate_design(C: CoefficientMatrix, F: gf.FieldTable) -> Design:
    """Evaluate each form on the q^M x q^N grid of field tuples.

    Row r carries the tuple ``(b_0, ..., b_{M-1})`` of big-endian base-q digits
    of r; columns likewise carry ``(c_0, ..., c_{N-1})``.
    """
    if F.q != C.q:
        raise FieldMismatch(f"matrix over GF({C.q}) evaluated in GF({F.q})")
    q, M, N = C.q, C.M, C.N
    b = _digits(q**M, M, q)
    c = _digits(q**N, N, q)
    # xs[t] is the value of variable t at every cell, shape (q^M, q^N)
    xs = [np.broadcast_to(b[:, t:t + 1], (q**M, q**N)) for t in range(M)]
    xs += [np.broadcast_to(c[None, :, t], (q**M, q**N)) for t in range(N)]
    out = np.zeros((q**M, q**N, M + N), dtype=np.int64)
    for u, row in enumerate(C.rows):
        acc = np.zeros((q**M, q**N), dtype=np.int64)
        for coef, x in zip(row, xs):
            if coef:
                acc = F.add[acc, F.mul[coef, x]]
        out[:, :, u] = acc
    return Design(out, q)


@lru_cache(maxsize=256)
def theorem32(q: int, M: int, N: int) -> Design:
    """An I_{M+N}(q^M, q^N; q) for prime power q, with every vector exactly once."""
    if (M, N, q) == (1, 1, 2):
        raise UnsupportedShape("I_2(2, 2; 2) does not exist")
    if N == 1 and M > 1:
        return transpose(theorem32(q, 1, M))
    F = gf.build_field(q)
    return evaluate_design(lemma31_matrix(q, M, N), F)
