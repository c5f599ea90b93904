import itertools

import numpy as np
import pytest

from rcfd.errors import FieldMismatch, UnsupportedShape
from rcfd.gf import build_field
from rcfd.polyfield import (CoefficientMatrix, check_coefficients, evaluate_design,
                            lemma31_matrix, theorem32)

from oracles import brute_verify, field_tables, span_size


def row_ops_oracle(p, q, M, N):
    """The row-operation recipe spelled out with field tables from sympy."""
    from rcfd.gf import find_irreducible
    s = round(np.log(q) / np.log(p))
    add, _ = field_tables(p, s, find_irreducible(p, s))
    size = M + N
    R = [[int(i == j) for j in range(size)] for i in range(size)]
    for r in range(1, size):
        R[r] = [add[a][b] for a, b in zip(R[0], R[r])]
    extra = ([add[a][b] for a, b in zip(R[-2], R[-1])] if p == 2 else R[-1])
    for r in range(M):
        R[r] = [add[a][b] for a, b in zip(R[r], extra)]
    return R


CASES = [(q, M, N) for q in (2, 3, 4, 5, 7, 8, 9) for M in range(1, 4) for N in range(1, 4)
         if q**(M + N) <= 4096 and not (N == 1 and M > 1) and (M, N, q) != (1, 1, 2)]


@pytest.mark.parametrize("q,M,N", CASES)
def test_lemma31_conditions(q, M, N):
    F = build_field(q)
    C = lemma31_matrix(q, M, N)
    assert check_coefficients(C, F) == []
    add, mul = F.add.tolist(), F.mul.tolist()
    if q**(M + N) <= 256:
        assert span_size(C.rows, add, mul, q) == q**(M + N)


@pytest.mark.parametrize("q,M,N", [c for c in CASES if c[1:] != (1, 1)])
def test_lemma31_follows_row_operations(q, M, N):
    F = build_field(q)
    assert [list(r) for r in lemma31_matrix(q, M, N).rows] == row_ops_oracle(F.p, q, M, N)


def test_lemma31_square_case():
    assert lemma31_matrix(3, 1, 1).rows == ((1, 1), (1, 2))


def test_lemma31_unsupported():
    with pytest.raises(UnsupportedShape):
        lemma31_matrix(2, 1, 1)
    with pytest.raises(UnsupportedShape):
        lemma31_matrix(3, 2, 1)
    with pytest.raises(UnsupportedShape):
        theorem32(2, 1, 1)


def test_check_coefficients_reports_problems():
    F = build_field(3)
    C = CoefficientMatrix(3, 1, 1, ((1, 0), (1, 1)))
    assert any("column variables" in p for p in check_coefficients(C, F))
    D = CoefficientMatrix(3, 1, 1, ((1, 1), (2, 2)))
    assert "rows are linearly dependent" in check_coefficients(D, F)


def test_evaluate_field_mismatch():
    with pytest.raises(FieldMismatch):
        evaluate_design(lemma31_matrix(3, 1, 1), build_field(5))


def test_evaluation_by_hand():
    # forms x0 + x1 and x0 + 2 x1 over GF(3); row r is x0 = r, column c is x1 = c
    D = theorem32(3, 1, 1)
    for r, c in itertools.product(range(3), repeat=2):
        assert D.cell(r, c) == ((r + c) % 3, (r + 2 * c) % 3)


@pytest.mark.parametrize("q,M,N", [(2, 1, 2), (2, 2, 3), (4, 1, 2), (3, 2, 2), (8, 1, 2), (2, 3, 1)])
def test_theorem32_brute(q, M, N):
    D = theorem32(q, M, N)
    assert (D.m, D.n, D.k) == (q**M, q**N, M + N)
    assert D.params.replication == 1
    assert brute_verify(D.grid.tolist(), q)
