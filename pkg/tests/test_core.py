import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcfd import generate
from rcfd.core import (Design, DesignParams, component, components, oplus, transpose, truncate,
                       verify_design, verify_orthogonal)
from rcfd.errors import RangeError, ShapeMismatch

from oracles import brute_orthogonal, brute_verify
from strategies import designs


def test_params_str_and_replication():
    P = DesignParams(2, 6, 18, 6)
    assert str(P) == "I_2(6,18;6)"
    assert P.replication == 3
    assert DesignParams(3, 2, 2, 2).replication is None
    with pytest.raises(ValueError):
        DesignParams(0, 2, 2, 2)


def test_design_is_immutable_copy():
    g = np.zeros((2, 2, 1), dtype=int)
    D = Design(g, 2)
    g[0, 0, 0] = 1
    assert D.grid[0, 0, 0] == 0
    with pytest.raises(ValueError):
        D.grid[0, 0, 0] = 1


def test_design_validation():
    with pytest.raises(ValueError):
        Design(np.array([[0, 2]]), 2)
    with pytest.raises(ShapeMismatch):
        Design(np.zeros((0, 3)), 2)
    assert Design(np.array([[0, 1], [1, 0]]), 2).k == 1


def test_equality_and_hash():
    a = Design(np.array([[0, 1], [1, 0]]), 2)
    b = Design(np.array([[0, 1], [1, 0]]), 2)
    assert a == b and hash(a) == hash(b)
    assert a != Design(np.array([[1, 0], [0, 1]]), 2)


def test_latin_square_passes():
    L = Design((np.arange(3)[:, None] + np.arange(3)[None, :]) % 3, 3)
    assert verify_design(L).passed


def test_row_violation_located():
    g = np.array([[0, 0], [1, 1]])
    r = verify_design(Design(g, 2))
    assert not r
    checks = {v.check for v in r.violations}
    assert checks == {"row"}
    assert any("row 0" in v.location for v in r.violations)


def test_column_violation_located():
    r = verify_design(Design(np.array([[0, 1], [0, 1]]), 2))
    assert {v.check for v in r.violations} == {"column"}


def test_divisibility_violation():
    r = verify_design(Design(np.array([[0, 1, 0]]), 2))
    assert "divisibility" in {v.check for v in r.violations}


def test_summary_mentions_type():
    r = verify_design(Design(np.array([[0, 0], [1, 1]]), 2))
    text = r.summary(limit=1)
    assert text.startswith("FAIL") and "more" in text


@given(designs())
@settings(max_examples=120, deadline=None)
def test_verifier_agrees_with_brute_force(D):
    assert D.is_regular == brute_verify(D.grid.tolist(), D.q)


@given(designs(), st.data())
@settings(max_examples=120, deadline=None)
def test_single_cell_mutation_is_caught(D, data):
    i = data.draw(st.integers(0, D.m - 1))
    j = data.draw(st.integers(0, D.n - 1))
    c = data.draw(st.integers(0, D.k - 1))
    shift = data.draw(st.integers(1, D.q - 1))
    g = D.grid.copy()
    g[i, j, c] = (g[i, j, c] + shift) % D.q
    assert not verify_design(Design(g, D.q)).passed


@given(designs(), st.data())
@settings(max_examples=100, deadline=None)
def test_transpose_and_truncate_preserve_regularity(D, data):
    assert transpose(D).is_regular
    assert transpose(transpose(D)) == D
    ell = data.draw(st.integers(1, D.k))
    T = truncate(D, ell)
    assert T.k == ell and T.is_regular


@given(designs(min_k=2))
@settings(max_examples=80, deadline=None)
def test_components_pairwise_orthogonal(D):
    parts = components(D)
    for a in range(D.k):
        for b in range(a + 1, D.k):
            assert verify_orthogonal(parts[a], parts[b])
            assert brute_orthogonal(parts[a].grid[:, :, 0].tolist(),
                                    parts[b].grid[:, :, 0].tolist(), D.q)


def test_oplus_roundtrip():
    D, _ = generate(3, 8, 8, 2)
    assert oplus(components(D)) == D


def test_oplus_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        oplus([Design(np.zeros((2, 2)), 2), Design(np.zeros((2, 4)), 2)])
    with pytest.raises(ShapeMismatch):
        oplus([])


def test_range_errors():
    D, _ = generate(2, 4, 4, 2)
    with pytest.raises(RangeError):
        truncate(D, 3)
    with pytest.raises(RangeError):
        truncate(D, 0)
    with pytest.raises(RangeError):
        component(D, 2)


def test_orthogonal_requires_rectangles():
    D, _ = generate(2, 4, 4, 2)
    with pytest.raises(ShapeMismatch):
        verify_orthogonal(D, D)
