import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcfd.errors import NotPrimePower, ZeroInverse
from rcfd.gf import (build_field, factor_prime_power, ff_inv, ff_pow, find_irreducible,
                     is_prime_power, prime_factorization, rank)

from oracles import field_tables, is_irreducible, lex_first_irreducible

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81]


@pytest.mark.parametrize("n", [1, 2, 12, 97, 360, 1024, 9973 * 3])
def test_prime_factorization_multiplies_back(n):
    f = prime_factorization(n)
    assert int(np.prod([p**e for p, e in f])) == n
    assert [p for p, _ in f] == sorted(p for p, _ in f)


@pytest.mark.parametrize("q,p,s", [(2, 2, 1), (8, 2, 3), (9, 3, 2), (49, 7, 2), (125, 5, 3)])
def test_factor_prime_power(q, p, s):
    pp = factor_prime_power(q)
    assert (pp.p, pp.s, pp.q) == (p, s, q)


@pytest.mark.parametrize("q", [1, 6, 10, 12, 36, 0])
def test_factor_prime_power_rejects(q):
    with pytest.raises(NotPrimePower):
        factor_prime_power(q)
    assert not is_prime_power(q)


@pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)])
def test_find_irreducible_is_lex_first(p, s):
    poly = find_irreducible(p, s)
    assert is_irreducible(poly, p)
    assert poly == lex_first_irreducible(p, s)


def test_small_irreducibles_by_hand():
    assert find_irreducible(2, 2) == (1, 1, 1)
    assert find_irreducible(2, 3) == (1, 0, 1, 1)
    assert find_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS if q <= 32])
def test_tables_match_sympy(q):
    F = build_field(q)
    add, mul = field_tables(F.p, F.s, F.irreducible)
    np.testing.assert_array_equal(F.add, add)
    np.testing.assert_array_equal(F.mul, mul)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms(q):
    F = build_field(q)
    e = np.arange(q)
    assert (F.add[0] == e).all() and (F.mul[1] == e).all()
    assert (F.add == F.add.T).all() and (F.mul == F.mul.T).all()
    for row in F.add:
        assert sorted(row) == list(e)
    for row in F.mul[1:]:
        assert sorted(row[1:]) == list(e[1:])
    assert (F.add[e, F.neg] == 0).all()
    assert (F.mul[e[1:], F.inv[1:]] == 1).all()


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_distributive(q):
    F = build_field(q)
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    lhs = F.mul[a, F.add[b, c]]
    rhs = F.add[F.mul[a, b], F.mul[a, c]]
    assert (lhs == rhs).all()


def test_tables_are_read_only_and_cached():
    F = build_field(9)
    assert build_field(9) is F
    with pytest.raises(ValueError):
        F.add[0, 0] = 1


def test_zero_inverse():
    with pytest.raises(ZeroInverse):
        ff_inv(build_field(7), 0)


def test_prime_field_is_mod_arithmetic():
    F = build_field(7)
    e = np.arange(7)
    assert (F.mul == np.outer(e, e) % 7).all()
    assert ff_inv(F, 3) == 5


@given(st.sampled_from([4, 8, 9, 16, 25]), st.data())
@settings(max_examples=60, deadline=None)
def test_fermat(q, data):
    F = build_field(q)
    a = data.draw(st.integers(1, q - 1))
    assert ff_pow(F, a, q - 1) == 1


def test_field_cap():
    with pytest.raises(ValueError):
        build_field(512)


def test_rank():
    F = build_field(3)
    assert rank(F, [[1, 0], [0, 1]]) == 2
    assert rank(F, [[1, 2], [2, 1]]) == 1  # second row is 2 * first
    assert rank(F, [[0, 0]]) == 0
    assert rank(F, []) == 0
