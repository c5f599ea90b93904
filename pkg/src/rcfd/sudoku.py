"""Sudoku-type Latin squares and the one-extra-coordinate construction."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinators import blowup, tile
from .core import Design, oplus
from .errors import BadBase, Indivisible, InternalAssertion
from .gf import prime_factorization


@dataclass(frozen=True)
class FactorSplit:
    q1: int
    q2: int

    @property
    def q(self) -> int:
        return self.q1 * self.q2


@lru_cache(maxsize=128)
def sudoku_latin(q1: int, q2: int) -> Design:
    """The Latin square L(q1, q2) of order q = q1 q2.

    The q1 x q2 block S_0 holds ``0..q-1`` filled down the columns; block
    ``(r, c)`` is ``S_0 + (r q1 + c) mod q``. Each residue class of cells
    mod (q1, q2) then holds every symbol once.
    """
    if q1 < 1 or q2 < 1:
        raise ValueError("q1 and q2 must be positive")
    q = q1 * q2
    i = np.arange(q)[:, None]
    j = np.arange(q)[None, :]
    L = ((j % q2) * q1 + i % q1 + (i // q1) * q1 + j // q2) % q
    return Design(L, q)


def _valuation(x: int, p: int) -> int:
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def split_factors(b1: int, b2: int, q: int) -> FactorSplit:
    """Split q = q1 q2 with q1 | b2 and q2 | b1.

    Per prime p^s || q, q2 takes ``max(0, s - v_p(b2))`` factors of p and q1
    the rest.
    """
    if b1 < 1 or b2 < 1 or q < 1:
        raise ValueError("b1, b2 and q must be positive")
    if (b1 * b2) % q:
        raise Indivisible(f"{q} does not divide {b1} * {b2}")
    q1 = q2 = 1
    for p, s in prime_factorization(q) if q > 1 else []:
        t = max(0, s - _valuation(b2, p))
        q2 *= p**t
        q1 *= p**(s - t)
    return FactorSplit(q1, q2)


@lru_cache(maxsize=256)
def sudoku_rectangle(q1: int, q2: int, mu: int, lam: int) -> Design:
    """FR(q mu, q lam; q) whose cells mod (mu q1, lam q2) each hold every symbol once."""
    return blowup(sudoku_latin(q1, q2), mu, lam)


def _exact_log(x: int, q: int):
    e = 0
    while x > 1 and x % q == 0:
        x //= q
        e += 1
    return e if x == 1 else None


def theorem36(base: Design, b1: int, b2: int) -> Design:
    """Extend an I_{M+N}(q^M, q^N; q) to an I_{M+N+1}(q^M b1, q^N b2; q).

    Requires q | b1 b2. The base is tiled q2 x q1 times, one Sudoku
    rectangle coordinate is appended, and the result is blown up by
    ``(b1 / q2, b2 / q1)``.
    """
    q = base.q
    M, N = _exact_log(base.m, q), _exact_log(base.n, q)
    if q < 2 or not M or not N or base.k != M + N:
        raise BadBase(f"base {base.params} is not of the form I_(M+N)(q^M, q^N; q)")
    if not base.is_regular or base.params.replication != 1:
        raise BadBase("base must be a regular design with replication 1")
    split = split_factors(b1, b2, q)
    q1, q2 = split.q1, split.q2
    I = tile(base, q2, q1)
    J = sudoku_rectangle(q1, q2, q**(M - 1) * q2, q**(N - 1) * q1)
    extended = oplus([I, J])
    if extended.params.replication != 1 or not extended.is_regular:
        raise InternalAssertion(f"I' + J' is not an {extended.params} with replication 1")
    return blowup(extended, b1 // q2, b2 // q1)
