"""Table-driven arithmetic in GF(p^s).

Field elements are labelled by integers in ``range(q)``: the polynomial
``a_0 + a_1 x + ... + a_{s-1} x^{s-1}`` (coefficients in ``[p]``) gets the
label ``a_0 + a_1 p + ... + a_{s-1} p^{s-1}``. The zero polynomial is 0 and
the unit polynomial is 1; for s = 1 this is plain arithmetic mod p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotPrimePower, ZeroInverse

#: Largest field order :func:`build_field` will tabulate unless told otherwise.
DEFAULT_MAX_ORDER = 256


@dataclass(frozen=True)
class PrimePower:
    p: int
    s: int

    @property
    def q(self) -> int:
        return self.p**self.s


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factorization(n: int) -> list[tuple[int, int]]:
    """Return ``[(p, e), ...]`` with ascending primes and ``n = prod p**e``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def factor_prime_power(q: int) -> PrimePower:
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    factors = prime_factorization(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p, s = factors[0]
    return PrimePower(p, s)


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(prime_factorization(q)) == 1


# Polynomials over GF(p) below are coefficient lists, lowest degree first.

def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, d: int):
    """Monic degree-d polynomials, low-first, in the lex order of (a_{d-1}, ..., a_0)."""
    for high_first in itertools.product(range(p), repeat=d):
        yield list(reversed(high_first)) + [1]


def find_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree s over GF(p).

    The result lists coefficients from the leading one down to the constant
    term, so ``x^2 + x + 1`` is ``(1, 1, 1)`` and ``x`` is ``(1, 0)``.
    Candidates are ordered by ``(a_{s-1}, ..., a_0)`` and tested by trial
    division against every monic polynomial of degree ``1..s//2``.
    """
    if not _is_prime(p) or s < 1:
        raise NotPrimePower(f"bad field parameters p={p}, s={s}")
    for cand in _monic_polys(p, s):
        reducible = False
        for d in range(1, s // 2 + 1):
            for div in _monic_polys(p, d):
                if not _poly_mod(cand, div, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(reversed(cand))
    raise AssertionError("unreachable: an irreducible polynomial always exists")


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Addition/multiplication tables of GF(q) over the labels ``range(q)``."""

    q: int
    p: int
    s: int
    irreducible: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)  # inv[0] is unused and set to 0

    def __repr__(self) -> str:
        return f"FieldTable(q={self.q}, irreducible={self.irreducible})"


def _label(coeffs, p):
    return sum(int(c) * p**i for i, c in enumerate(coeffs))


def _unlabel(x, p, s):
    return [(x // p**i) % p for i in range(s)]


@lru_cache(maxsize=None)
def _build_field_cached(q: int) -> FieldTable:
    pp = factor_prime_power(q)
    p, s = pp.p, pp.s
    irr_high = find_irreducible(p, s)
    irr = list(reversed(irr_high))
    digits = np.array([_unlabel(x, p, s) for x in range(q)], dtype=np.int64)
    weights = p ** np.arange(s, dtype=np.int64)

    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights

    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            prod = [0] * (2 * s - 1)
            for i, ca in enumerate(digits[a]):
                if ca:
                    for j, cb in enumerate(digits[b]):
                        prod[i + j] = (prod[i + j] + int(ca) * int(cb)) % p
            r = _poly_mod(prod, irr, p)
            mul[a, b] = mul[b, a] = _label(r, p)

    neg = np.argmin(add, axis=1)  # add[a, neg[a]] == 0 is the unique zero
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

    for arr in (add, mul, neg, inv):
        arr.setflags(write=False)
    return FieldTable(q, p, s, irr_high, add, mul, neg, inv)


def build_field(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldTable:
    """Tabulate GF(q). Tables are cached and read-only, so sharing is safe."""
    if q > max_order:
        raise ValueError(f"field order {q} exceeds the table cap {max_order}")
    return _build_field_cached(q)


def ff_inv(F: FieldTable, a: int) -> int:
    if a % F.q == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    return int(F.inv[a])


def ff_pow(F: FieldTable, a: int, e: int) -> int:
    out = 1
    for _ in range(e):
        out = int(F.mul[out, a])
    return out


def rank(F: FieldTable, rows) -> int:
    """Rank over GF(q) of a matrix given as a sequence of label rows."""
    A = [list(map(int, r)) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        scale = int(F.inv[A[r][c]])
        A[r] = [int(F.mul[scale, x]) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = int(F.neg[A[i][c]])
                A[i] = [int(F.add[x, F.mul[f, y]]) for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r
