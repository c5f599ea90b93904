"""Existence test and constructive generator for regular row-column designs.

An I_k(m, n; q) with m <= n exists iff q | m, q | n and q^k | mn, except for
I_2(2, n; 2) with n = 2 (mod 4) and I_2(6, 6; 6). :func:`generate` builds a
witness for every other case as a :class:`Plan`, a tree of construction
steps, then executes it. Replaying the plan reproduces the design exactly.

The only ingredient not built from scratch is a pair of orthogonal Latin
squares of order v = 2 (mod 4), v >= 10. It is needed just for
I_2(v, v l; v) with l odd. It comes from a :class:`KernelProvider`: an
embedded seed (v = 10), the seed cache, user-supplied files, or an opt-in
search. When none of these supplies one, :class:`KernelUnavailable` is
raised.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from . import combinators as comb
from .core import Design, DesignParams, transpose, truncate
from .errors import (InternalAssertion, KernelUnavailable, NonExistent, NoSuchPair,
                     UnverifiedInput)
from .fixtures import SEEDS, get_fixture
from .formats import SeedCache
from .gf import is_prime_power, prime_factorization
from .polyfield import theorem32
from .sudoku import theorem36


class Reason(enum.Enum):
    OK = "OK"
    NOT_DIV_ROW = "NotDivRow"
    NOT_DIV_COL = "NotDivCol"
    NOT_DIV_POWER = "NotDivPower"
    EXCEPTION_2_2_2_N = "Exception_2_2_2_n"
    EXCEPTION_2_6_6_6 = "Exception_2_6_6_6"


_MESSAGES = {
    Reason.OK: "yes",
    Reason.NOT_DIV_ROW: "no: q does not divide m",
    Reason.NOT_DIV_COL: "no: q does not divide n",
    Reason.NOT_DIV_POWER: "no: q^k does not divide mn",
    Reason.EXCEPTION_2_2_2_N: "no: exception (k,q,min(m,n))=(2,2,2) with max(m,n)=2 (mod 4)",
    Reason.EXCEPTION_2_6_6_6: "no: exception (k,q,m,n)=(2,6,6,6)",
}


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.exists

    @property
    def message(self) -> str:
        return _MESSAGES[self.reason]


def exists(k: int, m: int, n: int, q: int) -> ExistenceVerdict:
    """Decide whether an I_k(m, n; q) exists. Argument order of m, n is irrelevant."""
    DesignParams(k, m, n, q)

    def no(reason):
        return ExistenceVerdict(False, reason)

    if m % q:
        return no(Reason.NOT_DIV_ROW)
    if n % q:
        return no(Reason.NOT_DIV_COL)
    if (m * n) % q**k:
        return no(Reason.NOT_DIV_POWER)
    lo, hi = min(m, n), max(m, n)
    if k == 2 and q == 2 and lo == 2 and hi % 4 == 2:
        return no(Reason.EXCEPTION_2_2_2_N)
    if (k, q, m, n) == (2, 6, 6, 6):
        return no(Reason.EXCEPTION_2_6_6_6)
    return ExistenceVerdict(True, Reason.OK)


# Plans

@dataclass(frozen=True)
class Plan:
    """One construction step, with its parameters and sub-plans."""

    step: str
    params: tuple[tuple[str, Any], ...] = ()
    children: tuple["Plan", ...] = ()

    @property
    def kwargs(self) -> dict:
        return dict(self.params)

    def to_dict(self) -> dict:
        out: dict = {"step": self.step}
        if self.params:
            out["params"] = dict(self.params)
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Plan":
        return cls(d["step"], tuple(d.get("params", {}).items()),
                   tuple(cls.from_dict(c) for c in d.get("children", ())))

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Plan":
        return cls.from_dict(json.loads(text))

    def steps(self) -> Iterable[str]:
        yield self.step
        for c in self.children:
            yield from c.steps()

    def render(self, indent: int = 0) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        lines = ["  " * indent + f"{self.step}({args})"]
        lines += [c.render(indent + 1) for c in self.children]
        return "\n".join(lines)


def _node(step: str, *children: Plan, **params) -> Plan:
    return Plan(step, tuple(params.items()), tuple(children))


class KernelProvider:
    """Supplies I_2(v, v; v) designs that cannot be composed from smaller ones.

    Lookup order: embedded seeds, the seed cache, user-supplied designs,
    then (only if ``search_time`` is set) a transversal search whose result
    is written back to the cache.
    """

    def __init__(self, cache: SeedCache | None = None, designs: Iterable[Design] = (),
                 search_time: float | None = None):
        self.cache = cache if cache is not None else SeedCache()
        self.designs: dict[DesignParams, Design] = {}
        for D in designs:
            self.add(D)
        self.search_time = search_time

    def add(self, D: Design) -> None:
        if not D.is_regular:
            raise UnverifiedInput(f"supplied kernel is not regular:\n{D.report.summary(3)}")
        self.designs[D.params] = D

    def get(self, v: int) -> Design:
        params = DesignParams(2, v, v, v)
        key = (2, v, v, v)
        if key in SEEDS:
            return get_fixture(SEEDS[key])
        D = self.cache.load(params)
        if D is None:
            D = self.designs.get(params)
        if D is None and self.search_time is not None:
            from .oracle import find_mols_pair
            outcome = find_mols_pair(v, time_limit=self.search_time)
            if outcome.found:
                D = outcome.design
                try:
                    self.cache.store(D)
                except OSError:
                    pass
        if D is None:
            raise KernelUnavailable(
                f"need a pair of orthogonal Latin squares of order {v}; supply one with "
                f"--seed FILE, place it in the seed cache ({self.cache.path}), "
                f"or allow a search")
        return D


def _blowup(plan: Plan, rows: int, cols: int) -> Plan:
    if rows == cols == 1:
        return plan
    return _node("blowup", plan, rows=rows, cols=cols)


def _glue(step: str, parts: list[Plan]) -> Plan:
    return parts[0] if len(parts) == 1 else _node(step, *parts)


def _execute(plan: Plan, provider: KernelProvider, memo: dict) -> Design:
    if plan in memo:
        return memo[plan]
    kids = [_execute(c, provider, memo) for c in plan.children]
    kw = plan.kwargs
    s = plan.step
    if s == "trivial_design":
        D = comb.trivial_design(kw["k"], kw["m"], kw["n"])
    elif s == "cyclic":
        i = np.arange(kw["m"])[:, None]
        j = np.arange(kw["n"])[None, :]
        D = Design((i % kw["q"] + j % kw["q"]) % kw["q"], kw["q"])
    elif s == "theorem32":
        D = theorem32(kw["q"], kw["M"], kw["N"])
    elif s == "seed":
        D = get_fixture(kw["name"])
    elif s == "kernel":
        D = provider.get(kw["v"])
    elif s == "transpose":
        D = transpose(kids[0])
    elif s == "truncate":
        D = truncate(kids[0], kw["ell"])
    elif s == "blowup":
        D = comb.blowup(kids[0], kw["rows"], kw["cols"])
    elif s == "glue_cols":
        D = comb.glue_cols_many(kids)
    elif s == "glue_rows":
        D = comb.glue_rows_many(kids)
    elif s == "kronecker":
        D = comb.kronecker_many(kids)
    elif s == "theorem36":
        D = theorem36(kids[0], kw["b1"], kw["b2"])
    else:
        raise ValueError(f"unknown plan step {s!r}")
    memo[plan] = D
    return D


def execute(plan: Plan, provider: KernelProvider | None = None) -> Design:
    """Run a plan. Identical sub-plans are built once."""
    return _execute(plan, provider or KernelProvider(), {})


# k = 2

def _i2_2x4() -> Plan:
    return _node("truncate", _node("theorem32", q=2, M=1, N=2), ell=2)


def _square2(l: int) -> Plan:
    """I_2(2l, 2l; 2) for odd l >= 3, patched around the embedded 6 x 6 seed."""
    s66 = _node("seed", name="S66")
    if l == 3:
        return s66
    s = (l - 3) // 2  # 2l = 6 + 4s
    strip = _blowup(_i2_2x4(), 3, s)  # I_2(6, 4s; 2)
    top = _node("glue_cols", s66, strip)
    bottom = _node("glue_cols", _node("transpose", strip), _blowup(_i2_2x4(), 2 * s, s))
    return _node("glue_rows", top, bottom)


def _prime_power_parts(q: int) -> list[int]:
    return [p**e for p, e in prime_factorization(q)]


def mols_plan(v: int) -> Plan:
    """Plan for an I_2(v, v; v), i.e. a pair of orthogonal Latin squares of order v."""
    if v in (2, 6):
        raise NoSuchPair(f"no pair of orthogonal Latin squares of order {v} exists")
    if v == 1:
        return _node("trivial_design", k=2, m=1, n=1)
    if is_prime_power(v):
        return _node("theorem32", q=v, M=1, N=1)
    if v % 2 or v % 4 == 0:
        return _node("kronecker", *[_node("theorem32", q=c, M=1, N=1) for c in _prime_power_parts(v)])
    return _node("kernel", v=v)


def plan_k2(m: int, n: int, q: int) -> Plan:
    """Plan for an I_2(m, n; q) with m <= n, q >= 2, assuming one exists."""
    l1, l2 = m // q, n // q
    if q == 2:
        base = _i2_2x4()
        if l2 % 2 == 0:
            return _blowup(base, l1, l2 // 2)
        if l1 % 2 == 0:
            return _node("transpose", _blowup(base, l2, l1 // 2))
        parts = [_square2(l1)]
        if l2 > l1:
            parts.append(_blowup(base, l1, (l2 - l1) // 2))
        return _glue("glue_cols", parts)
    if q == 6:
        b12 = _node("kronecker", _i2_2x4(), _node("theorem32", q=3, M=1, N=1))
        b18 = _node("seed", name="B18")
        b = l2 % 2
        a = (l2 - 3 * b) // 2
        strip = _glue("glue_cols", [b12] * a + [b18] * b)
        return _glue("glue_rows", [strip] * l1)
    if q % 2 or q % 4 == 0:
        return _blowup(mols_plan(q), l1, l2)
    # q = 2 (mod 4), q >= 10
    r = q // 2
    odd = mols_plan(r)
    wide = _node("kronecker", _i2_2x4(), odd)  # I_2(q, 2q; q)
    if l2 % 2 == 0:
        return _blowup(wide, l1, l2 // 2)
    if l1 % 2 == 0:
        return _node("transpose", _blowup(wide, l2, l1 // 2))
    left = _node("kronecker", _square2(l1), odd) if l1 >= 3 else _node("kernel", v=q)
    parts = [left]
    if l2 > l1:
        parts.append(_blowup(wide, l1, (l2 - l1) // 2))
    return _glue("glue_cols", parts)


# k >= 3

@dataclass(frozen=True)
class Component:
    """The part of m and n belonging to one prime power q_c = p^s exactly dividing q.

    ``m = q_c^i p^alpha (rest)`` and ``n = q_c^j p^beta (rest)`` with
    ``alpha, beta < s``.
    """

    p: int
    s: int
    i: int
    j: int
    alpha: int
    beta: int

    @property
    def qc(self) -> int:
        return self.p**self.s

    @property
    def extended(self) -> bool:
        """True when alpha + beta >= s, which buys one extra coordinate."""
        return self.alpha + self.beta >= self.s

    @property
    def max_k(self) -> int:
        return self.i + self.j + int(self.extended)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Component, ...]
    a1: int
    a2: int


def _valuation(x: int, p: int) -> int:
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def decompose(m: int, n: int, q: int) -> ComponentDecomposition:
    if q < 2:
        raise ValueError("decompose needs q >= 2")
    comps = []
    a1, a2 = m, n
    for p, s in prime_factorization(q):
        vm, vn = _valuation(m, p), _valuation(n, p)
        comps.append(Component(p, s, vm // s, vn // s, vm % s, vn % s))
        a1 //= p**vm
        a2 //= p**vn
    return ComponentDecomposition(tuple(comps), a1, a2)


def max_k(m: int, n: int, q: int) -> int:
    """Largest t with q^t | mn."""
    t, prod = 0, m * n
    while prod % q == 0:
        prod //= q
        t += 1
    return t


def plan_k3plus(k: int, m: int, n: int, q: int) -> Plan:
    kstar = max_k(m, n, q)
    dec = decompose(m, n, q)
    if kstar != min(c.max_k for c in dec.components):
        raise InternalAssertion(f"k* = {kstar} disagrees with the component bounds")
    parts = []
    for c in dec.components:
        if not c.extended and (c.i, c.j, c.qc) == (1, 1, 2):
            raise InternalAssertion("component I_2(2, 2; 2) needed with k >= 3")
        base = _node("theorem32", q=c.qc, M=c.i, N=c.j)
        bm, bn = c.p**c.alpha, c.p**c.beta
        if c.extended:
            part = _node("theorem36", base, b1=bm, b2=bn)
        else:
            part = _blowup(base, bm, bn)
        if c.max_k > kstar:
            part = _node("truncate", part, ell=kstar)
        parts.append(part)
    plan = _blowup(_glue("kronecker", parts), dec.a1, dec.a2)
    if k < kstar:
        plan = _node("truncate", plan, ell=k)
    return plan


def plan(k: int, m: int, n: int, q: int) -> Plan:
    """Construction plan for an I_k(m, n; q); raises :class:`NonExistent`."""
    verdict = exists(k, m, n, q)
    if not verdict:
        raise NonExistent(verdict)
    if m > n:
        return _node("transpose", plan(k, n, m, q))
    if q == 1:
        return _node("trivial_design", k=k, m=m, n=n)
    if k == 1:
        return _node("cyclic", m=m, n=n, q=q)
    if k == 2:
        return plan_k2(m, n, q)
    return plan_k3plus(k, m, n, q)


def generate(k: int, m: int, n: int, q: int,
             provider: KernelProvider | None = None) -> tuple[Design, Plan]:
    """Build a verified I_k(m, n; q) together with the plan that produced it."""
    p = plan(k, m, n, q)
    D = execute(p, provider)
    if D.params != DesignParams(k, m, n, q) or not D.is_regular:
        raise InternalAssertion(f"construction produced an invalid design for {DesignParams(k, m, n, q)}")
    return D, p


def mols_pair(v: int, provider: KernelProvider | None = None) -> Design:
    D = execute(mols_plan(v), provider)
    if not D.is_regular:
        raise InternalAssertion(f"invalid MOLS pair of order {v}")
    return D


__all__ = [
    "Reason", "ExistenceVerdict", "exists", "Plan", "execute", "KernelProvider",
    "plan", "plan_k2", "plan_k3plus", "mols_plan", "mols_pair", "generate",
    "Component", "ComponentDecomposition", "decompose", "max_k",
]
