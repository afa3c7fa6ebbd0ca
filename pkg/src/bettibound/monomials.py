"""Monomials of R = K[x_0, ..., x_n] under lex order with x_0 > ... > x_n.

Ranks count from the lex-smallest end: rank 1 in degree d is x_n^d.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .macaulay import binomial

__all__ = [
    "Monomial",
    "count_monomials",
    "max_index",
    "lex_last_monomial",
    "monomial_rank",
    "iter_lex_ascending",
    "VTable",
    "v_table",
    "v_column",
]


def count_monomials(num_vars: int, d: int) -> int:
    """Number of degree-``d`` monomials in ``num_vars`` variables."""
    if d < 0:
        return 0
    return binomial(num_vars - 1 + d, d)


@dataclass(frozen=True, order=True)
class Monomial:
    """Dense exponent vector; tuple comparison is the lex order."""

    exponents: tuple[int, ...]

    @classmethod
    def of(cls, *exponents: int) -> "Monomial":
        return cls(tuple(exponents))

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def format(self, offset: int = 1, name: str = "x") -> str:
        """Power-product string such as ``x2^3*x3*x4``; variable ``i`` prints as ``x{i+offset}``."""
        parts = []
        for i, a in enumerate(self.exponents):
            if a == 1:
                parts.append(f"{name}{i + offset}")
            elif a > 1:
                parts.append(f"{name}{i + offset}^{a}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.format()


def max_index(m: Monomial) -> int:
    """Largest index of a variable dividing ``m``."""
    for i in range(len(m.exponents) - 1, -1, -1):
        if m.exponents[i] > 0:
            return i
    raise ValueError("max_index is undefined for the monomial 1")


def lex_last_monomial(n: int, d: int, k: int) -> Monomial:
    """The ``k``-th lex-smallest monomial of degree ``d`` in x_0..x_n."""
    total = count_monomials(n + 1, d)
    if not 1 <= k <= total:
        raise ValueError(f"rank {k} out of range 1..{total} for degree {d} in {n + 1} variables")
    exps = []
    remaining = d
    for i in range(n):
        # monomials with smaller x_i exponent come first
        e = 0
        while True:
            block = count_monomials(n - i, remaining - e)
            if k <= block:
                break
            k -= block
            e += 1
        exps.append(e)
        remaining -= e
    exps.append(remaining)
    return Monomial(tuple(exps))


def monomial_rank(m: Monomial) -> int:
    """Inverse of :func:`lex_last_monomial`."""
    n = m.num_vars - 1
    remaining = m.degree
    k = 1
    for i in range(n):
        e = m.exponents[i]
        for smaller in range(e):
            k += count_monomials(n - i, remaining - smaller)
        remaining -= e
    return k


def iter_lex_ascending(num_vars: int, d: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of degree ``d`` from lex-smallest upward (successor walk)."""
    a = [0] * num_vars
    a[-1] = d
    yield tuple(a)
    if num_vars == 1:
        return
    while True:
        last = num_vars - 1
        if a[last] > 0:
            a[last - 1] += 1
            a[last] -= 1
        else:
            nz = max(i for i in range(num_vars) if a[i] > 0)
            if nz == 0:
                return
            moved = a[nz]
            a[nz] = 0
            a[nz - 1] += 1
            a[last] = moved - 1
        yield tuple(a)


@dataclass(frozen=True)
class VTable:
    """Cumulative ``V_q[d, l]`` for ``0 <= l <= l_max``, all ``q`` at once.

    ``rows[l]`` is the vector ``(V_0[d, l], ..., V_n[d, l])``.
    """

    n: int
    degree: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def l_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, key):
        q, l = key
        return self.rows[l][q]

    def column(self, l: int) -> tuple[int, ...]:
        return self.rows[l]


def _increments(n: int) -> list[tuple[int, ...]]:
    # increment contributed by a monomial with maxi = i, for every q
    return [
        tuple(binomial(n + 1, q + 1) - binomial(i + 1, q + 1) for q in range(n + 1))
        for i in range(n + 1)
    ]


def v_table(n: int, d: int, l_max: int) -> VTable:
    """``V_q[d, l]`` for ``l = 0..l_max`` by one streaming pass over R_d[1..l_max].

    Degree 0 uses the convention that the monomial 1 behaves as if its
    largest variable index were 0, which makes the unit ideal fit the
    Betti-difference identity.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    total = count_monomials(n + 1, d)
    if not 0 <= l_max <= total:
        raise ValueError(f"l_max={l_max} out of range 0..{total}")
    return VTable(n, d, tuple(_cumulative(n, d, l_max)))


@lru_cache(maxsize=4096)
def _cumulative_cached(n: int, d: int, l_max: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_cumulative(n, d, l_max))


def _cumulative(n: int, d: int, l_max: int) -> list[tuple[int, ...]]:
    inc = _increments(n)
    zero = (0,) * (n + 1)
    rows = [zero]
    if l_max == 0:
        return rows
    if d == 0:
        rows.append(inc[0])
        return rows
    acc = zero
    for exps in iter_lex_ascending(n + 1, d):
        i = n
        while exps[i] == 0:
            i -= 1
        acc = tuple(x + y for x, y in zip(acc, inc[i]))
        rows.append(acc)
        if len(rows) > l_max:
            break
    return rows


def v_column(n: int, d: int, l_max: int) -> Sequence[tuple[int, ...]]:
    """Cached rows of :func:`v_table` for internal consumers."""
    return _cumulative_cached(n, d, l_max)
