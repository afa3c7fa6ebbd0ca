"""Exact integer combinatorics for Hilbert functions.

Binomial coefficients, Macaulay representations and the two growth
operators built on them, and Gotzmann decompositions of Hilbert
polynomials.  Everything is exact: Python integers and ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "binomial",
    "MacaulayRep",
    "macaulay_rep",
    "macaulay_upper_bound",
    "macaulay_lower_bound",
    "HilbertPolynomial",
    "NotHilbertPolynomialError",
    "gotzmann_form",
    "gotzmann_number",
]

DEFAULT_PEEL_CEILING = 10**6


@lru_cache(maxsize=1 << 16)
def binomial(a: int, b: int) -> int:
    """C(a, b), with C(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class MacaulayRep:
    """The ``degree``-th Macaulay representation ``a = sum C(k_i, i)``.

    ``terms`` holds pairs ``(k_i, i)`` with ``i`` running down from
    ``degree`` and strictly decreasing tops ``k_i >= i``.  Zero is the
    empty term list.
    """

    degree: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(binomial(k, i) for k, i in self.terms)

    def __iter__(self):
        return iter(self.terms)


def _largest_top(a: int, i: int) -> int:
    # largest k with C(k, i) <= a, assuming a >= 1 = C(i, i)
    lo, hi = i, i + 1
    while binomial(hi, i) <= a:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def _check_degree(d: int) -> None:
    if d <= 0:
        raise ValueError(f"Macaulay degree must be positive, got {d}")


@lru_cache(maxsize=1 << 18)
def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy ``d``-th Macaulay representation of ``a``."""
    _check_degree(d)
    if a < 0:
        raise ValueError(f"cannot represent negative integer {a}")
    terms = []
    i = d
    while a > 0 and i >= 1:
        k = _largest_top(a, i)
        terms.append((k, i))
        a -= binomial(k, i)
        i -= 1
    return MacaulayRep(d, tuple(terms))


def macaulay_upper_bound(a: int, d: int) -> int:
    """Maximal degree ``d + 1`` value of an O-sequence taking value ``a`` in degree ``d``."""
    return sum(binomial(k + 1, i + 1) for k, i in macaulay_rep(a, d).terms)


@lru_cache(maxsize=1 << 18)
def macaulay_lower_bound(a: int, d: int) -> int:
    """Least degree ``d - 1`` value compatible with value ``a`` in degree ``d``.

    Equals the number of degree ``d - 1`` divisors of the ``a``
    lex-smallest monomials of degree ``d``.
    """
    return sum(binomial(k - 1, i - 1) for k, i in macaulay_rep(a, d).terms)


class NotHilbertPolynomialError(ValueError):
    pass


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _binomial_poly(shift: int, a: int) -> list[Fraction]:
    """Power-basis coefficients (ascending) of C(d + shift, a) as a polynomial in d."""
    coeffs = [Fraction(1)]
    for t in range(a):
        # multiply by (d + shift - t)
        c0 = shift - t
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for idx, c in enumerate(coeffs):
            nxt[idx] += c * c0
            nxt[idx + 1] += c
        coeffs = nxt
    scale = Fraction(1, factorial(a))
    return [c * scale for c in coeffs]


class HilbertPolynomial:
    """Numerical polynomial with exact rational coefficients.

    Internally coefficients are stored in ascending order of powers of
    ``d``; :meth:`from_descending` accepts the usual leading-term-first
    listing (``[3, -6, 175]`` is ``3d^2 - 6d + 175``).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int | str] = ()):
        self.coeffs: tuple[Fraction, ...] = tuple(_trim([Fraction(c) for c in coeffs]))

    @classmethod
    def constant(cls, c: int) -> "HilbertPolynomial":
        return cls([c])

    @classmethod
    def from_descending(cls, coeffs: Sequence[Fraction | int | str]) -> "HilbertPolynomial":
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, d: int) -> int:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * d + c
        if acc.denominator != 1:
            raise NotHilbertPolynomialError(f"polynomial is not integer valued at d={d}")
        return int(acc)

    def difference(self) -> "HilbertPolynomial":
        """The polynomial d -> p(d) - p(d - 1)."""
        shifted = self._compose_shift(-1)
        return HilbertPolynomial(a - b for a, b in _zip_pad(self.coeffs, shifted))

    def _compose_shift(self, s: int) -> list[Fraction]:
        # coefficients of p(d + s)
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            for i in range(k + 1):
                out[i] += c * comb(k, i) * Fraction(s) ** (k - i)
        return out

    def check_integer_valued(self) -> None:
        for d in range(max(self.degree, 0) + 1):
            self(d)

    def descending(self) -> list[Fraction]:
        return list(reversed(self.coeffs)) or [Fraction(0)]

    def __eq__(self, other):
        return isinstance(other, HilbertPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HilbertPolynomial.from_descending({[str(c) for c in self.descending()]})"

    def __str__(self):
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("d" if k == 1 else f"d^{k}")
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts) if parts else "0"


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def gotzmann_form(p: HilbertPolynomial, ceiling: int = DEFAULT_PEEL_CEILING) -> list[tuple[int, int]]:
    """Peel ``p`` into ``sum_{i=1}^{r} C(d + a_i - i + 1, a_i)``.

    Returns the pairs ``(a_i, i)``.  Raises
    :class:`NotHilbertPolynomialError` when the peeling leaves a negative
    leading coefficient, breaks the descending order of the ``a_i`` or
    exceeds ``ceiling`` terms.
    """
    p.check_integer_valued()
    rest = list(p.coeffs)
    terms: list[tuple[int, int]] = []
    i = 1
    while rest:
        a = len(rest) - 1
        if rest[-1] < 0:
            raise NotHilbertPolynomialError(f"{p} is not a Hilbert polynomial (negative leading term)")
        if terms and a > terms[-1][0]:
            raise NotHilbertPolynomialError(f"{p} is not a Hilbert polynomial (ascending Gotzmann exponents)")
        if len(terms) >= ceiling:
            raise NotHilbertPolynomialError(f"Gotzmann peeling of {p} exceeded {ceiling} terms")
        b = _binomial_poly(a - i + 1, a)
        for idx, c in enumerate(b):
            rest[idx] -= c
        _trim(rest)
        terms.append((a, i))
        i += 1
    return terms


def gotzmann_number(p: HilbertPolynomial, ceiling: int = DEFAULT_PEEL_CEILING) -> int:
    """Number of terms in the Gotzmann decomposition of ``p``."""
    return len(gotzmann_form(p, ceiling))
