"""Brute-force ground truth for small instances.

Enumerates every difference tuple of the family and maximizes directly.
Shares only the V tables and the Macaulay operators with the dynamic
programs; selection logic is written separately so a DP bug cannot
confirm itself.
"""
from __future__ import annotations

import enum
from typing import Iterator

from .betti import MaxBettiResult, finalize
from .constraints import ConstraintSpec
from .dp import EmptyFamilyError, RawDPResult, ResultsMode
from .macaulay import macaulay_lower_bound
from .monomials import count_monomials, v_table

__all__ = [
    "FamilyKind",
    "InstanceTooLargeError",
    "enumerate_tuples",
    "brute_force_raw",
    "brute_force_result",
    "DEFAULT_CEILING",
]

DEFAULT_CEILING = 10**7


class FamilyKind(str, enum.Enum):
    WITH_MACAULAY_CONDITION = "with-macaulay"
    WITHOUT_MACAULAY_CONDITION = "without-macaulay"


class InstanceTooLargeError(RuntimeError):
    pass


def _in_family(spec: ConstraintSpec, tup, kind: FamilyKind) -> bool:
    c = 0
    for d, l in enumerate(tup):
        c += l
        if not (spec.g[d] <= l <= spec.f[d] and spec.G[d] <= c <= spec.F[d]):
            return False
        if kind is FamilyKind.WITH_MACAULAY_CONDITION and d > 0:
            if macaulay_lower_bound(l, d) > tup[d - 1]:
                return False
    if kind is FamilyKind.WITH_MACAULAY_CONDITION:
        D = spec.horizon
        if macaulay_lower_bound(spec.tail_dh(D + 1), D + 1) > tup[D]:
            return False
    return c == spec.G[spec.horizon]


def enumerate_tuples(spec: ConstraintSpec, kind: FamilyKind | str,
                     ceiling: int = DEFAULT_CEILING) -> Iterator[tuple[int, ...]]:
    """Depth-first, lexicographic stream of every tuple in the family.

    Raises :class:`InstanceTooLargeError` once more than ``ceiling``
    search nodes have been visited.
    """
    kind = FamilyKind(kind)
    D = spec.horizon
    # c_d <= F(e) - (sum of g over d < t <= e) for every later e; likewise from below with f
    upper = [0] * (D + 1)
    lower = [0] * (D + 1)
    upper[D] = spec.F[D]
    lower[D] = spec.G[D]
    for d in range(D - 1, -1, -1):
        upper[d] = min(spec.F[d], upper[d + 1] - spec.g[d + 1])
        lower[d] = max(spec.G[d], lower[d + 1] - spec.f[d + 1])
    visited = 0
    prefix: list[int] = []

    def rec(d: int, c: int):
        nonlocal visited
        for l in range(spec.g[d], spec.f[d] + 1):
            c2 = c + l
            if c2 > upper[d]:
                break
            if c2 < lower[d]:
                continue
            if kind is FamilyKind.WITH_MACAULAY_CONDITION and d > 0:
                if macaulay_lower_bound(l, d) > prefix[-1]:
                    # the lower bound only grows with l
                    break
            visited += 1
            if visited > ceiling:
                raise InstanceTooLargeError(f"instance too large: more than {ceiling} search nodes")
            prefix.append(l)
            if d == D:
                if c2 == spec.G[D] and _in_family(spec, prefix, kind):
                    yield tuple(prefix)
            else:
                yield from rec(d + 1, c2)
            prefix.pop()

    yield from rec(0, 0)


def brute_force_raw(spec: ConstraintSpec, kind: FamilyKind | str, mode: ResultsMode | str = ResultsMode.ALL,
                    ceiling: int = DEFAULT_CEILING) -> RawDPResult:
    """Exhaustive maxima in the same raw form the dynamic programs return.

    The single witness is the max-sum tuple that is smallest when read
    from its last entry backwards, matching the DP tie-breaking.
    """
    mode = ResultsMode(mode)
    n = spec.n
    tables = []
    for d in range(spec.horizon + 1):
        top = min(spec.f[d], count_monomials(n + 1, d), spec.F[spec.horizon])
        tables.append(v_table(n, d, max(top, 0)))
    scored = []
    for tup in enumerate_tuples(spec, kind, ceiling):
        vec = [0] * (n + 1)
        for d, l in enumerate(tup):
            row = tables[d].rows[l]
            for q in range(n + 1):
                vec[q] += row[q]
        scored.append((tup, tuple(vec)))
    if not scored:
        raise EmptyFamilyError("empty family: no function satisfies the constraints")

    per_q = tuple(max(v[q] for _, v in scored) for q in range(n + 1))
    best = max(sum(v) for _, v in scored)
    ties = sorted(t for t, v in scored if sum(v) == best)
    witness = min(ties, key=lambda t: t[::-1])

    witnesses = frontier = None
    if mode is ResultsMode.ALL_MAX_BETTI_SUM:
        witnesses = tuple(ties)
    elif mode is ResultsMode.ALL:
        vectors = {v for _, v in scored}
        maximal = [v for v in vectors
                   if not any(w != v and all(a >= b for a, b in zip(w, v)) for w in vectors)]
        frontier = tuple(
            (v, tuple(sorted(t for t, w in scored if w == v)))
            for v in sorted(maximal, reverse=True)
        )
    return RawDPResult(per_q, best, witness, witnesses, frontier)


def brute_force_result(spec: ConstraintSpec, kind: FamilyKind | str, mode: ResultsMode | str = ResultsMode.ALL,
                       ceiling: int = DEFAULT_CEILING) -> MaxBettiResult:
    return finalize(brute_force_raw(spec, kind, mode, ceiling), spec, mode)
