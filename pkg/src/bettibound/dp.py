"""Dynamic programs maximizing ``sum_d V_q[d, Delta h(d)]``.

``run_simplified`` searches all tuples (l_0, ..., l_D) meeting the
numeric bounds; ``run_complete`` additionally enforces Macaulay's growth
condition ``[l_d]_<d> <= l_{d-1}``, so every tuple is a Hilbert function
of a quotient of R.

Witness sets are stored as shared prefix DAGs: a node is ``None`` (the
set holding only the empty tuple) or a tuple of branches
``(prefix_node, j)``, each meaning "every tuple of ``prefix_node``
followed by ``j``".
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from operator import add
from typing import Iterator, Optional

from .constraints import ConstraintSpec
from .macaulay import macaulay_lower_bound
from .monomials import count_monomials, v_column

__all__ = [
    "ResultsMode",
    "EmptyFamilyError",
    "RawDPResult",
    "pareto_insert",
    "dominates",
    "run_simplified",
    "run_complete",
    "materialize",
    "minimal_lower_chain",
]


class ResultsMode(str, enum.Enum):
    NONE = "none"
    ONE = "one"
    ALL_MAX_BETTI_SUM = "all-max-betti-sum"
    ALL = "all"


class EmptyFamilyError(RuntimeError):
    pass


@dataclass(frozen=True)
class RawDPResult:
    """Maxima of the V-sums at the terminal key, plus witnesses.

    ``witness`` is a max-sum tuple (always present); ``witnesses`` holds
    every max-sum tuple (mode all-max-betti-sum) and ``frontier`` the
    Pareto-maximal value vectors with their tuples (mode all).
    """

    per_q_max: tuple[int, ...]
    max_sum: int
    witness: tuple[int, ...]
    witnesses: Optional[tuple[tuple[int, ...], ...]] = None
    frontier: Optional[tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]], ...]] = None


def dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """``a >= b`` componentwise."""
    return all(x >= y for x, y in zip(a, b))


def pareto_insert(frontier: dict, vector: tuple[int, ...], witnesses) -> dict:
    """Insert ``vector`` (carrying ``witnesses``) into an antichain, in place.

    Witness collections are concatenated on exact equality, so they must
    support ``+``.
    """
    if vector in frontier:
        frontier[vector] = frontier[vector] + witnesses
        return frontier
    doomed = []
    for vec in frontier:
        if dominates(vec, vector):
            return frontier
        if dominates(vector, vec):
            doomed.append(vec)
    for vec in doomed:
        del frontier[vec]
    frontier[vector] = witnesses
    return frontier


def materialize(node) -> list[tuple[int, ...]]:
    """Expand a prefix DAG into plain tuples."""
    if node is None:
        return [()]
    memo: dict[int, list[tuple[int, ...]]] = {}

    def expand(nd):
        if nd is None:
            return [()]
        key = id(nd)
        got = memo.get(key)
        if got is not None:
            return got
        out = []
        for prefix, j in nd:
            for t in expand(prefix):
                out.append(t + (j,))
        memo[key] = out
        return out

    return expand(node)


def _path(node) -> tuple[int, ...]:
    out = []
    while node is not None:
        node, j = node
        out.append(j)
    return tuple(reversed(out))


class _Cell:
    """Best values over one family of prefixes.

    ``one`` is a single max-sum witness as a linked list ``(prefix, j)``;
    ``ties`` and ``front`` are only filled in the modes that need them.
    """

    __slots__ = ("qmax", "best", "one", "ties", "front")

    def __init__(self, qmax, best, one, ties=None, front=None):
        self.qmax = qmax
        self.best = best
        self.one = one
        self.ties = ties
        self.front = front


class _Engine:
    def __init__(self, n: int, mode: ResultsMode):
        self.n = n
        self.mode = ResultsMode(mode)
        self.track_ties = self.mode is ResultsMode.ALL_MAX_BETTI_SUM
        self.track_front = self.mode is ResultsMode.ALL

    def root(self) -> _Cell:
        zero = (0,) * (self.n + 1)
        return _Cell(zero, 0, None, None, {zero: None} if self.track_front else None)

    def extend(self, cell: _Cell, j: int, v: tuple[int, ...], vsum: int) -> _Cell:
        ties = ((cell.ties, j),) if self.track_ties else None
        front = None
        if self.track_front:
            front = {tuple(map(add, vec, v)): ((w, j),) for vec, w in cell.front.items()}
        return _Cell(tuple(map(add, cell.qmax, v)), cell.best + vsum, (cell.one, j), ties, front)

    def merge(self, old: Optional[_Cell], new: _Cell, prefer_new: bool) -> _Cell:
        """Combine two disjoint families; ``old`` is never mutated."""
        if old is None:
            return new
        qmax = tuple(map(max, old.qmax, new.qmax))
        if new.best > old.best or (prefer_new and new.best == old.best):
            best, one = new.best, new.one
        else:
            best, one = old.best, old.one
        ties = None
        if self.track_ties:
            if new.best > old.best:
                ties = new.ties
            elif new.best < old.best:
                ties = old.ties
            else:
                ties = old.ties + new.ties
        front = None
        if self.track_front:
            front = dict(old.front)
            for vec, w in new.front.items():
                pareto_insert(front, vec, w)
        return _Cell(qmax, best, one, ties, front)

    def finish(self, cell: Optional[_Cell]) -> RawDPResult:
        if cell is None:
            raise EmptyFamilyError("empty family: no function satisfies the constraints")
        witnesses = frontier = None
        if self.track_ties:
            witnesses = tuple(sorted(materialize(cell.ties)))
        if self.track_front:
            frontier = tuple(
                (vec, tuple(sorted(materialize(w))))
                for vec, w in sorted(cell.front.items(), reverse=True)
            )
        return RawDPResult(cell.qmax, cell.best, _path(cell.one), witnesses, frontier)


def minimal_lower_chain(spec: ConstraintSpec) -> list[int]:
    """Least possible ``l_d`` for every tuple satisfying the growth condition.

    Propagates ``l_{d-1} >= [l_d]_<d>`` backwards from the forced value
    beyond the horizon, together with the ``g`` bounds.
    """
    D = spec.horizon
    m = [0] * (D + 1)
    m[D] = max(spec.g[D], spec.tail_lower_key())
    for d in range(D, 0, -1):
        m[d - 1] = max(spec.g[d - 1], macaulay_lower_bound(m[d], d))
    return m


def _c_windows(spec: ConstraintSpec, lower_l: list[int]) -> tuple[list[int], list[int]]:
    """Exact necessary bounds on the partial sums ``c_d``.

    Any completed tuple has ``c_e = c_d + sum_{d<t<=e} l_t`` with
    ``lower_l[t] <= l_t <= f[t]``, and must satisfy ``G[e] <= c_e <= F[e]``.
    """
    D = spec.horizon
    hi = [0] * (D + 1)
    lo = [0] * (D + 1)
    hi[D], lo[D] = spec.F[D], spec.G[D]
    for d in range(D - 1, -1, -1):
        hi[d] = min(spec.F[d], hi[d + 1] - lower_l[d + 1])
        lo[d] = max(spec.G[d], lo[d + 1] - spec.f[d + 1])
    return lo, hi


def _layer_values(n: int, d: int, jmax: int):
    total = count_monomials(n + 1, d)
    rows = v_column(n, d, min(jmax, total))
    return rows, [sum(r) for r in rows]


def run_simplified(spec: ConstraintSpec, mode: ResultsMode | str = ResultsMode.NONE) -> RawDPResult:
    """Maximize over all tuples meeting the numeric bounds (no growth condition).

    Cells are keyed by the partial sum ``c``; ties on the V-sum keep the
    witness with the smaller appended value.
    """
    eng = _Engine(spec.n, mode)
    lo, hi = _c_windows(spec, list(spec.g))
    D = spec.horizon
    prev: dict[int, _Cell] = {0: eng.root()}
    for d in range(D + 1):
        pmin, pmax = min(prev), max(prev)
        cmin = max(lo[d], pmin + spec.g[d])
        cmax = min(hi[d], pmax + spec.f[d])
        if cmin > cmax:
            raise EmptyFamilyError(f"empty family: no feasible partial sum in degree {d}")
        jtop = min(spec.f[d], cmax - pmin)
        rows, sums = _layer_values(spec.n, d, jtop)
        cur: dict[int, _Cell] = {}
        for c in range(cmin, cmax + 1):
            cell = None
            for j in range(max(spec.g[d], c - pmax), min(spec.f[d], c - pmin) + 1):
                p = prev.get(c - j)
                if p is None:
                    continue
                cell = eng.merge(cell, eng.extend(p, j, rows[j], sums[j]), prefer_new=False)
            if cell is not None:
                cur[c] = cell
        if not cur:
            raise EmptyFamilyError(f"empty family: no feasible partial sum in degree {d}")
        prev = cur
    return eng.finish(prev.get(spec.G[D]))


def run_complete(spec: ConstraintSpec, mode: ResultsMode | str = ResultsMode.NONE) -> RawDPResult:
    """Maximize over Hilbert functions of quotients of R meeting the bounds.

    Cells are keyed ``(c, j)`` and hold the best values over appended
    values ``>= j`` (suffix maxima), filled from the top value of ``j``
    down.  Lookups with key ``k`` below the stored range clamp to its
    bottom; keys above it are infeasible.
    """
    eng = _Engine(spec.n, mode)
    m = minimal_lower_chain(spec)
    lo, hi = _c_windows(spec, m)
    D = spec.horizon
    root = eng.root()
    # layer entry: c -> (jbase, [suffix cell for j = jbase, jbase + 1, ...])
    prev: Optional[dict[int, tuple[int, list]]] = None
    for d in range(D + 1):
        if prev is None:
            pmin = pmax = 0
        else:
            pmin, pmax = min(prev), max(prev)
        cmin = max(lo[d], pmin + m[d])
        cmax = min(hi[d], pmax + spec.f[d])
        jtop_layer = min(spec.f[d], cmax - pmin)
        if cmin > cmax or jtop_layer < m[d]:
            raise EmptyFamilyError(f"empty family: no feasible partial sum in degree {d}")
        rows, sums = _layer_values(spec.n, d, jtop_layer)
        cur: dict[int, tuple[int, list]] = {}
        for c in range(cmin, cmax + 1):
            # values below m[d] never complete, so the suffix can start there
            jbase = max(m[d], c - pmax)
            jtop = min(spec.f[d], c - pmin)
            if jtop < jbase:
                continue
            suffix: list = [None] * (jtop - jbase + 1)
            cell = None
            for j in range(jtop, jbase - 1, -1):
                if prev is None:
                    p = root if c == j else None
                else:
                    p = None
                    entry = prev.get(c - j)
                    if entry is not None:
                        pbase, pcells = entry
                        idx = macaulay_lower_bound(j, d) - pbase
                        if idx < 0:
                            idx = 0
                        if idx < len(pcells):
                            p = pcells[idx]
                if p is not None:
                    cell = eng.merge(cell, eng.extend(p, j, rows[j], sums[j]), prefer_new=True)
                suffix[j - jbase] = cell
            if cell is not None:
                # drop the infeasible top of the range
                top = len(suffix)
                while suffix[top - 1] is None:
                    top -= 1
                cur[c] = (jbase, suffix[:top])
        if not cur:
            raise EmptyFamilyError(f"empty family: no feasible partial sum in degree {d}")
        prev = cur
    entry = prev.get(spec.G[D])
    final = None
    if entry is not None:
        jbase, cells = entry
        idx = m[D] - jbase
        idx = max(idx, 0)
        if idx < len(cells):
            final = cells[idx]
    return eng.finish(final)


def iter_tuples(raw: RawDPResult) -> Iterator[tuple[int, ...]]:
    if raw.witnesses is not None:
        yield from raw.witnesses
    elif raw.frontier is not None:
        for _, ts in raw.frontier:
            yield from ts
    else:
        yield raw.witness
