"""Lexsegment ideals, Eliahou-Kervaire Betti numbers and result assembly."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .constraints import ConstraintSpec
from .dp import RawDPResult, ResultsMode
from .macaulay import binomial, macaulay_lower_bound, macaulay_upper_bound
from .monomials import Monomial, count_monomials, lex_last_monomial, max_index, v_column

__all__ = [
    "NotOSequenceError",
    "MonomialIdeal",
    "BettiTable",
    "MaxBettiResult",
    "check_o_sequence",
    "lex_ideal_generators",
    "ek_graded_betti",
    "total_betti",
    "v_sums",
    "betti_offsets",
    "reference_tuple",
    "finalize",
    "hilbert_from_differences",
    "differences_from_hilbert",
    "almost_lex_ideal",
    "almost_lex_betti",
]


class NotOSequenceError(ValueError):
    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators, sorted by degree and then descending lex."""

    num_vars: int
    generators: tuple[Monomial, ...]

    def format(self, offset: int = 1) -> str:
        return "ideal(" + ", ".join(m.format(offset) for m in self.generators) + ")"

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``{(q, j): value}``.

    ``quotient=False`` stores beta_{q,j}(I); ``quotient=True`` stores
    beta_{q,j}(S/I), which shifts q by one and adds beta_{0,0} = 1.
    """

    entries: dict = field(default_factory=dict)
    quotient: bool = False

    def totals(self) -> list[int]:
        if not self.entries:
            return [1] if self.quotient else []
        top = max(q for q, _ in self.entries)
        out = [0] * (top + 1)
        for (q, _), v in self.entries.items():
            out[q] += v
        return out

    def to_quotient(self) -> "BettiTable":
        if self.quotient:
            return self
        entries = {(q + 1, j): v for (q, j), v in self.entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(entries, True)

    def rows(self) -> dict[int, dict[int, int]]:
        """``{j - q: {q: value}}``, the usual display rows."""
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (q, j), v in self.entries.items():
            if v:
                out[j - q][q] = v
        return dict(out)

    def render(self) -> str:
        rows = self.rows()
        totals = self.totals()
        ncols = len(totals)
        if not rows:
            return "total:"
        rmax = max(rows)
        cells = [[str(q) for q in range(ncols)], [str(t) for t in totals]]
        labels = ["", "total:"]
        for r in range(min(rows), rmax + 1):
            labels.append(f"{r}:")
            cells.append([str(rows.get(r, {}).get(q, ".")) for q in range(ncols)])
        widths = [max(len(row[q]) for row in cells) for q in range(ncols)]
        lw = max(len(lb) for lb in labels)
        lines = []
        for lb, row in zip(labels, cells):
            body = " ".join(s.rjust(w) for s, w in zip(row, widths))
            lines.append(f"{lb.rjust(lw)} {body}")
        return "\n".join(lines)

    def as_json(self) -> list[dict]:
        return [{"q": q, "j": j, "value": v} for (q, j), v in sorted(self.entries.items()) if v]


@dataclass(frozen=True)
class MaxBettiResult:
    betti_upper_bound: tuple[int, ...]
    maximum_betti_sum: int
    is_realizable: bool
    hilbert_functions: Optional[tuple[tuple[int, ...], ...]] = None
    maximal_betti_numbers: Optional[tuple[tuple[int, ...], ...]] = None

    def as_dict(self) -> dict:
        out = {
            "betti_upper_bound": list(self.betti_upper_bound),
            "maximum_betti_sum": self.maximum_betti_sum,
            "is_realizable": self.is_realizable,
        }
        if self.hilbert_functions is not None:
            out["hilbert_functions"] = [list(h) for h in self.hilbert_functions]
        if self.maximal_betti_numbers is not None:
            out["maximal_betti_numbers"] = [list(b) for b in self.maximal_betti_numbers]
        return out


def _growth_from(prev: int, d: int, num_vars: int) -> int:
    """Largest degree-``d`` value allowed after value ``prev`` in degree ``d - 1``."""
    if d == 1:
        return prev * num_vars
    return macaulay_upper_bound(prev, d - 1)


def check_o_sequence(dh: Sequence[int], num_vars: int) -> None:
    """Raise :class:`NotOSequenceError` unless ``dh`` is the Hilbert function of a quotient of R."""
    for d, a in enumerate(dh):
        if a < 0 or a > count_monomials(num_vars, d):
            raise NotOSequenceError(
                f"not an O-sequence: value {a} in degree {d} is outside 0..{count_monomials(num_vars, d)}", d)
        if d == 0:
            if a > 1:
                raise NotOSequenceError("not an O-sequence: degree 0 value exceeds 1", 0)
            continue
        if a > _growth_from(dh[d - 1], d, num_vars):
            raise NotOSequenceError(
                f"not an O-sequence: value {a} in degree {d} exceeds the Macaulay bound "
                f"{_growth_from(dh[d - 1], d, num_vars)}", d)


def lex_ideal_generators(num_vars: int, dh: Sequence[int]) -> MonomialIdeal:
    """Minimal generators of the lexsegment ideal of R with Hilbert function ``dh``.

    ``dh`` lists values in degrees ``0..len(dh)-1``; generators are found in
    those degrees only.  Degree-``d`` generators are the monomials of
    ranks ``dh[d] + 1 .. dh[d-1]^<d-1>``: the ideal's degree-d part minus
    the (again lex) shadow of its degree ``d - 1`` part.
    """
    check_o_sequence(dh, num_vars)
    n = num_vars - 1
    gens: list[Monomial] = []
    for d, a in enumerate(dh):
        if d == 0:
            if a == 0:
                gens.append(Monomial((0,) * num_vars))
                break
            continue
        ceiling = _growth_from(dh[d - 1], d, num_vars)
        # ranks increase toward the lex-greatest end
        for k in range(ceiling, a, -1):
            gens.append(lex_last_monomial(n, d, k))
    return MonomialIdeal(num_vars, tuple(gens))


def _maxi(m: Monomial) -> int:
    return 0 if m.degree == 0 else max_index(m)


def ek_graded_betti(ideal: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of a stable ideal: each generator ``u`` of degree ``t``
    contributes C(maxi(u), q) to beta_{q, t+q}."""
    entries: dict = defaultdict(int)
    for u in ideal.generators:
        t, mi = u.degree, _maxi(u)
        for q in range(mi + 1):
            entries[(q, t + q)] += binomial(mi, q)
    return BettiTable(dict(entries), False)


def total_betti(ideal: MonomialIdeal) -> tuple[int, ...]:
    """``(beta_0, ..., beta_n)`` of the ideal, padded to the number of variables."""
    out = [0] * ideal.num_vars
    for u in ideal.generators:
        mi = _maxi(u)
        for q in range(mi + 1):
            out[q] += binomial(mi, q)
    return tuple(out)


def v_sums(n: int, dh: Sequence[int]) -> tuple[int, ...]:
    """``(sum_d V_q[d, dh[d]])_q``."""
    acc = [0] * (n + 1)
    for d, a in enumerate(dh):
        row = v_column(n, d, a)[a]
        for q in range(n + 1):
            acc[q] += row[q]
    return tuple(acc)


def hilbert_from_differences(dh: Sequence[int]) -> list[int]:
    out, c = [], 0
    for a in dh:
        c += a
        out.append(c)
    return out


def differences_from_hilbert(h: Sequence[int]) -> list[int]:
    return [h[0]] + [h[d] - h[d - 1] for d in range(1, len(h))]


def _extended(spec: ConstraintSpec, tup: Sequence[int]) -> list[int]:
    # Delta h through degree D + 1
    return list(tup) + [spec.tail_dh(spec.horizon + 1)]


def reference_tuple(spec: ConstraintSpec) -> list[int]:
    """A canonical Hilbert function with the spec's tail: the least one allowed by growth."""
    D = spec.horizon
    ref = [0] * (D + 1)
    ref[D] = spec.tail_lower_key()
    for d in range(D, 0, -1):
        ref[d - 1] = macaulay_lower_bound(ref[d], d)
    return ref


def betti_offsets(spec: ConstraintSpec, reference: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """Constants ``C_q`` with ``beta_q(L_dh) = C_q + sum_d V_q[d, dh(d)]`` for the family.

    Any ``reference`` tuple (length D + 1) whose extension by the tail is an
    O-sequence gives the same constants.
    """
    if reference is None:
        reference = reference_tuple(spec)
    if len(reference) != spec.horizon + 1:
        raise ValueError(f"reference must have {spec.horizon + 1} entries")
    dh = _extended(spec, reference)
    check_o_sequence(dh + [spec.tail_dh(spec.horizon + 2)], spec.r_vars)
    betti = total_betti(lex_ideal_generators(spec.r_vars, dh))
    vs = v_sums(spec.n, reference)
    return tuple(b - v for b, v in zip(betti, vs))


def _display_h(spec: ConstraintSpec, tup: Sequence[int]) -> tuple[int, ...]:
    """Values of h from degree 0 through one degree past the point where h
    joins its polynomial for good; with a constant tail this leaves exactly
    one repetition of the stable value, and it does not depend on the horizon."""
    h = hilbert_from_differences(tup)
    D = spec.horizon
    h.append(spec.tail_h(D + 1))
    r = D
    while r > 0 and h[r - 1] == spec.tail_h(r - 1):
        r -= 1
    return tuple(h[: r + 2])


def finalize(raw: RawDPResult, spec: ConstraintSpec, mode: ResultsMode | str) -> MaxBettiResult:
    mode = ResultsMode(mode)
    offsets = betti_offsets(spec)
    bound = tuple(c + v for c, v in zip(offsets, raw.per_q_max))
    best = sum(offsets) + raw.max_sum
    hfs = maximal = None
    if mode is ResultsMode.ONE:
        hfs = (_display_h(spec, raw.witness),)
    elif mode is ResultsMode.ALL_MAX_BETTI_SUM:
        hfs = tuple(sorted(_display_h(spec, t) for t in raw.witnesses))
    elif mode is ResultsMode.ALL:
        hfs = tuple(sorted(_display_h(spec, t) for _, ts in raw.frontier for t in ts))
        maximal = tuple(sorted(
            (tuple(c + v for c, v in zip(offsets, vec)) for vec, _ in raw.frontier), reverse=True))
    return MaxBettiResult(bound, best, sum(bound) == best, hfs, maximal)


def almost_lex_ideal(N: int, h: Sequence[int]) -> MonomialIdeal:
    """Lexsegment ideal of R (first N - 1 variables) with Hilbert function Delta h, viewed in S.

    ``h`` lists values of h_{S/I} from degree 0; it is continued as
    constant after its last entry, so generators are produced through
    one degree past it.
    """
    if N < 2:
        raise ValueError("need at least 2 variables")
    h = list(h)
    if not h:
        raise NotOSequenceError("empty Hilbert function", 0)
    for d, v in enumerate(h):
        if v > count_monomials(N, d):
            raise NotOSequenceError(
                f"h({d}) = {v} exceeds the number of degree-{d} monomials {count_monomials(N, d)}", d)
    dh = differences_from_hilbert(h) + [0]
    r = lex_ideal_generators(N - 1, dh)
    gens = tuple(Monomial(m.exponents + (0,)) for m in r.generators)
    return MonomialIdeal(N, gens)


def almost_lex_betti(N: int, h: Sequence[int]) -> BettiTable:
    """Quotient-convention Betti table of S/LS (equal to that of R/L)."""
    return ek_graded_betti(almost_lex_ideal(N, h)).to_quotient()
