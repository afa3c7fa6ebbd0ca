"""Constraint specifications (G, F, g, f, D) and algorithm selection."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .macaulay import HilbertPolynomial, gotzmann_number, macaulay_lower_bound
from .monomials import count_monomials

__all__ = [
    "ConstraintError",
    "NoHorizonError",
    "ConstraintSpec",
    "Algorithm",
    "build_spec",
    "choose_algorithm",
    "normalize_bounds",
]

BoundInput = Union[None, Sequence[Optional[int]], Mapping[int, int]]


class ConstraintError(ValueError):
    """Bounds that cannot describe any family (``G > F``, ``g > f``, ...)."""

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class NoHorizonError(ConstraintError):
    pass


class Algorithm(str, enum.Enum):
    AUTOMATIC = "automatic"
    SIMPLIFIED = "simplified"
    COMPLETE = "complete"


def h_S(N: int, d: int) -> int:
    return count_monomials(N, d)


def h_R(N: int, d: int) -> int:
    return count_monomials(N - 1, d)


@dataclass(frozen=True)
class ConstraintSpec:
    """Bounds for ``h = h_{S/I}`` and ``dh = Delta h`` in degrees ``0..D``.

    ``S`` has ``num_vars`` variables and ``R`` one fewer.  Beyond the
    horizon ``h(d) = tail(d)`` is forced; ``G[D] == F[D] == tail(D)``.
    """

    num_vars: int
    horizon: int
    G: tuple[int, ...]
    F: tuple[int, ...]
    g: tuple[int, ...]
    f: tuple[int, ...]
    tail: HilbertPolynomial = field(compare=True)

    @property
    def n(self) -> int:
        """Largest variable index of R."""
        return self.num_vars - 2

    @property
    def r_vars(self) -> int:
        return self.num_vars - 1

    def tail_h(self, d: int) -> int:
        return self.tail(d)

    def tail_dh(self, d: int) -> int:
        """Forced ``Delta h(d)`` for ``d > D``."""
        return self.tail(d) - self.tail(d - 1)

    def tail_lower_key(self) -> int:
        """Least ``Delta h(D)`` compatible with the forced ``Delta h(D + 1)``."""
        return macaulay_lower_bound(self.tail_dh(self.horizon + 1), self.horizon + 1)

    def is_upper_unbounded(self) -> bool:
        return all(self.F[d] == h_S(self.num_vars, d) for d in range(self.horizon))

    def with_horizon(self, new_horizon: int) -> "ConstraintSpec":
        """Same family, described with a larger horizon."""
        D = self.horizon
        if new_horizon < D:
            raise ValueError("the horizon can only be enlarged")
        extra = range(D + 1, new_horizon + 1)
        return ConstraintSpec(
            self.num_vars,
            new_horizon,
            self.G + tuple(self.tail(d) for d in extra),
            self.F + tuple(self.tail(d) for d in extra),
            self.g + tuple(self.tail_dh(d) for d in extra),
            self.f + tuple(self.tail_dh(d) for d in extra),
            self.tail,
        )

    def validate(self) -> "ConstraintSpec":
        N, D = self.num_vars, self.horizon
        if N < 2:
            raise ConstraintError(f"need at least 2 variables, got {N}")
        for name, arr in (("G", self.G), ("F", self.F), ("g", self.g), ("f", self.f)):
            if len(arr) != D + 1:
                raise ConstraintError(f"{name} must have {D + 1} entries, got {len(arr)}")
        for d in range(D + 1):
            if self.G[d] > self.F[d]:
                raise ConstraintError(
                    f"inconsistent constraints at degree {d}: "
                    f"lower bound {self.G[d]} for h exceeds upper bound {self.F[d]}", d)
            if self.g[d] > self.f[d]:
                raise ConstraintError(
                    f"inconsistent constraints at degree {d}: "
                    f"lower bound {self.g[d]} for Delta h exceeds upper bound {self.f[d]}", d)
            if self.G[d] < 0 or self.F[d] > h_S(N, d) or self.F[d] < 0:
                raise ConstraintError(
                    f"inconsistent constraints at degree {d}: h bounds [{self.G[d]}, {self.F[d]}] "
                    f"outside 0..{h_S(N, d)}", d)
            if self.g[d] < 0 or self.f[d] > h_R(N, d) or self.f[d] < 0:
                raise ConstraintError(
                    f"inconsistent constraints at degree {d}: Delta h bounds [{self.g[d]}, {self.f[d]}] "
                    f"outside 0..{h_R(N, d)}", d)
        if self.G[D] != self.F[D] or self.G[D] != self.tail(D):
            raise ConstraintError(f"horizon condition G(D) = F(D) = tail(D) fails at D={D}", D)
        for d in (D + 1, D + 2):
            dh = self.tail_dh(d)
            if not 0 <= dh <= h_R(N, d):
                raise ConstraintError(f"forced Delta h({d}) = {dh} is impossible in {N - 1} variables", d)
        return self

    def as_dict(self) -> dict:
        return {
            "variables": self.num_vars,
            "horizon": self.horizon,
            "hilbert_polynomial": [str(c) for c in self.tail.descending()],
            "G": list(self.G),
            "F": list(self.F),
            "g": list(self.g),
            "f": list(self.f),
        }


def normalize_bounds(bounds: BoundInput, name: str = "bounds") -> dict[int, int]:
    """Positional lists with ``None`` gaps or ``{degree: value}`` maps -> dict."""
    if bounds is None:
        return {}
    if isinstance(bounds, Mapping):
        out = {}
        for k, v in bounds.items():
            if v is None:
                continue
            d = int(k)
            if d < 0:
                raise ConstraintError(f"{name}: negative degree {d}")
            out[d] = int(v)
        return out
    return {d: int(v) for d, v in enumerate(bounds) if v is not None}


def build_spec(
    num_vars: int,
    hf_lower: BoundInput = None,
    hf_upper: BoundInput = None,
    diff_lower: BoundInput = None,
    diff_upper: BoundInput = None,
    polynomial: Optional[HilbertPolynomial] = None,
) -> ConstraintSpec:
    """Fill the partial bound lists with trivial defaults and fix the horizon.

    With a Hilbert polynomial ``p`` the horizon is the larger of its
    Gotzmann number and one past the last constrained degree.  Without
    one, the last constrained degree must pin ``h`` (lower == upper) and
    ``h`` is taken to stay constant from there on.
    """
    N = int(num_vars)
    if N < 2:
        raise ConstraintError(f"need at least 2 variables, got {N}")
    Gl = normalize_bounds(hf_lower, "hf_lower")
    Fu = normalize_bounds(hf_upper, "hf_upper")
    gl = normalize_bounds(diff_lower, "diff_lower")
    fu = normalize_bounds(diff_upper, "diff_upper")
    constrained = set(Gl) | set(Fu) | set(gl) | set(fu)
    last = max(constrained) if constrained else -1

    if polynomial is not None:
        D = max(gotzmann_number(polynomial), last + 1)
        tail = polynomial
    else:
        if last < 0:
            raise NoHorizonError("no horizon: give a Hilbert polynomial or pin h in the last constrained degree")
        lo = Gl.get(last, 0)
        hi = min(Fu.get(last, h_S(N, last)), h_S(N, last))
        if lo != hi:
            raise NoHorizonError(
                f"no horizon: h is not pinned in the last constrained degree {last} "
                f"(bounds {lo}..{hi}) and no Hilbert polynomial was given", last)
        D = last
        tail = HilbertPolynomial.constant(lo)

    G, F, g, f = [], [], [], []
    for d in range(D + 1):
        if d == D:
            G.append(tail(D))
            F.append(tail(D))
        else:
            G.append(Gl.get(d, 0))
            F.append(min(Fu.get(d, h_S(N, d)), h_S(N, d)))
        g.append(gl.get(d, 0))
        f.append(min(fu.get(d, h_R(N, d)), h_R(N, d)))
    if polynomial is None:
        # the pinned degree keeps whatever the user wrote there
        G[D] = Gl.get(D, 0)
        F[D] = min(Fu.get(D, h_S(N, D)), h_S(N, D))
    spec = ConstraintSpec(N, D, tuple(G), tuple(F), tuple(g), tuple(f), tail)
    return spec.validate()


def choose_algorithm(spec: ConstraintSpec, requested: Algorithm | str = Algorithm.AUTOMATIC) -> Algorithm:
    requested = Algorithm(requested)
    if requested is not Algorithm.AUTOMATIC:
        return requested
    return Algorithm.SIMPLIFIED if spec.is_upper_unbounded() else Algorithm.COMPLETE
