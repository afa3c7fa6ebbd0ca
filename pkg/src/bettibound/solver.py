"""One-call entry point: constraints in, bounds and witnesses out."""
from __future__ import annotations

from .betti import MaxBettiResult, finalize
from .constraints import Algorithm, ConstraintSpec, choose_algorithm
from .dp import ResultsMode, run_complete, run_simplified


def solve(spec: ConstraintSpec, algorithm: Algorithm | str = Algorithm.AUTOMATIC,
          mode: ResultsMode | str = ResultsMode.NONE):
    """Run the chosen dynamic program; returns ``(algorithm_used, raw, result)``."""
    algo = choose_algorithm(spec, algorithm)
    run = run_simplified if algo is Algorithm.SIMPLIFIED else run_complete
    raw = run(spec, mode)
    return algo, raw, finalize(raw, spec, mode)


def max_betti_numbers(spec: ConstraintSpec, algorithm: Algorithm | str = Algorithm.AUTOMATIC,
                      mode: ResultsMode | str = ResultsMode.NONE) -> MaxBettiResult:
    return solve(spec, algorithm, mode)[2]
