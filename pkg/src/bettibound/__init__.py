"""Sharp upper bounds for total Betti numbers of saturated ideals under Hilbert-function constraints."""
from .betti import (
    BettiTable,
    MaxBettiResult,
    MonomialIdeal,
    NotOSequenceError,
    almost_lex_betti,
    almost_lex_ideal,
    betti_offsets,
    ek_graded_betti,
    finalize,
    lex_ideal_generators,
)
from .constraints import Algorithm, ConstraintError, ConstraintSpec, NoHorizonError, build_spec, choose_algorithm
from .dp import EmptyFamilyError, RawDPResult, ResultsMode, run_complete, run_simplified
from .macaulay import HilbertPolynomial, gotzmann_number
from .solver import max_betti_numbers

__version__ = "0.1.0"
