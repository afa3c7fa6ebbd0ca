import random

import pytest

from bettibound.betti import (
    BettiTable,
    MonomialIdeal,
    NotOSequenceError,
    almost_lex_betti,
    almost_lex_ideal,
    betti_offsets,
    check_o_sequence,
    differences_from_hilbert,
    ek_graded_betti,
    hilbert_from_differences,
    lex_ideal_generators,
    total_betti,
    v_sums,
)
from bettibound.dp import EmptyFamilyError, ResultsMode
from bettibound.monomials import Monomial, count_monomials
from bettibound.oracle import FamilyKind, enumerate_tuples
from bettibound.solver import solve

from conftest import WINNER
from specgen import random_o_sequence, random_spec
from test_monomials import all_monomials_ascending

WINNER_GENERATORS = [
    "x1^2", "x1*x2", "x1*x3", "x1*x4",
    "x2^4", "x2^3*x3", "x2^3*x4", "x2^2*x3^2", "x2^2*x3*x4", "x2^2*x4^2",
    "x2*x3^4", "x2*x3^3*x4", "x2*x3^2*x4^2", "x2*x3*x4^3", "x2*x4^4",
    "x3^6", "x3^5*x4",
    "x3^4*x4^4", "x3^3*x4^5",
    "x3^2*x4^7", "x3*x4^8", "x4^9",
]
WINNER_ROWS = {
    0: {0: 1},
    1: {1: 4, 2: 6, 3: 4, 4: 1},
    3: {1: 6, 2: 14, 3: 11, 4: 3},
    4: {1: 5, 2: 14, 3: 13, 4: 4},
    5: {1: 2, 2: 5, 3: 4, 4: 1},
    7: {1: 2, 2: 6, 3: 6, 4: 2},
    8: {1: 3, 2: 9, 3: 9, 4: 3},
}


def test_two_variable_generators():
    ideal = lex_ideal_generators(2, [1, 1, 1, 0, 0])
    assert [m.exponents for m in ideal.generators] == [(1, 0), (0, 3)]
    betti = total_betti(ideal)
    assert betti == (2, 1)


def test_zero_ideal_has_no_generators():
    dh = [count_monomials(3, d) for d in range(6)]
    assert lex_ideal_generators(3, dh).generators == ()


def test_unit_ideal():
    ideal = lex_ideal_generators(3, [0, 0, 0])
    assert [m.exponents for m in ideal.generators] == [(0, 0, 0)]
    assert total_betti(ideal) == (1, 0, 0)


def test_ek_small_examples():
    principal = MonomialIdeal(2, (Monomial.of(1, 0),))
    assert total_betti(principal) == (1, 0)
    pair = MonomialIdeal(2, (Monomial.of(1, 0), Monomial.of(0, 3)))
    table = ek_graded_betti(pair)
    assert table.entries == {(0, 1): 1, (0, 3): 1, (1, 4): 1}
    assert table.totals() == [2, 1]


def test_winner_ideal_and_table():
    ideal = almost_lex_ideal(5, WINNER)
    assert len(ideal) == 22
    assert [m.format() for m in ideal.generators] == WINNER_GENERATORS
    assert all(m.exponents[-1] == 0 for m in ideal.generators)
    table = almost_lex_betti(5, WINNER)
    assert table.quotient
    assert table.totals() == [1, 22, 54, 47, 14]
    assert table.rows() == WINNER_ROWS
    text = table.render()
    assert text.splitlines()[1].split() == ["total:", "1", "22", "54", "47", "14"]
    assert text.splitlines()[3].split() == ["1:", ".", "4", "6", "4", "1"]
    assert text.splitlines()[4].split() == ["2:", ".", ".", ".", ".", "."]


def test_almost_lex_small_cases():
    assert [m.format() for m in almost_lex_ideal(2, [1, 1, 1]).generators] == ["x1"]
    assert [m.format() for m in almost_lex_ideal(3, [1, 2, 3, 3]).generators] == ["x1", "x2^3"]
    with pytest.raises(NotOSequenceError):
        almost_lex_ideal(3, [1, 10])
    with pytest.raises(NotOSequenceError) as err:
        almost_lex_ideal(3, [1, 2, 3, 2])
    assert err.value.degree == 3


def test_o_sequence_check_reports_degree():
    check_o_sequence([1, 3, 6, 10], 3)
    with pytest.raises(NotOSequenceError) as err:
        check_o_sequence([1, 2, 4], 3)
    assert err.value.degree == 2
    with pytest.raises(NotOSequenceError) as err:
        check_o_sequence([1, 1, 1, 2], 2)
    assert err.value.degree == 3


def test_differences_round_trip():
    h = list(WINNER)
    assert hilbert_from_differences(differences_from_hilbert(h)) == h


def _divisible(m, gens):
    return any(g.divides(m) for g in gens)


def test_lex_ideal_round_trip_and_minimality():
    rng = random.Random(7)
    for _ in range(150):
        num_vars = rng.randint(1, 4)
        D = rng.randint(0, 8)
        dh = random_o_sequence(rng, num_vars, D + 1, 60)
        ideal = lex_ideal_generators(num_vars, dh)
        gens = ideal.generators
        for a in gens:
            for b in gens:
                assert a == b or not a.divides(b)
        for d in range(D + 1):
            monos = [Monomial(e) for e in all_monomials_ascending(num_vars, d)]
            in_ideal = [m for m in monos if _divisible(m, gens)]
            assert len(monos) - len(in_ideal) == dh[d]
            # the ideal's degree-d part is the lex-greatest segment
            assert in_ideal == monos[len(monos) - len(in_ideal):]
        assert total_betti(ideal)[0] == len(gens)


def _random_pair(rng):
    num_vars = rng.randint(1, 4)
    D = rng.randint(0, 7)
    a = rng.choice([0, 0, 1, 2])
    # both prefixes need dh[D] >= a for the common tail (constant a) to be legal
    while True:
        x = random_o_sequence(rng, num_vars, D + 1, 50)
        y = random_o_sequence(rng, num_vars, D + 1, 50)
        if rng.random() < 0.05:
            x = [0] * (D + 1)
            a = 0
        if num_vars == 1:
            a = min(a, 1)
        if x[D] >= a and y[D] >= a and (a == 0 or D >= 1 or num_vars == 1):
            break
    tail = [a, a]
    return num_vars, D, x + tail, y + tail


def test_betti_difference_identity():
    rng = random.Random(23)
    checked = 0
    while checked < 300:
        num_vars, D, x, y = _random_pair(rng)
        try:
            check_o_sequence(x, num_vars)
            check_o_sequence(y, num_vars)
        except NotOSequenceError:
            continue
        bx = total_betti(lex_ideal_generators(num_vars, x))
        by = total_betti(lex_ideal_generators(num_vars, y))
        vx = v_sums(num_vars - 1, x[: D + 1])
        vy = v_sums(num_vars - 1, y[: D + 1])
        for q in range(num_vars):
            assert bx[q] - by[q] == vx[q] - vy[q], (num_vars, x, y)
        checked += 1


def test_offsets_independent_of_reference():
    rng = random.Random(31)
    done = 0
    while done < 25:
        spec = random_spec(rng, max_F=20)
        tuples = list(enumerate_tuples(spec, FamilyKind.WITH_MACAULAY_CONDITION))
        if not tuples:
            continue
        base = betti_offsets(spec)
        for t in tuples:
            assert betti_offsets(spec, t) == base
        done += 1


def test_singleton_offsets_reproduce_betti_vector():
    h = [1, 3, 4, 4]
    from bettibound.constraints import ConstraintSpec
    from bettibound.macaulay import HilbertPolynomial

    dh = differences_from_hilbert(h)
    spec = ConstraintSpec(4, 3, tuple(h), tuple(h), tuple(dh), tuple(dh), HilbertPolynomial.constant(4))
    off = betti_offsets(spec, dh)
    want = total_betti(lex_ideal_generators(3, dh + [0]))
    assert tuple(c + v for c, v in zip(off, v_sums(2, dh))) == want
    res = solve(spec, "complete", "one")[2]
    assert res.is_realizable and res.betti_upper_bound == want


def test_realizability_coherence():
    rng = random.Random(41)
    done = 0
    while done < 40:
        spec = random_spec(rng)
        try:
            res = solve(spec, "complete", ResultsMode.ALL)[2]
        except EmptyFamilyError:
            continue
        assert res.is_realizable == (res.betti_upper_bound in res.maximal_betti_numbers)
        for vec in res.maximal_betti_numbers:
            assert all(a <= b for a, b in zip(vec, res.betti_upper_bound))
        done += 1


def test_betti_table_json_and_empty():
    t = BettiTable({(0, 1): 1}, False)
    assert t.as_json() == [{"q": 0, "j": 1, "value": 1}]
    assert t.to_quotient().totals() == [1, 1]
    assert BettiTable({}, True).totals() == [1]
