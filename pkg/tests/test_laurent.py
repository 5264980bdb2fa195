"""Tests for the exact Laurent-polynomial kernel.

The period tests check against independently computed closed forms
(central binomial and multinomial counts), not against the engine itself.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoperiods.laurent import (
    LaurentPolynomial,
    QPolynomial,
    RankMismatchError,
    ZeroPolynomialError,
    classical_periods,
    constant_term,
    laurent_from_json,
    laurent_to_json,
    min_exponent_vector,
    multiply,
    power,
    support,
    tropical_value,
)


def _poly(names, terms):
    return LaurentPolynomial.from_dict(tuple(names), terms)


def _p1_mirror():
    return _poly(("x",), {(1,): 1, (-1,): 1})


def _p2_mirror():
    return _poly(("x", "y"), {(1, 0): 1, (0, 1): 1, (-1, -1): 1})


# ---------------------------------------------------------------------------
# QPolynomial coefficients


def test_qpolynomial_arithmetic():
    a = QPolynomial({0: Fraction(3, 2), 1: Fraction(1)})
    b = QPolynomial({1: Fraction(-1), 2: Fraction(2)})
    assert a + b == QPolynomial({0: Fraction(3, 2), 2: Fraction(2)})
    assert a * b == QPolynomial(
        {1: Fraction(-3, 2), 2: Fraction(2), 3: Fraction(2)}
    )
    assert (a - a).is_zero()
    assert a * QPolynomial.zero() == QPolynomial.zero()


def test_qpolynomial_purges_zero_entries():
    p = QPolynomial({0: Fraction(0), 2: Fraction(5)})
    assert p.items() == ((2, Fraction(5)),)


def test_qpolynomial_scalar_ops():
    p = QPolynomial.constant(6)
    assert p / 3 == QPolynomial.constant(2)
    assert p / Fraction(1, 2) == QPolynomial.constant(12)
    assert 2 * p == QPolynomial.constant(12)
    assert p.shift_q(2) == QPolynomial({2: Fraction(6)})


def test_qpolynomial_rendering():
    assert str(QPolynomial.zero()) == "0"
    assert str(QPolynomial.constant(Fraction(-5, 3))) == "-5/3"
    assert str(QPolynomial({1: Fraction(2)})) == "2q"
    assert str(QPolynomial({2: Fraction(1)})) == "q^2"
    assert str(QPolynomial({0: Fraction(1), 2: Fraction(-3)})) == "1 - 3q^2"
    assert str(QPolynomial({1: Fraction(1, 8)})) == "1/8q"


def test_qpolynomial_specialize():
    p = QPolynomial({0: Fraction(1), 2: Fraction(3)})
    assert p.specialize_q(Fraction(1)) == Fraction(4)
    assert p.specialize_q(Fraction(2)) == Fraction(13)


# ---------------------------------------------------------------------------
# multiplication and powers


def test_multiply_monomial_inverse():
    f = _poly(("x",), {(1,): 1})
    g = _poly(("x",), {(-1,): 1})
    assert multiply(f, g) == LaurentPolynomial.one(("x",))


def test_multiply_difference_of_squares():
    x_plus = _poly(("x",), {(1,): 1, (0,): 1})
    x_minus = _poly(("x",), {(1,): 1, (0,): -1})
    assert multiply(x_plus, x_minus) == _poly(("x",), {(2,): 1, (0,): -1})


def test_square_of_projective_plane_mirror():
    f = _p2_mirror()
    sq = multiply(f, f)
    assert sq == _poly(
        ("x", "y"),
        {
            (2, 0): 1,
            (0, 2): 1,
            (-2, -2): 1,
            (1, 1): 2,
            (0, -1): 2,
            (-1, 0): 2,
        },
    )


def test_multiply_rank_mismatch():
    f = _poly(("x",), {(1,): 1})
    g = _poly(("x", "y"), {(1, 0): 1})
    with pytest.raises(RankMismatchError):
        multiply(f, g)


def test_multiply_name_mismatch():
    f = _poly(("x",), {(1,): 1})
    g = _poly(("y",), {(1,): 1})
    with pytest.raises(RankMismatchError):
        multiply(f, g)


def test_power_zero_is_one():
    assert power(_p2_mirror(), 0) == LaurentPolynomial.one(("x", "y"))
    zero = LaurentPolynomial.zero(("x",))
    assert power(zero, 0) == LaurentPolynomial.one(("x",))
    assert power(zero, 3) == zero


def test_power_matches_repeated_multiplication():
    f = _p1_mirror()
    expected = _poly(("x",), {(3,): 1, (1,): 3, (-1,): 3, (-3,): 1})
    assert power(f, 3) == expected


# ---------------------------------------------------------------------------
# constant term and classical periods


def test_constant_term_examples():
    f = _poly(("x",), {(0,): Fraction(5, 2), (2,): 3})
    assert constant_term(f) == QPolynomial.constant(Fraction(5, 2))
    assert constant_term(_p1_mirror()) == QPolynomial.zero()


def test_periods_p1_central_binomial():
    cs = classical_periods(_p1_mirror(), 10)
    for d, c in enumerate(cs):
        if d % 2 == 0:
            assert c == QPolynomial.constant(math.comb(d, d // 2))
        else:
            assert c.is_zero()


def test_periods_p2_multinomial():
    cs = classical_periods(_p2_mirror(), 9)
    for d, c in enumerate(cs):
        if d % 3 == 0:
            m = d // 3
            expected = math.factorial(3 * m) // math.factorial(m) ** 3
            assert c == QPolynomial.constant(expected)
        else:
            assert c.is_zero()


def test_periods_of_zero_polynomial():
    cs = classical_periods(LaurentPolynomial.zero(("x",)), 4)
    assert cs[0] == QPolynomial.one()
    assert all(c.is_zero() for c in cs[1:])


def test_periods_length():
    assert len(classical_periods(_p1_mirror(), 0)) == 1
    assert len(classical_periods(_p1_mirror(), 7)) == 8


def test_periods_keep_novikov_parameter():
    # x + q/x has constant term of x^2-degree zero picking up q per inverse power
    f = LaurentPolynomial.from_dict(("x",), {(1,): 1, (-1,): QPolynomial({1: Fraction(1)})})
    cs = classical_periods(f, 4)
    assert cs[2] == QPolynomial({1: Fraction(2)})
    assert cs[4] == QPolynomial({2: Fraction(6)})


# ---------------------------------------------------------------------------
# tropicalization, support, minimal exponents


def test_tropical_value_examples():
    f = _p2_mirror()
    assert tropical_value(f, (Fraction(1), Fraction(1))) == Fraction(-2)
    assert tropical_value(f, (Fraction(0), Fraction(0))) == Fraction(0)
    assert tropical_value(f, (Fraction(1, 2), Fraction(-1, 3))) == Fraction(-1, 3)


def test_tropical_value_of_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        tropical_value(LaurentPolynomial.zero(("x", "y")), (Fraction(1), Fraction(1)))


def test_support_sorted():
    f = _p2_mirror()
    assert support(f) == [(-1, -1), (0, 1), (1, 0)]


def test_min_exponent_vector_attained():
    f = _poly(("x", "y"), {(2, 0): 1, (2, 3): 5})
    vec, attained = min_exponent_vector(f)
    assert vec == (2, 0)
    assert attained is True


def test_min_exponent_vector_not_attained():
    f = _poly(("x", "y"), {(2, 0): 1, (0, 3): 1})
    vec, attained = min_exponent_vector(f)
    assert vec == (0, 0)
    assert attained is False


def test_min_exponent_vector_p2_mirror_attained():
    vec, attained = min_exponent_vector(_p2_mirror())
    assert vec == (-1, -1)
    assert attained is True


def test_min_exponent_vector_of_zero():
    with pytest.raises(ZeroPolynomialError):
        min_exponent_vector(LaurentPolynomial.zero(("x",)))


# ---------------------------------------------------------------------------
# JSON round trips


def test_json_round_trip():
    f = LaurentPolynomial.from_dict(
        ("x", "y"),
        {(1, -1): Fraction(3, 2), (0, 2): QPolynomial({1: Fraction(1)})},
    )
    blob = json.dumps(laurent_to_json(f))
    assert laurent_from_json(json.loads(blob)) == f


def test_json_q_defaults_to_zero():
    data = {"vars": ["x"], "terms": [{"coeff": "2", "exp": [1]}]}
    assert laurent_from_json(data) == _poly(("x",), {(1,): 2})


def test_json_duplicate_exponent_rejected():
    data = {
        "vars": ["x"],
        "terms": [
            {"coeff": "1", "q": 0, "exp": [1]},
            {"coeff": "2", "q": 0, "exp": [1]},
        ],
    }
    with pytest.raises(ValueError):
        laurent_from_json(data)


def test_json_same_exponent_distinct_q_powers_allowed():
    data = {
        "vars": ["x"],
        "terms": [
            {"coeff": "1", "q": 0, "exp": [1]},
            {"coeff": "2", "q": 1, "exp": [1]},
        ],
    }
    f = laurent_from_json(data)
    assert f == LaurentPolynomial.from_dict(
        ("x",), {(1,): QPolynomial({0: Fraction(1), 1: Fraction(2)})}
    )


def test_json_rejects_bad_exponent_length():
    data = {"vars": ["x", "y"], "terms": [{"coeff": "1", "exp": [1]}]}
    with pytest.raises(ValueError):
        laurent_from_json(data)


def test_json_fractional_coefficients():
    data = {"vars": ["x"], "terms": [{"coeff": "-3/7", "exp": [2]}]}
    f = laurent_from_json(data)
    assert f == _poly(("x",), {(2,): Fraction(-3, 7)})


# ---------------------------------------------------------------------------
# algebraic properties on small random inputs


def _small_polys(rank):
    names = ("x", "y", "z")[:rank]
    exponents = st.tuples(*[st.integers(-3, 3)] * rank)
    coeff = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=3
    )
    return st.dictionaries(exponents, coeff, min_size=0, max_size=4).map(
        lambda terms: LaurentPolynomial.from_dict(names, terms)
    )


def _positive_polys(rank):
    names = ("x", "y", "z")[:rank]
    exponents = st.tuples(*[st.integers(-3, 3)] * rank)
    coeff = st.integers(1, 3).map(Fraction)
    return st.dictionaries(exponents, coeff, min_size=1, max_size=4).map(
        lambda terms: LaurentPolynomial.from_dict(names, terms)
    )


@settings(deadline=None, max_examples=60)
@given(f=_small_polys(2), g=_small_polys(2))
def test_multiplication_commutes(f, g):
    assert multiply(f, g) == multiply(g, f)


@settings(deadline=None, max_examples=40)
@given(f=_small_polys(2), g=_small_polys(2), h=_small_polys(2))
def test_multiplication_associates(f, g, h):
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))


@settings(deadline=None, max_examples=60)
@given(
    f=_positive_polys(2),
    g=_positive_polys(2),
    v=st.tuples(
        st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4),
        st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4),
    ),
)
def test_tropical_additivity_for_positive_coefficients(f, g, v):
    # no cancellation can occur, so tropicalization turns products into sums
    assert tropical_value(multiply(f, g), v) == tropical_value(f, v) + tropical_value(g, v)


@settings(deadline=None, max_examples=40)
@given(f=_small_polys(2), g=_small_polys(2))
def test_product_support_within_sumset(f, g):
    sums = {
        tuple(a + b for a, b in zip(e, d))
        for e in support(f)
        for d in support(g)
    } if f.terms and g.terms else set()
    assert set(support(multiply(f, g))) <= sums


@settings(deadline=None, max_examples=20)
@given(f=_small_polys(1))
def test_incremental_periods_match_direct_powers(f):
    cs = classical_periods(f, 5)
    for d in range(6):
        assert cs[d] == constant_term(power(f, d))
