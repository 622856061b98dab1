from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from liecp.exactnum import (RationalMatrix, bareiss_rank, format_rational, inverse,
                            parse_rational, rank_over_rationals)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(fractions, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_small_cases():
    assert rank_over_rationals(RationalMatrix.identity(2)) == 2
    assert rank_over_rationals(RationalMatrix.zeros(3, 3)) == 0
    assert rank_over_rationals(RationalMatrix.from_rows([[0, 0], [2, 0]])) == 1


def test_empty_matrix_has_rank_zero():
    assert bareiss_rank([]) == 0
    assert rank_over_rationals(RationalMatrix.zeros(0, 0)) == 0


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_agrees_with_sympy(rows):
    m = RationalMatrix.from_rows(rows)
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()
    assert rank_over_rationals(m) == expected


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_of_transpose(rows):
    m = RationalMatrix.from_rows(rows)
    assert rank_over_rationals(m) == rank_over_rationals(m.transpose())
    assert rank_over_rationals(m) <= min(m.rows, m.cols)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4),
       st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_rank_of_product_is_bounded(a, b):
    a, b = RationalMatrix.from_rows(a), RationalMatrix.from_rows(b)
    assert rank_over_rationals(a @ b) <= min(rank_over_rationals(a), rank_over_rationals(b))


@given(fractions)
def test_format_parse_round_trip(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    assert ("/" in text) == (q.denominator != 1)


def test_format_examples():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"


def test_inverse():
    m = RationalMatrix.from_rows([[2, 1], [1, 1]])
    assert m @ inverse(m) == RationalMatrix.identity(2)
