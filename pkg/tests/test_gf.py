import pytest
from hypothesis import given, strategies as st

from dcores.errors import ParameterError
from dcores.formulas import conjectured_count, count_ss1
from dcores.gf import (
    IntPolynomial,
    RationalGF,
    conjecture_gf,
    gf_equal,
    gf_from_recurrence,
    recurrence_shifts,
    series_coefficients,
    ss1_gf,
)

PAPER_N2 = RationalGF([-1, -1, -1], [-1, 1, 0, 1])          # -(x^2+x+1)/(x^3+x-1)
PAPER_N32 = RationalGF([-1, -1, -1, -2], [-1, 1, 0, 0, 1])  # -(2x^3+x^2+x+1)/(x^4+x-1)


def unroll(initial, shifts, n):
    values = list(initial)
    while len(values) < n:
        k = len(values)
        values.append(sum(c * values[k - o] for o, c in shifts))
    return values[:n]


def test_gf_from_recurrence_n2():
    g = gf_from_recurrence([1, 2, 3], [(1, 1), (3, 1)])
    assert g.numerator == (1, 1, 1) and g.denominator == (1, -1, 0, -1)
    assert gf_equal(g, PAPER_N2)


def test_gf_from_recurrence_n32():
    g = gf_from_recurrence([1, 2, 3, 5], [(1, 1), (4, 1)])
    assert g.numerator == (1, 1, 1, 2) and g.denominator == (1, -1, 0, 0, -1)
    assert gf_equal(g, PAPER_N32)


def test_gf_from_recurrence_constant():
    g = gf_from_recurrence([1], [(1, 1)])
    assert g.numerator == (1,) and g.denominator == (1, -1)


def test_gf_from_recurrence_needs_enough_terms():
    with pytest.raises(ParameterError):
        gf_from_recurrence([1, 2], [(1, 1), (3, 1)])
    with pytest.raises(ParameterError):
        gf_from_recurrence([1], [(0, 1)])


@pytest.mark.parametrize("gf, n, expected", [
    (RationalGF([1, 1, 1], [1, -1, 0, -1]), 8, [1, 2, 3, 4, 6, 9, 13, 19]),
    (RationalGF([1, 1, 1, 2], [1, -1, 0, 0, -1]), 9, [1, 2, 3, 5, 6, 8, 11, 16, 22]),
    (RationalGF([1], [1, -1]), 4, [1, 1, 1, 1]),
    (PAPER_N2, 8, [1, 2, 3, 4, 6, 9, 13, 19]),
    (PAPER_N32, 9, [1, 2, 3, 5, 6, 8, 11, 16, 22]),
])
def test_series_coefficients(gf, n, expected):
    assert series_coefficients(gf, n) == expected


def test_series_non_integer():
    with pytest.raises(ArithmeticError):
        series_coefficients(RationalGF([1], [2, 1]), 3)


@pytest.mark.parametrize("a, b, expected", [
    (RationalGF([1, 1, 1], [1, -1, 0, -1]), PAPER_N2, True),
    (RationalGF([1], [1, -1]), RationalGF([1], [1, -1, -1]), False),
    (RationalGF([0], [1]), RationalGF([], [1, -1]), True),
    (RationalGF([2, 2], [2, -2]), RationalGF([1, 1], [1, -1]), True),
])
def test_gf_equal(a, b, expected):
    assert gf_equal(a, b) is expected


def test_denominator_needs_constant_term():
    with pytest.raises(ParameterError):
        RationalGF([1], [0, 1])


def test_canonical_form():
    g = PAPER_N2.canonical()
    assert g.denominator[0] == 1
    assert g.numerator == (1, 1, 1)
    assert RationalGF([4, 2], [-2, 2]).canonical().to_dict() == {"num": [-2, -1], "den": [1, -1]}


def test_family_gfs_match_counts():
    for d in range(1, 6):
        assert series_coefficients(ss1_gf(d), 12) == [count_ss1(d, s) for s in range(1, 13)]
        for r in range(1, d + 1):
            assert series_coefficients(conjecture_gf(d, r), 12) == \
                [conjectured_count(d, r, s) for s in range(1, 13)]


def test_recurrence_roundtrip():
    for d in range(1, 6):
        assert recurrence_shifts(ss1_gf(d)) == [(1, 1), (d + 1, 1)]
    assert recurrence_shifts(PAPER_N32) == [(1, 1), (4, 1)]


@given(
    st.lists(st.integers(-20, 20), min_size=4, max_size=6),
    st.lists(st.tuples(st.integers(1, 4), st.integers(-3, 3)), min_size=1, max_size=3,
             unique_by=lambda t: t[0]),
)
def test_gf_expansion_matches_unrolled_recurrence(initial, shifts):
    g = gf_from_recurrence(initial, shifts)
    assert series_coefficients(g, 15) == unroll(initial, shifts, 15)
    assert sorted(recurrence_shifts(g)) == sorted((o, c) for o, c in shifts if c)


def test_polynomial_str_and_arith():
    p = IntPolynomial([1, -1, 0, -2, 0, 0])
    assert p == (1, -1, 0, -2) and p.degree == 3
    assert str(p) == "1 - x - 2*x^3"
    assert str(IntPolynomial()) == "0"
    assert IntPolynomial([1, 1]) * IntPolynomial([1, -1]) == (1, 0, -1)
    assert IntPolynomial([1, 2]) - IntPolynomial([1, 2]) == ()
