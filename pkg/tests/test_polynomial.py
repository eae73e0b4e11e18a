import random

import pytest

from src.algebra.polynomial import (
    SparsePolynomial, UnivariatePolynomial, divided_difference, evaluate_at, evaluate_ones,
    evaluate_q_powers, parse, rank_generating_function, render, substitute_all, swap_variables,
)
from src.combinatorics.permutation import rank_sizes
from src.errors import PolynomialError


def x(i, m=3):
    return SparsePolynomial.variable(i, m)


def random_polynomial(rng, nvars, terms=6, degree=4):
    result = {}
    for _ in range(terms):
        exponent = tuple(rng.randint(0, degree) for _ in range(nvars))
        result[exponent] = rng.randint(-5, 5)
    return SparsePolynomial(nvars, result)


def test_zero_coefficients_are_dropped():
    f = SparsePolynomial(2, {(1, 0): 0, (0, 1): 3})
    assert f.terms == {(0, 1): 3}
    assert SparsePolynomial(2).is_zero()


def test_arithmetic():
    f = x(1) + x(2)
    assert f * f == parse("x1^2 + 2*x1*x2 + x2^2", 3)
    assert f ** 3 == f * f * f
    assert f - f == SparsePolynomial(3)
    assert -f + f == SparsePolynomial(3)
    assert 3 * f == f + f + f
    assert f ** 0 == SparsePolynomial.constant(1, 3)


def test_mismatched_variable_counts_are_rejected():
    with pytest.raises(PolynomialError):
        x(1, 2) + x(1, 3)
    with pytest.raises(PolynomialError):
        SparsePolynomial.variable(4, 3)
    with pytest.raises(PolynomialError):
        SparsePolynomial(2, {(1, 0, 0): 1})


def test_degree_and_homogeneity():
    f = parse("x1^2*x2 + x1*x2*x3", 3)
    assert f.degree() == 3
    assert f.is_homogeneous()
    assert not (f + x(1)).is_homogeneous()
    assert f.support_size() == 3
    assert parse("x1^4", 3).support_size() == 1


@pytest.mark.parametrize("text", [
    "x1^2*x2 + x1*x2^2",
    "3*x1 - x2 + 1",
    "-x1*x3^5 + 12",
    "0",
])
def test_render_is_canonical(text):
    assert render(parse(text, 3)) == text


def test_render_orders_graded_lexicographically():
    f = x(3) + x(1) * x(2) + x(1) ** 2 + SparsePolynomial.constant(7, 3)
    assert render(f) == "x1^2 + x1*x2 + x3 + 7"


@pytest.mark.parametrize("text", ["x1^^2", "x4", "2x1", "x1 +* x2"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(PolynomialError):
        parse(text, 3)


def test_divided_difference_examples():
    assert divided_difference(x(1) ** 2, 1) == x(1) + x(2)
    assert divided_difference(x(1), 1) == SparsePolynomial.constant(1, 3)
    assert divided_difference(x(2), 1) == SparsePolynomial.constant(-1, 3)
    assert divided_difference(x(1) * x(2), 1).is_zero()
    assert divided_difference(x(2) ** 2, 2) == x(2) + x(3)


def test_divided_difference_index_range():
    with pytest.raises(PolynomialError):
        divided_difference(x(1), 3)
    with pytest.raises(PolynomialError):
        divided_difference(x(1), 0)


def test_divided_difference_squares_to_zero_and_matches_definition():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randint(2, 4)
        f = random_polynomial(rng, m, degree=3)
        for i in range(1, m):
            d = divided_difference(f, i)
            assert divided_difference(d, i).is_zero()
            # (x_i - x_{i+1}) ∂_i f = f - s_i f
            assert (x(i, m) - x(i + 1, m)) * d == f - swap_variables(f, i)


def test_braid_relation_of_divided_differences():
    rng = random.Random(5)
    for _ in range(100):
        m = rng.randint(3, 4)
        f = random_polynomial(rng, m, degree=3)
        i = rng.randint(1, m - 2)
        left = divided_difference(divided_difference(divided_difference(f, i), i + 1), i)
        right = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1)
        assert left == right


def test_distant_divided_differences_commute():
    rng = random.Random(8)
    for _ in range(100):
        f = random_polynomial(rng, 4, degree=3)
        i, j = rng.choice([(1, 3), (3, 1)])
        assert divided_difference(divided_difference(f, i), j) == \
            divided_difference(divided_difference(f, j), i)


def test_evaluations():
    f = parse("2*x1 + 3*x2", 2)
    assert evaluate_ones(f) == 5
    assert evaluate_at(f, [2, -1]) == 1
    assert substitute_all(parse("x1 + x2", 2), 2) == 4
    with pytest.raises(PolynomialError):
        evaluate_at(f, [1])


def test_evaluate_q_powers():
    f = parse("x1^2*x2 + x2", 2)
    assert evaluate_q_powers(f) == UnivariatePolynomial([0, 2])
    assert evaluate_q_powers(SparsePolynomial(2)).is_zero()
    g = parse("x1 + x2 + x3", 3)
    assert evaluate_q_powers(g)(1) == evaluate_ones(g)


def test_evaluate_q_powers_at_one_is_sum_of_coefficients():
    rng = random.Random(21)
    for _ in range(100):
        f = random_polynomial(rng, rng.randint(1, 4))
        assert evaluate_q_powers(f)(1) == evaluate_ones(f)


def test_univariate_basics():
    p = UnivariatePolynomial([1, 0, -2, 1, 0, 0])
    assert p.coefficients == (1, 0, -2, 1)
    assert p.degree() == 3
    assert p.valuation() == 0
    assert UnivariatePolynomial([0, 0, 3]).valuation() == 2
    assert str(p) == "1 - 2*q^2 + q^3"
    assert str(UnivariatePolynomial([])) == "0"
    assert p(2) == 1 - 8 + 8
    assert p + 1 == UnivariatePolynomial([2, 0, -2, 1])
    assert 1 - p == UnivariatePolynomial([0, 0, 2, -1])


def test_q_integers_and_factorials():
    assert UnivariatePolynomial.q_integer(3) == UnivariatePolynomial([1, 1, 1])
    assert UnivariatePolynomial.q_factorial(3) == UnivariatePolynomial([1, 2, 2, 1])
    assert UnivariatePolynomial.q_integer(3)(2) == 7


def test_univariate_division():
    quotient, remainder = divmod(UnivariatePolynomial([-1, 0, 1]), UnivariatePolynomial([-1, 1]))
    assert quotient == UnivariatePolynomial([1, 1])
    assert remainder.is_zero()
    assert UnivariatePolynomial([1, 1]).divides(UnivariatePolynomial([-1, 0, 1]))
    assert not UnivariatePolynomial([2, 1]).divides(UnivariatePolynomial([-1, 0, 1]))
    with pytest.raises(PolynomialError):
        divmod(UnivariatePolynomial([0, 1]), UnivariatePolynomial([0, 2]))
    with pytest.raises(PolynomialError):
        divmod(UnivariatePolynomial([1]), UnivariatePolynomial([]))


@pytest.mark.parametrize("n", [1, 3, 4, 6])
def test_rank_generating_function_matches_rank_sizes(n):
    assert rank_generating_function(n).to_list() == rank_sizes(n)
