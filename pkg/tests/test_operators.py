import csv
import io
import math

import numpy as np
import pytest

from src.algebra.exact_linalg import det_integer
from src.algebra.nu_cache import NuCache
from src.algebra.operators import (
    LabeledMatrix, LevelVector, NilCoxeterElement, apply_U, apply_U_power, apply_V,
    apply_V_power, build_D, build_D_tilde, build_D_tilde_q, build_E, build_E_via_expansion,
    check_level_range, connecting_permutation, k1_display_matrix, level_side,
    nilcoxeter_multiply, nilcoxeter_power, scaling_factor, theta, theta_matrix,
)
from src.algebra.polynomial import UnivariatePolynomial
from src.combinatorics.permutation import (
    identity, length, level, longest, max_length, parse_permutation, simple_reflection, weak_covers,
)
from src.errors import LevelRangeError, PermutationError


def P(text):
    return parse_permutation(text)


def test_level_vector_validates_members():
    with pytest.raises(LevelRangeError):
        LevelVector(3, 1, {P("231"): 1})
    assert LevelVector(3, 1, {P("132"): 0}).is_zero()


def test_apply_U_examples():
    assert apply_U(LevelVector.basis(identity(3))).coordinates == {P("213"): 1, P("132"): 2}
    assert apply_U(LevelVector.basis(P("213"))).coordinates == {P("231"): 2}
    assert apply_U(LevelVector.basis(P("132"))).coordinates == {P("312"): 1}


def test_apply_V_examples():
    assert apply_V(LevelVector.basis(identity(3))).coordinates == {P("213"): 1, P("132"): 1}
    assert apply_V(LevelVector.basis(P("132"))).coordinates == {P("312"): 1, P("231"): 2}
    assert apply_V(LevelVector.basis(P("213"))).coordinates == {P("312"): 2, P("231"): 1}


def test_raising_the_top_level_fails():
    with pytest.raises(LevelRangeError):
        apply_U(LevelVector.basis(longest(3)))


def _weighted_chains(u, j):
    # перебор цепочек u < u s_{a_1} < ... в слабом порядке с весом a_1 a_2 ... a_j
    totals = {}
    frontier = [(u, 1)]
    for _ in range(j):
        frontier = [(v, weight * i) for w, weight in frontier for i, v in weak_covers(w)]
    for v, weight in frontier:
        totals[v] = totals.get(v, 0) + weight
    return totals


def test_U_power_counts_weighted_chains():
    for u in level(4, 1):
        assert apply_U_power(LevelVector.basis(u), 3).coordinates == _weighted_chains(u, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_chevalley_identity(n):
    top = max_length(n)
    result = apply_V_power(LevelVector.basis(identity(n)), top)
    assert result.coordinates == {longest(n): math.factorial(top)}
    assert apply_U_power(LevelVector.basis(identity(n)), top).coordinates == {longest(n): math.factorial(top)}


def test_D_tilde_3_1():
    matrix = build_D_tilde(3, 1)
    assert matrix.entries.tolist() == [[0, 1], [2, 0]]
    assert list(matrix.row_labels) == [P("132"), P("213")]
    assert list(matrix.col_labels) == [P("231"), P("312")]
    assert matrix.entry(P("213"), P("231")) == 2
    assert det_integer(matrix) == -2


def test_D_3():
    assert build_D(3, 1).entries.tolist() == [[0, 1], [2, 0]]
    assert build_D(3, 0).entries.tolist() == [[6]]
    assert build_D_tilde(3, 0).entries.tolist() == [[1]]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_D_tilde_k0_is_one_by_one(n):
    assert build_D_tilde(n, 0).entries.tolist() == [[1]]
    assert build_D(n, 0).entries.tolist() == [[math.factorial(max_length(n))]]


@pytest.mark.parametrize("n, k", [(3, 0), (3, 1), (4, 0), (4, 1), (4, 2), (5, 2), (5, 3)])
def test_D_is_scaled_D_tilde(n, k):
    d = build_D(n, k)
    d_tilde = build_D_tilde(n, k, NuCache(n))
    factor = scaling_factor(n, k)
    assert all(a == factor * b for a, b in zip(d.entries.flat, d_tilde.entries.flat))


def test_D_tilde_is_square_and_nonnegative():
    for k in range(3):
        matrix = build_D_tilde(4, k)
        assert matrix.is_square()
        assert matrix.shape == (level_side(4, k), level_side(4, k))
        assert all(x >= 0 for x in matrix.entries.flat)


def test_threads_do_not_change_the_matrix():
    assert build_D_tilde(5, 2, threads=4) == build_D_tilde(5, 2, threads=1)
    assert build_E(4, 1, threads=3) == build_E(4, 1)


@pytest.mark.parametrize("n, k", [(3, 2), (3, -1), (1, 0), (4, 3)])
def test_level_range_is_checked(n, k):
    with pytest.raises(LevelRangeError):
        check_level_range(n, k)
    with pytest.raises(LevelRangeError):
        build_D_tilde(n, k)


def test_connecting_permutation():
    assert connecting_permutation(P("132"), P("312")) == P("213")
    assert connecting_permutation(P("213"), P("231")) == P("132")
    assert connecting_permutation(P("213"), P("312")) is None
    assert connecting_permutation(identity(4), P("1432")) == P("1432")


def test_D_tilde_q():
    matrix = build_D_tilde_q(3, 1)
    zero = UnivariatePolynomial([])
    assert matrix.entries.tolist() == [[zero, UnivariatePolynomial([1])],
                                     [UnivariatePolynomial([1, 1]), zero]]
    assert all(isinstance(x, UnivariatePolynomial) for x in matrix.entries.flat)
    assert matrix.at_q(1) == build_D_tilde(3, 1)
    assert matrix.at_q(1).kind == 'Dtilde'


def test_E_3_1():
    assert build_E(3, 1).entries.tolist() == [[2, 1], [1, 2]]
    assert build_E(3, 0).entries.tolist() == [[6]]


@pytest.mark.parametrize("n, k", [(3, 0), (3, 1), (4, 0), (4, 1), (4, 2)])
def test_E_matches_schubert_expansion(n, k):
    assert build_E_via_expansion(n, k) == build_E(n, k)


def test_E_determinants_against_factorisations():
    assert abs(det_integer(build_E(4, 1))) == 2 ** 7 * 3 * 5 ** 2 * 19
    assert abs(det_integer(build_E(4, 2))) == 2 ** 6 * 3 * 29


def test_k1_display_matrix():
    assert k1_display_matrix(3).tolist() == [[2, 0], [0, 1]]
    assert k1_display_matrix(4).tolist() == [[1, 2, 0], [2, 0, 1], [0, 1, 1]]
    assert det_integer(k1_display_matrix(4)) == -5


def test_submatrix_and_permuted():
    matrix = build_D_tilde(3, 1)
    assert matrix.submatrix(0, 0).tolist() == [[0]]
    assert matrix.permuted([1, 0], [0, 1]).tolist() == [[2, 0], [0, 1]]


def test_map_keeps_labels():
    matrix = build_D_tilde(3, 1)
    doubled = matrix.map(lambda x: 2 * x)
    assert doubled.entries.tolist() == [[0, 2], [4, 0]]
    assert doubled.row_labels == matrix.row_labels


def test_json_export():
    data = build_D_tilde(3, 1).to_json_dict()
    assert data['row_labels'] == ['1,3,2', '2,1,3']
    assert data['col_labels'] == ['2,3,1', '3,1,2']
    assert data['entries'] == [['0', '1'], ['2', '0']]
    assert data['kind'] == 'Dtilde'
    q_data = build_D_tilde_q(3, 1).to_json_dict()
    assert q_data['entries'] == [[[], ['1']], [['1', '1'], []]]


def test_csv_export():
    rows = list(csv.reader(io.StringIO(build_D_tilde(3, 1).to_csv())))
    assert rows == [['', '2,3,1', '3,1,2'], ['1,3,2', '0', '1'], ['2,1,3', '2', '0']]


def test_text_export():
    text = build_D_tilde(3, 1).to_text()
    assert text.splitlines() == ["Dtilde(3,1): 2x2", "0 1", "2 0"]


def test_nilcoxeter_relations():
    s1 = NilCoxeterElement(3, {simple_reflection(3, 1): 1})
    s2 = NilCoxeterElement(3, {simple_reflection(3, 2): 1})
    assert (s1 * s1).terms == {}
    assert (s1 * s2 * s1).terms == (s2 * s1 * s2).terms == {longest(3): 1}
    with pytest.raises(PermutationError):
        nilcoxeter_multiply(s1, NilCoxeterElement(4, {identity(4): 1}))


def test_theta_top_power():
    for n in (3, 4):
        top = max_length(n)
        power = nilcoxeter_power(theta(n), top)
        assert power.terms == {longest(n): math.factorial(top)}
        assert nilcoxeter_power(theta(n), top + 1).terms == {}
        assert all(length(w) == 2 for w in nilcoxeter_power(theta(n), 2).terms)


@pytest.mark.parametrize("n, k", [(3, 0), (3, 1), (4, 0), (4, 1), (4, 2), (5, 3)])
def test_theta_matrix_equals_D(n, k):
    assert np.array_equal(theta_matrix(n, k).entries, build_D(n, k).entries)


def test_labeled_matrix_equality_needs_same_labels():
    a = build_D_tilde(3, 1)
    b = LabeledMatrix(3, 1, 'Dtilde', a.col_labels, a.row_labels, a.entries.copy())
    assert a != b
    assert a == LabeledMatrix(3, 1, 'Dtilde', a.row_labels, a.col_labels, a.entries.copy())


def test_brute_force_D_entries():
    # элемент (u, v) D(n,k) равен сумме весов цепочек u -> v
    n, k = 4, 1
    matrix = build_D(n, k)
    j = max_length(n) - 2 * k
    for u in matrix.row_labels:
        chains = _weighted_chains(u, j)
        for v in matrix.col_labels:
            assert matrix.entry(u, v) == chains.get(v, 0)
