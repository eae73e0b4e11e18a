import math
import random

import pytest

from src.combinatorics.permutation import (
    Permutation, all_permutations, bruhat_covers, codes_with_sum, compose, count_132, descents,
    embed, find_132, format_permutation, from_lehmer_code, identity, inverse, is_dominant,
    is_involution, is_symmetric_unimodal, lehmer_code, length, level, longest, parse_permutation,
    random_reduced_word, rank_sizes, reduced_word, right_multiply_s, right_multiply_t,
    simple_reflection, weak_covers, weak_leq,
)
from src.errors import LevelRangeError, PermutationError


def P(text):
    return parse_permutation(text)


def test_parse_compact_and_comma_forms_agree():
    assert P("1432") == P("1,4,3,2")
    assert format_permutation(P("1432")) == "1,4,3,2"
    assert P("1,4,3,2,10,9,8,7,6,5").n == 10


@pytest.mark.parametrize("text", ["", "1224", "12a", "0,1,2", "1,2,4"])
def test_parse_rejects_malformed_permutations(text):
    with pytest.raises(PermutationError):
        parse_permutation(text)


def test_permutation_is_immutable_and_hashable():
    w = P("2314")
    with pytest.raises(AttributeError):
        w.word = (1, 2, 3, 4)
    assert {w: 1}[P("2,3,1,4")] == 1


def test_length_counts_inversions():
    assert length(identity(5)) == 0
    assert length(longest(5)) == 10
    assert length(P("1432")) == 3
    assert length(P("2413")) == 3


def test_compose_applies_right_factor_first():
    u, v = P("231"), P("213")
    assert compose(u, v) == P("321")
    assert u * v == compose(u, v)
    assert compose(P("213"), P("213")) == identity(3)


def test_compose_rejects_size_mismatch():
    with pytest.raises(PermutationError):
        compose(P("21"), P("213"))


def test_inverse():
    assert inverse(P("231")) == P("312")
    for w in all_permutations(4):
        assert compose(w, inverse(w)) == identity(4)
        assert length(inverse(w)) == length(w)


def test_right_multiplication_swaps_positions():
    assert right_multiply_s(P("123"), 1) == P("213")
    assert right_multiply_s(P("2413"), 3) == P("2431")
    assert right_multiply_t(P("1234"), 1, 3) == P("3214")
    assert simple_reflection(4, 2) == P("1324")
    with pytest.raises(PermutationError):
        right_multiply_s(P("123"), 3)
    with pytest.raises(PermutationError):
        right_multiply_t(P("123"), 2, 2)


def test_descents():
    assert descents(P("1432")) == [2, 3]
    assert descents(identity(4)) == []


def test_weak_covers_of_identity():
    assert weak_covers(identity(3)) == [(1, P("213")), (2, P("132"))]
    assert weak_covers(longest(3)) == []


def test_bruhat_covers_of_identity():
    assert bruhat_covers(identity(3)) == [((1, 2), P("213")), ((2, 3), P("132"))]


def test_bruhat_covers_raise_length_by_one():
    for u in all_permutations(4):
        for (i, j), v in bruhat_covers(u):
            assert length(v) == length(u) + 1
            assert v == right_multiply_t(u, i, j)
    # 132 -> 312 через t_12 и 132 -> 231 через t_13
    assert bruhat_covers(P("132")) == [((1, 2), P("312")), ((1, 3), P("231"))]


def test_bruhat_covers_are_exactly_length_one_transpositions():
    for u in all_permutations(4):
        expected = set()
        for i in range(1, 4):
            for j in range(i + 1, 5):
                v = right_multiply_t(u, i, j)
                if length(v) == length(u) + 1:
                    expected.add(((i, j), v))
        assert set(bruhat_covers(u)) == expected


def test_weak_leq():
    assert weak_leq(identity(3), longest(3))
    assert weak_leq(P("213"), P("231"))
    assert not weak_leq(P("213"), P("132"))
    assert not weak_leq(P("132"), P("231"))


@pytest.mark.parametrize("n, sizes", [
    (1, [1]),
    (3, [1, 2, 2, 1]),
    (4, [1, 3, 5, 6, 5, 3, 1]),
    (5, [1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]),
])
def test_rank_sizes(n, sizes):
    assert rank_sizes(n) == sizes
    assert sum(sizes) == math.factorial(n)
    assert is_symmetric_unimodal(sizes)


def test_symmetric_unimodal_rejects_valleys():
    assert not is_symmetric_unimodal([1, 2, 1, 2, 1])
    assert not is_symmetric_unimodal([1, 2, 3])


def test_lehmer_code_round_trip():
    assert lehmer_code(P("1432")).entries == (0, 2, 1, 0)
    assert sum(lehmer_code(P("1432"))) == 3
    for w in all_permutations(5):
        assert from_lehmer_code(lehmer_code(w).entries) == w


def test_from_lehmer_code_rejects_out_of_range_entries():
    with pytest.raises(PermutationError):
        from_lehmer_code((3, 0, 0))


def test_codes_with_sum_respects_support():
    codes = list(codes_with_sum(4, 2, support=2))
    assert codes == [(0, 2, 0, 0), (1, 1, 0, 0), (2, 0, 0, 0)]
    assert len(list(codes_with_sum(4, 2))) == 5


def test_level_is_lexicographic():
    assert level(3, 1).members == (P("132"), P("213"))
    assert level(3, 2).members == (P("231"), P("312"))
    for n in (4, 5):
        for k in range(len(rank_sizes(n))):
            members = list(level(n, k))
            assert members == sorted(members)
            assert len(members) == rank_sizes(n)[k]
            assert all(length(w) == k for w in members)


def test_level_position():
    lv = level(4, 1)
    assert lv.position(P("2134")) == 2
    assert P("1243") in lv
    with pytest.raises(PermutationError):
        lv.position(P("2143"))


@pytest.mark.parametrize("n, k", [(3, 4), (3, -1), (0, 0)])
def test_level_out_of_range(n, k):
    with pytest.raises(LevelRangeError):
        level(n, k)


def test_pattern_132():
    w = P("1432")
    assert count_132(w) == 3
    assert find_132(w) == [(1, 2, 3), (1, 2, 4), (1, 3, 4)]
    assert count_132(P("321")) == 0
    for w in all_permutations(5):
        assert count_132(w) == len(find_132(w))


def test_dominant_means_132_avoiding():
    for w in all_permutations(5):
        assert is_dominant(w) == (count_132(w) == 0)
    assert is_dominant(longest(4))
    assert not is_dominant(P("132"))


def _product_of_word(n, word):
    current = identity(n)
    for letter in word:
        current = right_multiply_s(current, letter)
    return current


def test_reduced_word_reconstructs_permutation():
    for w in all_permutations(4):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert _product_of_word(4, word) == w


def test_random_reduced_words_are_reduced():
    rng = random.Random(3)
    w = longest(5)
    words = {random_reduced_word(w, rng) for _ in range(30)}
    assert len(words) > 1
    for word in words:
        assert len(word) == 10
        assert _product_of_word(5, word) == w


def test_involutions():
    assert is_involution(P("1432"))
    assert is_involution(longest(6))
    assert not is_involution(P("231"))


def test_embed_appends_fixed_points():
    assert embed(P("132"), 5) == P("13245")
    assert length(embed(P("2413"), 7)) == length(P("2413"))
    with pytest.raises(PermutationError):
        embed(P("1234"), 3)
