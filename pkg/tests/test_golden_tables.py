import pytest

from src.algebra.exact_linalg import parse_exponent_notation
from src.combinatorics.permutation import is_involution, parse_permutation, rank_sizes
from src.verification.claim_verifier import ClaimVerifier
from src.verification.golden_tables import E_TABLE, F_TABLE, U_TABLE, GoldenTables

CHECKSUM = "3d296ec5c8b0f006ef1aaa3b2707c5a47ff932b1d879f8244053f9bda9b86888"


def test_checksum_is_pinned():
    assert GoldenTables().checksum() == CHECKSUM


def test_serialization_layout():
    lines = GoldenTables().serialize().splitlines()
    assert len(lines) == len(F_TABLE) + len(E_TABLE) + len(U_TABLE) == 38
    assert lines[0] == "f 4 1 (1^2,5)"
    assert "e 4 1 2^7*3*5^2*19" in lines
    assert lines[-1] == "u 10 4424420 1,4,3,2,10,9,8,7,6,5"
    assert "u 5 14 1,2,5,4,3 1,5,4,3,2 2,1,5,4,3" in lines


def test_table_sizes():
    assert len(F_TABLE) == 27
    assert len(E_TABLE) == 3
    assert sorted(U_TABLE) == list(range(3, 11))


def test_lookups():
    golden = GoldenTables()
    assert golden.f(4, 2) == "(1^2,3^2,6)"
    assert golden.f(3, 1) is None
    assert golden.e(4, 1) == 182400
    assert golden.e(4, 2) == 5568
    assert golden.e(3, 1) is None
    value, winners = golden.u(4)
    assert value == 5
    assert winners == frozenset({parse_permutation("1432")})
    assert golden.u(11) is None


@pytest.mark.parametrize("key", sorted(F_TABLE))
def test_f_entries_have_level_size(key):
    n, k = key
    entries = parse_exponent_notation(F_TABLE[key])
    assert len(entries) == rank_sizes(n)[k]
    assert all(entries[i + 1] % entries[i] == 0 for i in range(len(entries) - 1))


@pytest.mark.parametrize("key", [(4, 1), (4, 2), (5, 1), (5, 2), (5, 3), (6, 1), (7, 1)])
def test_f_products_match_determinant_formula(key):
    n, k = key
    product = 1
    for d in parse_exponent_notation(F_TABLE[key]):
        product *= d
    assert product == ClaimVerifier.conjecture_rhs(n, k)


def test_u_winners_are_involutions():
    golden = GoldenTables()
    for n in U_TABLE:
        _, winners = golden.u(n)
        assert all(w.n == n and is_involution(w) for w in winners)


def test_tables_can_be_replaced():
    golden = GoldenTables(f_table={(4, 1): "(1^2,5)"}, e_table={}, u_table={})
    assert golden.serialize() == "f 4 1 (1^2,5)\n"
    assert golden.checksum() != CHECKSUM
