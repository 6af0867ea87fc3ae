from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from natlab.complete_ids import (
    ExactMatrix,
    ExactSeries,
    GriddedTree,
    InterlaceData,
    LabeledCompleteTree,
    b_of,
    bessel_j0,
    bessel_log_check,
    catalan,
    check_id_anac,
    complete_nat_series,
    enumerate_complete_nats,
    enumerate_gridded,
    enumerate_gridded_brute,
    enumerate_labeled,
    gridded_count,
    gridded_involution,
    id_anac_terms,
    interlace_choices,
    labeled_count,
    labeled_involution,
    matrix_A,
    matrix_D,
    matrix_identity_check,
    merge_root,
    split_root,
    wz_F,
    wz_certificate_check,
)
from natlab.core import LEAF, LabeledBinaryTree, NonAmbiguousTree, complete_trees
from natlab.errors import (
    BudgetExceeded,
    InvalidInterlace,
    InvalidNat,
    SingularMatrix,
    TrivialInput,
    TrivialTree,
)
from natlab.hooks import na_count

LEAF_NAT = NonAmbiguousTree(frozenset({(0, 0)}))
CHERRY = NonAmbiguousTree(frozenset({(0, 0), (1, 0), (0, 1)}))


def test_catalan():
    assert catalan(0) == 1 and catalan(4) == 14
    for n in range(16):
        assert catalan(n + 1) == sum(catalan(i) * catalan(n - i) for i in range(n + 1))


def test_b_values():
    assert [b_of(k) for k in range(6)] == [1, 1, 4, 33, 456, 9460]
    assert b_of(2) == 2 + 2


def test_complete_census_three_ways():
    for k in range(6):
        census = sum(1 for _ in enumerate_complete_nats(k))
        hooks = sum(na_count(t) for t in complete_trees(k))
        assert census == hooks == b_of(k)
    with pytest.raises(BudgetExceeded):
        list(enumerate_complete_nats(6))


def test_b_parity_regression():
    # frozen from the computed sequence: b_3 = 33 is already odd
    assert [k for k in range(21) if b_of(k) % 2] == [0, 1, 3, 7, 15]


def test_split_smallest():
    al, ar, inter = split_root(CHERRY)
    assert al == ar == LEAF_NAT and inter == InterlaceData((), ())
    assert merge_root(LEAF_NAT, LEAF_NAT, InterlaceData()) == CHERRY
    with pytest.raises(TrivialTree):
        split_root(LEAF_NAT)


def test_split_merge_roundtrip():
    for k in range(1, 5):
        for a in enumerate_complete_nats(k):
            assert merge_root(*split_root(a)) == a


def test_interlace_counts():
    for i in range(3):
        for j in range(3):
            n = i + j
            for al in enumerate_complete_nats(i):
                for ar in enumerate_complete_nats(j):
                    choices = list(interlace_choices(al, ar))
                    assert len(choices) == comb(n + 1, i) * comb(n + 1, j)
                    images = {merge_root(al, ar, c) for c in choices}
                    assert len(images) == len(choices)


def test_merge_rejects_bad_words():
    with pytest.raises(InvalidInterlace):
        merge_root(LEAF_NAT, LEAF_NAT, InterlaceData((0,), ()))
    with pytest.raises(InvalidInterlace):
        merge_root(CHERRY, LEAF_NAT, InterlaceData((2,), ()))
    big = next(iter(enumerate_complete_nats(2)))
    with pytest.raises(InvalidInterlace):
        merge_root(big, LEAF_NAT, InterlaceData((1, 0), ()))


def test_series_low_orders():
    lhs = complete_nat_series(1)
    rhs = -bessel_j0(4).log()
    assert lhs[2] == rhs[2] == Fraction(1, 4)
    assert lhs[4] == rhs[4] == Fraction(1, 64)


def test_series_arithmetic():
    s = ExactSeries((1, 1), 4)
    assert (s * s).coefficients == tuple(map(Fraction, (1, 2, 1, 0, 0)))
    # log(1 + x) = x - x^2/2 + x^3/3 - ...
    assert s.log().coefficients[:4] == (0, 1, Fraction(-1, 2), Fraction(1, 3))


def test_bessel_identity():
    assert all(bessel_log_check(K) for K in range(13))


def test_gridded_examples():
    assert sum(1 for _ in enumerate_gridded(0, 2)) == 2
    assert sum(1 for _ in enumerate_gridded(1, 2)) == 1
    assert [g.points for g in enumerate_gridded(0, 1)] == [{(0, 0)}]


def test_gridded_census_against_subset_scan():
    for n in range(1, 5):
        for k in range(n):
            fast = set(enumerate_gridded(k, n))
            assert len(fast) == gridded_count(k, n)
            assert fast == set(enumerate_gridded_brute(k, n))


def test_gridded_validation():
    with pytest.raises(InvalidNat):
        GriddedTree(3, frozenset({(0, 1)}))  # root off the first column
    with pytest.raises(InvalidNat):
        GriddedTree(3, frozenset({(0, 0), (1, 0)}))  # not complete
    with pytest.raises(InvalidNat):
        GriddedTree(2, frozenset({(0, 0), (2, 0), (0, 1)}))


def test_gridded_involution_example():
    g = GriddedTree(2, frozenset({(1, 0)}))
    h = gridded_involution(g)
    assert h.points == {(0, 0), (0, 1), (1, 0)} and h.k == 1
    assert gridded_involution(h) == g
    with pytest.raises(TrivialInput):
        gridded_involution(GriddedTree(2, frozenset({(0, 0)})))


def test_gridded_involution_is_sign_reversing():
    for n in range(1, 5):
        signed = 0
        for k in range(n):
            for g in enumerate_gridded(k, n):
                signed += (-1) ** k
                if g.is_trivial():
                    continue
                h = gridded_involution(g)
                assert abs(h.k - g.k) == 1
                assert gridded_involution(h) == g
        assert signed == 1


def test_signed_gridded_formula():
    for n in range(1, 9):
        assert sum((-1) ** k * gridded_count(k, n) for k in range(n)) == 1


def test_labeled_examples():
    assert [t.labels for t in enumerate_labeled(0, 0)] == [(0,)]
    assert sum(1 for _ in enumerate_labeled(1, 0)) == 1
    assert [t.labels for t in enumerate_labeled(0, 1)] == [(1,)]
    with pytest.raises(BudgetExceeded):
        list(enumerate_labeled(5, 4))


def test_labeled_census():
    for k in range(4):
        for ell in range(5):
            assert sum(1 for _ in enumerate_labeled(k, ell)) == labeled_count(k, ell)


def test_labeled_involution_smallest():
    one = LabeledCompleteTree(LabeledBinaryTree(LEAF), (1,))
    cherry = labeled_involution(one)
    assert cherry.tree == LabeledBinaryTree((LEAF, LEAF)) and cherry.labels == (0, 0, 0)
    assert labeled_involution(cherry) == one
    with pytest.raises(TrivialInput):
        labeled_involution(LabeledCompleteTree(LabeledBinaryTree(LEAF), (0,)))


def test_labeled_involution_is_sign_reversing():
    for n in range(1, 7):
        for k in range(n + 1):
            for t in enumerate_labeled(k, n - k):
                u = labeled_involution(t)
                assert abs(u.k - t.k) == 1 and u.k + u.ell == n
                assert labeled_involution(u) == t


def test_signed_catalan_formula():
    for n in range(1, 13):
        total = sum((-1) ** (n + k) * comb(n + k, n - k) * catalan(k) for k in range(n + 1))
        assert total == 0


def test_labeled_json():
    t = next(iter(enumerate_labeled(1, 2)))
    assert LabeledCompleteTree.from_json(t.to_json()) == t


def test_wz_certificate():
    assert wz_F(0, 0, 0) == 1
    assert wz_certificate_check(10)
    for i in range(11):
        for j in range(i + 1):
            assert sum(wz_F(j, i, k) for k in range(i + 1)) == 1


def test_matrix_identity():
    assert matrix_identity_check(1)
    assert matrix_identity_check(6)
    H = matrix_D(3) @ matrix_A(3).inverse()
    assert H[1, 0] == -1
    with pytest.raises(SingularMatrix):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_d_times_b_small():
    b = ExactMatrix([[b_of(0)], [b_of(1)]])
    assert matrix_D(1) @ b == ExactMatrix([[0], [0]])


def test_hanna_identity():
    assert id_anac_terms(1) == [1, -1]
    assert id_anac_terms(2) == [1, -9, 8]
    assert all(check_id_anac(n) for n in range(1, 26))
