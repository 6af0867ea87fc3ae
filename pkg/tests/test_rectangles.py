from __future__ import annotations

from math import factorial

import pytest

from natlab.core import NonAmbiguousTree, enumerate_nats
from natlab.errors import (
    BudgetExceeded,
    EdgeOutOfRange,
    InvalidTableau,
    NotInImage,
    WidthMismatch,
)
from natlab.rectangles import (
    TreeLikeTableau,
    _is_column_bottom,
    border_edges,
    check_fixed_box_identity,
    count_box_brute,
    count_box_closed,
    ell_cut,
    ell_glue,
    ell_insert,
    ell_insert_inverse,
    ell_special_box,
    enumerate_tlts,
    first_row_census,
    stirling1_unsigned,
    stirling2,
    tlt_class,
)

SINGLE = TreeLikeTableau((1,), frozenset({(0, 0)}))


def test_stirling_numbers():
    assert stirling2(0, 0) == 1
    assert stirling2(3, 2) == 3
    assert all(stirling2(k, k) == 1 for k in range(21))
    assert stirling1_unsigned(1, 1) == 1
    assert stirling1_unsigned(3, 2) == 3
    assert all(sum(stirling1_unsigned(n, j) for j in range(n + 1)) == factorial(n)
               for n in range(13))


def test_box_counts_small():
    assert all(count_box_closed(1, ell) == 1 for ell in range(1, 11))
    assert count_box_closed(2, 2) == 3 == count_box_brute(2, 2)
    assert count_box_brute(1, 1) == 1
    assert count_box_brute(2, 3) == 7 == count_box_brute(3, 2)


def test_box_counts_sum_to_nat_census():
    a = [1, 2, 5, 16, 63, 294, 1585, 9692]
    for n in range(1, 9):
        assert sum(count_box_closed(k, n + 1 - k) for k in range(1, n + 1)) == a[n - 1]


def test_box_transpose_symmetry():
    for k in range(1, 9):
        for ell in range(1, 9):
            assert count_box_closed(k, ell) == count_box_closed(ell, k)


def test_box_brute_budget():
    with pytest.raises(BudgetExceeded):
        count_box_brute(6, 5)


def test_tableau_validation():
    with pytest.raises(InvalidTableau):
        TreeLikeTableau((1, 2), frozenset({(0, 0), (1, 1)}))
    with pytest.raises(InvalidTableau):
        TreeLikeTableau((2,), frozenset({(0, 0)}))  # empty column
    with pytest.raises(InvalidTableau):
        TreeLikeTableau((1,), frozenset({(0, 0), (0, 1)}))  # dot outside


def test_tlt_size_is_semiperimeter_minus_one():
    for n in range(1, 7):
        tlts = list(enumerate_tlts(n))
        assert len(tlts) == factorial(n)
        assert all(t.rows + t.cols - 1 == t.size == n for t in tlts)


def test_rectangular_tlts_are_nats():
    for n in range(1, 6):
        rect = {t.dots for t in enumerate_tlts(n) if len(set(t.shape)) == 1}
        assert rect == {a.points for a in enumerate_nats(n)}


def test_first_row_census_is_stirling_first_kind():
    for n in range(1, 7):
        census = first_row_census(n)
        assert census == {k: stirling1_unsigned(n, k) for k in range(1, n + 1)}


def test_class_cardinality():
    for n in range(1, 6):
        for ell in range(1, 4):
            assert sum(1 for _ in tlt_class(n, ell)) == n ** (ell - 1) * factorial(n)


def test_border_edges_count():
    for t in enumerate_tlts(5):
        assert len(border_edges(t.shape)) == t.rows + t.cols


def test_special_box_examples():
    assert ell_special_box(SINGLE, 1) == (0, 0)
    # two equal rows, l = 1: row 1 is not shorter, so the bottom rule applies
    t = TreeLikeTableau((1, 1), frozenset({(0, 0), (1, 0)}))
    assert ell_special_box(t, 1) == (1, 0)
    # row l strictly shorter
    t = TreeLikeTableau((2, 1), frozenset({(0, 0), (0, 1), (1, 0)}))
    assert ell_special_box(t, 1) == (0, 1)


def test_insertion_from_smallest_class():
    images = [ell_insert(SINGLE, 1, 1)]
    assert set(images) == set(tlt_class(1, 2))


def test_insertion_size_two():
    images = {ell_insert(t, 1, m) for t in tlt_class(2, 1) for m in (1, 2)}
    assert len(images) == 4
    assert images == set(tlt_class(2, 2))


def test_insertion_is_bijective():
    for n in range(1, 5):
        for ell in range(1, 4):
            seen = {}
            for t in tlt_class(n, ell):
                for m in range(1, n + 1):
                    u = ell_insert(t, ell, m)
                    assert u.size == t.size + 1
                    assert u not in seen
                    seen[u] = (t, m)
                    assert ell_insert_inverse(u, ell) == (t, m)
            assert set(seen) == set(tlt_class(n, ell + 1))


def test_new_dot_is_rightmost_bottom_dot():
    # the inserted dot sits alone in the new row or the new column
    for n in range(1, 5):
        for ell in range(1, 3):
            for t in tlt_class(n, ell):
                for m in range(1, n + 1):
                    u = ell_insert(t, ell, m)
                    bottoms = [d for d in u.dots if _is_column_bottom(u.shape, *d)]
                    r, c = max(bottoms, key=lambda d: d[1])
                    alone_in_row = all(x != r for x, y in u.dots if (x, y) != (r, c))
                    alone_in_col = all(y != c for x, y in u.dots if (x, y) != (r, c))
                    assert alone_in_row or alone_in_col


def test_insert_errors():
    with pytest.raises(EdgeOutOfRange):
        ell_insert(SINGLE, 1, 2)
    with pytest.raises(EdgeOutOfRange):
        ell_insert(SINGLE, 1, 0)
    with pytest.raises(NotInImage):
        ell_insert_inverse(TreeLikeTableau((2, 1), frozenset({(0, 0), (0, 1), (1, 0)})), 1)


def test_cut_with_one_row():
    for t in tlt_class(3, 1):
        b, a = ell_cut(t, 1)
        assert b == t
        assert a.rows == 1 and a.cols == t.first_row_dots()


def test_cut_conditions():
    for n in range(1, 5):
        for ell in range(1, 4):
            for t in tlt_class(n, ell):
                b, a = ell_cut(t, ell)
                assert b.size == n
                assert a.rows == ell
                assert a.cols == b.first_row_dots()
                assert ell_glue(b, a) == t


def test_cut_pairs_census():
    for n in range(1, 6):
        for ell in range(1, 4):
            pairs = {ell_cut(t, ell) for t in tlt_class(n, ell)}
            census = first_row_census(n)
            assert len(pairs) == sum(c * count_box_closed(k, ell) for k, c in census.items())


def test_glue_width_mismatch():
    a = NonAmbiguousTree(frozenset({(0, 0), (0, 1)}))
    with pytest.raises(WidthMismatch):
        ell_glue(SINGLE, a)
    assert ell_glue(SINGLE, NonAmbiguousTree(frozenset({(0, 0)}))) == SINGLE


def test_fixed_box_identity():
    assert check_fixed_box_identity(2, 2)
    # 1 * A(1, 2) + 1 * A(2, 2) = 1 + 3
    assert first_row_census(2) == {1: 1, 2: 1}
    assert all(check_fixed_box_identity(1, ell) for ell in range(1, 5))
    assert all(check_fixed_box_identity(n, ell) for n in range(1, 6) for ell in range(1, 4))
    with pytest.raises(BudgetExceeded):
        check_fixed_box_identity(7, 2)


def test_tlt_json():
    t = TreeLikeTableau((2, 1), frozenset({(0, 1), (0, 0), (1, 0)}))
    assert t.to_json() == {"shape": [2, 1], "dots": [[0, 0], [0, 1], [1, 0]]}
    assert TreeLikeTableau.from_json(t.to_json()) == t
