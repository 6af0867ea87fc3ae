from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natlab.core import (
    LEAF,
    CodePair,
    LabeledBinaryTree,
    NonAmbiguousTree,
    all_trees,
    count_nats,
    decode,
    encode,
    enumerate_nats,
    is_compatible,
    is_valid_nat,
    left_comb,
    underlying_tree,
    validate_nat,
)
from natlab.errors import (
    AmbiguousParent,
    EmptyLine,
    IncompatibleCodes,
    MissingRoot,
    Orphan,
    UnknownNode,
)
from natlab.hooks import compatible_codes, na_count


def oracle_is_nat(points) -> bool:
    """Conditions written out literally, for cross-checking the validator."""
    pts = set(points)
    if (0, 0) not in pts:
        return False
    for (x, y) in pts:
        if (x, y) == (0, 0):
            continue
        row = any(q[0] == x and q[1] < y for q in pts)
        col = any(r[1] == y and r[0] < x for r in pts)
        if row == col:
            return False
    xs = {p[0] for p in pts}
    ys = {p[1] for p in pts}
    return xs == set(range(max(xs) + 1)) and ys == set(range(max(ys) + 1))


# -- validation --------------------------------------------------------------

def test_single_root_is_valid():
    a = validate_nat({(0, 0)})
    assert a.size == 1


def test_filled_square_is_ambiguous_at_corner():
    with pytest.raises(AmbiguousParent) as err:
        validate_nat({(0, 0), (1, 0), (0, 1), (1, 1)})
    assert err.value.point == (1, 1)


def test_gap_row_is_reported():
    with pytest.raises(EmptyLine) as err:
        validate_nat({(0, 0), (2, 0)})
    assert (err.value.axis, err.value.index) == ("x", 1)


def test_missing_root_and_orphan():
    with pytest.raises(MissingRoot):
        validate_nat({(1, 0)})
    with pytest.raises(Orphan) as err:
        validate_nat({(0, 0), (1, 1)})
    assert err.value.point == (1, 1)


def test_first_violation_in_lexicographic_order():
    # both (1, 1) and (2, 2) see two predecessors; the smaller one is named
    with pytest.raises(AmbiguousParent) as err:
        validate_nat({(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (2, 2)})
    assert err.value.point == (1, 1)


def test_sixteen_trees_of_size_four():
    assert count_nats(4) == 16
    assert len(set(enumerate_nats(4))) == 16


def test_validator_matches_oracle_on_4x4_window():
    cells = [(x, y) for x in range(4) for y in range(4)]
    for mask in range(1 << 16):
        pts = [c for i, c in enumerate(cells) if mask >> i & 1]
        if not pts:
            continue
        assert is_valid_nat(pts) == oracle_is_nat(pts), pts


@settings(max_examples=300, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=10))
def test_validator_matches_oracle_random(points):
    assert is_valid_nat(points) == oracle_is_nat(points)


def test_enumeration_is_exactly_the_valid_sets():
    for n in range(1, 6):
        cells = [(x, y) for x in range(n) for y in range(n) if x + y <= n - 1]
        oracle = {frozenset(s) for s in combinations(cells, n) if oracle_is_nat(s)}
        assert {a.points for a in enumerate_nats(n)} == oracle


# -- underlying tree ----------------------------------------------------------

def test_underlying_tree_examples():
    assert underlying_tree(NonAmbiguousTree(frozenset({(0, 0)}))) == LabeledBinaryTree(LEAF)
    t = underlying_tree(NonAmbiguousTree(frozenset({(0, 0), (1, 0)})))
    assert t.left(1) == 2 and t.right(1) is None
    t = underlying_tree(NonAmbiguousTree(frozenset({(0, 0), (0, 1), (1, 1)})))
    assert t.right(1) == 2 and t.left(2) == 3 and t.size == 3


def test_tree_json_roundtrip_and_unknown_node():
    for t in all_trees(5):
        assert LabeledBinaryTree.from_json(t.to_json()) == t
    t = all_trees(3)[0]
    with pytest.raises(UnknownNode):
        t.left(9)


def test_tree_records_are_prefix_ordered():
    t = LabeledBinaryTree(((LEAF, None), LEAF))
    recs = t.to_records()
    assert [r["id"] for r in recs] == [1, 2, 3, 4]
    assert [(r["parent"], r["side"]) for r in recs] == [
        (None, "root"), (1, "left"), (2, "left"), (1, "right")]


# -- codes ----------------------------------------------------------------------

def test_encode_examples():
    tree, codes = encode(NonAmbiguousTree(frozenset({(0, 0)})))
    assert tree.size == 1 and codes == CodePair((), ())
    tree, codes = encode(NonAmbiguousTree(frozenset({(0, 0), (1, 0), (0, 1)})))
    assert codes.alpha_l == (tree.left(1),) and codes.alpha_r == (tree.right(1),)


def test_decode_left_comb():
    comb = left_comb(3)
    a = decode(comb, CodePair((2, 3), ()))
    assert a.points == {(0, 0), (1, 0), (2, 0)}
    assert not is_compatible(comb, CodePair((3, 2), ()))
    with pytest.raises(IncompatibleCodes):
        decode(comb, CodePair((3, 2), ()))


def test_leaf_with_empty_codes():
    assert is_compatible(LabeledBinaryTree(LEAF), CodePair((), ()))
    assert decode(LabeledBinaryTree(LEAF), CodePair((), ())).points == {(0, 0)}


def test_encode_decode_roundtrip_up_to_seven():
    for n in range(1, 8):
        for a in enumerate_nats(n):
            tree, codes = encode(a)
            assert decode(tree, codes) == a
            assert len(codes.alpha_l) == a.max_x and len(codes.alpha_r) == a.max_y


def test_decode_encode_roundtrip_up_to_seven():
    for n in range(1, 8):
        for tree in all_trees(n):
            for codes in compatible_codes(tree):
                assert encode(decode(tree, codes)) == (tree, codes)


def test_compatible_pairs_among_all_permutations():
    for n in range(1, 7):
        for tree in all_trees(n):
            vl = tree.edge_ends("left")
            vr = tree.edge_ends("right")
            passing = sum(1 for pl in permutations(vl) for pr in permutations(vr)
                          if is_compatible(tree, CodePair(pl, pr)))
            assert passing == na_count(tree)


def test_left_code_positions_form_an_interval():
    for a in enumerate_nats(6):
        tree, codes = encode(a)
        decoded = decode(tree, codes)
        xs = sorted(p[0] for p in decoded.points if p[0] > 0)
        assert set(xs) == set(range(1, a.max_x + 1))


def test_nat_json_is_sorted():
    a = NonAmbiguousTree(frozenset({(0, 1), (0, 0), (1, 0)}))
    assert a.to_json() == {"points": [[0, 0], [0, 1], [1, 0]]}
    assert NonAmbiguousTree.from_json(a.to_json()) == a
