"""Ancestor posets on edge ends, linear extensions and the edge hook formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod
from typing import Iterator

from .core import CodePair, LabeledBinaryTree, NonAmbiguousTree, decode


@dataclass(frozen=True)
class ForestPoset:
    """A poset whose Hasse diagram is a forest (minima at the top).

    ``parent`` maps each element to its Hasse parent, or ``None`` for minima.
    """

    parent: dict = field(default_factory=dict)

    @property
    def elements(self) -> frozenset:
        return frozenset(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    def children(self, v) -> list:
        return sorted(c for c, p in self.parent.items() if p == v)

    def minima(self) -> list:
        return sorted(v for v, p in self.parent.items() if p is None)

    def less_equal(self, a, b) -> bool:
        while b is not None:
            if a == b:
                return True
            b = self.parent[b]
        return False

    def hook(self, v) -> int:
        """Number of elements above ``v`` in the forest, ``v`` included."""
        return 1 + sum(self.hook(c) for c in self.children(v))


def _ancestor_forest(tree: LabeledBinaryTree, side: str) -> ForestPoset:
    parent: dict = {}
    for v in tree.edge_ends(side):
        u = tree.parent(v)
        while u is not None and tree.side(u) != side:
            u = tree.parent(u)
        parent[v] = u
    return ForestPoset(parent)


def left_right_posets(tree: LabeledBinaryTree) -> tuple:
    """The reachability orders on left-edge ends and right-edge ends."""
    return _ancestor_forest(tree, "left"), _ancestor_forest(tree, "right")


def linear_extensions(poset: ForestPoset) -> Iterator[tuple]:
    """Every linear extension, in lexicographic order of the emitted tuples."""
    kids: dict = {v: [] for v in poset.parent}
    for v, p in poset.parent.items():
        if p is not None:
            kids[p].append(v)
    available = set(poset.minima())
    word: list = []
    total = len(poset)

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for v in sorted(available):
            available.remove(v)
            available.update(kids[v])
            word.append(v)
            yield from rec()
            word.pop()
            available.difference_update(kids[v])
            available.add(v)

    yield from rec()


def knuth_hook_count(poset: ForestPoset) -> int:
    """Number of linear extensions of a forest: ``|V|! / prod(hook)``."""
    return factorial(len(poset)) // prod(poset.hook(v) for v in poset.parent)


def _same_side_below(tree: LabeledBinaryTree, side: str) -> dict:
    """For each node, the number of ``side`` edges in its subtree."""
    count = {}
    for v in reversed(tree.nodes()):
        c = 0
        for ch in (tree.left(v), tree.right(v)):
            if ch is not None:
                c += count[ch] + (tree.side(ch) == side)
        count[v] = c
    return count


def na_count(tree: LabeledBinaryTree) -> int:
    """Number of non-ambiguous trees whose underlying tree is ``tree``.

    Each edge ``e`` contributes ``n_e`` = 1 + the number of edges of the same
    side in the subtree hanging from the end of ``e``.
    """
    num = 1
    den = 1
    for side in ("left", "right"):
        below = _same_side_below(tree, side)
        ends = tree.edge_ends(side)
        num *= factorial(len(ends))
        den *= prod(1 + below[v] for v in ends)
    return num // den


def compatible_codes(tree: LabeledBinaryTree) -> Iterator[CodePair]:
    """All code pairs compatible with ``tree``."""
    pl, pr = left_right_posets(tree)
    for al, ar in product(linear_extensions(pl), list(linear_extensions(pr))):
        yield CodePair(al, ar)


def nats_with_tree(tree: LabeledBinaryTree) -> Iterator[NonAmbiguousTree]:
    """Decode every pair of linear extensions of the two edge-end posets."""
    for codes in compatible_codes(tree):
        yield decode(tree, codes)
