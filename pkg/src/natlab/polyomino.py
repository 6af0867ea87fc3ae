"""Parallelogram polyominoes and their bijection with binary trees.

Orientation: cell ``(x, y)`` sits in row ``x`` (growing downwards) and column
``y`` (growing rightwards).  A polyomino is stored as its cell set and is
anchored so that its northernmost cell is ``(0, 0)``; row ``x`` is the
interval ``[a_x, b_x]`` with both ends weakly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import (
    CodePair,
    LabeledBinaryTree,
    NonAmbiguousTree,
    decode,
    node_positions,
    underlying_tree,
)
from .errors import BudgetExceeded, InvalidPolyomino, NotInD0, NotInD1

PP_BUDGET = 10


# ---------------------------------------------------------------------------
#  Parallelogram polyominoes
# ---------------------------------------------------------------------------

def _row_intervals(cells: frozenset) -> list:
    rows: dict = {}
    for x, y in cells:
        rows.setdefault(x, []).append(y)
    if sorted(rows) != list(range(len(rows))):
        raise InvalidPolyomino("rows are not contiguous")
    out = []
    for x in range(len(rows)):
        ys = sorted(rows[x])
        if ys[-1] - ys[0] + 1 != len(ys):
            raise InvalidPolyomino(f"row {x} is not convex")
        out.append((ys[0], ys[-1]))
    return out


@dataclass(frozen=True)
class ParallelogramPolyomino:
    cells: frozenset

    def __post_init__(self):
        cells = frozenset(tuple(c) for c in self.cells)
        if not cells:
            raise InvalidPolyomino("a polyomino has at least one cell")
        mx = min(x for x, _ in cells)
        my = min(y for _, y in cells)
        cells = frozenset((x - mx, y - my) for x, y in cells)
        object.__setattr__(self, "cells", cells)
        rows = _row_intervals(cells)
        if rows[0][0] != 0:
            raise InvalidPolyomino("the top-left corner cell is missing")
        for (a0, b0), (a1, b1) in zip(rows, rows[1:]):
            if a1 < a0 or b1 < b0:
                raise InvalidPolyomino("row ends must be weakly increasing")
            if a1 > b0:
                raise InvalidPolyomino("consecutive rows do not share a column")

    @property
    def rows(self) -> list:
        """Row intervals ``[(a_x, b_x), ...]``."""
        return _row_intervals(self.cells)

    @property
    def height(self) -> int:
        return 1 + max(x for x, _ in self.cells)

    @property
    def width(self) -> int:
        return 1 + max(y for _, y in self.cells)

    @property
    def size(self) -> int:
        return self.height + self.width - 1

    # Boundary paths.  A step along a column (x grows) is drawn South-West,
    # a step along a row (y grows) South-East.
    def lower_path(self) -> str:
        steps = []
        prev = 0
        for a, _ in self.rows:
            steps.append("E" * (a - prev) + "W")
            prev = a
        steps.append("E" * (self.width - prev))
        return "".join(steps)

    def upper_path(self) -> str:
        steps = []
        prev = 0
        for _, b in self.rows:
            steps.append("E" * (b + 1 - prev) + "W")
            prev = b + 1
        return "".join(steps)

    @classmethod
    def from_paths(cls, upper: str, lower: str) -> "ParallelogramPolyomino":
        if set(upper) - {"E", "W"} or set(lower) - {"E", "W"}:
            raise InvalidPolyomino("paths use the letters E and W only")
        if len(upper) != len(lower) or upper.count("W") != lower.count("W"):
            raise InvalidPolyomino("paths must have the same length and step counts")
        if not upper.startswith("E") or not lower.startswith("W"):
            raise InvalidPolyomino("upper starts with E, lower starts with W")
        if not upper.endswith("W") or not lower.endswith("E"):
            raise InvalidPolyomino("upper ends with W, lower ends with E")

        def ends(path):
            out = []
            e = 0
            for s in path:
                if s == "E":
                    e += 1
                else:
                    out.append(e)
            return out

        starts = ends(lower)
        stops = ends(upper)
        cells = set()
        for x, (a, b1) in enumerate(zip(starts, stops)):
            if a >= b1:
                raise InvalidPolyomino("the paths touch before their end")
            cells.update((x, y) for y in range(a, b1))
        return cls(frozenset(cells))

    def to_json(self) -> dict:
        return {"upper": self.upper_path(), "lower": self.lower_path(),
                "cells": [list(c) for c in sorted(self.cells)]}

    @classmethod
    def from_json(cls, doc: dict) -> "ParallelogramPolyomino":
        if "upper" in doc and "lower" in doc:
            pp = cls.from_paths(doc["upper"], doc["lower"])
            if "cells" in doc and pp.cells != frozenset(tuple(c) for c in doc["cells"]):
                raise InvalidPolyomino("cells disagree with the boundary paths")
            return pp
        return cls(frozenset(tuple(c) for c in doc["cells"]))


def enumerate_pp(n: int, budget: int = PP_BUDGET) -> Iterator[ParallelogramPolyomino]:
    """Every parallelogram polyomino of size ``n`` (height + width - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > budget:
        raise BudgetExceeded(f"enumerate_pp({n})", f"n <= {budget}")
    for width in range(1, n + 1):
        height = n + 1 - width

        def rec(rows):
            if len(rows) == height:
                if rows[-1][1] == width - 1:
                    cells = frozenset((x, y) for x, (a, b) in enumerate(rows)
                                      for y in range(a, b + 1))
                    yield ParallelogramPolyomino(cells)
                return
            a0, b0 = rows[-1]
            for a in range(a0, b0 + 1):
                for b in range(b0, width):
                    rows.append((a, b))
                    yield from rec(rows)
                    rows.pop()

        for b in range(width):
            yield from rec([(0, b)])


def enlighten(p: ParallelogramPolyomino) -> NonAmbiguousTree:
    """Cells that are first in their row or first in their column."""
    first_in_row = {(x, a) for x, (a, _) in enumerate(p.rows)}
    top: dict = {}
    for x, y in p.cells:
        if x < top.get(y, x + 1):
            top[y] = x
    first_in_col = {(x, y) for y, x in top.items()}
    return NonAmbiguousTree(frozenset(first_in_row | first_in_col))


def psi(p: ParallelogramPolyomino) -> LabeledBinaryTree:
    return underlying_tree(enlighten(p))


# ---------------------------------------------------------------------------
#  Turn and zigzag labelings
# ---------------------------------------------------------------------------

def _arrival(tree: LabeledBinaryTree, v: int) -> str:
    # the root hangs as the right child of a virtual root
    s = tree.side(v)
    return "right" if s == "root" else s


def turn_labels(tree: LabeledBinaryTree) -> dict:
    """Number of turns on the path from the virtual root to each node."""
    t = {}
    for v in tree.nodes():
        p = tree.parent(v)
        t[v] = 0 if p is None else t[p] + (tree.side(v) != _arrival(tree, p))
    return t


def ets(tree: LabeledBinaryTree, s: int) -> frozenset:
    """The induced subtree ``E(T, s)`` used to define the zigzag labeling."""
    path = tree.path(s)
    removed = set(tree.subtree(s))
    removed.discard(s)
    for v, nxt in zip(path, path[1:]):
        went = tree.side(nxt)
        if went != _arrival(tree, v):
            other = tree.right(v) if went == "left" else tree.left(v)
            if other is not None:
                removed.update(tree.subtree(other))
    return frozenset(v for v in tree.nodes() if v not in removed)


def zigzag_labels(tree: LabeledBinaryTree) -> dict:
    """``z(s) = |E(T, s)|``."""
    return {v: len(ets(tree, v)) for v in tree.nodes()}


def zigzag_labels_dfs(tree: LabeledBinaryTree) -> dict:
    """Same labels as :func:`zigzag_labels` from one depth-first pass.

    Each node is numbered on arrival, then the subtree reached by turning is
    explored before the one reached by going straight.
    """
    z = {}
    stack = [tree.nodes()[0]]
    while stack:
        v = stack.pop()
        z[v] = len(z) + 1
        if _arrival(tree, v) == "left":
            first, second = tree.right(v), tree.left(v)
        else:
            first, second = tree.left(v), tree.right(v)
        for ch in (second, first):
            if ch is not None:
                stack.append(ch)
    return z


def lca(tree: LabeledBinaryTree, u: int, v: int) -> int:
    pu = tree.path(u)
    pv = tree.path(v)
    last = pu[0]
    for a, b in zip(pu, pv):
        if a != b:
            break
        last = a
    return last


def doa(tree: LabeledBinaryTree, u: int) -> int:
    """Oldest ancestor reaching ``u`` through edges of ``u``'s side only."""
    side = tree.side(u)
    if side == "root":
        raise ValueError("the root is not the end of an edge")
    cur = u
    while tree.side(cur) == side:
        cur = tree.parent(cur)
    return cur


def canonical_codes(tree: LabeledBinaryTree) -> CodePair:
    """Order each side's edge ends by ``(turns, zigzag)`` lexicographically."""
    t = turn_labels(tree)
    z = zigzag_labels_dfs(tree)

    def key(v):
        return (t[v], z[v])

    return CodePair(sorted(tree.edge_ends("left"), key=key),
                    sorted(tree.edge_ends("right"), key=key))


def canonical_nat(tree: LabeledBinaryTree) -> NonAmbiguousTree:
    return decode(tree, canonical_codes(tree))


def is_monotone_embedding(nat: NonAmbiguousTree) -> bool:
    """Left-edge ends sorted by x have weakly increasing y, and vice versa."""
    tree = underlying_tree(nat)
    pos = node_positions(nat)
    vl = [pos[v] for v in tree.edge_ends("left")]
    vr = [pos[v] for v in tree.edge_ends("right")]
    ok_l = all(p[1] <= q[1] for p in vl for q in vl if p[0] < q[0])
    ok_r = all(p[0] <= q[0] for p in vr for q in vr if p[1] < q[1])
    return ok_l and ok_r


# ---------------------------------------------------------------------------
#  Diagrams, filling and shelling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    cells: frozenset

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))

    def to_json(self) -> list:
        return [list(c) for c in sorted(self.cells)]


def _as_cells(d) -> frozenset:
    if isinstance(d, (Diagram, ParallelogramPolyomino)):
        return d.cells
    if isinstance(d, NonAmbiguousTree):
        return d.points
    return frozenset(tuple(c) for c in d)


def _first_seen(cells: Iterable) -> tuple:
    min_y_in_row: dict = {}
    min_x_in_col: dict = {}
    for x, y in cells:
        if y < min_y_in_row.get(x, y + 1):
            min_y_in_row[x] = y
        if x < min_x_in_col.get(y, x + 1):
            min_x_in_col[y] = x
    return min_y_in_row, min_x_in_col


def _corners(cells: frozenset) -> set:
    """Grid cells with an occupied cell to their left and one above."""
    rmin, cmin = _first_seen(cells)
    return {(x, y) for x, ry in rmin.items() for y, cx in cmin.items()
            if ry < y and cx < x}


def in_d0(d) -> bool:
    """No empty corner: every corner cell is occupied."""
    cells = _as_cells(d)
    return _corners(cells) <= cells


def in_d1(d) -> bool:
    """No occupied corner."""
    cells = _as_cells(d)
    return not (_corners(cells) & cells)


def fill(d) -> Diagram:
    """Occupy every corner of a diagram with no occupied corner."""
    cells = _as_cells(d)
    corners = _corners(cells)
    if corners & cells:
        raise NotInD1("the diagram already has an occupied corner")
    return Diagram(cells | corners)


def shell(d) -> Diagram:
    """Empty every corner of a diagram with no empty corner."""
    cells = _as_cells(d)
    corners = _corners(cells)
    if not corners <= cells:
        raise NotInD0("the diagram has an empty corner")
    return Diagram(cells - corners)


def lambda_(tree: LabeledBinaryTree) -> ParallelogramPolyomino:
    """Inverse of :func:`psi`: fill the canonical embedding of ``tree``."""
    return ParallelogramPolyomino(fill(canonical_nat(tree)).cells)


def enumerate_diagrams(rows: int, cols: int, cls: str) -> Iterator[frozenset]:
    """Every ``D_0`` or ``D_1`` diagram inside a ``rows x cols`` window."""
    if cls not in ("D0", "D1"):
        raise ValueError("cls is 'D0' or 'D1'")
    if rows * cols > 25:
        raise BudgetExceeded(f"enumerate_diagrams({rows}, {cols})", "at most 25 cells")
    order = [(x, y) for x in range(rows) for y in range(cols)]
    row_used = [0] * rows
    col_used = [0] * cols
    chosen: list = []

    def rec(i):
        if i == len(order):
            yield frozenset(chosen)
            return
        x, y = order[i]
        corner = row_used[x] > 0 and col_used[y] > 0
        if cls == "D0" and corner:
            options = (True,)
        elif cls == "D1" and corner:
            options = (False,)
        else:
            options = (False, True)
        for take in options:
            if take:
                chosen.append((x, y))
                row_used[x] += 1
                col_used[y] += 1
            yield from rec(i + 1)
            if take:
                chosen.pop()
                row_used[x] -= 1
                col_used[y] -= 1

    yield from rec(0)
