"""Complete non-ambiguous trees and the identities they satisfy.

Everything here is exact: series and matrices hold ``Fraction`` entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from typing import Iterator, Optional

from .core import (
    LEAF,
    LabeledBinaryTree,
    NonAmbiguousTree,
    complete_trees,
    enumerate_nats_in_box,
)
from .errors import (
    AmbiguousParent,
    BudgetExceeded,
    InvalidInterlace,
    InvalidNat,
    NatlabError,
    Orphan,
    SingularMatrix,
    TrivialInput,
    TrivialTree,
)

COMPLETE_BUDGET = 5
GRID_BUDGET = 5
LABELED_BUDGET = 8


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def b_of(k: int) -> int:
    """Number of complete NATs with ``k`` internal vertices."""
    if k == 0:
        return 1
    n = k - 1
    return sum(comb(n + 1, i) * comb(n + 1, n - i) * b_of(i) * b_of(n - i)
               for i in range(n + 1))


def enumerate_complete_nats(k: int, budget: int = COMPLETE_BUDGET) -> Iterator[NonAmbiguousTree]:
    """All complete NATs with ``k`` internal vertices (size ``2k + 1``).

    Such a tree has ``k`` left and ``k`` right edges, so it fills a
    ``(k+1) x (k+1)`` box.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > budget:
        raise BudgetExceeded(f"enumerate_complete_nats({k})", f"k <= {budget}")
    return enumerate_nats_in_box(k + 1, k + 1, complete=True)


# ---------------------------------------------------------------------------
#  Root suppression
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InterlaceData:
    """Relative placement of the two subtrees' lines.

    ``right[t]`` is the number of right-subtree columns left of the left
    subtree's column ``t + 1``; ``left[t]`` is the number of left-subtree
    rows above the right subtree's row ``t + 1``.
    """

    right: tuple = ()
    left: tuple = ()

    def to_json(self) -> dict:
        return {"right": list(self.right), "left": list(self.left)}

    @classmethod
    def from_json(cls, doc: dict) -> "InterlaceData":
        return cls(tuple(doc["right"]), tuple(doc["left"]))


def _children(points) -> tuple:
    """Left and right child maps of a point set satisfying condition 2."""
    pts = sorted(points)
    left: dict = {}
    right: dict = {}
    by_row: dict = {}
    by_col: dict = {}
    for x, y in pts:
        by_row.setdefault(x, []).append(y)
        by_col.setdefault(y, []).append(x)
    for x, ys in by_row.items():
        for a, b in zip(ys, ys[1:]):
            right[(x, a)] = (x, b)
    for y, xs in by_col.items():
        for a, b in zip(sorted(xs), sorted(xs)[1:]):
            left[(a, y)] = (b, y)
    return left, right


def _subtree_points(p, left: dict, right: dict) -> set:
    out = set()
    stack = [p]
    while stack:
        q = stack.pop()
        out.add(q)
        for ch in (left.get(q), right.get(q)):
            if ch is not None:
                stack.append(ch)
    return out


def _compact(points) -> tuple:
    xs = sorted({x for x, _ in points})
    ys = sorted({y for _, y in points})
    rx = {x: i for i, x in enumerate(xs)}
    ry = {y: i for i, y in enumerate(ys)}
    return NonAmbiguousTree(frozenset((rx[x], ry[y]) for x, y in points)), xs, ys


def _is_complete_nat(a: NonAmbiguousTree) -> bool:
    left, right = _children(a.points)
    return all((p in left) == (p in right) for p in a.points)


def split_root(a: NonAmbiguousTree) -> tuple:
    """Remove the root of a complete NAT: ``(a_left, a_right, interlace)``."""
    if not _is_complete_nat(a):
        raise InvalidNat("tree is not complete")
    left, right = _children(a.points)
    root = (0, 0)
    if root not in left:
        raise TrivialTree("a single leaf has no root to remove")
    pl = _subtree_points(left[root], left, right)
    pr = _subtree_points(right[root], left, right)
    al, lxs, lys = _compact(pl)
    ar, rxs, rys = _compact(pr)
    # columns of a_left beyond its first, placed among the columns of a_right
    rword = tuple(sum(1 for y in rys if y < yl) for yl in lys[1:])
    # rows of a_right beyond its first, placed among the rows of a_left
    lword = tuple(sum(1 for x in lxs if x < xr) for xr in rxs[1:])
    return al, ar, InterlaceData(rword, lword)


def _merge_lines(own: int, other: int, word: tuple) -> tuple:
    """Positions (1-based in the merged order) of both line families.

    ``own`` lines 1.. carry ``word``; the ``other`` family's lines are
    interleaved, each word entry counting how many other lines precede it.
    """
    own_pos = [0] * own
    other_pos = [0] * other
    pos = 1
    t_own = 1
    for t in range(other + 1):
        while t_own < own and word[t_own - 1] == t:
            own_pos[t_own] = pos
            pos += 1
            t_own += 1
        if t < other:
            other_pos[t] = pos
            pos += 1
    return own_pos, other_pos


def merge_root(a_left: NonAmbiguousTree, a_right: NonAmbiguousTree,
               inter: InterlaceData) -> NonAmbiguousTree:
    """Inverse of :func:`split_root`."""
    for sub in (a_left, a_right):
        if not _is_complete_nat(sub):
            raise InvalidInterlace("subtrees must be complete")
    i = a_left.cols - 1
    j = a_right.rows - 1
    for word, length, top in ((inter.right, i, a_right.cols), (inter.left, j, a_left.rows)):
        if len(word) != length:
            raise InvalidInterlace(f"word {word} should have length {length}")
        if any(not 0 <= p <= top for p in word):
            raise InvalidInterlace(f"word {word} has an entry outside 0..{top}")
        if any(p > q for p, q in zip(word, word[1:])):
            raise InvalidInterlace(f"word {word} is not weakly increasing")
    # columns: a_left column 0 stays at 0; the rest interleave with a_right's
    lcol, rcol = _merge_lines(a_left.cols, a_right.cols, inter.right)
    # rows: a_right row 0 stays at 0; the rest interleave with a_left's
    rrow, lrow = _merge_lines(a_right.rows, a_left.rows, inter.left)
    pts = {(0, 0)}
    pts.update((lrow[x], lcol[y]) for x, y in a_left.points)
    pts.update((rrow[x], rcol[y]) for x, y in a_right.points)
    return NonAmbiguousTree(frozenset(pts))


def interlace_choices(a_left: NonAmbiguousTree, a_right: NonAmbiguousTree) -> Iterator[InterlaceData]:
    """Every valid interlacing for the given pair of subtrees."""
    i = a_left.cols - 1
    j = a_right.rows - 1
    for rw in combinations_with_replacement(range(a_right.cols + 1), i):
        for lw in combinations_with_replacement(range(a_left.rows + 1), j):
            yield InterlaceData(rw, lw)


# ---------------------------------------------------------------------------
#  Exact series and the Bessel check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactSeries:
    """Power series truncated after ``x**order``."""

    coefficients: tuple
    order: int

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coefficients[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coefficients", tuple(cs))

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __add__(self, other: "ExactSeries") -> "ExactSeries":
        order = min(self.order, other.order)
        return ExactSeries(tuple(self[i] + other[i] for i in range(order + 1)), order)

    def __neg__(self) -> "ExactSeries":
        return ExactSeries(tuple(-c for c in self.coefficients), self.order)

    def __sub__(self, other: "ExactSeries") -> "ExactSeries":
        return self + (-other)

    def scale(self, c) -> "ExactSeries":
        return ExactSeries(tuple(c * a for a in self.coefficients), self.order)

    def __mul__(self, other: "ExactSeries") -> "ExactSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if self[i]:
                for j in range(order + 1 - i):
                    out[i + j] += self[i] * other[j]
        return ExactSeries(tuple(out), order)

    def log(self) -> "ExactSeries":
        """``ln`` of a series with constant term 1."""
        if self[0] != 1:
            raise ValueError("log needs constant term 1")
        u = self - ExactSeries((1,), self.order)
        total = ExactSeries((), self.order)
        power = ExactSeries((1,), self.order)
        for m in range(1, self.order + 1):
            power = power * u
            total = total + power.scale(Fraction((-1) ** (m + 1), m))
        return total


def bessel_j0(order: int) -> ExactSeries:
    cs = [Fraction(0)] * (order + 1)
    for m in range(order // 2 + 1):
        cs[2 * m] = Fraction((-1) ** m, 4 ** m * factorial(m) ** 2)
    return ExactSeries(tuple(cs), order)


def complete_nat_series(K: int) -> ExactSeries:
    """``sum_k b_k x^(2(k+1)) / ((k+1)! 2^(k+1))^2`` up to ``x^(2(K+1))``."""
    order = 2 * (K + 1)
    cs = [Fraction(0)] * (order + 1)
    for k in range(K + 1):
        cs[2 * (k + 1)] = Fraction(b_of(k), (factorial(k + 1) * 2 ** (k + 1)) ** 2)
    return ExactSeries(tuple(cs), order)


def bessel_log_check(K: int) -> bool:
    if not 0 <= K <= 12:
        raise ValueError("K must lie in 0..12")
    order = 2 * (K + 1)
    return complete_nat_series(K) == -bessel_j0(order).log()


# ---------------------------------------------------------------------------
#  Gridded trees
# ---------------------------------------------------------------------------

def _predecessor_violation(points: frozenset) -> Optional[InvalidNat]:
    """Condition 2 with a single root; returns the root via ``None`` on success."""
    roots = []
    for x, y in sorted(points):
        has_row = any(px == x and py < y for px, py in points)
        has_col = any(py == y and px < x for px, py in points)
        if has_row and has_col:
            return AmbiguousParent((x, y))
        if not has_row and not has_col:
            roots.append((x, y))
    if len(roots) != 1:
        return Orphan(roots[1] if len(roots) > 1 else None)
    return None


def _root_of(points) -> tuple:
    xs_by_col: dict = {}
    ys_by_row: dict = {}
    for x, y in points:
        xs_by_col.setdefault(y, []).append(x)
        ys_by_row.setdefault(x, []).append(y)
    for x, y in points:
        if min(xs_by_col[y]) == x and min(ys_by_row[x]) == y:
            return (x, y)
    raise InvalidNat("no root")


@dataclass(frozen=True)
class GriddedTree:
    n: int
    points: frozenset

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))
        if self.n < 1:
            raise InvalidNat("grid side must be positive")
        if not self.points or len(self.points) % 2 == 0:
            raise InvalidNat("a gridded tree has an odd number of points")
        for x, y in self.points:
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise InvalidNat(f"point {(x, y)} lies outside the grid")
        err = _predecessor_violation(self.points)
        if err is not None:
            raise err
        if self.root[1] != 0:
            raise InvalidNat("the root must lie in the first column")
        left, right = _children(self.points)
        if any((p in left) != (p in right) for p in self.points):
            raise InvalidNat("underlying tree is not complete")

    @classmethod
    def _trusted(cls, n: int, points) -> "GriddedTree":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "points", frozenset(points))
        return obj

    @property
    def k(self) -> int:
        return (len(self.points) - 1) // 2

    @property
    def root(self) -> tuple:
        return _root_of(self.points)

    def is_trivial(self) -> bool:
        return self.points == {(0, 0)}

    def to_json(self) -> dict:
        return {"n": self.n, "points": [list(p) for p in sorted(self.points)]}

    @classmethod
    def from_json(cls, doc: dict) -> "GriddedTree":
        return cls(doc["n"], frozenset(tuple(p) for p in doc["points"]))


def gridded_count(k: int, n: int) -> int:
    return binom(n, k + 1) * binom(n - 1, k) * b_of(k)


def enumerate_gridded(k: int, n: int, budget: int = GRID_BUDGET) -> Iterator[GriddedTree]:
    """Embed every complete NAT with ``k`` internal vertices in an ``n x n`` grid.

    Rows go to any ``k+1`` grid rows; column 0 stays put and the other
    ``k`` columns go to any of the remaining ``n-1``.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if n > budget:
        raise BudgetExceeded(f"enumerate_gridded({k}, {n})", f"n <= {budget}")
    if k + 1 > n:
        return
    nats = list(enumerate_complete_nats(k))
    for rows in combinations(range(n), k + 1):
        for cols in combinations(range(1, n), k):
            cmap = (0,) + cols
            for a in nats:
                yield GriddedTree._trusted(n, ((rows[x], cmap[y]) for x, y in a.points))


def enumerate_gridded_brute(k: int, n: int) -> Iterator[GriddedTree]:
    """Subset-scan oracle for :func:`enumerate_gridded` (tiny grids only)."""
    if n > 4:
        raise BudgetExceeded(f"enumerate_gridded_brute({k}, {n})", "n <= 4")
    cells = [(x, y) for x in range(n) for y in range(n)]
    for pts in combinations(cells, 2 * k + 1):
        try:
            yield GriddedTree(n, frozenset(pts))
        except InvalidNat:
            continue


def _turning_path(points) -> list:
    """Edges ``(parent, child, side)`` of the turning path from the virtual root."""
    left, right = _children(points)
    root = _root_of(points)
    edges = [((-1, 0), root, "left")]
    cur, side = root, "left"
    while cur in left:
        nxt = right[cur] if side == "left" else left[cur]
        side = "right" if side == "left" else "left"
        edges.append((cur, nxt, side))
        cur = nxt
    return edges


def gridded_involution(g: GriddedTree) -> GriddedTree:
    """Sign-reversing involution changing the number of internal vertices by one."""
    if g.is_trivial():
        raise TrivialInput("the trivial gridded tree has no image")
    pts = set(g.points)
    used_rows = {x for x, _ in pts}
    used_cols = {y for _, y in pts}
    edges = _turning_path(pts)
    for (px, py), (cx, cy), side in edges:
        if side == "left":
            for r in range(px + 1, cx):
                if r not in used_rows:
                    c = min(c for c in range(py + 1, g.n) if c not in used_cols)
                    pts |= {(r, py), (r, c)}
                    return GriddedTree(g.n, frozenset(pts))
        else:
            for c in range(py + 1, cy):
                if c not in used_cols:
                    r = min(r for r in range(px + 1, g.n) if r not in used_rows)
                    pts |= {(px, c), (r, c)}
                    return GriddedTree(g.n, frozenset(pts))
    parent, leaf, _ = edges[-1]
    pts -= {parent, leaf}
    return GriddedTree(g.n, frozenset(pts))


# ---------------------------------------------------------------------------
#  Labeled complete binary trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledCompleteTree:
    """A complete binary tree with a non-negative label on every node.

    ``labels[v - 1]`` is the label of node ``v`` (prefix order).
    """

    tree: LabeledBinaryTree
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.tree.is_complete():
            raise NatlabError("labeled trees must be complete")
        if len(self.labels) != self.tree.size:
            raise NatlabError("one label per node is required")
        if any(not isinstance(a, int) or a < 0 for a in self.labels):
            raise NatlabError("labels must be non-negative integers")

    @property
    def k(self) -> int:
        return (self.tree.size - 1) // 2

    @property
    def ell(self) -> int:
        return sum(self.labels)

    def to_json(self) -> dict:
        doc = self.tree.to_json()
        doc["labels"] = {str(v): a for v, a in zip(self.tree.nodes(), self.labels)}
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "LabeledCompleteTree":
        tree = LabeledBinaryTree.from_json(doc)
        labels = tuple(int(doc["labels"][str(v)]) for v in tree.nodes())
        return cls(tree, labels)

    # nested form: (label, left, right) with left/right None for leaves
    def _nested(self):
        it = iter(self.labels)

        def build(shape):
            lab = next(it)
            if shape == LEAF:
                return (lab, None, None)
            return (lab, build(shape[0]), build(shape[1]))

        return build(self.tree.shape)

    @classmethod
    def _from_nested(cls, node) -> "LabeledCompleteTree":
        labels = []

        def strip(nd):
            labels.append(nd[0])
            if nd[1] is None:
                return LEAF
            return (strip(nd[1]), strip(nd[2]))

        shape = strip(node)
        return cls(LabeledBinaryTree(shape), tuple(labels))


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def labeled_count(k: int, ell: int) -> int:
    return binom(2 * k + ell, ell) * catalan(k)


def enumerate_labeled(k: int, ell: int, budget: int = LABELED_BUDGET) -> Iterator[LabeledCompleteTree]:
    if k < 0 or ell < 0:
        raise ValueError("k and ell must be non-negative")
    if k + ell > budget:
        raise BudgetExceeded(f"enumerate_labeled({k}, {ell})", f"k + l <= {budget}")
    for tree in complete_trees(k):
        for labels in _compositions(ell, 2 * k + 1):
            yield LabeledCompleteTree(tree, labels)


def labeled_involution(t: LabeledCompleteTree) -> LabeledCompleteTree:
    """Move one unit between a label and a (leaf, parent) pair on the turning path."""

    # Returns the replacement subtree, or None when ``node`` is the zero
    # leaf ending an all-zero path.  The root arrives as a left child.
    def walk(node, arrival):
        lab, lc, rc = node
        if lab > 0:
            moved = (lab - 1, lc, rc)
            leaf = (0, None, None)
            return (0, moved, leaf) if arrival == "left" else (0, leaf, moved)
        if lc is None:
            return None
        if arrival == "left":
            sub = walk(rc, "right")
            if sub is None:
                return (lc[0] + 1, lc[1], lc[2])
            return (lab, lc, sub)
        sub = walk(lc, "left")
        if sub is None:
            return (rc[0] + 1, rc[1], rc[2])
        return (lab, sub, rc)

    new_root = walk(t._nested(), "left")
    if new_root is None:
        raise TrivialInput("the unlabeled single leaf has no image")
    return LabeledCompleteTree._from_nested(new_root)


# ---------------------------------------------------------------------------
#  WZ certificate
# ---------------------------------------------------------------------------

def _wz_common(j: int, i: int, k: int, top: int, bottom: int) -> Fraction:
    num = (-1) ** (i + k) * binom(top, bottom) * binom(k + 1, j + 1) * binom(k, j) * catalan(k)
    return Fraction(num, binom(i + j, i - j) ** 2 * catalan(j))


def wz_F(j: int, i: int, k: int) -> Fraction:
    return _wz_common(j, i, k, i + k, i - k)


def wz_G(j: int, i: int, k: int) -> Fraction:
    return (_wz_common(j, i, k, i + k + 1, i - k + 1)
            * Fraction(2 * (i + 1) * (k - j) ** 2, (i + j + 1) ** 2 * (i + k + 1)))


def wz_w(j: int, i: int, k: int) -> Fraction:
    a = i + j + 1
    return (-Fraction((i - j + 1) ** 2, a ** 2)
            - Fraction(i - k + 1, i + k + 1)
            + Fraction(2 * (i + 1) * (i - k + 1), a ** 2)
            + Fraction(2 * (i + 1) * (k - j) ** 2, (i + k + 1) * a ** 2))


def wz_certificate_check(i_max: int) -> bool:
    if not 1 <= i_max <= 15:
        raise ValueError("i_max must lie in 1..15")
    for i in range(i_max + 1):
        for j in range(i + 1):
            if wz_G(j, i, i + 2) != 0 or wz_G(j, i, 0) != 0:
                return False
            for k in range(i + 2):
                lhs = wz_F(j, i + 1, k) - wz_F(j, i, k)
                if lhs != wz_G(j, i, k + 1) - wz_G(j, i, k):
                    return False
                if wz_w(j, i, k) != 0:
                    return False
    return all(wz_F(j, j, j) == 1 for j in range(i_max + 1))


# ---------------------------------------------------------------------------
#  Exact matrices and the identity behind it
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Dense matrix of ``Fraction`` entries."""

    def __init__(self, rows):
        self.rows = [[Fraction(a) for a in r] for r in rows]
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def from_function(cls, n: int, m: int, f) -> "ExactMatrix":
        return cls([[f(i, j) for j in range(m)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return ExactMatrix([[sum((self.rows[i][t] * other.rows[t][j] for t in range(m)), Fraction(0))
                             for j in range(p)] for i in range(n)])

    def is_lower_triangular(self) -> bool:
        n, m = self.shape
        return all(self.rows[i][j] == 0 for i in range(n) for j in range(i + 1, m))

    def inverse(self) -> "ExactMatrix":
        n, m = self.shape
        if n != m:
            raise SingularMatrix("only square matrices are invertible")
        aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise SingularMatrix(f"no pivot in column {col}")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [a * inv for a in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])


def matrix_D(n0: int) -> ExactMatrix:
    return ExactMatrix.from_function(
        n0 + 1, n0 + 1,
        lambda i, j: 0 if i == 0 else (-1) ** j * binom(i + j, i - j) ** 2 * catalan(j))


def matrix_A(n0: int) -> ExactMatrix:
    return ExactMatrix.from_function(
        n0 + 1, n0 + 1, lambda i, j: (-1) ** j * binom(i + 1, j + 1) * binom(i, j))


def matrix_identity_check(n0: int) -> bool:
    if not 1 <= n0 <= 12:
        raise ValueError("n0 must lie in 1..12")
    size = n0 + 1
    A = matrix_A(n0)
    D = matrix_D(n0)
    if not A.is_lower_triangular() or any(abs(A[i, i]) != 1 for i in range(size)):
        return False
    H = D @ A.inverse()
    for i in range(size):
        for j in range(size):
            want = 0 if i == 0 else (-1) ** (i + j) * binom(i + j, i - j) * catalan(j)
            if H[i, j] != want:
                return False
    ones = ExactMatrix([[1]] * size)
    zeros = ExactMatrix([[0]] * size)
    b = ExactMatrix([[b_of(k)] for k in range(size)])
    return H @ ones == zeros and A @ b == ones and D @ b == zeros


def id_anac_terms(n: int) -> list:
    """Terms ``(-1)^k b_k C_k binom(n+k, n-k)^2`` for ``k = 0..n``."""
    return [(-1) ** k * b_of(k) * catalan(k) * binom(n + k, n - k) ** 2 for k in range(n + 1)]


def check_id_anac(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return sum(id_anac_terms(n)) == 0
