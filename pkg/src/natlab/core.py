"""Grid model, non-ambiguous tree validation and the code-pair encoding.

Coordinates follow one convention throughout the package: a point is
``(x, y)``; a left edge keeps ``y`` and increases ``x``, a right edge keeps
``x`` and increases ``y``.  Rows are lines of constant ``x``, columns lines of
constant ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import (
    AmbiguousParent,
    EmptyLine,
    IncompatibleCodes,
    InvalidNat,
    MissingRoot,
    NatlabError,
    Orphan,
    UnknownNode,
)

Point = Tuple[int, int]
Shape = Optional[tuple]  # None, or (left_shape, right_shape)

LEAF: Shape = (None, None)


# ---------------------------------------------------------------------------
#  Binary trees
# ---------------------------------------------------------------------------

class LabeledBinaryTree:
    """A rooted binary tree whose nodes are numbered ``1..n`` in prefix order.

    The tree is stored as a nested shape: ``(left, right)`` per node, ``None``
    for a missing child.  Prefix numbering makes the ids canonical, so two
    trees are equal exactly when their shapes are.
    """

    __slots__ = ("shape", "_left", "_right", "_parent", "_end")

    def __init__(self, shape: Shape):
        if shape is None:
            raise NatlabError("a binary tree has at least one node")
        self.shape = shape
        left = [None]
        right = [None]
        parent = [None]
        end = [0]

        def walk(node, par):
            v = len(left)
            left.append(None)
            right.append(None)
            parent.append(par)
            end.append(0)
            ls, rs = node
            if ls is not None:
                left[v] = walk(ls, v)
            if rs is not None:
                right[v] = walk(rs, v)
            end[v] = len(left)
            return v

        walk(shape, None)
        self._left = tuple(left)
        self._right = tuple(right)
        self._parent = tuple(parent)
        self._end = tuple(end)

    # construction helpers --------------------------------------------------

    @classmethod
    def from_children(cls, root, left: dict, right: dict) -> "LabeledBinaryTree":
        """Build from arbitrary node keys and child maps (canonicalizing ids)."""
        seen = set()

        def build(v):
            if v in seen:
                raise NatlabError(f"node {v!r} reached twice")
            seen.add(v)
            lc = left.get(v)
            rc = right.get(v)
            return (build(lc) if lc is not None else None,
                    build(rc) if rc is not None else None)

        return cls(build(root))

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "LabeledBinaryTree":
        """Build from ``{"id", "parent", "side"}`` records (the JSON form)."""
        left, right = {}, {}
        roots = []
        ids = set()
        records = list(records)
        for rec in records:
            ids.add(rec["id"])
        for rec in records:
            v, par, side = rec["id"], rec.get("parent"), rec.get("side")
            if par is None:
                if side not in (None, "root"):
                    raise NatlabError(f"root {v!r} has side {side!r}")
                roots.append(v)
                continue
            if par not in ids:
                raise UnknownNode(par)
            table = {"left": left, "right": right}.get(side)
            if table is None:
                raise NatlabError(f"node {v!r} has invalid side {side!r}")
            if par in table:
                raise NatlabError(f"node {par!r} has two {side} children")
            table[par] = v
        if len(roots) != 1:
            raise NatlabError(f"expected exactly one root, found {len(roots)}")
        tree = cls.from_children(roots[0], left, right)
        if tree.size != len(ids):
            raise NatlabError("records do not form a single connected tree")
        return tree

    def to_records(self) -> list:
        out = []
        for v in self.nodes():
            out.append({"id": v, "parent": self._parent[v], "side": self.side(v)})
        return out

    def to_json(self) -> dict:
        return {"nodes": self.to_records()}

    @classmethod
    def from_json(cls, doc: dict) -> "LabeledBinaryTree":
        return cls.from_records(doc["nodes"])

    # basic queries ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self._left) - 1

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledBinaryTree) and self.shape == other.shape

    def __hash__(self) -> int:
        return hash(self.shape)

    def __repr__(self) -> str:
        return f"LabeledBinaryTree({_shape_str(self.shape)})"

    def nodes(self) -> range:
        return range(1, self.size + 1)

    def _check(self, v) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.size:
            raise UnknownNode(v)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 1 <= v <= self.size

    def left(self, v: int) -> Optional[int]:
        self._check(v)
        return self._left[v]

    def right(self, v: int) -> Optional[int]:
        self._check(v)
        return self._right[v]

    def parent(self, v: int) -> Optional[int]:
        self._check(v)
        return self._parent[v]

    def side(self, v: int) -> str:
        self._check(v)
        p = self._parent[v]
        if p is None:
            return "root"
        return "left" if self._left[p] == v else "right"

    def child(self, v: int, side: str) -> Optional[int]:
        return self.left(v) if side == "left" else self.right(v)

    def is_leaf(self, v: int) -> bool:
        return self.left(v) is None and self.right(v) is None

    def is_complete(self) -> bool:
        return all((self._left[v] is None) == (self._right[v] is None)
                   for v in self.nodes())

    def subtree(self, v: int) -> range:
        """Nodes of the subtree rooted at ``v`` (contiguous in prefix order)."""
        self._check(v)
        return range(v, self._end[v])

    def is_descendant(self, u: int, v: int) -> bool:
        """True when ``u`` lies in the subtree of ``v`` (``u == v`` included)."""
        self._check(u)
        self._check(v)
        return v <= u < self._end[v]

    def path(self, v: int) -> list:
        """Nodes from the root down to ``v``."""
        self._check(v)
        out = []
        while v is not None:
            out.append(v)
            v = self._parent[v]
        out.reverse()
        return out

    def edge_ends(self, side: str) -> list:
        """Ends of the left (``"left"``) or right (``"right"``) edges."""
        return [v for v in self.nodes() if self.side(v) == side]

    def mirror(self) -> "LabeledBinaryTree":
        def flip(s):
            if s is None:
                return None
            return (flip(s[1]), flip(s[0]))

        return LabeledBinaryTree(flip(self.shape))


def _shape_str(shape: Shape) -> str:
    if shape is None:
        return "."
    if shape == LEAF:
        return "o"
    return f"({_shape_str(shape[0])},{_shape_str(shape[1])})"


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for i in range(n):
        for ls in _shapes(i):
            for rs in _shapes(n - 1 - i):
                out.append((ls, rs))
    return tuple(out)


def all_trees(n: int) -> list:
    """All binary trees with ``n`` nodes, in a fixed deterministic order."""
    if n < 1:
        return []
    return [LabeledBinaryTree(s) for s in _shapes(n)]


@lru_cache(maxsize=None)
def _complete_shapes(k: int) -> tuple:
    if k == 0:
        return (LEAF,)
    out = []
    for i in range(k):
        for ls in _complete_shapes(i):
            for rs in _complete_shapes(k - 1 - i):
                out.append((ls, rs))
    return tuple(out)


def complete_trees(k: int) -> list:
    """All complete binary trees with ``k`` internal nodes."""
    return [LabeledBinaryTree(s) for s in _complete_shapes(k)]


def left_comb(n: int) -> LabeledBinaryTree:
    shape = LEAF
    for _ in range(n - 1):
        shape = (shape, None)
    return LabeledBinaryTree(shape)


def right_comb(n: int) -> LabeledBinaryTree:
    shape = LEAF
    for _ in range(n - 1):
        shape = (None, shape)
    return LabeledBinaryTree(shape)


# ---------------------------------------------------------------------------
#  Non-ambiguous trees
# ---------------------------------------------------------------------------

def _violation(points: frozenset) -> Optional[InvalidNat]:
    """First violated condition, or ``None`` when the set is a valid NAT."""
    for p in points:
        if (not isinstance(p, tuple) or len(p) != 2
                or not all(isinstance(c, int) for c in p) or min(p) < 0):
            return InvalidNat(f"not a grid point: {p!r}")
    if (0, 0) not in points:
        return MissingRoot()
    min_y_in_row: dict = {}
    min_x_in_col: dict = {}
    for x, y in points:
        if y < min_y_in_row.get(x, y + 1):
            min_y_in_row[x] = y
        if x < min_x_in_col.get(y, x + 1):
            min_x_in_col[y] = x
    for p in sorted(points):
        if p == (0, 0):
            continue
        x, y = p
        has_row = min_y_in_row[x] < y
        has_col = min_x_in_col[y] < x
        if has_row and has_col:
            return AmbiguousParent(p)
        if not has_row and not has_col:
            return Orphan(p)
    for axis, used in (("x", min_y_in_row), ("y", min_x_in_col)):
        for i in range(max(used) + 1):
            if i not in used:
                return EmptyLine(axis, i)
    return None


@dataclass(frozen=True)
class NonAmbiguousTree:
    """A finite point set satisfying the three non-ambiguity conditions.

    Construction validates; use :func:`validate_nat` for a friendlier entry
    point accepting any iterable of pairs.
    """

    points: frozenset

    def __post_init__(self):
        if not isinstance(self.points, frozenset):
            object.__setattr__(self, "points", frozenset(self.points))
        err = _violation(self.points)
        if err is not None:
            raise err

    @classmethod
    def _trusted(cls, points) -> "NonAmbiguousTree":
        obj = object.__new__(cls)
        object.__setattr__(obj, "points", frozenset(points))
        return obj

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def max_x(self) -> int:
        return max(x for x, _ in self.points)

    @property
    def max_y(self) -> int:
        return max(y for _, y in self.points)

    @property
    def rows(self) -> int:
        """Number of occupied x-lines."""
        return self.max_x + 1

    @property
    def cols(self) -> int:
        """Number of occupied y-lines."""
        return self.max_y + 1

    def sorted_points(self) -> list:
        return sorted(self.points)

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.sorted_points()]}

    @classmethod
    def from_json(cls, doc: dict) -> "NonAmbiguousTree":
        return validate_nat(doc["points"])


def validate_nat(points: Iterable) -> NonAmbiguousTree:
    """Check conditions 1-3 and return the tree, or raise the first violation.

    Violations are reported in a fixed order: a missing root first, then the
    parent condition for each point in lexicographic order, then empty lines
    (x-lines before y-lines, smallest index first).
    """
    pts = frozenset(tuple(p) for p in points)
    if not pts:
        raise InvalidNat("empty point set")
    return NonAmbiguousTree(pts)


def is_valid_nat(points: Iterable) -> bool:
    try:
        validate_nat(points)
    except InvalidNat:
        return False
    return True


def _prefix_points(nat: NonAmbiguousTree) -> tuple:
    """Prefix-ordered points and the nested shape of the underlying tree.

    In a valid NAT the left child of ``p`` is the next point below it in its
    column and the right child the next point after it in its row.
    """
    next_in_row = {}
    next_in_col = {}
    by_row: dict = {}
    by_col: dict = {}
    for x, y in nat.points:
        by_row.setdefault(x, []).append(y)
        by_col.setdefault(y, []).append(x)
    for x, ys in by_row.items():
        ys.sort()
        for a, b in zip(ys, ys[1:]):
            next_in_row[(x, a)] = (x, b)
    for y, xs in by_col.items():
        xs.sort()
        for a, b in zip(xs, xs[1:]):
            next_in_col[(a, y)] = (b, y)

    order = []

    def build(p):
        order.append(p)
        lc = next_in_col.get(p)
        rc = next_in_row.get(p)
        return (build(lc) if lc is not None else None,
                build(rc) if rc is not None else None)

    shape = build((0, 0))
    return order, shape


def underlying_tree(nat: NonAmbiguousTree) -> LabeledBinaryTree:
    """The binary tree obtained by linking each point to its nearest predecessor."""
    return LabeledBinaryTree(_prefix_points(nat)[1])


def node_positions(nat: NonAmbiguousTree) -> dict:
    """Map canonical node id -> point for the underlying tree of ``nat``."""
    order, _ = _prefix_points(nat)
    return {i + 1: p for i, p in enumerate(order)}


@dataclass(frozen=True)
class CodePair:
    """Left and right codes: ends of left (right) edges listed by x (y)."""

    alpha_l: tuple
    alpha_r: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha_l", tuple(self.alpha_l))
        object.__setattr__(self, "alpha_r", tuple(self.alpha_r))

    def to_json(self) -> dict:
        return {"alpha_L": list(self.alpha_l), "alpha_R": list(self.alpha_r)}

    @classmethod
    def from_json(cls, doc: dict) -> "CodePair":
        return cls(tuple(doc["alpha_L"]), tuple(doc["alpha_R"]))


def encode(nat: NonAmbiguousTree) -> tuple:
    """Return ``(tree, codes)`` for a non-ambiguous tree."""
    order, shape = _prefix_points(nat)
    tree = LabeledBinaryTree(shape)
    pos = {i + 1: p for i, p in enumerate(order)}
    vl = sorted(tree.edge_ends("left"), key=lambda v: pos[v][0])
    vr = sorted(tree.edge_ends("right"), key=lambda v: pos[v][1])
    return tree, CodePair(vl, vr)


def _hasse_parent(tree: LabeledBinaryTree, v: int, side: str) -> Optional[int]:
    """Nearest proper ancestor of ``v`` that is also the end of a ``side`` edge."""
    u = tree.parent(v)
    while u is not None:
        if tree.side(u) == side:
            return u
        u = tree.parent(u)
    return None


def is_compatible(tree: LabeledBinaryTree, codes: CodePair) -> bool:
    """True iff both codes are linear extensions of the ancestor orders."""
    for side, word in (("left", codes.alpha_l), ("right", codes.alpha_r)):
        ends = tree.edge_ends(side)
        if len(word) != len(ends) or set(word) != set(ends):
            return False
        rank = {v: i for i, v in enumerate(word)}
        for v in ends:
            h = _hasse_parent(tree, v, side)
            if h is not None and rank[h] > rank[v]:
                return False
    return True


def decode(tree: LabeledBinaryTree, codes: CodePair) -> NonAmbiguousTree:
    """Place the nodes of ``tree`` on the grid as prescribed by ``codes``."""
    if not is_compatible(tree, codes):
        raise IncompatibleCodes(f"codes {codes.to_json()} do not fit the tree")
    xrank = {v: i + 1 for i, v in enumerate(codes.alpha_l)}
    yrank = {v: i + 1 for i, v in enumerate(codes.alpha_r)}
    coords = {1: (0, 0)}
    for v in range(2, tree.size + 1):  # parents precede children in prefix order
        px, py = coords[tree.parent(v)]
        if tree.side(v) == "left":
            coords[v] = (xrank[v], py)
        else:
            coords[v] = (px, yrank[v])
    return NonAmbiguousTree._trusted(coords.values())


# ---------------------------------------------------------------------------
#  Exhaustive generation
# ---------------------------------------------------------------------------

def scan_ferrers(shape: Sequence[int], complete: bool = False) -> Iterator[frozenset]:
    """Yield every dot set inside a Ferrers shape satisfying conditions 1-3.

    ``shape`` lists row lengths top to bottom (weakly decreasing).  Cells are
    decided in row-major order; the parent condition is checked at placement
    and empty rows/columns are pruned as soon as they are closed.  With
    ``complete=True`` only dot sets whose tree is complete are produced.
    """
    shape = tuple(shape)
    nrows = len(shape)
    if nrows == 0 or shape[0] == 0:
        return
    ncols = shape[0]
    # Row index after which column y has no more cells.
    col_last = [max(r for r in range(nrows) if shape[r] > y) for y in range(ncols)]
    col_count = [0] * ncols
    # complete mode: 0 free, 1 must receive another dot, 2 closed
    col_state = [0] * ncols
    chosen: list = []

    def finish_row(x: int, row_pts: list) -> bool:
        if not row_pts:
            return False
        for y in range(shape[x + 1] if x + 1 < nrows else 0, shape[x]):
            if col_count[y] == 0:
                return False
        return True

    def rec(x: int, y: int, row_pts: list):
        if y == shape[x]:
            if not finish_row(x, row_pts):
                return
            saved = None
            if complete:
                saved = [(c, col_state[c]) for c in row_pts]
                for c in row_pts[:-1]:
                    col_state[c] = 1
                col_state[row_pts[-1]] = 2
                for c in row_pts:
                    if col_state[c] == 1 and col_last[c] == x:
                        for cc, st in saved:
                            col_state[cc] = st
                        return
            if x + 1 == nrows:
                if not complete or all(s != 1 for s in col_state):
                    yield frozenset(chosen)
            else:
                yield from rec(x + 1, 0, [])
            if saved is not None:
                for cc, st in saved:
                    col_state[cc] = st
            return
        root = x == 0 and y == 0
        has_row = bool(row_pts)
        has_col = col_count[y] > 0
        can_place = root or (has_row != has_col)
        if complete and col_state[y] == 2:
            can_place = False
        if can_place:
            chosen.append((x, y))
            col_count[y] += 1
            row_pts.append(y)
            old = col_state[y]
            col_state[y] = 0
            yield from rec(x, y + 1, row_pts)
            col_state[y] = old
            row_pts.pop()
            col_count[y] -= 1
            chosen.pop()
        if root:
            return
        if complete and col_state[y] == 1 and col_last[y] == x:
            return
        yield from rec(x, y + 1, row_pts)

    yield from rec(0, 0, [])


def enumerate_nats_in_box(rows: int, cols: int, complete: bool = False) -> Iterator[NonAmbiguousTree]:
    """All NATs occupying exactly ``rows`` x-lines and ``cols`` y-lines."""
    if rows < 1 or cols < 1:
        return
    for pts in scan_ferrers((cols,) * rows, complete=complete):
        yield NonAmbiguousTree._trusted(pts)


def enumerate_nats(n: int) -> Iterator[NonAmbiguousTree]:
    """All non-ambiguous trees with ``n`` points.

    A NAT of size ``n`` fills a box with ``rows + cols = n + 1``.
    """
    for rows in range(1, n + 1):
        yield from enumerate_nats_in_box(rows, n + 1 - rows)


def count_nats(n: int) -> int:
    return sum(1 for _ in enumerate_nats(n))
