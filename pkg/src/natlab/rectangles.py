"""Tree-like tableaux, l-insertion, l-cut, and boxed NAT counts.

Tableau cells are ``(row, col)`` with row 0 on top; this is the same
``(x, y)`` convention used for non-ambiguous trees, so a rectangular tableau
*is* a non-ambiguous tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .core import NonAmbiguousTree, _violation, enumerate_nats_in_box, scan_ferrers
from .errors import (
    BudgetExceeded,
    EdgeOutOfRange,
    InvalidTableau,
    NotInImage,
    WidthMismatch,
)

BOX_BUDGET = 9  # largest k + l - 1 for brute-force boxed counts


# ---------------------------------------------------------------------------
#  Stirling numbers and closed forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def stirling2(k: int, i: int) -> int:
    """Set partitions of a ``k``-set into ``i`` blocks."""
    if k == 0 and i == 0:
        return 1
    if k <= 0 or i <= 0:
        return 0
    return i * stirling2(k - 1, i) + stirling2(k - 1, i - 1)


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, j: int) -> int:
    """Permutations of ``n`` elements with exactly ``j`` cycles."""
    if n == 0 and j == 0:
        return 1
    if n <= 0 or j <= 0:
        return 0
    return (n - 1) * stirling1_unsigned(n - 1, j) + stirling1_unsigned(n - 1, j - 1)


def count_box_closed(k: int, ell: int) -> int:
    """NATs with ``k`` occupied y-lines and ``ell`` occupied x-lines (closed form)."""
    if k < 1 or ell < 1:
        raise ValueError("k and ell must be positive")
    return sum((-1) ** (k - i) * stirling2(k, i) * factorial(i) * i ** (ell - 1)
               for i in range(1, k + 1))


def count_box_brute(k: int, ell: int, budget: int = BOX_BUDGET) -> int:
    """Same count as :func:`count_box_closed`, by exhaustive generation."""
    if k < 1 or ell < 1:
        raise ValueError("k and ell must be positive")
    if k + ell - 1 > budget:
        raise BudgetExceeded(f"count_box_brute({k}, {ell})", f"k + l - 1 <= {budget}")
    return sum(1 for _ in enumerate_nats_in_box(ell, k))


# ---------------------------------------------------------------------------
#  Tree-like tableaux
# ---------------------------------------------------------------------------

def _tableau_violation(shape: tuple, dots: frozenset):
    if not shape or any(r < 1 for r in shape):
        return InvalidTableau(f"row lengths must be positive: {shape}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        return InvalidTableau(f"row lengths must be weakly decreasing: {shape}")
    for r, c in dots:
        if not (0 <= r < len(shape) and 0 <= c < shape[r]):
            return InvalidTableau(f"dot {(r, c)} lies outside the shape")
    # Inside a Ferrers shape, condition 3 on lines is "every row and column
    # of the shape holds a dot"; the NAT checker covers occupied lines only.
    err = _violation(dots)
    if err is not None:
        return err
    if {r for r, _ in dots} != set(range(len(shape))):
        return InvalidTableau("a row of the shape has no dot")
    if {c for _, c in dots} != set(range(shape[0])):
        return InvalidTableau("a column of the shape has no dot")
    return None


@dataclass(frozen=True)
class TreeLikeTableau:
    shape: tuple
    dots: frozenset

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(self.shape))
        object.__setattr__(self, "dots", frozenset(tuple(d) for d in self.dots))
        err = _tableau_violation(self.shape, self.dots)
        if err is not None:
            raise err

    @classmethod
    def _trusted(cls, shape, dots) -> "TreeLikeTableau":
        obj = object.__new__(cls)
        object.__setattr__(obj, "shape", tuple(shape))
        object.__setattr__(obj, "dots", frozenset(dots))
        return obj

    @property
    def size(self) -> int:
        return len(self.dots)

    @property
    def rows(self) -> int:
        return len(self.shape)

    @property
    def cols(self) -> int:
        return self.shape[0]

    def in_shape(self, r: int, c: int) -> bool:
        return 0 <= r < len(self.shape) and 0 <= c < self.shape[r]

    def first_row_dots(self) -> int:
        return sum(1 for r, _ in self.dots if r == 0)

    def equal_top_rows(self) -> int:
        """How many leading rows share the first row's length."""
        n = 0
        while n < len(self.shape) and self.shape[n] == self.shape[0]:
            n += 1
        return n

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "dots": [list(d) for d in sorted(self.dots)]}

    @classmethod
    def from_json(cls, doc: dict) -> "TreeLikeTableau":
        return cls(tuple(doc["shape"]), frozenset(tuple(d) for d in doc["dots"]))

    @classmethod
    def from_nat(cls, nat: NonAmbiguousTree) -> "TreeLikeTableau":
        return cls._trusted((nat.cols,) * nat.rows, nat.points)


def ferrers_shapes(semiperimeter: int, equal_top: int = 1) -> Iterator[tuple]:
    """Ferrers shapes with ``rows + cols == semiperimeter`` whose first
    ``equal_top`` rows have equal length."""
    for cols in range(1, semiperimeter):
        nrows = semiperimeter - cols
        if nrows < equal_top:
            continue

        def rest(prefix, remaining):
            if remaining == 0:
                yield tuple(prefix)
                return
            for length in range(prefix[-1], 0, -1):
                prefix.append(length)
                yield from rest(prefix, remaining - 1)
                prefix.pop()

        yield from rest([cols] * equal_top, nrows - equal_top)


def enumerate_tlts(size: int, equal_top: int = 1) -> Iterator[TreeLikeTableau]:
    """All TLTs with ``size`` dots (first ``equal_top`` rows of equal length)."""
    for shape in ferrers_shapes(size + 1, equal_top):
        for dots in scan_ferrers(shape):
            yield TreeLikeTableau._trusted(shape, dots)


def tlt_class(n: int, ell: int) -> Iterator[TreeLikeTableau]:
    """The class of TLTs of size ``n + ell - 1`` whose first ``ell`` rows are equal."""
    return enumerate_tlts(n + ell - 1, equal_top=ell)


def first_row_census(n: int) -> dict:
    """``k -> number of TLTs of size n with k dots in the first row``."""
    census: dict = {}
    for t in enumerate_tlts(n):
        k = t.first_row_dots()
        census[k] = census.get(k, 0) + 1
    return census


# ---------------------------------------------------------------------------
#  l-insertion
# ---------------------------------------------------------------------------

def border_edges(shape) -> list:
    """South-East border edges from South-West to North-East.

    ``("H", c, r)``: bottom edge of column ``c`` whose last cell is in row ``r``.
    ``("V", r, w)``: right edge of row ``r``, which has length ``w``.
    """
    edges = []
    nrows = len(shape)
    for r in range(nrows - 1, -1, -1):
        below = shape[r + 1] if r + 1 < nrows else 0
        for c in range(below, shape[r]):
            edges.append(("H", c, r))
        edges.append(("V", r, shape[r]))
    return edges


def _require_class(t: TreeLikeTableau, ell: int) -> int:
    if ell < 1:
        raise ValueError("ell must be positive")
    if t.rows < ell or t.equal_top_rows() < ell:
        raise NotInImage(f"the first {ell} rows are not of equal length")
    return t.size - ell + 1


def _is_column_bottom(shape, r: int, c: int) -> bool:
    return not (r + 1 < len(shape) and shape[r + 1] > c)


def _rightmost_bottom_dot(shape, dots) -> tuple:
    return max(((r, c) for r, c in dots if _is_column_bottom(shape, r, c)),
               key=lambda d: d[1])


def ell_special_box(t: TreeLikeTableau, ell: int) -> tuple:
    """The cell that anchors the ribbon during l-insertion."""
    _require_class(t, ell)
    if t.rows == ell or t.shape[ell] < t.shape[ell - 1]:
        return (ell - 1, t.shape[ell - 1] - 1)
    return _rightmost_bottom_dot(t.shape, t.dots)


def _add_ribbon(rows: list, special: tuple, new_dot: tuple) -> None:
    """Grow ``rows`` by the minimal border strip joining the cell below
    ``special`` to the cell right of ``new_dot``."""
    rs, cs = special
    rn, cn = new_dot
    old = list(rows)
    assert rn > rs and old[rn] == cn + 1 and old[rs + 1] <= cs, (special, new_dot, rows)
    rows[rs + 1] = cs + 1
    for i in range(rs + 2, rn + 1):
        rows[i] = old[i - 1] + 1
    assert all(a >= b for a, b in zip(rows, rows[1:]))


def ell_insert(t: TreeLikeTableau, ell: int, m: int) -> TreeLikeTableau:
    """Insert a dot at border edge ``e_m``; maps class (n, l) to class (n, l+1)."""
    n = _require_class(t, ell)
    if not 1 <= m <= n:
        raise EdgeOutOfRange(f"m={m} not in 1..{n}")
    special = ell_special_box(t, ell)
    kind, a, b = border_edges(t.shape)[m - 1]
    rows = list(t.shape)
    if kind == "H":
        c, r = a, b
        rows.insert(r + 1, c + 1)
        dots = {(x + 1, y) if x > r else (x, y) for x, y in t.dots}
        new_dot = (r + 1, c)
        if special[0] > r:
            special = (special[0] + 1, special[1])
    else:
        r, w = a, b
        for i in range(r + 1):
            rows[i] += 1
        dots = {(x, y + 1) if y >= w else (x, y) for x, y in t.dots}
        new_dot = (r, w)
        if special[1] >= w:
            special = (special[0], special[1] + 1)
    dots.add(new_dot)
    if new_dot[1] < special[1]:
        _add_ribbon(rows, special, new_dot)
    return TreeLikeTableau(tuple(rows), frozenset(dots))


def ell_insert_inverse(t: TreeLikeTableau, ell: int) -> tuple:
    """Undo :func:`ell_insert`: returns ``(tableau, m)``."""
    n = _require_class(t, ell + 1)
    if n < 1:
        raise NotInImage("tableau too small")
    rows = list(t.shape)
    dots = set(t.dots)
    rn, cn = _rightmost_bottom_dot(rows, dots)

    if rows[rn] > cn + 1:
        ribbon = []
        i, j = rn, cn + 1
        while True:
            ribbon.append((i, j))
            if j + 1 < rows[i]:
                j += 1
                continue
            if i - 1 <= ell - 1 or (i - 1, j) in dots:
                break
            i -= 1
        if any(cell in dots for cell in ribbon):
            raise NotInImage("ribbon cells are not empty")
        for i, _ in ribbon:
            rows[i] -= 1

    row_pts = [c for r, c in dots if r == rn and c != cn]
    if row_pts:
        # new column: remove column cn from rows 0..rn
        if any(c == cn and r != rn for r, c in dots):
            raise NotInImage("inserted column holds another dot")
        for i in range(rn + 1):
            rows[i] -= 1
        dots.discard((rn, cn))
        dots = {(x, y - 1) if y > cn else (x, y) for x, y in dots}
        edge = ("V", rn, cn)
    else:
        if rows[rn] != cn + 1:
            raise NotInImage("inserted row has unexpected length")
        del rows[rn]
        dots.discard((rn, cn))
        dots = {(x - 1, y) if x > rn else (x, y) for x, y in dots}
        edge = ("H", cn, rn - 1)
    try:
        prev = TreeLikeTableau(tuple(rows), frozenset(dots))
        m = border_edges(prev.shape).index(edge) + 1
    except (InvalidTableau, ValueError) as exc:
        raise NotInImage(str(exc)) from exc
    if m > n or ell_insert(prev, ell, m) != t:
        raise NotInImage("tableau is not an l-insertion image")
    return prev, m


# ---------------------------------------------------------------------------
#  l-cut
# ---------------------------------------------------------------------------

def ell_cut(t: TreeLikeTableau, ell: int) -> tuple:
    """Split ``t`` into ``(b, a)``: a TLT of size n and a NAT with ``ell`` rows."""
    _require_class(t, ell)
    width = t.shape[0]
    top = [(r, c) for r, c in t.dots if r < ell]
    used_cols = sorted({c for _, c in top})
    first_row = {(0, c) for c in used_cols}
    lower = {(r - ell + 1, c) for r, c in t.dots if r >= ell}
    b = TreeLikeTableau((width,) + t.shape[ell:], frozenset(first_row | lower))
    squeeze = {c: i for i, c in enumerate(used_cols)}
    a = NonAmbiguousTree(frozenset((r, squeeze[c]) for r, c in top))
    return b, a


def ell_glue(b: TreeLikeTableau, a: NonAmbiguousTree) -> TreeLikeTableau:
    """Inverse of :func:`ell_cut`; ``ell`` is the number of rows of ``a``."""
    cols = sorted(c for r, c in b.dots if r == 0)
    if len(cols) != a.cols:
        raise WidthMismatch(f"b has {len(cols)} first-row dots, a has width {a.cols}")
    ell = a.rows
    width = b.shape[0]
    top = {(r, cols[c]) for r, c in a.points}
    lower = {(r + ell - 1, c) for r, c in b.dots if r > 0}
    return TreeLikeTableau((width,) * ell + b.shape[1:], frozenset(top | lower))


def check_fixed_box_identity(n: int, ell: int) -> bool:
    """Check sum_k c(n,k) A(k,l) = n^(l-1) n! with an exhaustive TLT census,
    and that the census reproduces the unsigned Stirling numbers of the first kind."""
    if n < 1 or ell < 1:
        raise ValueError("n and ell must be positive")
    if n > 6 or ell > 4:
        raise BudgetExceeded(f"check_fixed_box_identity({n}, {ell})", "n <= 6, l <= 4")
    census = first_row_census(n)
    if any(census.get(k, 0) != stirling1_unsigned(n, k) for k in range(0, n + 2)):
        return False
    total = sum(cnt * count_box_brute(k, ell) for k, cnt in census.items())
    return total == n ** (ell - 1) * factorial(n)
