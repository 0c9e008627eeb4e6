"""Partitions, Young diagrams, and standard tableaux with exact integer arithmetic.

Boxes are indexed like matrix entries, 1-based, rows top to bottom and columns
left to right.  All values here are immutable and hashable, so they can be
shared freely across threads and used as cache keys by the representation
layer.  Dimensions are exact Python integers (they overflow fixed-width types
quickly: ``dimension(Partition((7, 7, 4, 3, 3)))`` is 11,660,320,672).
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BoxOutsideDiagramError,
    EntryOutOfRangeError,
    NonPositivePartError,
    NotInUpSetError,
    NotNonincreasingError,
    NotStandardError,
)


class Box(NamedTuple):
    """1-based (row, col) position in a Young diagram."""

    row: int
    col: int

    @property
    def superdiagonal(self) -> int:
        """Signed diagonal index col - row; 0 on the main diagonal."""
        return self.col - self.row


def box_axial_distance(a: Box | tuple[int, int], b: Box | tuple[int, int]) -> int:
    """Axial distance from box ``a`` to box ``b``: difference of superdiagonals."""
    return (a[1] - a[0]) - (b[1] - b[0])


class Partition:
    """A nonincreasing sequence of positive integers summing to n."""

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[int]):
        pts = tuple(int(p) for p in parts)
        if not pts:
            raise NonPositivePartError("a partition needs at least one part")
        if any(p < 1 for p in pts):
            raise NonPositivePartError(f"parts must be positive integers: {pts}")
        if any(a < b for a, b in zip(pts, pts[1:])):
            raise NotNonincreasingError(f"parts must be nonincreasing: {pts}")
        self.parts = pts
        self.n = sum(pts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"

    def __str__(self) -> str:
        # the serialization format used on the CLI and in JSON metadata
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated part list such as ``"4,2,2"``."""
        return cls(int(tok) for tok in text.replace(" ", "").split(",") if tok)


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and build a :class:`Partition`."""
    return Partition(parts)


def contains(lam: Partition, box: Box | tuple[int, int]) -> bool:
    row, col = box
    return 1 <= row <= len(lam) and 1 <= col <= lam[row - 1]


def boxes(lam: Partition) -> Iterator[Box]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield Box(i, j)


def transpose(lam: Partition) -> Partition:
    """Reflect the diagram across its main diagonal."""
    return Partition(
        sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1)
    )


def is_symmetric(lam: Partition) -> bool:
    return transpose(lam) == lam


def distinct_part_count(lam: Partition) -> int:
    return len(set(lam.parts))


def diagonal_count(lam: Partition) -> int:
    """Number of boxes on the main diagonal, max{i : lam_i >= i}."""
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


def hook_length(lam: Partition, box: Box | tuple[int, int]) -> int:
    """Boxes at-or-right of ``box`` in its row plus strictly below in its column."""
    if not contains(lam, box):
        raise BoxOutsideDiagramError(f"box {tuple(box)} outside diagram of {lam!r}")
    row, col = box
    arm = lam[row - 1] - col
    leg = sum(1 for p in lam.parts[row:] if p >= col)
    return arm + leg + 1


def hook_product(lam: Partition) -> int:
    prod = 1
    for box in boxes(lam):
        prod *= hook_length(lam, box)
    return prod


def dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam``, by the hook length formula."""
    return factorial(lam.n) // hook_product(lam)


def remove_box(lam: Partition, box: Box | tuple[int, int]) -> Partition:
    row, col = box
    new = list(lam.parts)
    new[row - 1] -= 1
    return Partition(p for p in new if p > 0)


def add_box(lam: Partition, box: Box | tuple[int, int]) -> Partition:
    row, col = box
    new = list(lam.parts)
    if row == len(new) + 1:
        new.append(1)
    else:
        new[row - 1] += 1
    return Partition(new)


def removable_boxes(lam: Partition) -> tuple[Box, ...]:
    """Boxes whose removal leaves a Young diagram, by descending superdiagonal.

    Their count equals the number of distinct parts of ``lam``.
    """
    out = []
    h = len(lam)
    for i, part in enumerate(lam, start=1):
        below = lam[i] if i < h else 0
        if part > below:
            out.append(Box(i, part))
    return tuple(out)


def down_set(lam: Partition) -> tuple[tuple[Partition, Box], ...]:
    """All (mu, removed box) with mu obtained by removing one box from ``lam``.

    Ordered by descending superdiagonal of the removed box; the count equals
    the number of distinct parts of ``lam``.  The one-box shape has no valid
    children (the empty partition is rejected), so its down set is empty.
    """
    if lam.n == 1:
        return ()
    return tuple((remove_box(lam, box), box) for box in removable_boxes(lam))


def up_set(mu: Partition) -> tuple[tuple[Partition, Box], ...]:
    """All (lam, added box) with lam obtained by adding one box to ``mu``.

    Ordered by descending superdiagonal of the added box; the count is one
    more than the number of distinct parts of ``mu``.
    """
    out = []
    h = len(mu)
    for i in range(1, h + 2):
        if i == h + 1:
            box = Box(i, 1)
        else:
            above = mu[i - 2] if i > 1 else None
            if above is not None and above <= mu[i - 1]:
                continue
            box = Box(i, mu[i - 1] + 1)
        out.append((add_box(mu, box), box))
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n exactly once, in descending lexicographic order."""
    if n < 1:
        raise NonPositivePartError("partitions are defined for n >= 1")

    def gen(remaining: int, max_part: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for p in range(min(max_part, remaining), 0, -1):
            yield from gen(remaining - p, p, prefix + (p,))

    yield from gen(n, n, ())


class StandardTableau:
    """A bijective filling of a Young diagram, increasing along rows and columns.

    Entries are stored both as a row grid and as an inverse map entry -> box,
    so axial distances are O(1) lookups.
    """

    __slots__ = ("rows", "shape", "_box_of", "_content")

    def __init__(self, rows: Iterable[Iterable[int]]):
        grid = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition(len(row) for row in grid)
        n = shape.n
        positions: list[Box | None] = [None] * n
        for i, row in enumerate(grid, start=1):
            for j, v in enumerate(row, start=1):
                if not 1 <= v <= n:
                    raise NotStandardError(f"entry {v} outside 1..{n}")
                if positions[v - 1] is not None:
                    raise NotStandardError(f"entry {v} repeated")
                positions[v - 1] = Box(i, j)
        for i, row in enumerate(grid):
            for j, v in enumerate(row):
                if j + 1 < len(row) and v >= row[j + 1]:
                    raise NotStandardError("rows must increase left to right")
                if i + 1 < len(grid) and j < len(grid[i + 1]) and v >= grid[i + 1][j]:
                    raise NotStandardError("columns must increase top to bottom")
        self.rows = grid
        self.shape = shape
        self._box_of = tuple(positions)  # type: ignore[arg-type]
        self._content: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.shape.n

    def box_of(self, entry: int) -> Box:
        if not 1 <= entry <= self.n:
            raise EntryOutOfRangeError(f"entry {entry} outside 1..{self.n}")
        return self._box_of[entry - 1]

    def entry(self, box: Box | tuple[int, int]) -> int:
        if not contains(self.shape, box):
            raise BoxOutsideDiagramError(f"box {tuple(box)} outside {self.shape!r}")
        row, col = box
        return self.rows[row - 1][col - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "\n".join("|" + "|".join(map(str, row)) + "|" for row in self.rows)

    def to_lists(self) -> list[list[int]]:
        """Row-major nested lists, the JSON serialization of a tableau."""
        return [list(row) for row in self.rows]


def content(T: StandardTableau) -> tuple[int, ...]:
    """Superdiagonal positions of the entries 1..n, in entry order."""
    if T._content is None:
        T._content = tuple(b.superdiagonal for b in T._box_of)
    return T._content


def axial_distance(T: StandardTableau, i: int, j: int) -> int:
    """Content difference between entries ``i`` and ``j`` of ``T``."""
    c = content(T)
    if not (1 <= i <= T.n and 1 <= j <= T.n):
        raise EntryOutOfRangeError(f"entries {i}, {j} must lie in 1..{T.n}")
    return c[i - 1] - c[j - 1]


def apply_adjacent_transposition(T: StandardTableau, k: int) -> StandardTableau | None:
    """Swap entries k and k+1 of ``T`` if the result is standard, else None.

    The result is standard exactly when |axial_distance(T, k+1, k)| >= 2,
    i.e. when the two entries are neither row- nor column-adjacent.
    """
    if not 1 <= k <= T.n - 1:
        raise EntryOutOfRangeError(f"k = {k} outside 1..{T.n - 1}")
    if abs(axial_distance(T, k + 1, k)) < 2:
        return None
    a = T.box_of(k)
    b = T.box_of(k + 1)
    grid = [list(row) for row in T.rows]
    grid[a.row - 1][a.col - 1] = k + 1
    grid[b.row - 1][b.col - 1] = k
    return StandardTableau(grid)


def embed(R: StandardTableau, lam: Partition) -> StandardTableau:
    """Add the box lam - shape(R) to ``R`` and fill it with n = |lam|."""
    candidates = [box for target, box in up_set(R.shape) if target == lam]
    if not candidates:
        raise NotInUpSetError(f"{lam!r} is not shape(R) plus one box")
    box = candidates[0]
    grid = [list(row) for row in R.rows]
    if box.row == len(grid) + 1:
        grid.append([lam.n])
    else:
        grid[box.row - 1].append(lam.n)
    return StandardTableau(grid)


def transpose_tableau(T: StandardTableau) -> StandardTableau:
    cols = transpose(T.shape)
    grid = [[T.rows[i][j] for i in range(cols[j])] for j in range(len(cols))]
    return StandardTableau(grid)


def row_superstandard(lam: Partition) -> StandardTableau:
    """The tableau whose rows list 1, 2, 3, ... left to right, top to bottom."""
    grid = []
    nxt = 1
    for part in lam:
        grid.append(list(range(nxt, nxt + part)))
        nxt += part
    return StandardTableau(grid)


def canonical_key(T: StandardTableau) -> tuple[int, ...]:
    """Sort key for the canonical basis order: (row of n, row of n-1, ..., row of 1)."""
    return tuple(T._box_of[e].row for e in range(T.n - 1, -1, -1))


@lru_cache(maxsize=None)
def enumerate_standard_tableaux(lam: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape ``lam``, in canonical order.

    The canonical order sorts by (row of n, row of n-1, ..., row of 1)
    ascending-lexicographically.  Tableaux sharing the box of n are therefore
    contiguous, in the same order as :func:`down_set`, which makes every
    branching isometry a contiguous 0/1 column selector.
    """
    if lam.n == 1:
        return (StandardTableau(((1,),)),)
    out: list[StandardTableau] = []
    for mu, _box in down_set(lam):
        out.extend(embed(R, lam) for R in enumerate_standard_tableaux(mu))
    out.sort(key=canonical_key)
    return tuple(out)


@lru_cache(maxsize=None)
def tableau_index(lam: Partition) -> dict[StandardTableau, int]:
    """Position of every standard tableau of shape ``lam`` in the canonical order."""
    return {T: i for i, T in enumerate(enumerate_standard_tableaux(lam))}
