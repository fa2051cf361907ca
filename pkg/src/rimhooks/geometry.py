"""Partitions, cells, hooks, diagonal regions, and the two total cell orders.

Cells are 1-indexed (row, column) pairs; row 1 is the top row and rows grow
southward, columns grow eastward. A partition is identified with its Young
diagram, the set of cells (i, j) with 1 <= i <= length and 1 <= j <= parts[i-1].

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

Cell = tuple[int, int]

_CELL_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def north(u: Cell) -> Cell:
    return (u[0] - 1, u[1])


def east(u: Cell) -> Cell:
    return (u[0], u[1] + 1)


def south(u: Cell) -> Cell:
    return (u[0] + 1, u[1])


def west(u: Cell) -> Cell:
    return (u[0], u[1] - 1)


def content(u: Cell) -> int:
    """Diagonal index of a cell: column minus row."""
    return u[1] - u[0]


def format_cell(u: Cell) -> str:
    return f"({u[0]},{u[1]})"


def parse_cell(text: str) -> Cell:
    m = _CELL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"expected a cell of the form (i,j), got {text!r}")
    return (int(m.group(1)), int(m.group(2)))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def revlex_key(u: Cell):
    """Sort key realizing the reverse lexicographic order on cells.

    Later columns come first; within a column, lower rows come first.
    """
    return (-u[1], -u[0])


def content_key(u: Cell):
    """Sort key realizing the content order: larger content first, then lower rows."""
    return (-content(u), -u[0])


def revlex_compare(u: Cell, v: Cell) -> int:
    """Three-way comparison in reverse lexicographic order (-1 if u comes first)."""
    return _cmp(revlex_key(u), revlex_key(v))


def content_compare(u: Cell, v: Cell) -> int:
    """Three-way comparison in content order (-1 if u comes first)."""
    return _cmp(content_key(u), content_key(v))


class Region(Enum):
    """Classification of the diagonals of a partition by its corner contents.

    Sorting the corner contents gives the interleaving
    o_1 < i_1 < o_2 < ... < i_r < o_{r+1} (outer corners o, inner corners i).
    A diagonal is INNER_DIAG or OUTER_DIAG when its content is a corner content,
    BAND_A when it lies below o_1 or between some i_k and o_{k+1}, and BAND_B
    when it lies between some o_k and i_k or above o_{r+1}. Rim-hooks continue
    east through INNER_DIAG and BAND_A cells and south through BAND_B and
    INNER_DIAG cells.
    """

    INNER_DIAG = "inner"
    OUTER_DIAG = "outer"
    BAND_A = "A"
    BAND_B = "B"


class Partition:
    """A weakly decreasing sequence of positive integers and its cell diagram."""

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive, got {parts}")
        self.parts = parts

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse the comma-separated text form; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __contains__(self, u: Cell) -> bool:
        i, j = u
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row_length(self, i: int) -> int:
        """Length of row i, 0 outside the diagram."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col_length(self, j: int) -> int:
        """Length of column j (conjugate part), 0 outside the diagram."""
        conj = self._conjugate_parts
        return conj[j - 1] if 1 <= j <= len(conj) else 0

    @cached_property
    def _conjugate_parts(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        conj = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                conj[j] += 1
        return tuple(conj)

    def conjugate(self) -> "Partition":
        return Partition(self._conjugate_parts)

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def _require(self, u: Cell) -> None:
        if u not in self:
            raise ValueError(f"cell {format_cell(u)} lies outside the partition {self}")

    def hook_length(self, u: Cell) -> int:
        """Number of cells weakly east or weakly south of u inside the diagram."""
        self._require(u)
        i, j = u
        return self.parts[i - 1] + self.col_length(j) - i - j + 1

    @cached_property
    def _corner_cells(self) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
        inner, outer = [], []
        for u in self.cells():
            e_in, s_in = east(u) in self, south(u) in self
            if not e_in and not s_in:
                outer.append(u)
            elif e_in and s_in and east(south(u)) not in self:
                inner.append(u)
        inner.sort(key=content)
        outer.sort(key=content)
        return tuple(inner), tuple(outer)

    def corners(self) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
        """(inner corners, outer corners), each sorted by increasing content."""
        if not self.parts:
            raise ValueError("the empty partition has no corners")
        return self._corner_cells

    @cached_property
    def _region_by_content(self) -> dict[int, Region]:
        inner, outer = self._corner_cells
        inner_contents = [content(u) for u in inner]
        outer_contents = [content(u) for u in outer]
        regions: dict[int, Region] = {}
        for c in range(1 - len(self.parts), self.parts[0]):
            if c in outer_contents:
                regions[c] = Region.OUTER_DIAG
            elif c in inner_contents:
                regions[c] = Region.INNER_DIAG
            else:
                below = sum(1 for o in outer_contents if o < c)
                if below == 0:
                    regions[c] = Region.BAND_A
                elif below == len(outer_contents):
                    regions[c] = Region.BAND_B
                else:
                    # between o_below and o_{below+1}; i_below separates B from A
                    regions[c] = (
                        Region.BAND_B if c < inner_contents[below - 1] else Region.BAND_A
                    )
        return regions

    def region(self, u: Cell) -> Region:
        self._require(u)
        return self._region_by_content[content(u)]

    def region_or_none(self, u: Cell) -> Region | None:
        """Like region, but None for cells outside the diagram."""
        if u not in self:
            return None
        return self._region_by_content[content(u)]

    def rim_hook(self, u: Cell) -> "RimHook":
        """The rim-hook identified with the cell u.

        Its head sits at the bottom of u's column, its tail at the end of u's
        row, and it runs north-east along the rim (no cell of the diagram lies
        south-east of any of its cells).
        """
        self._require(u)
        i, j = u
        head = (self.col_length(j), j)
        tail = (i, self.parts[i - 1])
        cells = [head]
        cur = head
        while cur != tail:
            e = east(cur)
            if e in self and south(e) not in self:
                cur = e
            else:
                cur = north(cur)
            cells.append(cur)
        return RimHook(self, u, tuple(cells))

    def rim_hooks(self) -> list["RimHook"]:
        """All rim-hooks, smallest first in the rim-hook order."""
        return [self.rim_hook(u) for u in sorted(self.cells(), key=revlex_key)]

    def remove_corner(self, x: Cell) -> "Partition":
        """The partition with the outer corner x removed."""
        _, outer = self.corners()
        if x not in outer:
            raise ValueError(f"{format_cell(x)} is not an outer corner of {self}")
        parts = list(self.parts)
        parts[x[0] - 1] -= 1
        if parts and parts[-1] == 0:
            parts.pop()
        return Partition(parts)


@dataclass(frozen=True)
class RimHook:
    """A rim-hook of a fixed shape, identified by its anchor cell.

    `cells` runs north-east from the head to the tail; the number of cells
    equals the hook length of the anchor. Identity is determined by the
    anchor (the cell set is derived from shape and anchor).
    """

    shape: Partition
    anchor: Cell
    cells: tuple[Cell, ...]

    @property
    def head(self) -> Cell:
        return self.cells[0]

    @property
    def tail(self) -> Cell:
        return self.cells[-1]

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, u: Cell) -> bool:
        return u in self.cells

    def __str__(self) -> str:
        return f"rim-hook {format_cell(self.anchor)} of {self.shape}"


def rim_hook_key(h: RimHook):
    """Sort key for the total order on rim-hooks of one shape."""
    return revlex_key(h.anchor)


def rim_hook_compare(f: RimHook, h: RimHook) -> int:
    """Three-way comparison of rim-hooks of the same shape (-1 if f comes first)."""
    if f.shape != h.shape:
        raise ValueError(f"cannot compare rim-hooks of different shapes {f.shape} and {h.shape}")
    return _cmp(rim_hook_key(f), rim_hook_key(h))
