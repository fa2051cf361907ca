"""Reverse plane partitions: extended-value lookup, sizes, traces, candidates."""

from __future__ import annotations

import json
import math
from typing import Iterable, Iterator

from .geometry import (
    Cell,
    Partition,
    Region,
    content_key,
    format_cell,
    north,
    west,
)

#: Extended values are plain ints inside the diagram, 0 north/west of it and
#: math.inf east/south of it. They are only ever compared, never added.
ExtendedValue = int | float


class ShapedGrid:
    """A grid of non-negative integers filling the cells of a partition.

    Shared base for reverse plane partitions and for hook-count tableaux;
    handles storage, equality, extended lookups and the text/JSON forms.
    """

    def __init__(self, shape: Partition, rows: Iterable[Iterable[int]] = ()):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if len(rows) != shape.length:
            raise ValueError(
                f"expected {shape.length} rows for shape {shape}, got {len(rows)}"
            )
        for i, (row, part) in enumerate(zip(rows, shape.parts), start=1):
            if len(row) != part:
                raise ValueError(f"row {i} has {len(row)} entries, expected {part}")
            for j, v in enumerate(row, start=1):
                if v < 0:
                    raise ValueError(f"negative entry {v} at {format_cell((i, j))}")
        self.shape = shape
        self.rows = rows

    @classmethod
    def zero(cls, shape: Partition):
        return cls(shape, tuple((0,) * p for p in shape.parts))

    def value(self, u: Cell) -> int:
        if u not in self.shape:
            raise ValueError(f"cell {format_cell(u)} lies outside the shape {self.shape}")
        return self.rows[u[0] - 1][u[1] - 1]

    def value_ext(self, i: int, j: int) -> ExtendedValue:
        """Entry at (i, j) with the boundary conventions.

        0 when i <= 0 or j <= 0; infinite when (i, j) is east or south of the
        diagram; the stored entry otherwise.
        """
        if i <= 0 or j <= 0:
            return 0
        if (i, j) not in self.shape:
            return math.inf
        return self.rows[i - 1][j - 1]

    @property
    def size(self) -> int:
        return sum(sum(row) for row in self.rows)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def entries(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                yield (i, j), v

    def with_path(self, cells: Iterable[Cell], delta: int):
        """A copy with `delta` added at every cell of `cells` (validated)."""
        grid = [list(row) for row in self.rows]
        for i, j in cells:
            if (i, j) not in self.shape:
                raise ValueError(
                    f"cell {format_cell((i, j))} lies outside the shape {self.shape}"
                )
            grid[i - 1][j - 1] += delta
        return type(self)(self.shape, grid)

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.shape.parts, self.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.shape.parts!r}, {self.rows!r})"

    # text form: one line per row, space-separated, left-justified to the shape
    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)

    __str__ = to_text

    @classmethod
    def from_text(cls, text: str, shape: Partition | None = None):
        lines = [line for line in text.splitlines() if line.strip()]
        rows = [tuple(int(tok) for tok in line.split()) for line in lines]
        inferred = Partition(len(row) for row in rows)
        if shape is not None and shape != inferred:
            raise ValueError(f"grid has shape {inferred}, expected {shape}")
        return cls(inferred, rows)

    def to_json_obj(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict):
        return cls(Partition(obj["shape"]), obj["rows"])

    @classmethod
    def from_json(cls, text: str):
        return cls.from_json_obj(json.loads(text))


class Rpp(ShapedGrid):
    """A filling of a partition that weakly increases along rows and columns."""

    def __init__(self, shape: Partition, rows: Iterable[Iterable[int]] = ()):
        super().__init__(shape, rows)
        for (i, j), v in self.entries():
            if j > 1 and v < self.rows[i - 1][j - 2]:
                raise ValueError(
                    f"row not weakly increasing at {format_cell((i, j))}"
                )
            if i > 1 and j <= shape.parts[i - 2] and v < self.rows[i - 2][j - 1]:
                raise ValueError(
                    f"column not weakly increasing at {format_cell((i, j))}"
                )

    def trace(self, k: int) -> int:
        """Sum of the entries on diagonal k (0 when the diagonal is empty)."""
        total = 0
        for i, row in enumerate(self.rows, start=1):
            j = i + k
            if 1 <= j <= len(row):
                total += row[j - 1]
        return total

    def diagonal_range(self) -> range:
        """All k for which the shape has a cell of content k."""
        if not self.shape:
            return range(0)
        return range(1 - self.shape.length, self.shape.parts[0])

    def candidates(self) -> frozenset[Cell]:
        """Cells where an extraction path may start.

        An outer-diagonal cell qualifies when it exceeds its west neighbour;
        a band-A cell when it exceeds both its west and north neighbours
        (extended values, so first-column and first-row neighbours count as 0).
        """
        found = set()
        for u, v in self.entries():
            reg = self.shape.region(u)
            if reg is Region.OUTER_DIAG:
                if v > self.value_ext(*west(u)):
                    found.add(u)
            elif reg is Region.BAND_A:
                if v > self.value_ext(*west(u)) and v > self.value_ext(*north(u)):
                    found.add(u)
        return frozenset(found)

    def min_candidate(self) -> Cell | None:
        """The content-order minimum of the candidates, None for the zero filling."""
        cand = self.candidates()
        if not cand:
            return None
        return min(cand, key=content_key)


def validate(shape: Partition, rows: Iterable[Iterable[int]]) -> Rpp:
    """Check a grid against a shape and wrap it as a reverse plane partition.

    Rejects ragged grids, negative entries, and monotonicity violations,
    reporting the first offending cell.
    """
    return Rpp(shape, rows)
