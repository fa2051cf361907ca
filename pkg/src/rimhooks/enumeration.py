"""Exhaustive oracles: all fillings of a shape up to a size bound, all hook
tableaux up to a weighted-size bound, and all south-west paths of a given
length. Streams are duplicate-free, complete, and deterministically ordered,
so the property suites can rely on them as ground truth.
"""

from __future__ import annotations

from typing import Iterator

from .geometry import Cell, Partition, format_cell, south, west
from .insertion import LatticePath, Orientation, Tableau
from .rpp import Rpp

DEFAULT_CEILING = 10_000_000


class BudgetExceededError(RuntimeError):
    """Raised instead of silently truncating an enumeration."""

    def __init__(self, what: str, projected: int, ceiling: int):
        super().__init__(
            f"enumerating {what} would yield {projected} items, over the ceiling {ceiling}"
        )
        self.projected = projected
        self.ceiling = ceiling


def _counts_by_size(shape: Partition, bound: int) -> list[int]:
    # coefficient list of prod_u 1/(1 - q^{hook(u)}) up to q^bound; counts both
    # fillings by size and hook tableaux by weighted size
    coeffs = [1] + [0] * bound
    for u in shape.cells():
        h = shape.hook_length(u)
        for n in range(h, bound + 1):
            coeffs[n] += coeffs[n - h]
    return coeffs


def projected_rpp_count(shape: Partition, bound: int) -> int:
    return sum(_counts_by_size(shape, bound))


def enumerate_rpps(
    shape: Partition, bound: int, *, ceiling: int = DEFAULT_CEILING
) -> Iterator[Rpp]:
    """Every reverse plane partition of the shape with size at most `bound`.

    Emitted exactly once each, in row-major lexicographic order of the entry
    grids. Raises BudgetExceededError when the projected count is over the
    ceiling.
    """
    projected = projected_rpp_count(shape, bound)
    if projected > ceiling:
        raise BudgetExceededError(f"fillings of {shape}", projected, ceiling)
    cells = list(shape.cells())
    grid = [[0] * p for p in shape.parts]

    def fill_sum(idx: int, total: int) -> Iterator[Rpp]:
        if idx == len(cells):
            yield Rpp(shape, [tuple(row) for row in grid])
            return
        i, j = cells[idx]
        lo = grid[i - 1][j - 2] if j > 1 else 0
        if i > 1 and shape.parts[i - 2] >= j:
            lo = max(lo, grid[i - 2][j - 1])
        v = lo
        while total + v <= bound:
            grid[i - 1][j - 1] = v
            yield from fill_sum(idx + 1, total + v)
            v += 1
        grid[i - 1][j - 1] = 0

    yield from fill_sum(0, 0)


def enumerate_tableaux(
    shape: Partition, bound: int, *, ceiling: int = DEFAULT_CEILING
) -> Iterator[Tableau]:
    """Every hook tableau with weighted size at most `bound`, exactly once.

    Weighted size is the count at each cell times that cell's hook length.
    Same ordering and budget conventions as enumerate_rpps; the two streams
    always have equal cardinality.
    """
    projected = projected_rpp_count(shape, bound)
    if projected > ceiling:
        raise BudgetExceededError(f"hook tableaux of {shape}", projected, ceiling)
    cells = list(shape.cells())
    weights = [shape.hook_length(u) for u in cells]
    grid = [[0] * p for p in shape.parts]

    def fill(idx: int, total: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, [tuple(row) for row in grid])
            return
        i, j = cells[idx]
        v = 0
        while total + v * weights[idx] <= bound:
            grid[i - 1][j - 1] = v
            yield from fill(idx + 1, total + v * weights[idx])
            v += 1
        grid[i - 1][j - 1] = 0

    yield from fill(0, 0)


def enumerate_sw_paths(
    shape: Partition, tail: Cell, length: int, *, ceiling: int = DEFAULT_CEILING
) -> Iterator[LatticePath]:
    """All south-west paths inside the shape with the given tail and cell count.

    Deterministic order: at each step the south branch is explored before the
    west branch.
    """
    if tail not in shape:
        raise ValueError(f"tail {format_cell(tail)} lies outside {shape}")
    if length < 1:
        raise ValueError("a path needs at least one cell")
    projected = 2 ** (length - 1)
    if projected > ceiling:
        raise BudgetExceededError(f"paths of {length} cells", projected, ceiling)
    prefix = [tail]

    def extend() -> Iterator[LatticePath]:
        if len(prefix) == length:
            yield LatticePath(tuple(prefix), Orientation.SW)
            return
        for step in (south, west):
            nxt = step(prefix[-1])
            if nxt in shape:
                prefix.append(nxt)
                yield from extend()
                prefix.pop()

    yield from extend()
