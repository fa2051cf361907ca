"""Corner peeling: the min-max corner toggle and the recursive peeling map.

Peeling removes one outer corner at a time. Each step records how far the
corner entry exceeds its north/west neighbours and toggles the remaining
entries of the corner's diagonal by a min-max reflection. The resulting
tableau coincides with the one produced by the lexicographic factorization;
the two code paths are kept fully independent so the equivalence is a genuine
differential test.
"""

from __future__ import annotations

import math
from typing import Callable

from .geometry import Cell, Partition, content, east, format_cell, north, revlex_key, south, west
from .insertion import Tableau
from .rpp import Rpp

CornerChooser = Callable[[Partition], Cell]


def _min_outer_corner(shape: Partition) -> Cell:
    _, outer = shape.corners()
    return min(outer, key=revlex_key)


def corner_toggle(pi: Rpp, x: Cell) -> Rpp:
    """Remove the outer corner x and toggle the rest of its diagonal.

    Entries off the diagonal of x are copied unchanged. An entry u on that
    diagonal becomes max(north, west) + min(east, south) - value(u), with
    neighbours read through the extended lookup of the original filling. The
    min is always finite: u has a diagonal successor inside the original
    shape, so at least one of east/south exists.
    """
    shape = pi.shape
    reduced = shape.remove_corner(x)
    diag = content(x)
    grid = []
    for i, p in enumerate(reduced.parts, start=1):
        row = []
        for j in range(1, p + 1):
            u = (i, j)
            if content(u) == diag:
                lo = min(pi.value_ext(*east(u)), pi.value_ext(*south(u)))
                if lo == math.inf:
                    raise RuntimeError(
                        f"both east and south of {format_cell(u)} fall outside "
                        f"{shape}; cannot toggle"
                    )
                hi = max(pi.value_ext(*north(u)), pi.value_ext(*west(u)))
                row.append(hi + lo - pi.value(u))
            else:
                row.append(pi.value(u))
        grid.append(row)
    return Rpp(reduced, grid)


def corner_is_tight(pi: Rpp, x: Cell) -> bool:
    """Whether the entry at the outer corner x equals max(north, west).

    Equivalently, whether the peeling map records a zero count at x.
    """
    _, outer = pi.shape.corners()
    if x not in outer:
        raise ValueError(f"{format_cell(x)} is not an outer corner of {pi.shape}")
    return pi.value(x) == max(pi.value_ext(*north(x)), pi.value_ext(*west(x)))


def peel_tableau(pi: Rpp, choose_corner: CornerChooser | None = None) -> Tableau:
    """Peel outer corners recursively, recording one count per cell.

    The count at a corner x is value(x) - max(north, west); the remaining
    counts come from peeling the toggled filling of the reduced shape. The
    result does not depend on the corner choices; the default chooser picks
    the revlex-minimal outer corner so runs are deterministic, and corner
    independence is enforced by tests rather than by construction.
    """
    choose = choose_corner or _min_outer_corner
    shape = pi.shape
    if not shape:
        return Tableau.zero(shape)
    x = choose(shape)
    _, outer = shape.corners()
    if x not in outer:
        raise ValueError(f"chooser returned {format_cell(x)}, not an outer corner of {shape}")
    count = pi.value(x) - max(pi.value_ext(*north(x)), pi.value_ext(*west(x)))
    rest = peel_tableau(corner_toggle(pi, x), choose_corner)
    grid = [[0] * p for p in shape.parts]
    grid[x[0] - 1][x[1] - 1] = count
    for u, v in rest.entries():
        grid[u[0] - 1][u[1] - 1] = v
    return Tableau(shape, grid)
