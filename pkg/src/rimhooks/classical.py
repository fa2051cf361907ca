"""Hillman-Grassl, RSK, diagonal partitions and Greene-Kleitman chain maxima.

The Hillman-Grassl convention used here: repeatedly take the leftmost column
holding a nonzero entry, walk from the bottom cell of that column north on
equality and east otherwise, decrement the walk, and record one count at
(final row, starting column). The convention is pinned by the round-trip,
trace-series and transpose-theorem tests; any convention passing all of them
is admissible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .geometry import Cell, Partition, format_cell
from .insertion import Tableau
from .rpp import Rpp

ChainKind = Literal["weak", "strict"]

#: bound on the number of memoized capacity states the chain search may visit
GK_DEFAULT_BUDGET = 5_000_000


def _hg_walk(pi: Rpp, start_col: int) -> list[Cell]:
    shape = pi.shape
    i, j = shape.col_length(start_col), start_col
    cells = [(i, j)]
    while True:
        if pi.value_ext(i - 1, j) == pi.value((i, j)):
            i -= 1
        elif (i, j + 1) in shape:
            j += 1
        else:
            break
        cells.append((i, j))
    return cells


def hg(pi: Rpp) -> Tableau:
    """The Hillman-Grassl image of a reverse plane partition."""
    shape = pi.shape
    grid = [[0] * p for p in shape.parts]
    cur = pi
    while not cur.is_zero():
        start_col = next(
            j
            for j in range(1, shape.parts[0] + 1)
            if cur.value((shape.col_length(j), j)) != 0
        )
        cells = _hg_walk(cur, start_col)
        end_row = cells[-1][0]
        grid[end_row - 1][start_col - 1] += 1
        cur = cur.with_path(cells, -1)
    return Tableau(shape, grid)


def hg_inv(tableau: Tableau) -> Rpp:
    """Invert the Hillman-Grassl map.

    Recorded hooks are processed in reverse extraction order, sorted by column
    descending then row ascending. Each is undone by walking from the end of
    the hook's row south on equality and west otherwise, down to the hook's
    column, and incrementing the walk. Comparisons read the grid before the
    increments, mirroring the forward walk.
    """
    shape = tableau.shape
    hooks: list[Cell] = []
    for u, count in tableau.entries():
        hooks.extend([u] * count)
    hooks.sort(key=lambda fs: (-fs[1], fs[0]))
    cur = Rpp.zero(shape)
    for f, s in hooks:
        i, j = f, shape.row_length(f)
        cells = [(i, j)]
        while True:
            if cur.value_ext(i + 1, j) == cur.value((i, j)):
                i += 1
            elif j > s:
                j -= 1
            else:
                break
            cells.append((i, j))
        cur = cur.with_path(cells, +1)
    return cur


def _transpose_rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if not rows:
        return ()
    out = []
    for j in range(len(rows[0])):
        out.append(tuple(row[j] for row in rows if len(row) > j))
    return tuple(out)


def _is_column_strict(grid: Rpp) -> bool:
    return all(
        v > 0 and (i == 1 or j > grid.shape.row_length(i - 1) or v > grid.value((i - 1, j)))
        for (i, j), v in grid.entries()
    )


@dataclass(frozen=True)
class SsytPair:
    """An insertion/recording pair of column-strict fillings of equal shape."""

    p: Rpp
    q: Rpp

    def __post_init__(self):
        if self.p.shape != self.q.shape:
            raise ValueError(
                f"pair shapes differ: {self.p.shape} versus {self.q.shape}"
            )
        for name, grid in (("insertion", self.p), ("recording", self.q)):
            if not _is_column_strict(grid):
                raise ValueError(f"{name} tableau is not column-strict with positive entries")

    @property
    def shape(self) -> Partition:
        return self.p.shape

    def conjugate(self) -> "SsytPair":
        return SsytPair(
            Rpp(self.p.shape.conjugate(), _transpose_rows(self.p.rows)),
            Rpp(self.q.shape.conjugate(), _transpose_rows(self.q.rows)),
        )


def biword(tableau: Tableau) -> list[tuple[int, int]]:
    """Row-major (row, column) pairs with multiplicity; lexicographically sorted."""
    pairs = []
    for (i, j), count in tableau.entries():
        pairs.extend([(i, j)] * count)
    return pairs


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    # returns the (0-indexed) position of the new box
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        for idx, val in enumerate(row):
            if val > x:
                row[idx], x = x, val
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def rsk(tableau: Tableau) -> SsytPair:
    """Row-insert the biword of a count matrix; record row indices.

    Accepts any shape; the transpose theorems restrict attention to squares.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for row_idx, col_idx in biword(tableau):
        r, c = _row_insert(p_rows, col_idx)
        if r == len(q_rows):
            q_rows.append([])
        assert c == len(q_rows[r])
        q_rows[r].append(row_idx)
    shape = Partition(len(r_) for r_ in p_rows)
    return SsytPair(Rpp(shape, p_rows), Rpp(shape, q_rows))


def rsk_inv(pair: SsytPair, shape: Partition | None = None) -> Tableau:
    """Invert row insertion back to a count matrix.

    The matrix shape is not recoverable from the pair; pass it explicitly or
    get the smallest square containing every biword letter.
    """
    p = [list(row) for row in pair.p.rows]
    q = [list(row) for row in pair.q.rows]
    positions = sorted(
        ((val, r, c) for r, row in enumerate(q) for c, val in enumerate(row)),
        key=lambda t: (-t[0], -t[2]),
    )
    pairs: list[tuple[int, int]] = []
    for val, r, c in positions:
        if c != len(p[r]) - 1:
            raise ValueError("recording tableau does not describe an insertion order")
        x = p[r].pop()
        q[r].pop()
        for upper in range(r - 1, -1, -1):
            row = p[upper]
            idx = max(k for k, entry in enumerate(row) if entry < x)
            row[idx], x = x, row[idx]
        pairs.append((val, x))
    pairs.reverse()
    if shape is None:
        n = max((max(a, b) for a, b in pairs), default=1)
        shape = Partition((n,) * n)
    grid = [[0] * p_ for p_ in shape.parts]
    for a, b in pairs:
        if (a, b) not in shape:
            raise ValueError(f"letter {format_cell((a, b))} falls outside {shape}")
        grid[a - 1][b - 1] += 1
    return Tableau(shape, grid)


def diag_partition(pi: Rpp, k: int) -> Partition:
    """The nonzero entries on diagonal k, sorted decreasingly."""
    values = []
    for i in range(1, pi.shape.length + 1):
        j = i + k
        if (i, j) in pi.shape:
            v = pi.value((i, j))
            if v:
                values.append(v)
    return Partition(sorted(values, reverse=True))


def rectangle_cells(shape: Partition, k: int) -> tuple[Cell, ...]:
    """Cells weakly north-west of the south-easternmost content-k cell."""
    best = None
    for i in range(shape.length, 0, -1):
        j = i + k
        if (i, j) in shape:
            best = (i, j)
            break
    if best is None:
        return ()
    return tuple(
        (i, j) for i in range(1, best[0] + 1) for j in range(1, best[1] + 1)
    )


@lru_cache(maxsize=None)
def _maximal_chains(cells: tuple[Cell, ...], kind: ChainKind) -> tuple[tuple[Cell, ...], ...]:
    if kind == "weak":
        def follows(u: Cell, v: Cell) -> bool:
            return v != u and v[0] >= u[0] and v[1] >= u[1]
    else:
        def follows(u: Cell, v: Cell) -> bool:
            return v[0] < u[0] and v[1] > u[1]

    starts = [u for u in cells if not any(follows(w, u) for w in cells if w != u)]
    chains: list[tuple[Cell, ...]] = []

    def grow(chain: list[Cell]) -> None:
        extensions = [v for v in cells if follows(chain[-1], v)]
        if not extensions:
            chains.append(tuple(chain))
            return
        for v in extensions:
            chain.append(v)
            grow(chain)
            chain.pop()

    for u in starts:
        grow([u])
    return tuple(chains)


@lru_cache(maxsize=None)
def _best_family(caps: tuple[tuple[Cell, int], ...], r: int, kind: ChainKind) -> int:
    if r == 0 or not caps:
        return 0
    cells = tuple(u for u, _ in caps)
    amounts = dict(caps)
    best = 0
    for chain in _maximal_chains(cells, kind):
        if kind == "weak":
            gain = sum(amounts[u] for u in chain)
            remaining = tuple(
                (u, c) for u, c in caps if u not in chain
            )
        else:
            gain = len(chain)
            remaining = tuple(
                (u, c - 1) if u in chain else (u, c) for u, c in caps
            )
            remaining = tuple((u, c) for u, c in remaining if c > 0)
        best = max(best, gain + _best_family(remaining, r - 1, kind))
    return best


def gk_chain_max(
    tableau: Tableau,
    k: int,
    r: int,
    kind: ChainKind,
    *,
    budget: int = GK_DEFAULT_BUDGET,
) -> int:
    """Largest total length of r chains in the content-k rectangle.

    Chains are weak south-east (both coordinates weakly increasing, repeats
    allowed) or strict north-east (rows strictly decreasing, columns strictly
    increasing); across the whole family each cell u is used at most t(u)
    times. Computed by exhaustive search over families whose chains take full
    remaining capacity along support-maximal chains, which loses no optimum:
    moving or adding only unused copies never lowers the total. Refuses when
    the search would exceed `budget`.
    """
    if r < 1:
        raise ValueError("the family needs at least one chain")
    if kind not in ("weak", "strict"):
        raise ValueError(f"unknown chain kind {kind!r}")
    caps = tuple(
        (u, tableau.value(u)) for u in rectangle_cells(tableau.shape, k) if tableau.value(u)
    )
    states = r
    for _, c in caps:
        states *= c + 1
        if states > budget:
            raise ValueError(
                f"chain search over {len(caps)} cells and {r} chains may visit more "
                f"than {budget} capacity states; raise `budget` to force it"
            )
    return _best_family(caps, r, kind)


def permutation_matrix(word: Sequence[int] | str) -> Tableau:
    """The square count matrix of a permutation in one-line notation.

    Accepts a sequence of values or the comma-separated text form `3,1,2`;
    the matrix has a single 1 in row i at the column the permutation sends
    i to.
    """
    if isinstance(word, str):
        word = [int(tok) for tok in word.split(",") if tok.strip()]
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"{word!r} is not a permutation of 1..{n}")
    shape = Partition((n,) * n)
    grid = [[0] * n for _ in range(n)]
    for i, w in enumerate(word, start=1):
        grid[i - 1][w - 1] = 1
    return Tableau(shape, grid)


def is_permutation_matrix(tableau: Tableau) -> bool:
    shape = tableau.shape
    n = shape.length
    if shape.parts != (n,) * n or n == 0:
        return False
    rows_ok = all(sum(row) == 1 and max(row) == 1 for row in tableau.rows)
    cols = [sum(row[j] for row in tableau.rows) for j in range(n)]
    return rows_ok and all(c == 1 for c in cols)


def check_syt_diagonals(pi: Rpp) -> bool:
    """Diagonal transpose law for staircase-traced fillings of a square.

    Requires shape (n, .., n) with trace n-k on the diagonals k and -k for
    0 <= k < n. Checks that the composite map (factorize the Hillman-Grassl
    image back into a filling) carries, on every diagonal, the conjugate of
    the original diagonal partition.
    """
    from .insertion import build

    shape = pi.shape
    n = shape.length
    if shape.parts != (n,) * n or n == 0:
        raise ValueError(f"shape {shape} is not a nonempty square")
    for k in range(n):
        if pi.trace(k) != n - k or pi.trace(-k) != n - k:
            raise ValueError(f"traces of the filling are not staircase at k={k}")
    image = build(hg(pi))
    return all(
        diag_partition(image, k) == diag_partition(pi, k).conjugate()
        for k in pi.diagonal_range()
    )


def check_rsk_transpose(sigma: Tableau) -> bool:
    """Transpose law for permutation matrices.

    Row-inserting the image of a permutation matrix under (factorize, then
    Hillman-Grassl) yields the transposes of the tableaux of the original
    matrix.
    """
    from .insertion import build

    if not is_permutation_matrix(sigma):
        raise ValueError("input is not a permutation matrix")
    pair = rsk(sigma)
    routed = rsk(hg(build(sigma)))
    return routed == pair.conjugate()
