"""Rim-hook insertion and extraction, and the factorization bijection.

Inserting a rim-hook adds 1 along a greedy south-west path ending at the
hook's tail; extraction subtracts 1 along a greedy north-east path starting
at a candidate cell. Repeatedly extracting at the content-minimal candidate
factors every reverse plane partition into a weakly increasing sequence of
rim-hooks, and re-inserting a multiset of rim-hooks largest-first always
succeeds and inverts the factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import (
    Cell,
    Partition,
    Region,
    RimHook,
    content_key,
    east,
    format_cell,
    north,
    parse_cell,
    revlex_key,
    south,
    west,
)
from .rpp import Rpp, ShapedGrid


class Orientation(Enum):
    NE = "NE"
    SW = "SW"


_STEPS = {
    Orientation.NE: ((-1, 0), (0, 1)),
    Orientation.SW: ((1, 0), (0, -1)),
}


@dataclass(frozen=True)
class LatticePath:
    """An ordered cell sequence whose steps are all north/east or all south/west.

    Head and tail do not depend on the orientation: reversing a path swaps the
    cell order and the orientation but keeps head and tail. Cells are not
    required to lie inside any particular shape.
    """

    cells: tuple[Cell, ...]
    orientation: Orientation

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a path must contain at least one cell")
        allowed = _STEPS[self.orientation]
        for a, b in zip(self.cells, self.cells[1:]):
            if (b[0] - a[0], b[1] - a[1]) not in allowed:
                raise ValueError(
                    f"illegal {self.orientation.value} step "
                    f"{format_cell(a)} -> {format_cell(b)}"
                )

    @property
    def head(self) -> Cell:
        """The south-west end of the path."""
        return self.cells[-1] if self.orientation is Orientation.SW else self.cells[0]

    @property
    def tail(self) -> Cell:
        """The north-east end of the path."""
        return self.cells[0] if self.orientation is Orientation.SW else self.cells[-1]

    def reverse(self) -> "LatticePath":
        other = Orientation.NE if self.orientation is Orientation.SW else Orientation.SW
        return LatticePath(tuple(reversed(self.cells)), other)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, u: Cell) -> bool:
        return u in self.cells

    def __str__(self) -> str:
        return " ".join(format_cell(u) for u in self.cells)


class Tableau(ShapedGrid):
    """An unconstrained grid of counts, encoding a multiset of rim-hooks.

    Entry t(u) is the multiplicity of the rim-hook anchored at u.
    """

    @property
    def weighted_size(self) -> int:
        """Total number of diagram cells covered by the encoded multiset."""
        return sum(v * self.shape.hook_length(u) for u, v in self.entries() if v)

    @property
    def total(self) -> int:
        return self.size

    def anchors(self) -> list[Cell]:
        """The multiset of anchors, weakly increasing in the rim-hook order."""
        out = []
        for u in sorted(self.shape.cells(), key=revlex_key):
            out.extend([u] * self.value(u))
        return out


@dataclass(frozen=True)
class Factorization:
    """A weakly increasing sequence of rim-hook anchors of one shape."""

    shape: Partition
    anchors: tuple[Cell, ...]

    def __post_init__(self):
        keys = [revlex_key(u) for u in self.anchors]
        if keys != sorted(keys):
            raise ValueError("anchors must be weakly increasing in rim-hook order")

    def hooks(self) -> list[RimHook]:
        return [self.shape.rim_hook(u) for u in self.anchors]

    @property
    def size(self) -> int:
        return sum(self.shape.hook_length(u) for u in self.anchors)

    def to_tableau(self) -> Tableau:
        grid = [[0] * p for p in self.shape.parts]
        for i, j in self.anchors:
            grid[i - 1][j - 1] += 1
        return Tableau(self.shape, grid)

    def to_text(self) -> str:
        return "\n".join(format_cell(u) for u in self.anchors)

    __str__ = to_text

    @classmethod
    def from_text(cls, text: str, shape: Partition) -> "Factorization":
        anchors = tuple(parse_cell(line) for line in text.splitlines() if line.strip())
        return cls(shape, anchors)


@dataclass(frozen=True)
class InsertionFailure:
    """Report returned when a rim-hook does not insert.

    `witness` is a candidate cell strictly before the head of the attempted
    path in content order; its existence is what certifies the failure.
    """

    hook: RimHook
    path: LatticePath
    witness: Cell

    def __str__(self) -> str:
        return (
            f"{self.hook} does not insert; "
            f"candidate {format_cell(self.witness)} precedes the path head "
            f"{format_cell(self.path.head)}"
        )


def is_compatible(path: LatticePath, pi: Rpp) -> bool:
    """Whether adding or subtracting 1 along the path respects the path rules.

    Two conditions: every path cell on an inner diagonal or in band A must be
    followed east by a path cell of equal value, and vertically adjacent path
    cells must hold equal values.
    """
    shape = pi.shape
    for u in path:
        if u not in shape:
            raise ValueError(f"path leaves the shape at {format_cell(u)}")
    cells = set(path.cells)
    for u in path:
        if shape.region(u) in (Region.INNER_DIAG, Region.BAND_A):
            if east(u) not in cells or pi.value(u) != pi.value(east(u)):
                return False
        if south(u) in cells and pi.value(u) != pi.value(south(u)):
            return False
    return True


def insertion_path(hook: RimHook, pi: Rpp) -> LatticePath:
    """The greedy south-west walk attempted when inserting `hook` into `pi`.

    Starts at the hook's tail and takes as many cells as the hook has: step
    south when the current cell sits on an inner diagonal or in band B and the
    value below equals the current one, otherwise step west. The walk is total;
    it never consults whether the insertion will succeed. On a failing
    insertion it may leave the diagram through the west edge (off-shape cells
    belong to no region, so the west branch applies there).
    """
    if hook.shape != pi.shape:
        raise ValueError(f"hook shape {hook.shape} does not match {pi.shape}")
    shape = pi.shape
    cur = hook.tail
    cells = [cur]
    for _ in range(len(hook) - 1):
        reg = shape.region_or_none(cur)
        if reg in (Region.BAND_B, Region.INNER_DIAG) and pi.value(cur) == pi.value_ext(
            *south(cur)
        ):
            cur = south(cur)
        else:
            cur = west(cur)
        cells.append(cur)
    return LatticePath(tuple(cells), Orientation.SW)


def try_insert(hook: RimHook, pi: Rpp) -> Rpp | InsertionFailure:
    """Insert a rim-hook, or report why it does not insert.

    On success the result is `pi` with 1 added along the insertion path. On
    failure an InsertionFailure value is returned (failure is an expected
    outcome, not a fault); a shape mismatch is a fault.
    """
    path = insertion_path(hook, pi)
    ok = all(u in pi.shape for u in path) and is_compatible(path, pi)
    if ok:
        try:
            return pi.with_path(path, +1)
        except ValueError:
            ok = False
    head = path.head
    head_key = content_key(head)
    witnesses = [u for u in pi.candidates() if content_key(u) < head_key]
    if not witnesses:
        raise RuntimeError(
            "insertion failed without a preceding candidate; this contradicts "
            f"the failure-witness theorem (shape {pi.shape}, {hook}, "
            f"path {path}, filling {pi.rows!r})"
        )
    return InsertionFailure(hook, path, min(witnesses, key=content_key))


def extraction_path(v: Cell, pi: Rpp) -> LatticePath:
    """The greedy north-east walk used to extract a rim-hook starting at `v`.

    `v` must be a candidate of `pi`. Step north from outer-diagonal or band-B
    cells whose value equals the one above; step east from inner-diagonal or
    band-A cells, and from the others while the row continues; stop at the end
    of a row when the value above is strictly smaller. Both greedy rules are
    deterministic, so no tie-breaking is ever needed.
    """
    if v not in pi.candidates():
        raise ValueError(f"{format_cell(v)} is not a candidate of the filling")
    shape = pi.shape
    cur = v
    cells = [cur]
    while True:
        reg = shape.region(cur)
        if reg in (Region.OUTER_DIAG, Region.BAND_B) and pi.value(cur) == pi.value_ext(
            *north(cur)
        ):
            cur = north(cur)
        elif reg in (Region.INNER_DIAG, Region.BAND_A) or east(cur) in shape:
            cur = east(cur)
        else:
            break
        cells.append(cur)
    return LatticePath(tuple(cells), Orientation.NE)


def rim_hook_of_path(path: LatticePath, shape: Partition) -> RimHook:
    """The unique rim-hook with the same tail and the same number of cells."""
    i, j = path.tail
    if shape.row_length(i) != j:
        raise RuntimeError(
            f"path tail {format_cell((i, j))} is not at the end of row {i} of {shape}"
        )
    for col in range(1, j + 1):
        if shape.hook_length((i, col)) == len(path):
            return shape.rim_hook((i, col))
    raise RuntimeError(
        f"no rim-hook of {shape} has tail {format_cell((i, j))} and {len(path)} cells"
    )


def is_factor(hook: RimHook, pi: Rpp) -> bool:
    """Whether some reverse plane partition maps to `pi` under inserting `hook`."""
    if hook.shape != pi.shape:
        raise ValueError(f"hook shape {hook.shape} does not match {pi.shape}")
    for v in pi.candidates():
        path = extraction_path(v, pi)
        if rim_hook_of_path(path, pi.shape).anchor != hook.anchor:
            continue
        if not is_compatible(path, pi):
            continue
        try:
            pi.with_path(path, -1)
        except ValueError:
            continue
        return True
    return False


def extract_min(pi: Rpp) -> tuple[RimHook, Rpp] | None:
    """Extract the rim-hook at the content-minimal candidate, or None at zero."""
    v = pi.min_candidate()
    if v is None:
        return None
    path = extraction_path(v, pi)
    hook = rim_hook_of_path(path, pi.shape)
    return hook, pi.with_path(path, -1)


def factorize(pi: Rpp) -> Factorization:
    """The lexicographic factorization of a reverse plane partition.

    Repeatedly extracts at the content-minimal candidate until the zero
    filling remains. The resulting anchor sequence is weakly increasing in
    the rim-hook order.
    """
    anchors: list[Cell] = []
    cur = pi
    while (step := extract_min(cur)) is not None:
        hook, cur = step
        if anchors and revlex_key(hook.anchor) < revlex_key(anchors[-1]):
            raise RuntimeError(
                "extraction produced a decreasing hook sequence "
                f"(shape {pi.shape}, filling {pi.rows!r}, anchors {anchors + [hook.anchor]})"
            )
        anchors.append(hook.anchor)
    return Factorization(pi.shape, tuple(anchors))


def build(tableau: Tableau) -> Rpp:
    """Insert the encoded multiset of rim-hooks into the zero filling.

    The multiset is sorted weakly increasing in the rim-hook order and
    inserted right to left (largest hook first). Every insertion succeeds;
    a failure would contradict the well-definedness theorem and aborts with
    a diagnostic dump.
    """
    anchors = tableau.anchors()
    cur = Rpp.zero(tableau.shape)
    for step, anchor in enumerate(reversed(anchors), start=1):
        result = try_insert(tableau.shape.rim_hook(anchor), cur)
        if isinstance(result, InsertionFailure):
            raise RuntimeError(
                "lexicographic insertion failed, which contradicts the "
                f"well-definedness theorem: shape {tableau.shape}, multiset "
                f"{anchors}, step {step} at anchor {format_cell(anchor)}: {result}"
            )
        cur = result
    return cur
