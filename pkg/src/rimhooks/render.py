"""ASCII and SVG rendering of shapes, fillings and paths. Output only."""

from __future__ import annotations

from typing import Iterable

from .geometry import Cell, Partition
from .rpp import Rpp, ShapedGrid


def ascii_grid(grid: ShapedGrid, highlight: Iterable[Cell] = ()) -> str:
    """Aligned rows of entries; highlighted cells are wrapped in brackets."""
    marked = set(highlight)
    width = max((len(str(v)) for _, v in grid.entries()), default=1)
    lines = []
    for i, row in enumerate(grid.rows, start=1):
        cells = []
        for j, v in enumerate(row, start=1):
            text = str(v).rjust(width)
            cells.append(f"[{text}]" if (i, j) in marked else f" {text} ")
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


def ascii_rpp(pi: Rpp, highlight: Iterable[Cell] = ()) -> str:
    """Grid plus one annotation line per diagonal with its trace."""
    body = ascii_grid(pi, highlight)
    traces = "  ".join(f"k={k}:{pi.trace(k)}" for k in pi.diagonal_range())
    if not traces:
        return body
    return f"{body}\ndiagonal traces: {traces}"


def ascii_shape(shape: Partition, marked: Iterable[Cell] = ()) -> str:
    """The diagram with '#' on marked cells and '.' elsewhere."""
    cells = set(marked)
    lines = []
    for i, p in enumerate(shape.parts, start=1):
        lines.append(" ".join("#" if (i, j) in cells else "." for j in range(1, p + 1)))
    return "\n".join(lines)


_SVG_CELL = 36


def _svg_header(shape: Partition) -> tuple[list[str], int, int]:
    width = (shape.parts[0] if shape else 1) * _SVG_CELL + 2
    height = max(shape.length, 1) * _SVG_CELL + 2
    return (
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">'
        ],
        width,
        height,
    )


def svg_grid(grid: ShapedGrid, highlight: Iterable[Cell] = ()) -> str:
    """An SVG drawing of the grid with highlighted cells filled."""
    marked = set(highlight)
    out, _, _ = _svg_header(grid.shape)
    for (i, j), v in grid.entries():
        x, y = (j - 1) * _SVG_CELL + 1, (i - 1) * _SVG_CELL + 1
        fill = "#ffd47f" if (i, j) in marked else "white"
        out.append(
            f'<rect x="{x}" y="{y}" width="{_SVG_CELL}" height="{_SVG_CELL}" '
            f'fill="{fill}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x + _SVG_CELL / 2:.0f}" y="{y + _SVG_CELL / 2:.0f}" '
            f'text-anchor="middle" dominant-baseline="central" '
            f'font-family="monospace" font-size="14">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out)


def svg_shape(shape: Partition, marked: Iterable[Cell] = ()) -> str:
    """An SVG drawing of the bare diagram with marked cells filled."""
    cells = set(marked)
    out, _, _ = _svg_header(shape)
    for u in shape.cells():
        i, j = u
        x, y = (j - 1) * _SVG_CELL + 1, (i - 1) * _SVG_CELL + 1
        fill = "#9fc5e8" if u in cells else "white"
        out.append(
            f'<rect x="{x}" y="{y}" width="{_SVG_CELL}" height="{_SVG_CELL}" '
            f'fill="{fill}" stroke="black"/>'
        )
    out.append("</svg>")
    return "\n".join(out)
