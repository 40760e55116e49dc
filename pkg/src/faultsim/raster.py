"""Integer rasterization of fault geometry onto a FaultMap.

Lines and segments use Bresenham-style error accumulation; circles use the
midpoint circle algorithm with 8-octant mirroring. All coordinate math is
exact integer arithmetic, so the drawn cell sets are reproducible anywhere.

Anchor validation mirrors what each shape checks: vertical/horizontal lines
and segment endpoints must lie on the grid, circle centers must lie on the
grid but the circle itself may crop at the edges (discarded, never wrapped).
"""

from __future__ import annotations

from .grid import Cell, FaultMap


class OutOfRangeError(ValueError):
    """A user-supplied anchor coordinate lies outside the grid."""


def segment_cells(x0: int, y0: int, x1: int, y1: int) -> list[Cell]:
    """Bresenham rasterization of the segment (x0, y0)-(x1, y1).

    Endpoints are reordered so the lexicographically smaller (x, then y)
    comes first, making the result a function of the unordered pair. Where
    the true line crosses exactly halfway between two cells, the cell with
    the lower minor-axis coordinate wins (lower y for shallow lines, lower
    x for steep ones). Endpoints are always included and the chain is
    8-connected.
    """
    if (x1, y1) < (x0, y0):
        x0, y0, x1, y1 = x1, y1, x0, y0
    dx = x1 - x0  # >= 0 after reordering
    dy = y1 - y0
    cells = [(x0, y0)]
    if dx >= abs(dy):
        if dx == 0:
            return cells
        n = abs(dy)
        sy = 1 if dy > 0 else -1
        # acc tracks 2*(k*n - r*dx): twice the signed distance numerator
        # between the ideal minor offset and the chosen one.
        acc = 0
        y = y0
        for x in range(x0 + 1, x1 + 1):
            acc += 2 * n
            # ties (acc == dx) must keep the lower y: strict when stepping
            # down the page, inclusive when stepping up.
            if (acc > dx) if sy > 0 else (acc >= dx):
                y += sy
                acc -= 2 * dx
            cells.append((x, y))
    else:
        d = abs(dy)
        sy = 1 if dy > 0 else -1
        acc = 0
        x = x0
        y = y0
        for _ in range(d):
            y += sy
            acc += 2 * dx
            if acc > d:  # ties keep the lower x (dx >= 0 here)
                x += 1
                acc -= 2 * d
            cells.append((x, y))
    return cells


def circle_cells(cx: int, cy: int, r: int) -> set[Cell]:
    """Midpoint circle of radius r centered at (cx, cy), unclipped.

    Walks the second octant with the classic integer decision variable and
    mirrors each point across all eight octants; duplicates on the axes and
    diagonals collapse in the returned set. r = 0 degenerates to the center
    cell alone.
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    cells: set[Cell] = set()

    def plot(px: int, py: int) -> None:
        for ox, oy in ((px, py), (py, px)):
            cells.update(
                (
                    (cx + ox, cy + oy),
                    (cx - ox, cy + oy),
                    (cx + ox, cy - oy),
                    (cx - ox, cy - oy),
                )
            )

    x, y, d = 0, r, 1 - r
    plot(x, y)
    while y > x:
        if d < 0:
            d += 2 * x + 3
        else:
            d += 2 * (x - y) + 5
            y -= 1
        x += 1
        plot(x, y)
    return cells


def draw_vertical(fault_map: FaultMap, x: int) -> int:
    """Mark the full column at x; returns the number of newly set cells."""
    dims = fault_map.dims
    if not 0 <= x < dims.width:
        raise OutOfRangeError(f"x={x} outside [0, {dims.width})")
    return sum(fault_map.mark(x, y) for y in range(dims.height))


def draw_horizontal(fault_map: FaultMap, y: int) -> int:
    """Mark the full row at y; returns the number of newly set cells."""
    dims = fault_map.dims
    if not 0 <= y < dims.height:
        raise OutOfRangeError(f"y={y} outside [0, {dims.height})")
    return sum(fault_map.mark(x, y) for x in range(dims.width))


def draw_segment(fault_map: FaultMap, x0: int, y0: int, x1: int, y1: int) -> int:
    """Mark the Bresenham segment between two in-bounds endpoints.

    Both endpoints are validated up front, so the rasterized chain never
    leaves the grid and no clipping is needed. Returns newly set cells.
    """
    dims = fault_map.dims
    for px, py in ((x0, y0), (x1, y1)):
        if not dims.contains(px, py):
            raise OutOfRangeError(
                f"endpoint ({px}, {py}) outside {dims.width}x{dims.height} grid"
            )
    return sum(fault_map.mark(x, y) for x, y in segment_cells(x0, y0, x1, y1))


def draw_circle(fault_map: FaultMap, cx: int, cy: int, r: int) -> int:
    """Mark the midpoint circle around an in-bounds center, cropped to the grid.

    Candidate cells falling outside the grid are silently discarded; the
    circle never wraps. Returns the number of newly set cells.
    """
    dims = fault_map.dims
    if not dims.contains(cx, cy):
        raise OutOfRangeError(f"center ({cx}, {cy}) outside {dims.width}x{dims.height} grid")
    return sum(fault_map.mark(x, y) for x, y in circle_cells(cx, cy, r) if dims.contains(x, y))
