"""Grid coordinate system and the two map types everything else operates on.

Convention used across the whole package: row-major storage, origin at the
top-left, x grows rightward (column index), y grows downward (row index).
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_DIM = 1024

Cell = tuple[int, int]  # (x, y)


@dataclass(frozen=True)
class GridDims:
    """Validated grid dimensions, 1..1024 cells per side."""

    width: int
    height: int

    def __post_init__(self) -> None:
        for name, value in (("width", self.width), ("height", self.height)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if not 1 <= value <= MAX_DIM:
                raise ValueError(f"{name} must be in [1, {MAX_DIM}], got {value}")

    def contains(self, x: int, y: int) -> bool:
        """True iff (x, y) indexes a cell of this grid. Accepts any integers."""
        return 0 <= x < self.width and 0 <= y < self.height

    @property
    def area(self) -> int:
        return self.width * self.height


@dataclass
class FaultMap:
    """Boolean occupancy grid; True marks a fault cell."""

    dims: GridDims
    cells: list[bool]

    @classmethod
    def empty(cls, dims: GridDims) -> FaultMap:
        return cls(dims, [False] * dims.area)

    def _index(self, x: int, y: int) -> int:
        if not self.dims.contains(x, y):
            raise IndexError(f"({x}, {y}) outside {self.dims.width}x{self.dims.height} grid")
        return y * self.dims.width + x

    def is_fault(self, x: int, y: int) -> bool:
        return self.cells[self._index(x, y)]

    def mark(self, x: int, y: int) -> bool:
        """Set (x, y) to fault; returns True if the cell was newly set."""
        i = self._index(x, y)
        if self.cells[i]:
            return False
        self.cells[i] = True
        return True

    def fault_cells(self) -> set[Cell]:
        w = self.dims.width
        return {(i % w, i // w) for i, v in enumerate(self.cells) if v}

    @property
    def fault_count(self) -> int:
        return sum(self.cells)

    def copy(self) -> FaultMap:
        return FaultMap(self.dims, list(self.cells))


@dataclass
class StressMap:
    """Per-cell accumulated stress; values are non-negative integers."""

    dims: GridDims
    cells: list[int]

    @classmethod
    def zeros(cls, dims: GridDims) -> StressMap:
        return cls(dims, [0] * dims.area)

    def _index(self, x: int, y: int) -> int:
        if not self.dims.contains(x, y):
            raise IndexError(f"({x}, {y}) outside {self.dims.width}x{self.dims.height} grid")
        return y * self.dims.width + x

    def get(self, x: int, y: int) -> int:
        return self.cells[self._index(x, y)]

    def put(self, x: int, y: int, value: int) -> None:
        if value < 0:
            raise ValueError(f"stress must be non-negative, got {value}")
        self.cells[self._index(x, y)] = value

    def copy(self) -> StressMap:
        return StressMap(self.dims, list(self.cells))
