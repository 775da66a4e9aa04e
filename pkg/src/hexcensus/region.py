"""Triangular-lattice geometry of an (a,b,c) hexagon.

The sides run a, b, c, a, b, c clockwise from the southwestern edge with
the b sides vertical, so the lattice here has vertical unit edges: vertex
(i, j) sits at true coordinates (j*sqrt(3)/2, i + j/2).  Cells are keyed
(j, i, side) where side RIGHT is the triangle with vertical edge on column
j and vertices {(i,j), (i+1,j), (i,j+1)}, and side LEFT has its vertical
edge on column j+1 and vertices {(i+1,j), (i,j+1), (i+1,j+1)}.  Centroids
are stored scaled by 3, which keeps every symmetry and centering test in
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = ["RIGHT", "LEFT", "Cell", "Lozenge", "HexRegion", "hex_region", "central_lozenge"]

RIGHT = 0
LEFT = 1

Cell = tuple  # (j, i, side)


@dataclass(frozen=True)
class Lozenge:
    """Unordered pair of edge-adjacent unit triangles."""

    cells: tuple[Cell, Cell]

    @classmethod
    def of(cls, first: Cell, second: Cell) -> "Lozenge":
        return cls(tuple(sorted((first, second))))

    @property
    def axis(self) -> int:
        """Shared-edge direction: 0 vertical, 1 rising (NE), 2 falling (SE)."""
        (j1, i1, s1), (j2, i2, s2) = self.cells
        if {s1, s2} != {RIGHT, LEFT}:
            raise ValueError(f"not an adjacent pair: {self.cells}")
        right = (j1, i1) if s1 == RIGHT else (j2, i2)
        left = (j2, i2) if s1 == RIGHT else (j1, i1)
        if left == (right[0] - 1, right[1]):
            return 0
        if left == (right[0], right[1] - 1):
            return 1
        if left == right:
            return 2
        raise ValueError(f"not an adjacent pair: {self.cells}")


def _centroid3(cell: Cell) -> tuple[int, int]:
    j, i, side = cell
    if side == RIGHT:
        return (3 * j + 1, 6 * i + 3 * j + 3)
    return (3 * j + 2, 6 * i + 3 * j + 6)


class HexRegion:
    """All unit triangles of an (a,b,c) hexagon plus derived symmetry maps."""

    def __init__(self, a: int, b: int, c: int):
        for name, side in (("a", a), ("b", b), ("c", c)):
            if not isinstance(side, int) or isinstance(side, bool) or side < 0:
                raise ValueError(f"side {name} must be a nonnegative integer, got {side!r}")
        if a == 0 and b == 0 and c == 0:
            raise ValueError("hexagon sides must not all be zero")
        self.a, self.b, self.c = a, b, c

        def vertex_ok(i: int, j: int) -> bool:
            return 0 <= j <= a + c and i >= -j and i >= -a and i <= b and i <= b + c - j

        cells = []
        for j in range(a + c):
            for i in range(-a - 1, b + 1):
                if vertex_ok(i, j) and vertex_ok(i + 1, j) and vertex_ok(i, j + 1):
                    cells.append((j, i, RIGHT))
                if vertex_ok(i + 1, j) and vertex_ok(i, j + 1) and vertex_ok(i + 1, j + 1):
                    cells.append((j, i, LEFT))
        cells.sort()
        self.cells: tuple[Cell, ...] = tuple(cells)
        expected = 2 * (a * b + b * c + c * a)
        if len(self.cells) != expected:
            raise RuntimeError(
                f"({a},{b},{c}) region built {len(self.cells)} cells, expected {expected}"
            )
        self.index = {cell: k for k, cell in enumerate(self.cells)}
        self.centroids = tuple(_centroid3(cell) for cell in self.cells)
        self._by_centroid = {cen: k for k, cen in enumerate(self.centroids)}

        self.neighbors: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                self.index[other]
                for other in _adjacent_cells(cell)
                if other in self.index
            )
            for cell in self.cells
        )

        center2 = (a + c, 2 * b + c - a)  # hexagon center, doubled coordinates
        self.vertical_mirror = self._mirror(lambda cx, cy: (3 * center2[0] - cx, cy))
        self.horizontal_mirror = self._mirror(lambda cx, cy: (cx, 3 * center2[1] - cy))
        self.central_pair = self._find_central_pair((3 * center2[0], 3 * center2[1]))

    def _mirror(self, reflect) -> Optional[tuple[int, ...]]:
        mapped = []
        for cx, cy in self.centroids:
            target = self._by_centroid.get(reflect(cx, cy))
            if target is None:
                return None
            mapped.append(target)
        return tuple(mapped)

    def _find_central_pair(self, target: tuple[int, int]) -> Optional[tuple[int, int]]:
        for k, (cx, cy) in enumerate(self.centroids):
            for other in self.neighbors[k]:
                if other < k:
                    continue
                ox, oy = self.centroids[other]
                if (cx + ox, cy + oy) == target:
                    return (k, other)
        return None

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def central_lozenge(self) -> Optional[Lozenge]:
        if self.central_pair is None:
            return None
        k, other = self.central_pair
        return Lozenge.of(self.cells[k], self.cells[other])

    def __repr__(self) -> str:
        return f"HexRegion({self.a},{self.b},{self.c})"


def _adjacent_cells(cell: Cell) -> tuple[Cell, Cell, Cell]:
    j, i, side = cell
    if side == RIGHT:
        return ((j, i, LEFT), (j - 1, i, LEFT), (j, i - 1, LEFT))
    return ((j, i, RIGHT), (j + 1, i, RIGHT), (j, i + 1, RIGHT))


def hex_region(a: int, b: int, c: int) -> HexRegion:
    """Region of all unit triangles of the (a,b,c) hexagon."""
    return HexRegion(a, b, c)


def central_lozenge(a: int, b: int, c: int) -> Optional[Lozenge]:
    """The unique lozenge centered on the hexagon centroid, if one exists."""
    return hex_region(a, b, c).central_lozenge()
