"""Ground-truth tiling census by exhaustive depth-first matching search.

The search always fills the lowest uncovered triangle in cell order with
one of its at most three uncovered partners, so every tiling is produced
exactly once; centering and the two mirror symmetries are tested on each
completed tiling.  The hot loop is compiled with numba when available and
runs the identical code in pure Python otherwise.  Results are cached per
hexagon since the census is pure.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetError
from .formulas import count_T
from .region import HexRegion, Lozenge, hex_region

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            func.py_func = func
            return func

        return wrap


__all__ = [
    "DEFAULT_LIMIT",
    "TilingCensus",
    "Tiling",
    "census",
    "iter_tilings",
    "tiling_is_centered",
    "tiling_is_vertically_symmetric",
    "tiling_is_horizontally_symmetric",
    "clear_cache",
]

DEFAULT_LIMIT = 10_000_000
_SHARD_THRESHOLD = 200_000  # below this, threading overhead beats the win


@dataclass(frozen=True)
class TilingCensus:
    """Exact tiling counts of one hexagon by symmetry class.

    Mirror counts are None when the region lacks that mirror symmetry, and
    centered counts are None when no central lozenge exists.
    """

    total: int
    vsym: Optional[int]
    hsym: Optional[int]
    centered: Optional[int]
    centered_vsym: Optional[int]
    centered_hsym: Optional[int]

    def __post_init__(self):
        counts = [self.total, self.vsym, self.hsym, self.centered,
                  self.centered_vsym, self.centered_hsym]
        if any(v is not None and v < 0 for v in counts):
            raise ValueError("census counts must be nonnegative")
        if self.centered is not None and self.centered > self.total:
            raise ValueError("centered count exceeds total")
        if self.centered_vsym is not None:
            bound = min(v for v in (self.vsym, self.centered) if v is not None)
            if self.centered_vsym > bound:
                raise ValueError("centered_vsym exceeds min(vsym, centered)")


@dataclass(frozen=True)
class Tiling:
    """A complete tiling as a frozenset of lozenges."""

    lozenges: frozenset

    def covered_cells(self) -> set:
        cells: set = set()
        for loz in self.lozenges:
            cells.update(loz.cells)
        return cells


@njit(cache=True, nogil=True)
def _tally(counts, partner, vmir, hmir, has_v, has_h, cen1, cen2):
    counts[0] += 1
    centered = cen1 >= 0 and partner[cen1] == cen2
    if centered:
        counts[3] += 1
    if has_v:
        ok = True
        for t in range(partner.shape[0]):
            if partner[vmir[t]] != vmir[partner[t]]:
                ok = False
                break
        if ok:
            counts[1] += 1
            if centered:
                counts[4] += 1
    if has_h:
        ok = True
        for t in range(partner.shape[0]):
            if partner[hmir[t]] != hmir[partner[t]]:
                ok = False
                break
        if ok:
            counts[2] += 1
            if centered:
                counts[5] += 1


@njit(cache=True, nogil=True)
def _census_core(nbr, nnb, vmir, hmir, has_v, has_h, cen1, cen2, pre_cell, pre_mate):
    k = nbr.shape[0]
    partner = np.full(k, -1, np.int32)
    for t in range(pre_cell.shape[0]):
        partner[pre_cell[t]] = pre_mate[t]
        partner[pre_mate[t]] = pre_cell[t]
    counts = np.zeros(6, np.int64)
    start = 0
    while start < k and partner[start] >= 0:
        start += 1
    if start == k:
        _tally(counts, partner, vmir, hmir, has_v, has_h, cen1, cen2)
        return counts
    cap = k // 2 + 1
    st_cell = np.empty(cap, np.int32)
    st_next = np.zeros(cap, np.int32)
    st_mate = np.full(cap, -1, np.int32)
    depth = 0
    st_cell[0] = start
    while depth >= 0:
        cell = st_cell[depth]
        mate = st_mate[depth]
        if mate >= 0:
            partner[cell] = -1
            partner[mate] = -1
            st_mate[depth] = -1
        moved = False
        idx = st_next[depth]
        while idx < nnb[cell]:
            cand = nbr[cell, idx]
            idx += 1
            if partner[cand] < 0:
                partner[cell] = cand
                partner[cand] = cell
                st_next[depth] = idx
                st_mate[depth] = cand
                nxt = cell + 1
                while nxt < k and partner[nxt] >= 0:
                    nxt += 1
                if nxt == k:
                    _tally(counts, partner, vmir, hmir, has_v, has_h, cen1, cen2)
                else:
                    depth += 1
                    st_cell[depth] = nxt
                    st_next[depth] = 0
                    st_mate[depth] = -1
                moved = True
                break
        if not moved:
            depth -= 1
    return counts


def _region_arrays(region: HexRegion):
    k = region.cell_count
    nbr = np.full((k, 3), -1, np.int32)
    nnb = np.zeros(k, np.int32)
    for idx, adj in enumerate(region.neighbors):
        for other in adj:
            nbr[idx, nnb[idx]] = other
            nnb[idx] += 1
    has_v = region.vertical_mirror is not None
    has_h = region.horizontal_mirror is not None
    vmir = np.array(region.vertical_mirror if has_v else [0] * k, dtype=np.int32)
    hmir = np.array(region.horizontal_mirror if has_h else [0] * k, dtype=np.int32)
    if region.central_pair is not None:
        cen1, cen2 = region.central_pair
    else:
        cen1, cen2 = -1, -1
    return nbr, nnb, vmir, hmir, has_v, has_h, cen1, cen2


def _worker_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("HEXCENSUS_THREADS", "").strip()
    if env:
        return max(1, min(int(env), os.cpu_count() or 1))
    return 1


def _prefixes(region: HexRegion, target: int) -> list[tuple[tuple[int, int], ...]]:
    """Split the DFS into disjoint subtrees by fixing the first few pairings."""
    k = region.cell_count
    frontier: list[tuple[tuple[int, int], ...]] = [()]
    for _ in range(6):
        if len(frontier) >= target:
            break
        grown: list[tuple[tuple[int, int], ...]] = []
        expanded = False
        for prefix in frontier:
            taken = {c for pair in prefix for c in pair}
            low = 0
            while low < k and low in taken:
                low += 1
            if low == k:
                grown.append(prefix)
                continue
            children = [
                prefix + (((low, other)),)
                for other in region.neighbors[low]
                if other not in taken
            ]
            if children:
                expanded = True
                grown.extend(children)
        frontier = grown
        if not expanded:
            break
    return frontier


def _run_census(region: HexRegion, threads: Optional[int], estimate: int) -> TilingCensus:
    nbr, nnb, vmir, hmir, has_v, has_h, cen1, cen2 = _region_arrays(region)
    empty = np.empty(0, np.int32)
    workers = _worker_count(threads)
    if workers > 1 and estimate > _SHARD_THRESHOLD:
        parts = _prefixes(region, workers * 4)
        args = []
        for prefix in parts:
            cells = np.array([p[0] for p in prefix], dtype=np.int32)
            mates = np.array([p[1] for p in prefix], dtype=np.int32)
            args.append((cells, mates))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda cm: _census_core(
                        nbr, nnb, vmir, hmir, has_v, has_h, cen1, cen2, cm[0], cm[1]
                    ),
                    args,
                )
            )
        counts = np.sum(np.stack(results), axis=0) if results else np.zeros(6, np.int64)
    else:
        counts = _census_core(nbr, nnb, vmir, hmir, has_v, has_h, cen1, cen2, empty, empty)
    total, vs, hs, cen, cvs, chs = (int(v) for v in counts)
    has_center = cen1 >= 0
    return TilingCensus(
        total=total,
        vsym=vs if has_v else None,
        hsym=hs if has_h else None,
        centered=cen if has_center else None,
        centered_vsym=cvs if (has_center and has_v) else None,
        centered_hsym=chs if (has_center and has_h) else None,
    )


_CACHE: dict[tuple[int, int, int], TilingCensus] = {}


def clear_cache() -> None:
    _CACHE.clear()


def census(
    a: int,
    b: int,
    c: int,
    limit: Optional[int] = DEFAULT_LIMIT,
    force: bool = False,
    threads: Optional[int] = None,
) -> TilingCensus:
    """Exact tiling counts by symmetry class for an (a,b,c) hexagon.

    Refuses regions whose closed-form total exceeds ``limit`` unless
    ``force`` is set; the estimate is only a guard, the census itself never
    consults the product formulas.
    """
    region = hex_region(a, b, c)
    estimate = count_T(a, b, c)
    if not force and limit is not None and estimate > limit:
        raise BudgetError(
            f"hexagon ({a},{b},{c}) has {estimate} tilings, over the budget "
            f"of {limit}; use force to enumerate anyway"
        )
    key = (a, b, c)
    found = _CACHE.get(key)
    if found is None:
        found = _run_census(region, threads, estimate)
        _CACHE[key] = found
    return found


def iter_tilings(region: HexRegion) -> Iterator[Tiling]:
    """Yield every tiling of a small region (pure Python reference path)."""
    k = region.cell_count
    partner = [-1] * k

    def walk(low: int) -> Iterator[Tiling]:
        while low < k and partner[low] >= 0:
            low += 1
        if low == k:
            pairs = frozenset(
                Lozenge.of(region.cells[i], region.cells[partner[i]])
                for i in range(k)
                if i < partner[i]
            )
            yield Tiling(pairs)
            return
        for other in region.neighbors[low]:
            if partner[other] < 0:
                partner[low] = other
                partner[other] = low
                yield from walk(low + 1)
                partner[low] = -1
                partner[other] = -1

    yield from walk(0)


def _mirrored(region: HexRegion, mirror: tuple[int, ...], tiling: Tiling) -> Tiling:
    cells = region.cells
    index = region.index
    return Tiling(
        frozenset(
            Lozenge.of(cells[mirror[index[loz.cells[0]]]], cells[mirror[index[loz.cells[1]]]])
            for loz in tiling.lozenges
        )
    )


def tiling_is_centered(region: HexRegion, tiling: Tiling) -> bool:
    loz = region.central_lozenge()
    return loz is not None and loz in tiling.lozenges


def tiling_is_vertically_symmetric(region: HexRegion, tiling: Tiling) -> bool:
    if region.vertical_mirror is None:
        return False
    return _mirrored(region, region.vertical_mirror, tiling) == tiling


def tiling_is_horizontally_symmetric(region: HexRegion, tiling: Tiling) -> bool:
    if region.horizontal_mirror is None:
        return False
    return _mirrored(region, region.horizontal_mirror, tiling) == tiling
