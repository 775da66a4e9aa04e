"""Nonintersecting lattice-path counting.

Paths take unit steps up or right on Z^2.  Families with fixed starts,
some forced endpoints and an ordered pool of free endpoints are counted
two independent ways: ``stembridge_pf`` assembles the skew pairing matrix
and takes its Pfaffian, while ``signed_enumeration`` walks every family
by brute force.  ``sym_path_census`` enumerates the specific families
that biject with centered vertically symmetric hexagon tilings, and
``m_path_config`` / ``n_path_config`` build the weighted configurations
whose Pfaffians reproduce the counting matrices of ``hexmatrices``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .errors import BudgetError
from .exact import Rational, binomial
from .pfaffian import SkewMatrix, pf

__all__ = [
    "Point",
    "PathConfig",
    "h_count",
    "h_weighted",
    "stembridge_pf",
    "signed_enumeration",
    "sym_path_census",
    "m_path_config",
    "n_path_config",
]

Point = tuple  # (x, y)
Edge = tuple  # (from_point, to_point), a single unit step

_MAX_STARTS = 7
_MAX_PATH_CELLS = 30_000


@dataclass(frozen=True)
class PathConfig:
    """Starts, forced endpoints, ordered free endpoints, and edge weights.

    Missing edges weigh 1; the number of starts plus forced endpoints must
    be even before the Pfaffian applies (add a phantom vertex otherwise).
    """

    starts: tuple
    forced: tuple
    free: tuple
    weights: Optional[Mapping] = field(default=None)


def h_count(a: Point, b: Point) -> int:
    """Number of monotone lattice paths from a to b (0 when unreachable)."""
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    value = binomial(dx + dy, dy)
    return value.numerator


def _edge_weight(weights: Optional[Mapping], tail: Point, head: Point) -> Fraction:
    if weights is None:
        return Fraction(1)
    return Fraction(weights.get((tail, head), 1))


def h_weighted(a: Point, b: Point, weights: Optional[Mapping] = None) -> Fraction:
    """Weighted count of monotone paths a -> b under multiplicative edge weights."""
    if weights is None:
        return Fraction(h_count(a, b))
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if dx < 0 or dy < 0:
        return Fraction(0)
    if (dx + 1) * (dy + 1) > _MAX_PATH_CELLS:
        raise BudgetError(f"path grid {dx+1} x {dy+1} is too large")
    grid = [[Fraction(0)] * (dy + 1) for _ in range(dx + 1)]
    grid[0][0] = Fraction(1)
    for ix in range(dx + 1):
        for iy in range(dy + 1):
            if ix == 0 and iy == 0:
                continue
            here = (a[0] + ix, a[1] + iy)
            value = Fraction(0)
            if ix > 0:
                prev = (here[0] - 1, here[1])
                value += grid[ix - 1][iy] * _edge_weight(weights, prev, here)
            if iy > 0:
                prev = (here[0], here[1] - 1)
                value += grid[ix][iy - 1] * _edge_weight(weights, prev, here)
            grid[ix][iy] = value
    return grid[dx][dy]


def stembridge_pf(config: PathConfig) -> Fraction:
    """Signed nonintersecting-family total via the Pfaffian pairing matrix.

    Builds Q[i][j] = sum_{s<t} h(A_i,I_s) h(A_j,I_t) - h(A_j,I_s) h(A_i,I_t)
    over the ordered free endpoints and H[i][j] = h(A_i,S_j), and returns the
    Pfaffian of [[Q, H], [-H^t, 0]] times (-1)^C(q,2).
    """
    p = len(config.starts)
    q = len(config.forced)
    if (p + q) % 2:
        raise ValueError("starts plus forced endpoints must be even; add a phantom vertex")
    if q > p:
        raise ValueError(f"every forced endpoint needs a path: q={q} > p={p}")
    reach = [
        [h_weighted(a, e, config.weights) for e in config.free] for a in config.starts
    ]
    size = p + q
    rows = [[Fraction(0)] * size for _ in range(size)]
    r = len(config.free)
    for i in range(p):
        for j in range(i + 1, p):
            value = Fraction(0)
            for s in range(r):
                for t in range(s + 1, r):
                    value += reach[i][s] * reach[j][t] - reach[j][s] * reach[i][t]
            rows[i][j] = value
            rows[j][i] = -value
    for i in range(p):
        for j in range(q):
            value = h_weighted(config.starts[i], config.forced[j], config.weights)
            rows[i][p + j] = value
            rows[p + j][i] = -value
    sign = -1 if (q * (q - 1) // 2) % 2 else 1
    return sign * pf(SkewMatrix(rows))


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def signed_enumeration(config: PathConfig) -> Fraction:
    """Signed total over all permutations and vertex-disjoint path families.

    Exhaustive search; must agree with ``stembridge_pf`` on every config.
    """
    p = len(config.starts)
    q = len(config.forced)
    if (p + q) % 2:
        raise ValueError("starts plus forced endpoints must be even; add a phantom vertex")
    if q > p:
        raise ValueError(f"every forced endpoint needs a path: q={q} > p={p}")
    if p > _MAX_STARTS:
        raise BudgetError(f"signed_enumeration is capped at {_MAX_STARTS} starts, got {p}")
    weights = config.weights
    total = Fraction(0)
    for perm in itertools.permutations(range(p)):
        sign = _perm_sign(perm)
        visited: set = set()

        def place(k: int, last_free: int, acc: Fraction) -> None:
            nonlocal total
            if k == p:
                total += sign * acc
                return
            start = config.starts[perm[k]]
            if start in visited:
                return
            if k < q:
                choices = ((last_free, config.forced[k]),)
            else:
                choices = tuple(
                    (j, config.free[j]) for j in range(last_free + 1, len(config.free))
                )
            visited.add(start)
            for nxt_free, goal in choices:
                if goal[0] < start[0] or goal[1] < start[1]:
                    continue
                walk(start, goal, k, nxt_free, acc)
            visited.discard(start)

        def walk(pos: Point, goal: Point, k: int, nxt_free: int, acc: Fraction) -> None:
            if pos == goal:
                place(k + 1, nxt_free, acc)
                return
            for step in ((1, 0), (0, 1)):
                nxt = (pos[0] + step[0], pos[1] + step[1])
                if nxt[0] > goal[0] or nxt[1] > goal[1] or nxt in visited:
                    continue
                w = _edge_weight(weights, pos, nxt)
                if w == 0:
                    continue
                visited.add(nxt)
                walk(nxt, goal, k, nxt_free, acc * w)
                visited.discard(nxt)

        place(0, -1, Fraction(1))
    return total


def sym_path_census(n: int, x: int, parity: str) -> int:
    """Count nonintersecting families matching centered symmetric tilings.

    Paths run from (-i, i), i = 1 .. 2n+1 (parity "odd") or 1 .. 2n
    ("even"), to distinct points (-1, j) with 1 <= j <= 2x+2n+1, and some
    path must end at (-1, x+n+1).  Pure backtracking; endpoints are taken
    in increasing order so each family is counted once.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if x < 0:
        raise ValueError("sym_path_census requires x >= 0")
    if parity == "odd":
        if n < 0:
            raise ValueError("odd parity requires n >= 0")
        m = 2 * n + 1
    else:
        if n < 1:
            raise ValueError("even parity requires n >= 1")
        m = 2 * n
    top = 2 * x + 2 * n + 1
    must = x + n + 1
    if m > 12 or top > 60:
        raise BudgetError(f"path census too large: {m} paths, {top} endpoints")

    visited = {(-i, i) for i in range(1, m + 1)}
    total = 0

    def place(i: int, min_j: int, hit: bool) -> None:
        nonlocal total
        if i > m:
            if hit:
                total += 1
            return
        if not hit and min_j > must:
            return
        start = (-i, i)
        remaining = m - i
        for j in range(max(min_j, i), top + 1 - remaining):
            walk(start, (-1, j), i, j, hit or j == must)

    def walk(pos: Point, goal: Point, i: int, j: int, hit: bool) -> None:
        if pos == goal:
            place(i + 1, j + 1, hit)
            return
        for step in ((1, 0), (0, 1)):
            nxt = (pos[0] + step[0], pos[1] + step[1])
            if nxt[0] > goal[0] or nxt[1] > goal[1] or nxt in visited:
                continue
            visited.add(nxt)
            walk(nxt, goal, i, j, hit)
            visited.discard(nxt)

    place(1, 1, False)
    return total


def _endpoint_sign_weights(n: int, x: int) -> dict:
    """Edge weights giving every path into (-1, j) the sign (-1)^[j < n+x+1]."""
    flip = x + n + 1
    sign_edges = [((-1, 0), (-1, 1)), ((-1, flip - 1), (-1, flip))]
    sign_edges += [((-2, j), (-1, j)) for j in range(2, flip)]
    weights: dict = {}
    for edge in sign_edges:  # the two marked vertical edges coincide at n+x = 0
        weights[edge] = weights.get(edge, Fraction(1)) * Fraction(-1)
    return weights


def m_path_config(n: int, x: int) -> PathConfig:
    """Weighted path configuration whose Pfaffian equals pf(build_M(n, x))."""
    if n < 0 or x < 0:
        raise ValueError("m_path_config requires n >= 0 and x >= 0")
    starts = [(-1, 0)] + [(-i, i) for i in range(2, 2 * n + 2)]
    points = [(-1, j) for j in range(1, 2 * x + 2 * n + 2)]
    flip = x + n + 1
    forced = (points[flip - 1],)
    free = tuple(pt for idx, pt in enumerate(points, start=1) if idx != flip)
    return PathConfig(tuple(starts), forced, free, _endpoint_sign_weights(n, x))


def n_path_config(n: int, x: int) -> PathConfig:
    """Same for pf(build_N(n, x)); a phantom vertex keeps the size even."""
    if n < 1 or x < 0:
        raise ValueError("n_path_config requires n >= 1 and x >= 0")
    phantom = (0, -1)
    starts = [(-1, 0)] + [(-i, i) for i in range(2, 2 * n + 1)] + [phantom]
    points = [(-1, j) for j in range(1, 2 * x + 2 * n + 2)]
    flip = x + n + 1
    forced = (points[flip - 1],)
    free = tuple(pt for idx, pt in enumerate(points, start=1) if idx != flip) + (phantom,)
    return PathConfig(tuple(starts), forced, free, _endpoint_sign_weights(n, x))
