"""Line types, bad and dangerous pairs, and searches for legitimate colorings."""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BudgetExceeded, DomainError, PartialColoringError
from .plane import ProjectivePlane

DEFAULT_BUDGET = 8 ** 7


@dataclass(frozen=True)
class PointColoring:
    colors: tuple  # entries in 1..c, or None for uncolored
    c: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.c < 1:
            raise DomainError("need at least one color")
        for v in self.colors:
            if v is not None and not 1 <= v <= self.c:
                raise DomainError(f"color {v} outside 1..{self.c}")

    @property
    def total(self) -> bool:
        return all(v is not None for v in self.colors)

    def to_json(self) -> str:
        return json.dumps(list(self.colors))

    @classmethod
    def from_json(cls, text: str, c: int):
        return cls(tuple(json.loads(text)), c)


@dataclass(frozen=True)
class LegitColoring:
    coloring: PointColoring
    tried: int = 0


@dataclass(frozen=True)
class Exhausted:
    tried: int


@dataclass(frozen=True)
class GaveUp:
    iterations: int


def _check_len(plane, coloring):
    if len(coloring.colors) != plane.num_points:
        raise DomainError("coloring length does not match the plane")


def line_type(plane: ProjectivePlane, coloring: PointColoring, line_id: int) -> tuple:
    pts = plane.points_of_line(line_id)
    counts = [0] * coloring.c
    for p in pts:
        v = coloring.colors[p]
        if v is not None:
            counts[v - 1] += 1
    return tuple(counts)


def all_types(plane, coloring) -> list:
    _check_len(plane, coloring)
    return [line_type(plane, coloring, j) for j in range(plane.num_lines)]


def find_bad_pairs(plane: ProjectivePlane, coloring: PointColoring) -> list:
    if not coloring.total:
        raise PartialColoringError("find_bad_pairs needs a total coloring")
    groups: dict = {}
    for j, t in enumerate(all_types(plane, coloring)):
        groups.setdefault(t, []).append(j)
    out = []
    for ids in groups.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                out.append((ids[a], ids[b]))
    out.sort()
    return out


def dangerous_pairs(plane: ProjectivePlane, partial: PointColoring) -> list:
    n = plane.order
    if n < 2:
        raise DomainError("order must be at least 2")
    T = np.array(all_types(plane, partial), dtype=np.int64)
    dist = np.abs(T[:, None, :] - T[None, :, :]).sum(axis=2)
    thr = 40 * math.log(n)
    ii, jj = np.nonzero(np.triu(dist <= thr, k=1))
    return [(int(i), int(j)) for i, j in zip(ii, jj)]


def _is_legit(types):
    return len(set(types)) == len(types)


def brute_force_search(plane: ProjectivePlane, c: int, budget: int = DEFAULT_BUDGET):
    """First legitimate coloring in base-c counting order (point 0 most significant).

    Keeps the pair that rejected the previous candidate and tests it first,
    which rejects most neighbours of a bad coloring in O(n) work.
    """
    N = plane.num_points
    if c < 1:
        raise DomainError("c must be positive")
    if c ** N > budget:
        raise BudgetExceeded(f"{c}^{N} colorings exceed budget {budget}")
    lines = [list(pts) for pts in plane.lines()]

    def ltype(cols, pts):
        cnt = [0] * c
        for p in pts:
            cnt[cols[p] - 1] += 1
        return tuple(cnt)

    last = None
    tried = 0
    for cols in product(range(1, c + 1), repeat=N):
        tried += 1
        if last is not None:
            i, j = last
            if ltype(cols, lines[i]) == ltype(cols, lines[j]):
                continue
        seen = {}
        bad = None
        for j, pts in enumerate(lines):
            t = ltype(cols, pts)
            if t in seen:
                bad = (seen[t], j)
                break
            seen[t] = j
        if bad is None:
            return LegitColoring(PointColoring(cols, c), tried)
        last = bad
    return Exhausted(tried)


def randomized_search(plane: ProjectivePlane, c: int, seed: int = 0, max_iters: int = 10 ** 6):
    """Resampling loop: draw uniformly, then redraw the points of the first bad pair."""
    if c < 1:
        raise DomainError("c must be positive")
    rng = random.Random(seed)
    N = plane.num_points
    cols = [rng.randint(1, c) for _ in range(N)]
    for it in range(max_iters):
        col = PointColoring(cols, c)
        bad = find_bad_pairs(plane, col)
        if not bad:
            return LegitColoring(col, it + 1)
        i, j = bad[0]
        for p in sorted(set(plane.points_of_line(i)) | set(plane.points_of_line(j))):
            cols[p] = rng.randint(1, c)
    return GaveUp(max_iters)
