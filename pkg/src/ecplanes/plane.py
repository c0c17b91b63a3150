"""Finite projective planes of prime order.

Points of PG(2, q) are the affine pairs (x, y) over Z_q plus q + 1 points at
infinity, one per slope and one for the vertical direction.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import IdOutOfRange, InvalidInput, NonPrimeOrder, OrderTooLarge

MAX_ORDER = 97


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    incidence: np.ndarray  # bool, shape (points, lines)
    _pol: tuple = field(default=(), repr=False, compare=False)
    _lop: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        inc = np.asarray(self.incidence, dtype=bool)
        if inc.ndim != 2:
            raise InvalidInput("incidence must be a 2-d matrix")
        inc.setflags(write=False)
        object.__setattr__(self, "incidence", inc)
        pol = tuple(tuple(int(i) for i in np.flatnonzero(inc[:, j])) for j in range(inc.shape[1]))
        lop = tuple(tuple(int(j) for j in np.flatnonzero(inc[i, :])) for i in range(inc.shape[0]))
        object.__setattr__(self, "_pol", pol)
        object.__setattr__(self, "_lop", lop)

    @property
    def num_points(self) -> int:
        return self.incidence.shape[0]

    @property
    def num_lines(self) -> int:
        return self.incidence.shape[1]

    def points_of_line(self, line_id: int) -> list[int]:
        if not 0 <= line_id < self.num_lines:
            raise IdOutOfRange(f"line id {line_id} out of range")
        return list(self._pol[line_id])

    def lines_of_point(self, point_id: int) -> list[int]:
        if not 0 <= point_id < self.num_points:
            raise IdOutOfRange(f"point id {point_id} out of range")
        return list(self._lop[point_id])

    def lines(self):
        return self._pol


def build_plane(q: int) -> ProjectivePlane:
    if not isinstance(q, (int, np.integer)) or not is_prime(int(q)):
        raise NonPrimeOrder(f"order {q} is not prime")
    q = int(q)
    if q > MAX_ORDER:
        raise OrderTooLarge(f"order {q} exceeds cap {MAX_ORDER}")
    N = q * q + q + 1
    inc = np.zeros((N, N), dtype=bool)
    vert = q * q + q  # point at infinity of vertical lines; also id of the line at infinity
    for m in range(q):
        for b in range(q):
            j = m * q + b
            for x in range(q):
                inc[x * q + (m * x + b) % q, j] = True
            inc[q * q + m, j] = True
    for c in range(q):
        j = q * q + c
        for y in range(q):
            inc[c * q + y, j] = True
        inc[vert, j] = True
    inc[q * q:, vert] = True
    return ProjectivePlane(q, inc)


@dataclass
class AxiomReport:
    axiom1: bool = True  # two points share exactly one line
    axiom2: bool = True  # two lines share exactly one point
    axiom3: bool = True  # four points, no three collinear
    counts: bool = True  # Results 1-3: sizes and regularity
    witness1: tuple | None = None
    witness2: tuple | None = None
    witness3: tuple | None = None
    count_detail: str = ""

    @property
    def ok(self) -> bool:
        return self.axiom1 and self.axiom2 and self.axiom3 and self.counts

    def to_dict(self):
        return {
            "ok": self.ok,
            "axiom1": self.axiom1, "axiom2": self.axiom2, "axiom3": self.axiom3,
            "counts": self.counts,
            "witness1": list(self.witness1) if self.witness1 else None,
            "witness2": list(self.witness2) if self.witness2 else None,
            "witness3": list(self.witness3) if self.witness3 else None,
            "count_detail": self.count_detail,
        }


def _first_bad_pair(gram: np.ndarray):
    # off-diagonal entries must all be 1
    bad = gram != 1
    np.fill_diagonal(bad, False)
    idx = np.argwhere(bad)
    if len(idx) == 0:
        return None
    i, j = idx[0]
    return (int(min(i, j)), int(max(i, j)))


def _general_quadrangle(p: ProjectivePlane):
    """Backtracking search for four points with no three collinear."""
    P = p.num_points
    inc = p.incidence

    def collinear(a, b, c):
        return bool(np.any(inc[a] & inc[b] & inc[c]))

    def extend(chosen):
        if len(chosen) == 4:
            return tuple(chosen)
        start = chosen[-1] + 1 if chosen else 0
        for x in range(start, P):
            if all(not collinear(a, b, x) for a, b in combinations(chosen, 2)):
                r = extend(chosen + [x])
                if r:
                    return r
        return None

    return extend([])


def verify_axioms(p: ProjectivePlane) -> AxiomReport:
    rep = AxiomReport()
    A = p.incidence.astype(np.float32)
    w = _first_bad_pair(A @ A.T)
    if w:
        rep.axiom1, rep.witness1 = False, ("points",) + w
    w = _first_bad_pair(A.T @ A)
    if w:
        rep.axiom2, rep.witness2 = False, ("lines",) + w
    quad = _general_quadrangle(p)
    if quad is None:
        rep.axiom3 = False
        rep.witness3 = None
    else:
        rep.witness3 = quad
    n = p.order
    N = n * n + n + 1
    rows = p.incidence.sum(axis=1)
    cols = p.incidence.sum(axis=0)
    problems = []
    if p.num_points != N or p.num_lines != N:
        problems.append(f"expected {N} points and lines, got {p.num_points} and {p.num_lines}")
    if np.any(rows != n + 1):
        problems.append(f"point {int(np.flatnonzero(rows != n + 1)[0])} not on {n + 1} lines")
    if np.any(cols != n + 1):
        problems.append(f"line {int(np.flatnonzero(cols != n + 1)[0])} does not hold {n + 1} points")
    if problems:
        rep.counts = False
        rep.count_detail = "; ".join(problems)
    return rep


# -- serialization

def to_csv(p: ProjectivePlane) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    for row in p.incidence:
        w.writerow([int(v) for v in row])
    return out.getvalue()


def from_csv(text: str, order: int | None = None) -> ProjectivePlane:
    rows = [[int(v) for v in r] for r in csv.reader(io.StringIO(text)) if r]
    inc = np.array(rows, dtype=bool)
    if order is None:
        order = int(inc[:, 0].sum()) - 1 if inc.size else 0
    return ProjectivePlane(order, inc)


def to_json(p: ProjectivePlane) -> str:
    return json.dumps({"order": p.order, "incidence": p.incidence.astype(int).tolist()})


def from_json(text: str) -> ProjectivePlane:
    d = json.loads(text)
    return ProjectivePlane(int(d["order"]), np.array(d["incidence"], dtype=bool))


def degenerate_plane(k: int = 4) -> ProjectivePlane:
    """Points 0..k; one line holds 0..k-1 and every other line is {i, k}.

    Satisfies the two incidence axioms but has no quadrangle.
    """
    inc = np.zeros((k + 1, k + 1), dtype=bool)
    inc[:k, 0] = True
    for i in range(k):
        inc[i, i + 1] = True
        inc[k, i + 1] = True
    return ProjectivePlane(k - 1, inc)
