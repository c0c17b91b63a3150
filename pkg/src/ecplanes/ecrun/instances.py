"""Concrete variable-version instances: k-SAT and legitimate plane colorings."""
from __future__ import annotations

import math
import random

from ..dyck import DescentSet
from ..errors import InvalidInstance
from ..plane import ProjectivePlane
from .generic import BadEvent, EcInstance

# boolean variables take tape values 1 (false) and 2 (true)


def _clause_violated(lits):
    want = tuple(1 if l > 0 else 2 for l in lits)  # the unique falsifying values

    def bad(vals):
        return vals == want

    return bad


def ksat_instance(n_vars: int, clauses) -> EcInstance:
    """Clauses are tuples of nonzero ints, +-(i+1) for variable i."""
    events = []
    for cl in clauses:
        cl = tuple(sorted(cl, key=abs))
        vbl = tuple(abs(l) - 1 for l in cl)
        if len(set(vbl)) != len(vbl):
            raise InvalidInstance(f"clause {cl} repeats a variable")
        events.append(BadEvent(vbl, _clause_violated(cl), m=1, label=cl))
    k = max((len(c) for c in clauses), default=1)
    return EcInstance([2] * n_vars, events, DescentSet.singleton(k) if k > 1 else None, "ksat")


def random_ksat(n_vars: int, n_clauses: int, k: int = 3, seed: int = 0) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(n_clauses):
        vs = rng.sample(range(1, n_vars + 1), k)
        out.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return out


def satisfies(clauses, state) -> bool:
    return all(any((state[abs(l) - 1] == 2) == (l > 0) for l in cl) for cl in clauses)


def legit_instance(plane: ProjectivePlane, c: int, m_bar: int = 2) -> EcInstance:
    """Experimental: one event per pair of lines, bad when the two lines get
    the same type. Only the symmetric difference Z matters. A point p in Z
    resamples itself plus the m_bar - 1 lowest other points of its half of Z,
    so the other half fixes the needed color multiset and at most m_bar!
    orderings complete the event."""
    n = plane.order
    if not 1 <= m_bar <= n:
        raise InvalidInstance(f"m_bar must lie in [1, {n}]")
    lines = [set(plane.points_of_line(j)) for j in range(plane.num_lines)]
    events = []
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            h1 = sorted(lines[i] - lines[j])
            h2 = sorted(lines[j] - lines[i])
            vbl = tuple(h1 + h2)
            k = len(h1)

            def bad(vals, k=k):
                return sorted(vals[:k]) == sorted(vals[k:])

            res = {}
            for half in (h1, h2):
                for p in half:
                    others = [q for q in half if q != p][: m_bar - 1]
                    res[p] = tuple(sorted([p] + others))
            events.append(BadEvent(vbl, bad, res, m=math.factorial(m_bar), label=(i, j)))
    E = DescentSet.singleton(m_bar) if m_bar > 1 else None
    return EcInstance([c] * plane.num_points, events, E, "legit")
