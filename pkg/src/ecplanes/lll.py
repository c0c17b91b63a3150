"""Lovász Local Lemma criteria on explicit dependency graphs, plus the
numeric constants behind the classical applications."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError, InvalidCover, NeighborhoodTooLarge

EXACT_CAP = 25
INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass
class DependencyGraph:
    n: int
    adj: list  # list of sorted neighbour lists
    p: list
    weights: list | None = None

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.p) != self.n:
            raise DomainError("adjacency and probabilities must have length n")
        self.adj = [sorted(set(a)) for a in self.adj]
        for x, nb in enumerate(self.adj):
            for y in nb:
                if not 0 <= y < self.n or y == x or x not in self.adj[y]:
                    raise DomainError(f"adjacency not symmetric or has a loop at {x}")
        if any(not 0 <= q <= 1 for q in self.p):
            raise DomainError("probabilities must lie in [0, 1]")
        if self.weights is not None and len(self.weights) != self.n:
            raise DomainError("weights must have length n")

    @classmethod
    def from_edges(cls, n, edges, p, weights=None):
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj, list(p), None if weights is None else list(weights))

    def edges(self):
        return [[x, y] for x in range(self.n) for y in self.adj[x] if x < y]

    def closed_nbhd(self, x):
        return sorted(set(self.adj[x]) | {x})

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": self.edges(), "p": self.p, "weights": self.weights})

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls.from_edges(d["n"], d["edges"], d["p"], d.get("weights"))


@dataclass
class CheckReport:
    ok: bool
    lower_bound: float | None = None
    failures: list = field(default_factory=list)
    worst_vertex: int | None = None
    worst_slack: float | None = None

    def to_dict(self):
        return {"ok": self.ok, "lower_bound": self.lower_bound, "failures": self.failures,
                "worst_vertex": self.worst_vertex, "worst_slack": self.worst_slack}


def symmetric_check(p: float, delta: int) -> bool:
    if not 0 <= p <= 1 or delta < 0:
        raise DomainError("need p in [0,1] and delta >= 0")
    # relative slack absorbs the rounding in p = 1/(e(delta+1))
    return p * (delta + 1) * math.e <= 1 + 1e-12


def spencer_check(g: DependencyGraph, r=None) -> CheckReport:
    r = g.weights if r is None else r
    if r is None or any(not 0 <= v < 1 for v in r):
        raise DomainError("spencer weights must lie in [0, 1)")
    fails = []
    worst, wx = math.inf, None
    for x in range(g.n):
        rhs = r[x]
        for y in g.adj[x]:
            rhs *= 1 - r[y]
        slack = rhs - g.p[x]
        if slack < worst:
            worst, wx = slack, x
        if g.p[x] > rhs:
            fails.append(x)
    if fails:
        return CheckReport(False, None, fails, wx, worst)
    return CheckReport(True, math.prod(1 - v for v in r), [], wx, worst)


def _independent_sum(g, verts, mu, reverse=False):
    verts = sorted(verts, reverse=reverse)
    nbr = {v: set(g.adj[v]) for v in verts}

    def rec(i, blocked):
        if i == len(verts):
            return 1.0
        v = verts[i]
        total = rec(i + 1, blocked)
        if v not in blocked:
            total += mu[v] * rec(i + 1, blocked | nbr[v])
        return total

    return rec(0, frozenset())


def cluster_Z(g: DependencyGraph, x: int, mu, mode="exact", cliques=None) -> float:
    """Independent-set polynomial of the closed neighbourhood of x at mu.

    mode="cover" replaces it by the product over a clique cover of
    (1 + sum of mu over the clique), an upper bound.
    """
    nb = g.closed_nbhd(x)
    if mode == "exact":
        if len(nb) > EXACT_CAP:
            raise NeighborhoodTooLarge(f"|closed neighbourhood| = {len(nb)} > {EXACT_CAP}")
        return _independent_sum(g, nb, mu)
    if mode != "cover":
        raise DomainError(f"unknown mode {mode!r}")
    if not cliques:
        raise InvalidCover("a clique cover is required")
    covered = set()
    for cl in cliques:
        cl = list(cl)
        for i in range(len(cl)):
            for j in range(i + 1, len(cl)):
                if cl[j] not in g.adj[cl[i]]:
                    raise InvalidCover(f"{cl} is not a clique")
        covered |= set(cl)
    if not set(nb) <= covered:
        raise InvalidCover("cliques do not cover the closed neighbourhood")
    return math.prod(1 + sum(mu[y] for y in cl) for cl in cliques)


def cluster_check(g: DependencyGraph, mu=None, mode="exact", covers=None) -> CheckReport:
    mu = g.weights if mu is None else mu
    if mu is None or any(v < 0 for v in mu):
        raise DomainError("cluster weights must be non-negative")
    fails = []
    worst, wx = math.inf, None
    for x in range(g.n):
        Z = cluster_Z(g, x, mu, mode, None if covers is None else covers[x])
        slack = mu[x] / Z - g.p[x]
        if slack < worst:
            worst, wx = slack, x
        # small relative tolerance so that exact equality cases pass
        if slack < -1e-15 * max(1.0, g.p[x]):
            fails.append(x)
    return CheckReport(not fails, None, fails, wx, worst)


# -- one-dimensional optimisation

def golden_max(f, lo, hi, grid=64, tol=1e-12):
    """Coarse grid to bracket the maximum, then golden-section refinement."""
    xs = [lo + (hi - lo) * i / grid for i in range(grid + 1)]
    k = max(range(len(xs)), key=lambda i: f(xs[i]))
    a, b = xs[max(k - 1, 0)], xs[min(k + 1, grid)]
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


def _acyclic_objective(a):
    return (1 + 2 * a + a * a / (1 - a * a)) ** 2 / a


def thresholds(grid: int = 64) -> dict:
    """Constants of the standard applications, computed by optimisation.

    The transversal problems have the scale-free shape mu/(1+M mu)^j, so M=1.
    """
    eps = 1e-9
    mu2, v2 = golden_max(lambda m: m / (1 + m) ** 2, eps, 10.0, grid)
    mu4, v4 = golden_max(lambda m: m / (1 + m) ** 4, eps, 10.0, grid)
    al, negv = golden_max(lambda a: -_acyclic_objective(a), eps, 1 - eps, grid)
    # analytic stationary points: mu = 1/M and mu = 1/(3M)
    if abs(mu2 - 1.0) > 1e-5 or abs(mu4 - 1 / 3) > 1e-5:
        raise RuntimeError("optimiser missed the analytic stationary point")
    return {
        "independent_transversal_symmetric": 2 * math.e,
        "independent_transversal_cluster": 1 / v2,
        "latin_transversal_lopsided": 4 * math.e,
        "latin_transversal_cluster": 1 / v4,
        "acyclic_edge_spencer": 16.0,
        "acyclic_edge_cluster": -negv,
        "acyclic_edge_alpha": al,
    }
