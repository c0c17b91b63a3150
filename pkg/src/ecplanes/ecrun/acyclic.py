"""Acyclic edge coloring by entropy compression, and its decoder.

Edges are colored in index order. A color is drawn from the allowed set S
using the tape value as a position; whenever the new edge closes a
two-colored cycle, all cycle edges except the two after it are uncolored and
the cycle is written to the record as (k, l).
"""
from __future__ import annotations

from ..errors import DomainError, InconsistentTrace, InvalidTapeEntry
from .tape import CycleFix, RandomTape, TraceOutcome


class EdgeGraph:
    def __init__(self, n: int, edges):
        self.n = n
        self.edges = [tuple(e) for e in edges]
        self.inc = [[] for _ in range(n)]
        self.lookup = {}
        for i, (u, v) in enumerate(self.edges):
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"bad edge {(u, v)}")
            key = frozenset((u, v))
            if key in self.lookup:
                raise DomainError(f"repeated edge {(u, v)}")
            self.lookup[key] = i
            self.inc[u].append(i)
            self.inc[v].append(i)

    @property
    def m(self):
        return len(self.edges)

    @property
    def max_degree(self):
        return max((len(a) for a in self.inc), default=0)

    def other(self, e, v):
        a, b = self.edges[e]
        return b if v == a else a

    def edge(self, u, v):
        return self.lookup.get(frozenset((u, v)))


def tape_range(K: int, delta: int) -> int:
    return K - 2 * (delta - 1)


def forbidden(g: EdgeGraph, col, e) -> set:
    u, v = g.edges[e]
    out = set()
    for w in (u, v):
        for f in g.inc[w]:
            if f != e and col[f]:
                out.add(col[f])
    # a colored path x-u ... v-y with equal end colors forbids the color of xy
    at_v = {}
    for f in g.inc[v]:
        if f != e and col[f]:
            at_v[col[f]] = g.other(f, v)
    for f in g.inc[u]:
        if f == e or not col[f]:
            continue
        x = g.other(f, u)
        y = at_v.get(col[f])
        if y is None or y == x:
            continue
        xy = g.edge(x, y)
        if xy is not None and col[xy]:
            out.add(col[xy])
    return out


def allowed(g, col, e, K) -> list:
    bad = forbidden(g, col, e)
    return [c for c in range(1, K + 1) if c not in bad]


def _edge_with_color(g, col, w, c, skip):
    for f in g.inc[w]:
        if f != skip and col[f] == c:
            return f
    return None


def orient(seq):
    """Fix the traversal so that the second edge has the smaller index than the last."""
    if seq[1] > seq[-1]:
        return [seq[0]] + seq[1:][::-1]
    return list(seq)


def bichromatic_cycles(g: EdgeGraph, col, e) -> list:
    """Two-colored cycles through the freshly colored edge e, oriented."""
    u, v = g.edges[e]
    c = col[e]
    found = []
    for f in g.inc[v]:
        if f == e or not col[f] or col[f] == c:
            continue
        c2 = col[f]
        seq = [e, f]
        w = g.other(f, v)
        want = c
        while True:
            if w == u:
                if want == c:  # arrived through a c2 edge
                    found.append(orient(seq))
                break
            nxt = _edge_with_color(g, col, w, want, seq[-1])
            if nxt is None or nxt == e:
                break
            seq.append(nxt)
            w = g.other(nxt, w)
            want = c2 if want == c else c
    return found


def theta(word, delta: int) -> int:
    base = delta - 1
    return 1 + sum((w - 1) * base ** i for i, w in enumerate(word))


def theta_inv(l: int, k: int, delta: int) -> tuple:
    base = delta - 1
    n = 2 * k - 2
    if base < 1 or not 1 <= l <= base ** n:
        raise DomainError(f"index {l} outside [1, {base}^{n}]")
    x = l - 1
    out = []
    for _ in range(n):
        x, r = divmod(x, base)
        out.append(r + 1)
    return tuple(out)


def _start_vertex(g, e):
    return g.edges[e][0]


def cycle_word(g: EdgeGraph, seq) -> tuple:
    """Neighbour-choice word of a cycle through seq[0], walked from the first endpoint."""
    e = seq[0]
    a = _start_vertex(g, e)
    # walk direction: start with whichever neighbour edge touches a
    rest = seq[1:] if a in g.edges[seq[1]] else seq[1:][::-1]
    word = []
    w, prev = a, e
    for f in rest[:-1]:
        opts = [h for h in g.inc[w] if h != prev]
        word.append(opts.index(f) + 1)
        w, prev = g.other(f, w), f
    return tuple(word)


def decode_cycle(g: EdgeGraph, e: int, k: int, l: int, delta: int) -> list:
    """Inverse of cycle_word: the oriented edge sequence named by (k, l)."""
    try:
        word = theta_inv(l, k, delta)
    except DomainError as exc:
        raise InconsistentTrace(str(exc)) from exc
    a = _start_vertex(g, e)
    b = g.other(e, a)
    seq = [e]
    verts = [b, a]
    w, prev = a, e
    for d in word:
        opts = [h for h in g.inc[w] if h != prev]
        if d > len(opts):
            raise InconsistentTrace(f"cycle word {word} leaves the graph")
        f = opts[d - 1]
        w, prev = g.other(f, w), f
        seq.append(f)
        verts.append(w)
    last = g.edge(w, b)
    if last is None or last in seq:
        raise InconsistentTrace(f"cycle word {word} does not close")
    seq.append(last)
    if len(set(verts)) != len(verts):
        raise InconsistentTrace(f"cycle word {word} is not a simple cycle")
    return orient(seq)


def run_acyclic(g: EdgeGraph, K: int, tape: RandomTape, max_steps: int | None = None,
                delta: int | None = None) -> TraceOutcome:
    delta = g.max_degree if delta is None else delta
    hi = tape_range(K, delta)
    if hi < 1:
        raise DomainError(f"K = {K} leaves no room: need K >= 2(Delta-1)+1")
    max_steps = 100 * g.m if max_steps is None else max_steps
    col = [0] * g.m
    record, trace = [], []
    cur = 0
    for step in range(max_steps):
        if all(col):
            return TraceOutcome("success", col, step, record, cur, trace=trace)
        if cur >= len(tape.entries):
            return TraceOutcome("running", col, step, record, cur, "tape_exhausted", trace)
        F = tape.entries[cur]
        if not 1 <= F <= hi:
            raise InvalidTapeEntry(f"tape entry {F} at {cur} outside [1, {hi}]")
        cur += 1
        e = col.index(0)
        S = allowed(g, col, e, K)
        col[e] = S[F - 1]
        trace.append((e, F))
        cyc = bichromatic_cycles(g, col, e)
        if not cyc:
            record.append(None)
            continue
        seq = min(cyc, key=lambda s: (len(s), s))
        k = len(seq) // 2
        record.append(CycleFix(k, theta(cycle_word(g, seq), delta)))
        for f in [seq[0]] + seq[3:]:
            col[f] = 0
    if all(col):
        return TraceOutcome("success", col, max_steps, record, cur, trace=trace)
    return TraceOutcome("running", col, max_steps, record, cur, "max_steps", trace)


def reconstruct_acyclic(g: EdgeGraph, K: int, record, partial, delta: int | None = None) -> list:
    """Recover the consumed tape prefix from the record and the final coloring."""
    delta = g.max_degree if delta is None else delta
    hi = tape_range(K, delta)
    # forward: which edge each step colored, and the cycles it undid, from R alone
    colored = [False] * g.m
    plan = []
    for i, r in enumerate(record):
        try:
            e = colored.index(False)
        except ValueError:
            raise InconsistentTrace(f"step {i} has no uncolored edge") from None
        colored[e] = True
        if r is None:
            plan.append((e, None))
            continue
        if not isinstance(r, CycleFix):
            raise InconsistentTrace(f"unexpected record entry {r!r}")
        seq = decode_cycle(g, e, r.k, r.l, delta)
        if not all(colored[f] for f in seq):
            raise InconsistentTrace(f"step {i}: cycle uses an uncolored edge")
        for f in [seq[0]] + seq[3:]:
            colored[f] = False
        plan.append((e, seq))
    col = list(partial)
    if len(col) != g.m or [bool(c) for c in col] != colored:
        raise InconsistentTrace("final coloring does not match the record")
    tape = []
    for i in range(len(plan) - 1, -1, -1):
        e, seq = plan[i]
        if seq is None:
            c = col[e]
            col[e] = 0
        else:
            A, B = col[seq[2]], col[seq[1]]
            if not A or not B or A == B:
                raise InconsistentTrace(f"step {i}: retained edges do not carry two colors")
            for pos in range(3, len(seq)):
                f = seq[pos]
                if col[f]:
                    raise InconsistentTrace(f"step {i}: edge {f} should be uncolored")
                col[f] = B if pos % 2 else A
            c = A
        S = allowed(g, col, e, K)
        if c not in S:
            raise InconsistentTrace(f"step {i}: color {c} was not available")
        F = S.index(c) + 1
        if F > hi:
            raise InconsistentTrace(f"step {i}: recovered tape value {F} out of range")
        tape.append(F)
    if any(col):
        raise InconsistentTrace("decoding did not return to the empty coloring")
    return tape[::-1]


def is_proper(g: EdgeGraph, col) -> bool:
    for w in range(g.n):
        cs = [col[f] for f in g.inc[w] if col[f]]
        if len(cs) != len(set(cs)):
            return False
    return True


def is_acyclic_coloring(g: EdgeGraph, col) -> bool:
    """Proper, total, and every two color classes together form a forest."""
    if not all(col) or not is_proper(g, col):
        return False
    colors = sorted(set(col))
    for i, c1 in enumerate(colors):
        for c2 in colors[i + 1:]:
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for f, (u, v) in enumerate(g.edges):
                if col[f] in (c1, c2):
                    ru, rv = find(u), find(v)
                    if ru == rv:
                        return False
                    parent[ru] = rv
    return True
