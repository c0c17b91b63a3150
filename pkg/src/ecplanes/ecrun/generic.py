"""Variable-version entropy compression.

The lowest unset variable takes the next value of its own tape stream. If
that creates a bad event, the event's resampling set (which contains the
variable) is unset and the record notes (l, beta, gamma): the size of the
set, which event among those through the variable with that size, and which
bad completion of the unset variables occurred.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from ..dyck import DescentSet
from ..errors import InconsistentTrace, InvalidInstance, InvalidTapeEntry
from .tape import Triple, TraceOutcome, VariableTapes


@dataclass(frozen=True)
class BadEvent:
    vbl: tuple
    is_bad: Callable  # values aligned with vbl -> bool
    resample: dict | None = None  # variable -> tuple of variables to unset
    m: int | None = None  # declared bound on bad completions
    label: object = None

    def resample_set(self, v) -> tuple:
        if self.resample is None:
            return self.vbl
        return self.resample[v]


@dataclass
class EcInstance:
    ranges: list
    events: list
    E: DescentSet | None = None
    name: str = ""
    _by_var: list = field(default_factory=list, repr=False)
    _by_var_l: dict = field(default_factory=dict, repr=False)
    _l: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        n = len(self.ranges)
        if any(r < 1 for r in self.ranges):
            raise InvalidInstance("variable ranges must be positive")
        self._by_var = [[] for _ in range(n)]
        self._l = []
        for i, ev in enumerate(self.events):
            if len(set(ev.vbl)) != len(ev.vbl) or any(not 0 <= v < n for v in ev.vbl):
                raise InvalidInstance(f"event {i} has a bad variable set")
            sizes = set()
            for v in ev.vbl:
                U = ev.resample_set(v)
                if v not in U or not set(U) <= set(ev.vbl) or len(set(U)) != len(U):
                    raise InvalidInstance(f"event {i}: resampling set for {v} must contain it")
                sizes.add(len(U))
                self._by_var[v].append(i)
            if len(sizes) != 1:
                raise InvalidInstance(f"event {i}: resampling sets differ in size")
            l = sizes.pop()
            self._l.append(l)
            for v in ev.vbl:
                self._by_var_l.setdefault((v, l), []).append(i)

    @property
    def n(self):
        return len(self.ranges)

    def l_of(self, i):
        return self._l[i]

    def d_table(self) -> dict:
        """l -> max number of events with that l through one variable."""
        out = {}
        for (v, l), ids in self._by_var_l.items():
            out[l] = max(out.get(l, 0), len(ids))
        return out

    def event_m(self, i) -> int:
        ev = self.events[i]
        if ev.m is not None:
            return ev.m
        best = 0
        for v in ev.vbl:
            U = ev.resample_set(v)
            kept = [x for x in ev.vbl if x not in U]
            for vals in product(*(range(1, self.ranges[x] + 1) for x in kept)):
                best = max(best, len(self.completions(i, v, dict(zip(kept, vals)))))
        return best

    def m_table(self) -> dict:
        out = {}
        for i in range(len(self.events)):
            l = self._l[i]
            out[l] = max(out.get(l, 0), self.event_m(i))
        return out

    def completions(self, i, v, kept: dict) -> list:
        """Bad value tuples for the resampling set of v, given the other values."""
        ev = self.events[i]
        U = ev.resample_set(v)
        out = []
        for vals in product(*(range(1, self.ranges[x] + 1) for x in U)):
            a = dict(kept)
            a.update(zip(U, vals))
            if ev.is_bad(tuple(a[x] for x in ev.vbl)):
                out.append(vals)
        return out

    def triggered(self, state, v):
        for i in self._by_var[v]:
            ev = self.events[i]
            vals = tuple(state[x] for x in ev.vbl)
            if all(vals) and ev.is_bad(vals):
                return i
        return None

    def violated(self, state) -> list:
        out = []
        for i, ev in enumerate(self.events):
            vals = tuple(state[x] for x in ev.vbl)
            if all(vals) and ev.is_bad(vals):
                out.append(i)
        return out


def run_generic(inst: EcInstance, tapes: VariableTapes, max_steps: int | None = None) -> TraceOutcome:
    n = inst.n
    if len(tapes.streams) != n:
        raise InvalidInstance("need one tape stream per variable")
    max_steps = 100 * n if max_steps is None else max_steps
    state = [0] * n
    cur = [0] * n
    record, trace = [], []
    for step in range(max_steps):
        if all(state):
            return TraceOutcome("success", state, step, record, cur, trace=trace)
        j = state.index(0)
        stream = tapes.streams[j]
        if cur[j] >= len(stream):
            return TraceOutcome("running", state, step, record, cur, "tape_exhausted", trace)
        val = stream[cur[j]]
        if not 1 <= val <= inst.ranges[j]:
            raise InvalidTapeEntry(f"value {val} for variable {j} outside [1, {inst.ranges[j]}]")
        cur[j] += 1
        state[j] = val
        trace.append((j, val))
        i = inst.triggered(state, j)
        if i is None:
            record.append(None)
            continue
        ev = inst.events[i]
        U = ev.resample_set(j)
        l = len(U)
        beta = inst._by_var_l[(j, l)].index(i) + 1
        kept = {x: state[x] for x in ev.vbl if x not in U}
        gamma = inst.completions(i, j, kept).index(tuple(state[x] for x in U)) + 1
        record.append(Triple(l, beta, gamma))
        for x in U:
            state[x] = 0
    if all(state):
        return TraceOutcome("success", state, max_steps, record, cur, trace=trace)
    return TraceOutcome("running", state, max_steps, record, cur, "max_steps", trace)


def reconstruct_generic(inst: EcInstance, record, state) -> list:
    """Per-variable consumed tape prefixes recovered from (record, final state)."""
    n = inst.n
    if len(state) != n:
        raise InconsistentTrace("state has the wrong length")
    isset = [False] * n
    plan = []
    for s, r in enumerate(record):
        try:
            j = isset.index(False)
        except ValueError:
            raise InconsistentTrace(f"step {s}: nothing left to assign") from None
        isset[j] = True
        if r is None:
            plan.append((j, None))
            continue
        if not isinstance(r, Triple):
            raise InconsistentTrace(f"unexpected record entry {r!r}")
        ids = inst._by_var_l.get((j, r.alpha), [])
        if not 1 <= r.beta <= len(ids):
            raise InconsistentTrace(f"step {s}: beta {r.beta} out of range")
        i = ids[r.beta - 1]
        U = inst.events[i].resample_set(j)
        if not all(isset[x] for x in inst.events[i].vbl):
            raise InconsistentTrace(f"step {s}: event {i} was not fully assigned")
        for x in U:
            isset[x] = False
        plan.append((j, (i, r.gamma)))
    cur = list(state)
    if [bool(v) for v in cur] != isset:
        raise InconsistentTrace("final state does not match the record")
    streams = [[] for _ in range(n)]
    for s in range(len(plan) - 1, -1, -1):
        j, hit = plan[s]
        if hit is None:
            val = cur[j]
            cur[j] = 0
        else:
            i, gamma = hit
            ev = inst.events[i]
            U = ev.resample_set(j)
            if any(cur[x] for x in U):
                raise InconsistentTrace(f"step {s}: resampled variables are set")
            kept = {}
            for x in ev.vbl:
                if x not in U:
                    if not cur[x]:
                        raise InconsistentTrace(f"step {s}: kept variable {x} is unset")
                    kept[x] = cur[x]
            comps = inst.completions(i, j, kept)
            if not 1 <= gamma <= len(comps):
                raise InconsistentTrace(f"step {s}: gamma {gamma} out of range")
            vals = dict(zip(U, comps[gamma - 1]))
            val = vals[j]
            for x in U:
                if x != j:
                    cur[x] = vals[x]
        streams[j].append(val)
    if any(cur):
        raise InconsistentTrace("decoding did not return to the empty assignment")
    return [s[::-1] for s in streams]


def colors_required_generic(E: DescentSet, classes) -> int:
    """ceil(gamma * sup (d_l m)^(1/l)) over classes given as (l, d_l, m)."""
    from ..genfun import solve_tau_gamma

    gamma = solve_tau_gamma(E).gamma
    sup = max((d * m) ** (1 / l) for l, d, m in classes)
    return math.ceil(round(gamma * sup, 9))


def instance_colors_required(inst: EcInstance) -> int:
    if inst.E is None:
        raise InvalidInstance("instance declares no descent set")
    d, m = inst.d_table(), inst.m_table()
    return colors_required_generic(inst.E, [(l, d[l], m[l]) for l in d])
