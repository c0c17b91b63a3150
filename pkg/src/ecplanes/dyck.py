"""Partial Dyck words with restricted descents, and plane trees."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import BudgetExceeded, DomainError, InvalidInput

MAX_T = 14


@dataclass(frozen=True)
class DescentSet:
    """finite ∪ {start, start+period, start+2 period, ...} (tail optional)."""
    finite: frozenset = frozenset()
    start: int | None = None
    period: int = 1

    def __post_init__(self):
        object.__setattr__(self, "finite", frozenset(int(v) for v in self.finite))
        if any(v < 1 for v in self.finite) or (self.start is not None and self.start < 1):
            raise DomainError("descent lengths are positive")
        if self.period < 1:
            raise DomainError("period must be positive")
        if not self.finite and self.start is None:
            raise DomainError("E must be nonempty")
        if self.start is None and self.finite == {1}:
            raise DomainError("E = {1} is excluded")

    @classmethod
    def all_positive(cls):
        return cls(start=1, period=1)

    @classmethod
    def even_from(cls, m: int, extra=()):
        return cls(frozenset(extra), start=m, period=2)

    @classmethod
    def singleton(cls, m: int):
        return cls(frozenset({m}))

    @classmethod
    def parse(cls, text: str) -> "DescentSet":
        """'all', '2N+4', '1|2N+2', '{3}', '{2,5}|3N+7'."""
        parts = [p.strip() for p in text.replace(" ", "").split("|") if p.strip()]
        finite, start, period = set(), None, 1
        for p in parts:
            if p.lower() in ("all", "n+", "n"):
                start, period = 1, 1
                continue
            m = re.fullmatch(r"(\d*)N\+(\d+)", p, flags=re.I)
            if m:
                period = int(m.group(1) or 1)
                start = int(m.group(2))
                continue
            m = re.fullmatch(r"\{?([\d,]+)\}?", p)
            if m:
                finite |= {int(v) for v in m.group(1).split(",") if v}
                continue
            raise InvalidInput(f"cannot parse descent set {text!r}")
        return cls(frozenset(finite), start, period)

    def __contains__(self, x: int) -> bool:
        if x in self.finite:
            return True
        return self.start is not None and x >= self.start and (x - self.start) % self.period == 0

    @property
    def finite_only(self) -> bool:
        return self.start is None

    @property
    def max_finite(self) -> int:
        return max(self.finite) if self.finite else 0

    def members_upto(self, n: int) -> list:
        return [x for x in range(1, n + 1) if x in self]

    @property
    def s(self) -> int:
        """min(E minus {1})."""
        cands = [v for v in self.finite if v != 1]
        if self.start is not None:
            t = self.start if self.start != 1 else 1 + self.period
            cands.append(t)
        if not cands:
            raise DomainError("E has no element other than 1")
        return min(cands)

    @property
    def gcd(self) -> int:
        vals = list(self.finite)
        if self.start is not None:
            vals += [self.start, self.start + self.period]
        return math.gcd(*vals)

    def __str__(self):
        parts = []
        if self.finite:
            parts.append("{" + ",".join(str(v) for v in sorted(self.finite)) + "}")
        if self.start is not None:
            if self.start == 1 and self.period == 1:
                parts.append("all")
            else:
                parts.append(f"{self.period if self.period != 1 else ''}N+{self.start}")
        return "|".join(parts)


def _bits(w) -> str:
    s = w if isinstance(w, str) else "".join(str(int(b)) for b in w)
    if set(s) - {"0", "1"}:
        raise InvalidInput("words are over {0, 1}")
    return s


def is_partial_dyck(bits) -> bool:
    h = 0
    for b in _bits(bits):
        h += 1 if b == "0" else -1
        if h < 0:
            return False
    return True


def descents(bits) -> list:
    return [len(r) for r in re.findall(r"1+", _bits(bits))]


def is_full_dyck(bits) -> bool:
    s = _bits(bits)
    return is_partial_dyck(s) and s.count("0") == s.count("1")


def enumerate_words(t: int, r: int, E: DescentSet):
    """Words with t zeros, t-r ones, every prefix Dyck, descents in E; lexicographic."""
    if not 0 <= r <= t:
        raise DomainError("need 0 <= r <= t")
    if t > MAX_T:
        raise BudgetExceeded(f"t = {t} exceeds the enumeration cap {MAX_T}")
    ones_total = t - r
    out = []
    buf = []

    def rec(z, o, run):
        # z zeros and o ones placed, current trailing run of ones has length run
        if z == t and o == ones_total:
            if run == 0 or run in E:
                out.append("".join(buf))
            return
        if z < t and (run == 0 or run in E):
            buf.append("0")
            rec(z + 1, o, 0)
            buf.pop()
        if o < ones_total and o < z:
            if E.finite_only and run + 1 > E.max_finite:
                return
            buf.append("1")
            rec(z, o + 1, run + 1)
            buf.pop()

    rec(0, 0, 0)
    return out


def count_words(t: int, r: int, E: DescentSet) -> int:
    return len(enumerate_words(t, r, E))


def pad_injection(w, E: DescentSet) -> str:
    s = _bits(w)
    z, o = s.count("0"), s.count("1")
    if not is_partial_dyck(s) or o > z or any(d not in E for d in descents(s)):
        raise InvalidInput("word is not a partial Dyck word with descents in E")
    k = E.s
    if k not in E:
        raise InvalidInput("s must belong to E")
    return s + ("0" * (k - 1) + "1" * k) * (z - o)


# plane trees are nested tuples: a vertex is the tuple of its children

def tree_size(tree) -> int:
    return 1 + sum(tree_size(c) for c in tree)


def tree_to_dyck(tree) -> str:
    parts = []

    def dfs(v):
        parts.append("0" * len(v) + "1")
        for c in v:
            dfs(c)

    try:
        dfs(tuple(tree))
    except TypeError as exc:
        raise InvalidInput("a tree is a nested tuple of children") from exc
    raw = "".join(parts)[:-1]  # the last vertex is a leaf; drop its 1
    return "".join("1" if b == "0" else "0" for b in reversed(raw))


def dyck_to_tree(w):
    s = _bits(w)
    if not is_full_dyck(s):
        raise InvalidInput("not a full Dyck word")
    raw = "".join("1" if b == "0" else "0" for b in reversed(s)) + "1"
    degs = [len(x) - 1 for x in re.findall(r"0*1", raw)]
    pos = 0

    def build():
        nonlocal pos
        d = degs[pos]
        pos += 1
        return tuple(build() for _ in range(d))

    tree = build()
    if pos != len(degs):
        raise InvalidInput("word does not encode a single tree")
    return tree


def tree_degrees(tree) -> list:
    out = [len(tree)]
    for c in tree:
        out += tree_degrees(c)
    return out


def all_trees(n: int):
    """All plane trees with n vertices."""
    if n == 1:
        return [()]
    res = []

    def forests(m):
        if m == 0:
            return [()]
        acc = []
        for first in range(1, m + 1):
            for t in all_trees(first):
                for rest in forests(m - first):
                    acc.append((t,) + rest)
        return acc

    for f in forests(n - 1):
        res.append(f)
    return res
