"""Entropy, relative entropy, Kraft sums and prefix codes built from lengths."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, KraftViolated

NORM_TOL = 1e-12


@dataclass(frozen=True)
class Distribution:
    probs: tuple
    labels: tuple | None = None

    def __post_init__(self):
        p = tuple(float(v) for v in self.probs)
        object.__setattr__(self, "probs", p)
        if not p or any(v < 0 or math.isnan(v) for v in p):
            raise DomainError("probabilities must be non-negative")
        if abs(math.fsum(p) - 1) > NORM_TOL:
            raise DomainError(f"probabilities sum to {math.fsum(p)}, not 1")
        if self.labels is not None and len(self.labels) != len(p):
            raise DomainError("one label per outcome")

    def __len__(self):
        return len(self.probs)


def _dist(p) -> Distribution:
    return p if isinstance(p, Distribution) else Distribution(tuple(p))


def _check_base(base):
    if base <= 1:
        raise DomainError("log base must exceed 1")


def entropy(p, base: float = 2) -> float:
    _check_base(base)
    p = _dist(p)
    return -math.fsum(v * math.log(v) for v in p.probs if v > 0) / math.log(base)


def relative_entropy(p, q, base: float = 2) -> float:
    """D(p||q); +inf when p puts mass where q has none."""
    _check_base(base)
    p, q = _dist(p), _dist(q)
    if len(p) != len(q):
        raise DomainError("distributions must share a support")
    terms = []
    for a, b in zip(p.probs, q.probs):
        if a == 0:
            continue
        if b == 0:
            return math.inf
        terms.append(a * math.log(a / b))
    return max(0.0, math.fsum(terms)) / math.log(base) if terms else 0.0


@dataclass(frozen=True)
class PrefixCode:
    D: int
    words: tuple

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))

    def lengths(self):
        return [len(w) for w in self.words]

    def is_prefix_free(self) -> bool:
        ws = sorted(self.words)
        return all(not ws[i + 1].startswith(ws[i]) for i in range(len(ws) - 1))

    def to_json(self) -> str:
        return json.dumps({"D": self.D, "words": list(self.words)})

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(int(d["D"]), tuple(d["words"]))


def kraft_sum(lengths, D: int = 2) -> Fraction:
    if D < 2:
        raise DomainError("alphabet size must be at least 2")
    if any(int(l) != l or l < 1 for l in lengths):
        raise DomainError("lengths must be positive integers")
    return sum((Fraction(1, D ** int(l)) for l in lengths), Fraction(0))


def _digits(value: int, length: int, D: int) -> str:
    out = []
    for _ in range(length):
        value, r = divmod(value, D)
        out.append(str(r) if r < 10 else chr(ord("a") + r - 10))
    return "".join(reversed(out))


def code_from_lengths(lengths, D: int = 2) -> PrefixCode:
    """Walk the D-ary tree in order of increasing length, taking the leftmost
    free node each time. Words come back in input order."""
    total = kraft_sum(lengths, D)
    if total > 1:
        raise KraftViolated(f"Kraft sum {total} exceeds 1")
    if D > 36:
        raise DomainError("alphabet size above 36 has no single-character digits")
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    words = [None] * len(lengths)
    left = Fraction(0)  # left end of the next free interval in [0, 1)
    for i in order:
        l = int(lengths[i])
        node = left * D ** l
        words[i] = _digits(int(node), l, D)
        left += Fraction(1, D ** l)
    return PrefixCode(D, tuple(words))


def code_intervals(code: PrefixCode) -> list:
    """[start, end) subinterval of [0, 1) named by each word."""
    out = []
    for w in code.words:
        start = sum(Fraction(int(ch, 36), code.D ** (k + 1)) for k, ch in enumerate(w))
        out.append((start, start + Fraction(1, code.D ** len(w))))
    return out


def _shannon_length(p: float, D: int) -> int:
    # smallest l with D^l * p >= 1, exactly on the binary value of p
    fp = Fraction(p)
    l = 0
    while fp * D ** l < 1:
        l += 1
    return l


def shannon_lengths(p, D: int = 2) -> list:
    """ceil(-log_D p_i); None for zero-probability outcomes.

    A lone outcome gets length 1 rather than the empty word.
    """
    if D < 2:
        raise DomainError("alphabet size must be at least 2")
    p = _dist(p)
    out = [None if v == 0 else _shannon_length(v, D) for v in p.probs]
    return [1 if l == 0 else l for l in out]


def expected_length(p, lengths) -> float:
    p = _dist(p)
    if len(lengths) != len(p):
        raise DomainError("one length per outcome")
    return math.fsum(v * l for v, l in zip(p.probs, lengths) if v > 0)


def ec_code_lengths(step_distribution) -> list:
    """Binary code lengths for one step's outcome distribution."""
    return shannon_lengths(step_distribution, 2)
