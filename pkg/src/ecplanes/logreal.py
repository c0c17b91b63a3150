"""Sign plus natural-log magnitude scalars, for quantities like n^k at n ~ 10^250."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering


def logaddexp(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    m = max(a, b)
    return m + math.log1p(math.exp(min(a, b) - m))


def logsubexp(a: float, b: float) -> float:
    """ln(e^a - e^b) for a >= b."""
    if b == -math.inf:
        return a
    if a == b:
        return -math.inf
    return a + math.log(-math.expm1(b - a))


@total_ordering
@dataclass(frozen=True)
class LogReal:
    sign: int
    lnmag: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.sign == 0:
            object.__setattr__(self, "lnmag", -math.inf)

    @classmethod
    def from_float(cls, x) -> "LogReal":
        if isinstance(x, LogReal):
            return x
        if x == 0:
            return ZERO
        if isinstance(x, int):
            return cls(1 if x > 0 else -1, math.log(abs(x)))
        return cls(1 if x > 0 else -1, math.log(abs(float(x))))

    @classmethod
    def from_log(cls, lnmag: float, sign: int = 1) -> "LogReal":
        if lnmag == -math.inf:
            return ZERO
        return cls(sign, lnmag)

    def __float__(self):
        if self.sign == 0:
            return 0.0
        if self.lnmag > 709.7:
            return self.sign * math.inf
        return self.sign * math.exp(self.lnmag)

    def log10(self) -> float:
        if self.sign <= 0:
            raise ValueError("log10 of a non-positive value")
        return self.lnmag / math.log(10)

    def __neg__(self):
        return LogReal(-self.sign, self.lnmag) if self.sign else self

    def __abs__(self):
        return LogReal(abs(self.sign), self.lnmag)

    def __mul__(self, o):
        o = LogReal.from_float(o)
        if self.sign == 0 or o.sign == 0:
            return ZERO
        return LogReal(self.sign * o.sign, self.lnmag + o.lnmag)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = LogReal.from_float(o)
        if o.sign == 0:
            raise ZeroDivisionError("LogReal division by zero")
        if self.sign == 0:
            return ZERO
        return LogReal(self.sign * o.sign, self.lnmag - o.lnmag)

    def __rtruediv__(self, o):
        return LogReal.from_float(o) / self

    def __pow__(self, k):
        if self.sign == 0:
            return ZERO if k > 0 else ONE
        if self.sign < 0 and not float(k).is_integer():
            raise ValueError("fractional power of a negative value")
        s = -1 if (self.sign < 0 and int(k) % 2) else 1
        return LogReal(s, self.lnmag * k)

    def __add__(self, o):
        o = LogReal.from_float(o)
        if o.sign == 0:
            return self
        if self.sign == 0:
            return o
        if self.sign == o.sign:
            return LogReal(self.sign, logaddexp(self.lnmag, o.lnmag))
        big, small = (self, o) if self.lnmag >= o.lnmag else (o, self)
        if big.lnmag == small.lnmag:
            return ZERO
        return LogReal(big.sign, logsubexp(big.lnmag, small.lnmag))

    __radd__ = __add__

    def __sub__(self, o):
        return self + (-LogReal.from_float(o))

    def __rsub__(self, o):
        return LogReal.from_float(o) - self

    def sqrt(self):
        if self.sign < 0:
            raise ValueError("sqrt of a negative value")
        return LogReal(self.sign, self.lnmag / 2) if self.sign else ZERO

    def _key(self):
        if self.sign == 0:
            return (0, 0.0)
        return (self.sign, self.sign * self.lnmag)

    def __eq__(self, o):
        if not isinstance(o, (LogReal, int, float)):
            return NotImplemented
        return self._key() == LogReal.from_float(o)._key()

    def __lt__(self, o):
        return self._key() < LogReal.from_float(o)._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.sign == 0:
            return "LogReal(0)"
        return f"LogReal({'-' if self.sign < 0 else ''}e^{self.lnmag:.12g})"


ZERO = LogReal(0, -math.inf)
ONE = LogReal(1, 0.0)
