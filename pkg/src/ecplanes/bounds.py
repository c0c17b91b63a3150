"""Closed-form probability bounds and the feasibility search for c-colorings of
large projective planes, evaluated in log space.

Orders n may be plain numbers or LogReal values (for n far beyond float range).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NoTransition
from .logreal import ONE, ZERO, LogReal

LN10 = math.log(10)


@dataclass(frozen=True)
class BoundsConfig:
    a_max: int = 64
    b_max: int = 64
    m_max: int = 400
    exp_lo: float = 0.5
    exp_hi: float = 250.0
    exp_step: float = 0.5
    resolution: float = 0.1

    @classmethod
    def load(cls, path) -> "BoundsConfig":
        with open(path) as fh:
            data = json.load(fh)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**data)
        if min(cfg.a_max, cfg.b_max) < 1 or cfg.m_max < 2 or cfg.exp_step <= 0:
            raise DomainError("config caps must be positive")
        return cfg


DEFAULT = BoundsConfig()


def order(n) -> LogReal:
    """Accept n as int, float or LogReal."""
    if isinstance(n, LogReal):
        return n
    if n <= 0:
        raise DomainError("order must be positive")
    return LogReal.from_float(n)


def order_from_exponent(e: float) -> LogReal:
    return LogReal.from_log(e * LN10)


# -- line-type probability bounds

def chernoff_upper(np_: float, a: float) -> float:
    if np_ <= 0 or a <= 0:
        raise DomainError("chernoff bounds need np > 0 and a > 0")
    return math.exp(-a * a / (2 * (np_ + a / 3)))


def chernoff_lower(np_: float, a: float) -> float:
    if np_ <= 0 or a <= 0:
        raise DomainError("chernoff bounds need np > 0 and a > 0")
    return math.exp(-a * a / (2 * np_))


def _balanced_parts(N: int, c: int) -> list:
    return [(N + i) // c for i in range(c)]


def multinomial_peak_prob(m: int, k: int, c: int) -> LogReal:
    """Largest multinomial probability of m-k uniform draws over c classes."""
    if not (m > k >= 0) or c < 2:
        raise DomainError("need m > k >= 0 and c >= 2")
    N = m - k
    parts = _balanced_parts(N, c)
    if N <= 60:
        num = math.factorial(N)
        for p in parts:
            num //= math.factorial(p)
        fr = Fraction(num, c ** N)
        return LogReal.from_log(math.log(fr.numerator) - math.log(fr.denominator))
    ln = math.lgamma(N + 1) - sum(math.lgamma(p + 1) for p in parts) - N * math.log(c)
    return LogReal.from_log(ln)


def type_vectors_at(D: int, c: int) -> int:
    """Per-distance count 2^c C(D+c-1, c-1); an upper bound, not tight."""
    if D < 0 or c < 1:
        raise DomainError("need D >= 0 and c >= 1")
    return 2 ** c * math.comb(D + c - 1, c - 1)


def type_vectors_within(D: int, c: int) -> int:
    if D < 0 or c < 1:
        raise DomainError("need D >= 0 and c >= 1")
    return 2 ** c * math.comb(D + c, c)


def _lnln(n) -> tuple:
    N = order(n)
    if N < 3:
        raise DomainError("bounds need n >= 3")
    return N, N.lnmag


def dangerous_pair_bound(n) -> LogReal:
    _, L = _lnln(n)
    return LogReal.from_log(9 * math.log(L) - 3.5 * L)


def triple_bound(n) -> LogReal:
    _, L = _lnln(n)
    return LogReal.from_log(18 * math.log(L) - L)


def five_star_bound(n) -> LogReal:
    _, L = _lnln(n)
    return LogReal.from_log(45 * math.log(L) - 0.5 * L)


# -- partial coloring plus entropy compression

def log_binomial(x, k: int) -> LogReal:
    """C(x, k) for real (or LogReal) x and integer k >= 0 as a falling factorial.

    Equal to the Gamma-function generalisation for integer k. A vanishing
    factor gives 0; a negative one means x < k-1 with x non-integral, which
    is outside the range where these bounds mean anything.
    """
    X = LogReal.from_float(x)
    acc = 0.0
    for i in range(k):
        f = X - i
        if f.sign == 0:
            return ZERO
        if f.sign < 0:
            raise DomainError("binomial upper argument below k-1")
        acc += f.lnmag
    return LogReal.from_log(acc - math.lgamma(k + 1))


def K_factor(n, d: int) -> LogReal:
    if d < 1:
        raise DomainError("d must be at least 1")
    N, L = _lnln(n)
    den = N + 1 - 11 * L - N.sqrt()
    if den.sign <= 0:
        raise DomainError("n + 1 - 11 ln n - sqrt(n) must be positive")
    x = 22 * L + d
    lb = math.lgamma(x + 1) - math.lgamma(d + 1) - math.lgamma(x - d + 1)
    ln = d * math.log(2) + lb + d / 2 * math.log(d) - (d - 1) / 2 * (math.log(2 * math.pi) + den.lnmag)
    return LogReal.from_log(ln)


def P_a_bound(n, d: int, a: int, K: LogReal | None = None) -> LogReal:
    if a < 1:
        raise DomainError("a must be at least 1")
    N, _ = _lnln(n)
    K = K_factor(N, d) if K is None else K
    NN = N * N + N
    return (K ** (a + 1)) * (NN + 1) * log_binomial(NN, a + 1)


def P_b_bound(n, d: int, b: int, K: LogReal | None = None) -> LogReal:
    if b < 1:
        raise DomainError("b must be at least 1")
    N, L = _lnln(n)
    K = K_factor(N, d) if K is None else K
    NN = N * N + N
    tail = NN - (b + 1)
    if tail.sign <= 0:
        raise DomainError("n^2 + n - (b+1) must be positive")
    return ((K ** (b + 1)) * (11 * L) * (NN + 1) * log_binomial(N + 1, b + 1)
            * (tail ** (b + 1)) / (N + 1))


@lru_cache(maxsize=None)
def _ec_from_log(ln_ab: float, m_max: int = 400) -> tuple:
    best, arg = math.inf, 0
    for m in range(2, m_max + 1):
        ln = math.log(m / (m - 1)) + (math.lgamma(m + 1) + ln_ab + math.log(m - 1)) / m
        if ln < best:
            best, arg = ln, m
    return math.exp(best), arg


def ec_color_requirement(a, b, m_max: int = 400) -> tuple:
    """min over m of (m/(m-1)) (m! a b (m-1))^(1/m), with the smallest argmin."""
    if a < 1 or b < 1:
        raise DomainError("a and b must be at least 1")
    return _ec_from_log(math.log(a) + math.log(b), m_max)


def whole_plane_requirement(n, m_max: int = 400) -> tuple:
    """Colors needed when every point starts uncolored: each point lies in
    n^2 (n+1) pairs of lines whose symmetric difference contains it."""
    N = order(n)
    return _ec_from_log((N * N * (N + 1)).lnmag, m_max)


@dataclass(frozen=True)
class FeasibilityVerdict:
    ok: bool
    route: str | None = None  # "ec" (whole plane) or "lll"
    witness: tuple | None = None  # (a, b, m_bar, d)
    ec_requirement: float | None = None
    log10_Pa_plus_Pb: float | None = None
    feasible_ec: bool = False
    feasible_lll: bool = False


class _LLLTables:
    """Lazily evaluated ln P_a and ln P_b for one (n, d)."""

    def __init__(self, N: LogReal, d: int):
        self.N = N
        self.d = d
        try:
            self.K = K_factor(N, d)
        except DomainError:
            self.K = None
        self._pa: dict = {}
        self._pb: dict = {}

    def _get(self, cache, fn, k):
        if k not in cache:
            try:
                cache[k] = fn(self.N, self.d, k, K=self.K)
            except DomainError:
                cache[k] = None
        return cache[k]

    def sum(self, a, b):
        if self.K is None:
            return None
        pa = self._get(self._pa, P_a_bound, a)
        pb = self._get(self._pb, P_b_bound, b)
        if pa is None or pb is None:
            return None
        return pa + pb


def _lll_route(N: LogReal, c: int, cfg: BoundsConfig):
    tables = _LLLTables(N, c)
    if tables.K is None:
        return None, None
    best = None
    for s in range(2, cfg.a_max + cfg.b_max + 1):
        for a in range(max(1, s - cfg.b_max), min(cfg.a_max, s - 1) + 1):
            b = s - a
            val, m = ec_color_requirement(a, b, cfg.m_max)
            if val > c:
                continue
            tot = tables.sum(a, b)
            if tot is None:
                continue
            if tot < ONE:
                return (a, b, m, c, val, tot), None
            if best is None or tot < best:
                best = tot
    return None, best


def feasible(n, c: int, cfg: BoundsConfig = DEFAULT) -> FeasibilityVerdict:
    """Can a plane of order n be legitimately colored with c colors?

    Two routes: the whole-plane entropy-compression bound (all points
    uncolored) and the LLL partial coloring with d = c colors followed by
    entropy compression on the (a, b) leftovers.
    """
    N = order(n)
    if N < 3:
        raise DomainError("feasibility needs n >= 3")
    val0, m0 = whole_plane_requirement(N, cfg.m_max)
    ok_ec = val0 <= c
    hit, best = _lll_route(N, c, cfg)
    if hit is not None:
        a, b, m, d, val, tot = hit
        return FeasibilityVerdict(True, "lll", (a, b, m, d), val, tot.log10(), ok_ec, True)
    if ok_ec:
        return FeasibilityVerdict(True, "ec", (None, None, m0, 0), val0, None, True, False)
    lg = best.log10() if best is not None and best.sign > 0 else None
    return FeasibilityVerdict(False, None, None, None, lg, False, False)


def check_witness(n, c: int, verdict: FeasibilityVerdict, cfg: BoundsConfig = DEFAULT) -> bool:
    """Re-evaluate both constraints from a verdict's witness."""
    if not verdict.ok:
        return False
    a, b, m, d = verdict.witness
    if verdict.route == "ec":
        val, mm = whole_plane_requirement(n, cfg.m_max)
        return val <= c and mm == m
    val, mm = ec_color_requirement(a, b, cfg.m_max)
    tot = P_a_bound(n, d, a) + P_b_bound(n, d, b)
    return val <= c and mm == m and d == c and tot < ONE


def exponent_grid(lo: float, hi: float, step: float) -> list:
    k = int(round((hi - lo) / step))
    return [round(lo + i * step, 10) for i in range(k + 1)]


def min_feasible_exponent(c: int, lo_exp: float | None = None, hi_exp: float | None = None,
                          cfg: BoundsConfig = DEFAULT) -> float:
    """Decimal exponent where the LLL route becomes feasible for good.

    A coarse scan checks that the pattern is infeasible-then-feasible; the
    crossing cell is then bisected down to cfg.resolution.
    """
    lo = cfg.exp_lo if lo_exp is None else lo_exp
    hi = cfg.exp_hi if hi_exp is None else hi_exp
    if not lo < hi <= 300:
        raise DomainError("need lo < hi <= 300")

    def lll_ok(e):
        return _lll_route(order_from_exponent(e), c, cfg)[0] is not None

    grid = exponent_grid(lo, hi, cfg.exp_step)
    scan = [(e, lll_ok(e)) for e in grid]
    first = next((i for i, (_, ok) in enumerate(scan) if ok), None)
    if first is None:
        raise NoTransition(f"no feasible exponent for c={c} in [{lo}, {hi}]", scan)
    if not all(ok for _, ok in scan[first:]):
        raise NoTransition(f"feasibility is not monotone for c={c}", scan)
    if first == 0:
        return grid[0]
    left, right = grid[first - 1], grid[first]
    while right - left > cfg.resolution / 2:
        mid = (left + right) / 2
        if lll_ok(mid):
            right = mid
        else:
            left = mid
    return right


@dataclass(frozen=True)
class RegionPoint:
    c: int
    n_exponent: float
    feasible: bool
    feasible_ec: bool
    feasible_lll: bool
    witness: tuple | None
    ec_requirement: float | None
    log10_Pa_plus_Pb: float | None


def region_scan(c_min: int, c_max: int, exp_grid, cfg: BoundsConfig = DEFAULT) -> list:
    rows = []
    for c in range(c_min, c_max + 1):
        for e in exp_grid:
            v = feasible(order_from_exponent(e), c, cfg)
            rows.append(RegionPoint(c, e, v.ok, v.feasible_ec, v.feasible_lll, v.witness,
                                    v.ec_requirement, v.log10_Pa_plus_Pb))
    return rows


REGION_COLUMNS = ["c", "n_exponent", "feasible", "a", "b", "m_bar", "ec_requirement", "log10_Pa_plus_Pb"]


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def region_csv(rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(REGION_COLUMNS)
    for r in rows:
        a, b, m, _ = r.witness if r.witness else (None, None, None, None)
        w.writerow([_fmt(v) for v in (r.c, r.n_exponent, r.feasible, a, b, m,
                                       r.ec_requirement, r.log10_Pa_plus_Pb)])
    return out.getvalue()


def region_json(rows) -> list:
    out = []
    for r in rows:
        d = asdict(r)
        d["witness"] = list(r.witness) if r.witness else None
        out.append(d)
    return out
