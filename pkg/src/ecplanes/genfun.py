"""phi_E series, coefficients of y = x phi_E(y), the critical point tau and
growth rate gamma, and the leading-term asymptotics of simply generated trees."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .dyck import DescentSet
from .errors import DomainError, NoRoot

MAX_N = 64


class PhiSeries:
    """phi_E(x) = 1 + sum over i in E of x^i, with a closed form for the tail."""

    def __init__(self, E: DescentSet):
        self.E = E
        self.R = math.inf if E.finite_only else 1.0

    def coeff(self, i: int) -> int:
        if i == 0:
            return 1
        return 1 if i in self.E else 0

    def _finite(self):
        # finite exceptions not already generated by the tail
        E = self.E
        if E.start is None:
            return sorted(E.finite)
        return sorted(v for v in E.finite
                      if not (v >= E.start and (v - E.start) % E.period == 0))

    def derivs(self, x: float) -> tuple:
        """(phi, phi', phi'') at x."""
        f0, f1, f2 = 1.0, 0.0, 0.0
        for i in self._finite():
            f0 += x ** i
            f1 += i * x ** (i - 1)
            f2 += i * (i - 1) * x ** (i - 2) if i >= 2 else 0.0
        E = self.E
        if E.start is not None:
            s, p = E.start, E.period
            # g = x^s / (1 - x^p)
            u = 1 - x ** p
            num = x ** s
            num1 = s * x ** (s - 1)
            num2 = s * (s - 1) * x ** (s - 2) if s >= 2 else 0.0
            u1 = -p * x ** (p - 1)
            u2 = -p * (p - 1) * x ** (p - 2) if p >= 2 else 0.0
            g = num / u
            g1 = (num1 * u - num * u1) / u ** 2
            g2 = (num2 * u - num * u2) / u ** 2 - 2 * u1 * (num1 * u - num * u1) / u ** 3
            f0 += g
            f1 += g1
            f2 += g2
        return f0, f1, f2

    def __call__(self, x):
        return self.derivs(x)[0]


def _truncated_mul(a, b, N):
    out = [0] * (N + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(0, N + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
    return out


def series_coefficients(E: DescentSet, N: int, iterations: int | None = None) -> list:
    """[C_0, ..., C_N] where C_t is the coefficient of z^(t+1) in y = z phi_E(y)."""
    if not 0 <= N <= MAX_N:
        raise DomainError(f"N must lie in [0, {MAX_N}]")
    D = N + 1  # highest degree kept
    members = E.members_upto(D)
    y = [0] * (D + 1)
    for _ in range(N + 1 if iterations is None else iterations):
        phi = [0] * (D + 1)
        phi[0] = 1
        pw = [1] + [0] * D
        k = 0
        for i in members:
            while k < i:
                pw = _truncated_mul(pw, y, D)
                k += 1
            for j in range(D + 1):
                phi[j] += pw[j]
        y = [0] + phi[:D]
    return y[1:]


@dataclass(frozen=True)
class TauGamma:
    tau: float
    gamma: float
    residual: float
    gamma_alt: float  # phi(tau)/tau, equal to gamma at the critical point


def critical_poly(k: int, x: float) -> float:
    """(2k-3)x^(2k+2) + (1-2k)x^(2k) + x^4 - 2x^2 + 1; shares its roots in (0,1)
    with phi - x phi' for E = 2N+2k."""
    return (2 * k - 3) * x ** (2 * k + 2) + (1 - 2 * k) * x ** (2 * k) + x ** 4 - 2 * x ** 2 + 1


def solve_tau_gamma(E: DescentSet, tol: float = 1e-15) -> TauGamma:
    phi = PhiSeries(E)

    def f(x):
        f0, f1, _ = phi.derivs(x)
        return f0 - x * f1

    def fp(x):
        return -x * phi.derivs(x)[2]

    lo = 1e-9
    if phi.R == math.inf:
        hi = 1.0
        while f(hi) >= 0:
            hi *= 2
            if hi > 1e6:
                raise NoRoot(f"phi - x phi' keeps its sign on (0, inf) for E = {E}")
    else:
        hi = phi.R - 1e-9
    if f(lo) * f(hi) > 0:
        raise NoRoot(f"no sign change of phi - x phi' on the bracket for E = {E}")
    # bisection down to a small bracket, then Newton polishing inside it
    while hi - lo > 1e-6:
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    x = (lo + hi) / 2
    for _ in range(50):
        step = f(x) / fp(x)
        nx = x - step
        if not lo <= nx <= hi:
            break
        x = nx
        if abs(step) < tol:
            break
    f0, f1, _ = phi.derivs(x)
    res = abs(f0 - x * f1)
    return TauGamma(x, f1, res, f0 / x)


TABLE_31_GIRTHS = (3, 7, 53, 220)


def girth_descent_set(g: int) -> DescentSet:
    """Girth g >= 2l+1 forces descents >= 2 max(2, l)."""
    l = (g - 1) // 2
    return DescentSet.even_from(2 * max(2, l))


def table_31() -> list:
    rows = []
    for g in TABLE_31_GIRTHS:
        E = girth_descent_set(g)
        tg = solve_tau_gamma(E)
        rows.append({"g": g, "E": str(E), "tau": tg.tau, "gamma": tg.gamma})
    return rows


def table_31_csv(rows=None) -> str:
    rows = table_31() if rows is None else rows
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["g", "tau", "gamma"])
    for r in rows:
        w.writerow([r["g"], f"{r['tau']:.10f}", f"{r['gamma']:.10f}"])
    return out.getvalue()


def acyclic_colors(gamma: float, delta: int) -> int:
    """ceil((2 + gamma)(Delta - 1))."""
    return math.ceil(round((2 + gamma) * (delta - 1), 9))


def asymptotic_count(E: DescentSet, t: int) -> float:
    """Leading term d sqrt(phi/(2 pi phi'')) phi'(tau)^n / n^(3/2) for y_n, n = t+1."""
    n = t + 1
    d = E.gcd
    if (n - 1) % d != 0:
        return 0.0
    tg = solve_tau_gamma(E)
    f0, f1, f2 = PhiSeries(E).derivs(tg.tau)
    return d * math.sqrt(f0 / (2 * math.pi * f2)) * math.exp(n * math.log(f1)) / n ** 1.5


def fibonacci_gf(n: int) -> int:
    """Coefficient of x^n in x/(1 - x - x^2)."""
    if n < 0:
        raise DomainError("n must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    """T_0 = 1, T_{n+1} = sum T_i T_{n-i}."""
    if n < 0:
        raise DomainError("n must be non-negative")
    T = [1]
    for m in range(n):
        T.append(sum(T[i] * T[m - i] for i in range(m + 1)))
    return T[n]


def plane_trees(n: int) -> int:
    """Number of plane trees with n >= 1 vertices."""
    if n < 1:
        raise DomainError("n must be positive")
    return catalan(n - 1)


def singleton_gamma(m: int) -> float:
    """Closed form for E = {m}: tau = (m-1)^(-1/m), gamma = m (m-1)^((1-m)/m)."""
    return m * (m - 1) ** ((1 - m) / m)
