"""Record -> words: R* (one word per step), R• (their concatenation) and the
0/1 mask R°, which is a partial Dyck word whose descents count resampled items."""
from __future__ import annotations

import math

from ..errors import DomainError, InvalidRecord
from .acyclic import theta_inv
from .tape import CycleFix, Triple


def _digits(x: int, base: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        x, r = divmod(x, base)
        out.append(r + 1)
    return tuple(out)


def digit_base(d: int, m: int, l: int) -> int:
    """Smallest B with B^l >= d m."""
    B = max(1, math.ceil((d * m) ** (1 / l)))
    while B ** l < d * m:
        B += 1
    while B > 1 and (B - 1) ** l >= d * m:
        B -= 1
    return B


def project_record(record, delta: int | None = None, table: dict | None = None) -> tuple:
    """Acyclic records need delta; generic records need table l -> (d_l, m_l)."""
    star = []
    for i, r in enumerate(record):
        if r is None:
            star.append((0,))
        elif isinstance(r, CycleFix):
            if delta is None or delta < 2 or r.k < 2:
                raise InvalidRecord(f"entry {i}: cycle entries need delta >= 2 and k >= 2")
            try:
                star.append((0,) + theta_inv(r.l, r.k, delta))
            except DomainError as exc:
                raise InvalidRecord(f"entry {i}: {exc}") from exc
        elif isinstance(r, Triple):
            if table is None or r.alpha not in table:
                raise InvalidRecord(f"entry {i}: no (d, m) for l = {r.alpha}")
            d, m = table[r.alpha]
            if not (1 <= r.beta <= d and 1 <= r.gamma <= m):
                raise InvalidRecord(f"entry {i}: indices out of range")
            B = digit_base(d, m, r.alpha)
            star.append((0,) + _digits((r.beta - 1) * m + r.gamma - 1, B, r.alpha))
        else:
            raise InvalidRecord(f"entry {i}: unknown record entry {r!r}")
    bullet = tuple(x for w in star for x in w)
    circle = "".join("0" if x == 0 else "1" for x in bullet)
    return star, bullet, circle


def word_str(word) -> str:
    if any(x > 9 for x in word):
        return ".".join(str(x) for x in word)
    return "".join(str(x) for x in word)
