from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple


class CycleFix(NamedTuple):
    k: int
    l: int


class Triple(NamedTuple):
    alpha: int
    beta: int
    gamma: int


def entry_to_json(e):
    if e is None:
        return None
    if isinstance(e, CycleFix):
        return {"k": e.k, "l": e.l}
    return {"alpha": e.alpha, "beta": e.beta, "gamma": e.gamma}


def entry_from_json(d):
    if d is None:
        return None
    if "k" in d:
        return CycleFix(int(d["k"]), int(d["l"]))
    return Triple(int(d["alpha"]), int(d["beta"]), int(d["gamma"]))


@dataclass
class RandomTape:
    entries: list
    high: int | None = None  # declared range [1, high]; None means "checked by the runner"

    @classmethod
    def uniform(cls, seed: int, length: int, high: int) -> "RandomTape":
        rng = random.Random(seed)
        return cls([rng.randint(1, high) for _ in range(length)], high)

    def __len__(self):
        return len(self.entries)


@dataclass
class VariableTapes:
    """One stream per variable; the runner reads each from its own cursor."""
    streams: list

    @classmethod
    def uniform(cls, seed: int, ranges, length: int) -> "VariableTapes":
        rng = random.Random(seed)
        return cls([[rng.randint(1, r) for _ in range(length)] for r in ranges])


@dataclass
class TraceOutcome:
    status: str  # "success" or "running"
    state: list  # final coloring / assignment; 0 means unset
    steps: int
    record: list
    cursor: object  # int for a single tape, list of ints for per-variable tapes
    reason: str = ""  # why a running outcome stopped
    trace: list = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.status == "success"

    def to_dict(self):
        return {
            "status": self.status,
            "reason": self.reason,
            "steps": [
                {"assigned": a, "tape_value": v, "record_entry": entry_to_json(r)}
                for (a, v), r in zip(self.trace, self.record)
            ],
            "final_state": list(self.state),
        }
