"""Range verification of the constructions and the JSON report it produces."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from datetime import datetime, timezone

from p2turan import __version__
from p2turan.constructions import build_extremal, family_for
from p2turan.digraph import Digraph, VertexSet
from p2turan.freeness import check_neighbor_bound, check_successor_bound, is_free, is_free_naive
from p2turan.formulas import g, phi

NAIVE_MAX_ORDER = 30
NEIGHBOR_SAMPLES = 100


def random_subset_excluding(rng: random.Random, n: int, u: int) -> VertexSet:
    others = [v for v in range(n) if v != u]
    k = rng.randint(1, len(others))
    return VertexSet.of(n, rng.sample(others, k))


def neighbor_bound_suite(d: Digraph, t: int, rng: random.Random, samples: int = NEIGHBOR_SAMPLES) -> bool:
    if d.order < 2:
        return True
    for _ in range(samples):
        u = rng.randrange(d.order)
        if not check_neighbor_bound(d, t, u, random_subset_excluding(rng, d.order, u)):
            return False
    return True


def successor_bound_suite(d: Digraph, t: int) -> bool:
    return all(check_successor_bound(d, t, v) for v in range(d.order))


@dataclass
class Report:
    command: list[str]
    records: list[dict] = field(default_factory=list)
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @property
    def overall(self) -> str:
        return "pass" if all(r["pass"] for r in self.records) else "fail"

    def add(self, record: dict) -> None:
        self.records.append(record)

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "timestamp": self.timestamp,
            "records": self.records,
            "overall": self.overall,
        }


def verify_one(n: int, t: int) -> dict:
    rec: dict = {"n": n, "t": t, "family": family_for(n, t), "phi": phi(n, t), "g": g(n, t)}
    try:
        d, spec = build_extremal(n, t)
    except (ValueError, AssertionError) as exc:
        rec.update(arcs=None, free_fast=False, free_naive=None, neighbor_bound_pass=False,
                   successor_bound_pass=False, error=str(exc), **{"pass": False})
        return rec
    rec["arcs"] = d.size()
    rec["free_fast"] = is_free(d, t)
    rec["free_naive"] = is_free_naive(d, t) if n <= NAIVE_MAX_ORDER else None
    rec["neighbor_bound_pass"] = neighbor_bound_suite(d, t, random.Random(f"{n}:{t}"))
    rec["successor_bound_pass"] = successor_bound_suite(d, t)
    rec["pass"] = (
        rec["arcs"] == rec["phi"]
        and rec["free_fast"]
        and rec["free_naive"] is not False
        and rec["neighbor_bound_pass"]
        and rec["successor_bound_pass"]
    )
    return rec


def verify_range(t: int, n_lo: int, n_hi: int, command: list[str] | None = None) -> Report:
    if t < 2:
        raise ValueError(f"verify needs t >= 2, got {t}")
    if n_lo < t + 6:
        raise ValueError(f"verify needs n_lo >= t+6, got n_lo={n_lo}, t={t}")
    if n_hi < n_lo:
        raise ValueError("empty range")
    report = Report(command or ["verify", "--t", str(t), "--n-lo", str(n_lo), "--n-hi", str(n_hi)])
    for n in range(n_lo, n_hi + 1):
        report.add(verify_one(n, t))
    return report
