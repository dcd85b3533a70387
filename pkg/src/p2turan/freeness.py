"""Detection of P_{t+1,2} copies: t+1 directed 2-paths sharing both endpoints.

A digraph is free at ``t`` when every ordered pair ``(u, w)`` with ``u != w``
has at most ``t`` midpoints ``m`` with ``u -> m -> w``.  Pairs with ``u == w``
never count: a 2-cycle is not a path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from p2turan.digraph import Digraph, VertexSet, iter_bits


@dataclass(frozen=True)
class FreenessParams:
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")


def _t_of(p: FreenessParams | int) -> int:
    return FreenessParams(p).t if isinstance(p, int) else p.t


@dataclass(frozen=True)
class Witness:
    source: int
    target: int
    midpoints: VertexSet
    threshold: int

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise ValueError("witness source and target must differ")
        if len(self.midpoints) < self.threshold + 1:
            raise ValueError("witness needs at least t+1 midpoints")

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "midpoints": self.midpoints.to_list(),
            "t": self.threshold,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def validate(self, d: Digraph) -> bool:
        return all(d.has_arc(self.source, m) and d.has_arc(m, self.target) for m in self.midpoints)


def path2_count(d: Digraph, u: int, w: int) -> int:
    """Number of distinct midpoints of 2-paths ``u -> m -> w``."""
    if u == w:
        raise ValueError("2-path endpoints must be distinct")
    return (d.rows[u] & d.in_bits(w)).bit_count()


def max_path2(d: Digraph) -> tuple[int, int, int]:
    """Largest 2-path multiplicity and the lexicographically least pair attaining it."""
    n = d.order
    if n < 2:
        raise ValueError("max_path2 needs at least 2 vertices")
    cols = d.columns()
    best = (-1, 0, 1)
    for u, row in enumerate(d.rows):
        for w in range(n):
            if w == u:
                continue
            c = (row & cols[w]).bit_count()
            if c > best[0]:
                best = (c, u, w)
    return best


def _first_violation(d: Digraph, t: int) -> tuple[int, int, int] | None:
    cols = d.columns()
    for u, row in enumerate(d.rows):
        if row.bit_count() <= t:
            continue
        for w, col in enumerate(cols):
            if w != u and (row & col).bit_count() > t:
                return u, w, row & col
    return None


def is_free(d: Digraph, p: FreenessParams | int) -> bool:
    return _first_violation(d, _t_of(p)) is None


def find_witness(d: Digraph, p: FreenessParams | int) -> Witness | None:
    """Least violating pair with its full midpoint set, or ``None`` when free."""
    t = _t_of(p)
    hit = _first_violation(d, t)
    if hit is None:
        return None
    u, w, mids = hit
    return Witness(u, w, VertexSet(mids, d.order), t)


# -- independent oracle -------------------------------------------------------
# Deliberately plain: a 0/1 matrix and an explicit triple loop, no bit tricks.


def _matrix(d: Digraph) -> list[list[int]]:
    n = d.order
    return [[1 if d.has_arc(i, j) else 0 for j in range(n)] for i in range(n)]


def path2_table_naive(d: Digraph) -> list[list[int]]:
    a = _matrix(d)
    n = d.order
    counts = [[0] * n for _ in range(n)]
    for u in range(n):
        for m in range(n):
            if not a[u][m]:
                continue
            for w in range(n):
                if w != u and a[m][w]:
                    counts[u][w] += 1
    return counts


def find_violation_naive(d: Digraph, p: FreenessParams | int) -> tuple[int, int] | None:
    t = _t_of(p)
    counts = path2_table_naive(d)
    n = d.order
    for u in range(n):
        for w in range(n):
            if u != w and counts[u][w] > t:
                return u, w
    return None


def is_free_naive(d: Digraph, p: FreenessParams | int) -> bool:
    return find_violation_naive(d, p) is None


# -- lemma checks ---------------------------------------------------------------


def check_neighbor_bound(d: Digraph, p: FreenessParams | int, u: int, S: VertexSet) -> bool:
    """Whether ``e(N+(u), S) <= t|S|``; always true on free digraphs."""
    if u in S:
        raise ValueError(f"vertex {u} must not lie in S")
    t = _t_of(p)
    return d.arc_count(d.out_neighbors(u), S) <= t * len(S)


def check_successor_bound(d: Digraph, p: FreenessParams | int, v: int) -> bool:
    """Every non-successor ``u != v`` of ``v`` sends at most ``d+(v) - tau(v) + t``
    arcs into ``N+(v)``."""
    t = _t_of(p)
    succ = d.rows[v]
    cap = succ.bit_count() - d.tau(v) + t
    for u, row in enumerate(d.rows):
        if u == v or succ >> u & 1:
            continue
        if (row & succ).bit_count() > cap:
            return False
    return True


# -- incremental table ------------------------------------------------------------


class PairCounts:
    """Mutable 2-path multiplicity table kept in step with arc edits.

    Owned by a single search worker.  ``remove`` is the exact inverse of
    ``add``, so backtracking replays the decision log in reverse.
    """

    __slots__ = ("n", "rows", "cols", "counts", "arcs")

    def __init__(self, n: int) -> None:
        self.n = n
        self.rows = [0] * n
        self.cols = [0] * n
        self.counts = [0] * (n * n)
        self.arcs = 0

    @classmethod
    def from_digraph(cls, d: Digraph) -> "PairCounts":
        pc = cls(d.order)
        for u, v in d.arcs():
            pc.add(u, v)
        return pc

    def get(self, u: int, w: int) -> int:
        return self.counts[u * self.n + w]

    def max_count(self) -> int:
        n = self.n
        return max((self.counts[u * n + w] for u in range(n) for w in range(n) if u != w), default=0)

    def blocked(self, u: int, v: int, t: int) -> bool:
        """Would adding ``u -> v`` push some pair above ``t`` midpoints?"""
        n, counts = self.n, self.counts
        for x in iter_bits(self.cols[u] & ~(1 << v)):
            if counts[x * n + v] >= t:
                return True
        base = u * n
        for y in iter_bits(self.rows[v] & ~(1 << u)):
            if counts[base + y] >= t:
                return True
        return False

    def add(self, u: int, v: int) -> None:
        n, counts = self.n, self.counts
        for x in iter_bits(self.cols[u] & ~(1 << v)):
            counts[x * n + v] += 1
        base = u * n
        for y in iter_bits(self.rows[v] & ~(1 << u)):
            counts[base + y] += 1
        self.rows[u] |= 1 << v
        self.cols[v] |= 1 << u
        self.arcs += 1

    def remove(self, u: int, v: int) -> None:
        self.rows[u] &= ~(1 << v)
        self.cols[v] &= ~(1 << u)
        self.arcs -= 1
        n, counts = self.n, self.counts
        for x in iter_bits(self.cols[u] & ~(1 << v)):
            counts[x * n + v] -= 1
        base = u * n
        for y in iter_bits(self.rows[v] & ~(1 << u)):
            counts[base + y] -= 1

    def to_digraph(self) -> Digraph:
        return Digraph(self.n, tuple(self.rows))
