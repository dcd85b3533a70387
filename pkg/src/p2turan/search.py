"""Exact and heuristic search for ex(n, P_{t+1,2}) at small n.

``branch_and_bound`` splits the decision tree at a fixed depth into
independent prefix tasks.  Tasks never share an incumbent, so the merged
result (and node count) is the same for any number of workers.  Only the
time budget can break that: it depends on the wall clock.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from p2turan.constructions import build_extremal
from p2turan.digraph import Digraph
from p2turan.freeness import PairCounts, is_free, is_free_naive

EXHAUSTIVE_MAX_ORDER = 5
SPLIT_DEPTH = 6


@dataclass(frozen=True)
class SearchConfig:
    n: int
    t: int
    node_budget: int | None = None
    time_budget: float | None = None
    symmetry: bool = False
    seed_digraph: Digraph | None = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1 or self.t < 1:
            raise ValueError("n and t must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.seed_digraph is not None:
            if self.seed_digraph.order != self.n:
                raise ValueError("seed digraph has the wrong order")
            if not is_free(self.seed_digraph, self.t):
                raise ValueError("seed digraph is not free at t")


@dataclass(frozen=True)
class SearchResult:
    best_arcs: int
    best: Digraph
    optimal: bool
    nodes: int
    bound_used: int
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "best_arcs": self.best_arcs,
            "optimal": self.optimal,
            "nodes": self.nodes,
            "bound_used": self.bound_used,
            "elapsed": round(self.elapsed, 6),
        }


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _better(a: Digraph, b: Digraph | None) -> bool:
    """Merge order: more arcs first, then the lexicographically least bit string."""
    if b is None:
        return True
    sa, sb = a.size(), b.size()
    return sa > sb or (sa == sb and a.bit_key() < b.bit_key())


def _emit(d: Digraph, t: int) -> Digraph:
    if not is_free_naive(d, t):
        raise AssertionError("search produced a digraph that is not free")
    return d


# -- exhaustive -----------------------------------------------------------------


def exhaustive_max(n: int, t: int) -> SearchResult:
    """Enumerate every free digraph on ``n <= 5`` vertices.

    The only pruning is feasibility: once a pair exceeds ``t`` midpoints no
    superset is free.  Absent-before-present order makes the first maximizer
    met the lexicographically least one.
    """
    if n > EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"exhaustive search limited to n <= {EXHAUSTIVE_MAX_ORDER}; use branch_and_bound")
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    start = time.perf_counter()
    pairs = _pairs(n)
    total = len(pairs)
    pc = PairCounts(n)
    best: list = [-1, None]
    nodes = 0

    def walk(i: int) -> None:
        nonlocal nodes
        nodes += 1
        if i == total:
            if pc.arcs > best[0]:
                best[0], best[1] = pc.arcs, tuple(pc.rows)
            return
        walk(i + 1)
        u, v = pairs[i]
        if not pc.blocked(u, v, t):
            pc.add(u, v)
            walk(i + 1)
            pc.remove(u, v)

    walk(0)
    d = _emit(Digraph(n, best[1]), t)
    return SearchResult(best[0], d, True, nodes, n * (n - 1), time.perf_counter() - start)


# -- branch and bound --------------------------------------------------------------


class _Solver:
    """Depth-first search over row-major pair decisions, arc-present first.

    Symmetry mode requires the out-degree sequence to be nonincreasing.  Every
    digraph has a relabeling with that property and relabeling preserves arc
    count and freeness, so the optimum value is unchanged.
    """

    def __init__(self, n: int, t: int, symmetry: bool) -> None:
        self.n, self.t, self.symmetry = n, t, symmetry
        self.pairs = _pairs(n)
        self.pc = PairCounts(n)
        self.rowcnt = [0] * n

    def cap(self, u: int) -> int:
        if self.symmetry and u > 0:
            return self.rowcnt[u - 1]
        return self.n - 1

    def can_add(self, i: int) -> bool:
        u, v = self.pairs[i]
        return self.rowcnt[u] < self.cap(u) and not self.pc.blocked(u, v, self.t)

    def add(self, i: int) -> None:
        u, v = self.pairs[i]
        self.pc.add(u, v)
        self.rowcnt[u] += 1

    def remove(self, i: int) -> None:
        u, v = self.pairs[i]
        self.pc.remove(u, v)
        self.rowcnt[u] -= 1

    def bound(self, i: int) -> int:
        """Optimistic number of arcs still addable from pair ``i`` on.

        Admissible: midpoint counts only grow as arcs are added, so a pair
        blocked now stays blocked in the whole subtree; each row can gain at
        most its unblocked undecided pairs, and under symmetry at most its
        remaining out-degree room.
        """
        pairs, pc, t, n = self.pairs, self.pc, self.t, self.n
        total = len(pairs)
        if i >= total:
            return 0
        avail = [0] * n
        for j in range(i, total):
            u, v = pairs[j]
            if not pc.blocked(u, v, t):
                avail[u] += 1
        u0 = pairs[i][0]
        room = min(avail[u0], self.cap(u0) - self.rowcnt[u0])
        if not self.symmetry:
            return sum(avail)
        later_cap = self.rowcnt[u0] + room
        return room + sum(min(a, later_cap) for a in avail[u0 + 1:])

    def apply_prefix(self, prefix: tuple[bool, ...]) -> bool:
        for i, present in enumerate(prefix):
            if present:
                if not self.can_add(i):
                    return False
                self.add(i)
        return True

    def run(self, start: int, incumbent: int, node_budget: int | None, deadline: float | None):
        """Search the subtree below the current prefix.

        Returns ``(best_arcs, best_rows or None, nodes, exhausted)``; rows are
        only returned for solutions strictly above ``incumbent``.
        """
        total = len(self.pairs)
        NEW, PRESENT, ABSENT = 0, 1, 2
        phase = [NEW] * (total + 1)
        added = [False] * (total + 1)
        best_arcs, best_rows = incumbent, None
        nodes = 0
        i = start
        while i >= start:
            ph = phase[i]
            if ph == NEW:
                if (node_budget is not None and nodes >= node_budget) or (
                    deadline is not None and nodes % 256 == 0 and time.perf_counter() > deadline
                ):
                    self._unwind(start, i, added)
                    return best_arcs, best_rows, nodes, False
                nodes += 1
                arcs = self.pc.arcs
                if arcs > best_arcs:
                    best_arcs, best_rows = arcs, tuple(self.pc.rows)
                if i == total or arcs + self.bound(i) <= best_arcs:
                    i -= 1
                    continue
                phase[i] = PRESENT
                if self.can_add(i):
                    self.add(i)
                    added[i] = True
                    i += 1
                    phase[i] = NEW
                    continue
            if phase[i] == PRESENT:
                if added[i]:
                    self.remove(i)
                    added[i] = False
                phase[i] = ABSENT
                i += 1
                phase[i] = NEW
                continue
            i -= 1
        return best_arcs, best_rows, nodes, True

    def _unwind(self, start: int, i: int, added: list[bool]) -> None:
        for j in range(i - 1, start - 1, -1):
            if added[j]:
                self.remove(j)
                added[j] = False


def _prefixes(n: int, t: int, symmetry: bool, depth: int) -> tuple[list[tuple[bool, ...]], int]:
    """All feasible decision prefixes of length ``depth`` in search order."""
    solver = _Solver(n, t, symmetry)
    out: list[tuple[bool, ...]] = []
    nodes = 0

    def walk(i: int, acc: list[bool]) -> None:
        nonlocal nodes
        nodes += 1
        if i == depth:
            out.append(tuple(acc))
            return
        if solver.can_add(i):
            solver.add(i)
            acc.append(True)
            walk(i + 1, acc)
            acc.pop()
            solver.remove(i)
        acc.append(False)
        walk(i + 1, acc)
        acc.pop()

    walk(0, [])
    return out, nodes


def _run_task(args) -> tuple[int, tuple[int, ...] | None, int, bool]:
    n, t, symmetry, prefix, incumbent, node_budget, deadline = args
    solver = _Solver(n, t, symmetry)
    if not solver.apply_prefix(prefix):
        return incumbent, None, 0, True
    return solver.run(len(prefix), incumbent, node_budget, deadline)


def branch_and_bound(cfg: SearchConfig, workers: int = 1) -> SearchResult:
    n, t = cfg.n, cfg.t
    start = time.perf_counter()
    total = n * (n - 1)
    if n <= t + 2:
        d = _emit(Digraph.complete(n), t)
        return SearchResult(total, d, True, 1, total, time.perf_counter() - start)

    seed = cfg.seed_digraph
    if seed is None and t >= 2 and n >= t + 6:
        try:
            seed = build_extremal(n, t)[0]
        except ValueError:
            seed = None
    incumbent = seed.size() if seed is not None else 0

    depth = min(SPLIT_DEPTH, total)
    prefixes, prefix_nodes = _prefixes(n, t, cfg.symmetry, depth)
    per_task = None
    if cfg.node_budget is not None:
        per_task = max(1, math.ceil(cfg.node_budget / len(prefixes)))
    deadline = None if cfg.time_budget is None else start + cfg.time_budget
    tasks = [(n, t, cfg.symmetry, p, incumbent, per_task, deadline) for p in prefixes]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_task, tasks, chunksize=1))
    else:
        outcomes = [_run_task(task) for task in tasks]

    best = seed
    nodes = prefix_nodes
    exhausted = True
    for arcs, rows, task_nodes, done in outcomes:
        nodes += task_nodes
        exhausted = exhausted and done
        if rows is not None:
            cand = Digraph(n, rows)
            if _better(cand, best):
                best = cand
    if best is None:
        best = Digraph.empty(n)
    root = _Solver(n, t, cfg.symmetry).bound(0)
    return SearchResult(
        best.size(), _emit(best, t), exhausted, nodes, root, time.perf_counter() - start
    )


# -- local search -------------------------------------------------------------------


def default_start(n: int, t: int) -> Digraph:
    if n <= t + 2:
        return Digraph.complete(n)
    if t >= 2 and n >= t + 6:
        try:
            return build_extremal(n, t)[0]
        except ValueError:
            pass
    return Digraph.empty(n)


def local_search(cfg: SearchConfig, restart_after: int = 50) -> SearchResult:
    """Hill climbing with freeness-preserving additions and remove/re-add moves.

    After ``restart_after`` moves without improvement the walk restarts from
    the best digraph with a few random arcs dropped.  ``node_budget`` caps the
    number of moves (default 2000).  Deterministic for a fixed ``rng_seed``
    when no time budget is set.
    """
    n, t = cfg.n, cfg.t
    start = time.perf_counter()
    rng = random.Random(cfg.rng_seed)
    budget = cfg.node_budget or 2000
    deadline = None if cfg.time_budget is None else start + cfg.time_budget
    init = cfg.seed_digraph or default_start(n, t)
    pairs = _pairs(n)
    pc = PairCounts.from_digraph(init)
    best_arcs, best_rows = pc.arcs, tuple(pc.rows)
    moves = stall = 0

    def fill() -> None:
        order = pairs[:]
        rng.shuffle(order)
        for u, v in order:
            if not pc.rows[u] >> v & 1 and not pc.blocked(u, v, t):
                pc.add(u, v)

    def present() -> list[tuple[int, int]]:
        return [(u, v) for u, v in pairs if pc.rows[u] >> v & 1]

    while moves < budget and (deadline is None or time.perf_counter() < deadline):
        moves += 1
        fill()
        if pc.arcs > best_arcs:
            best_arcs, best_rows = pc.arcs, tuple(pc.rows)
            stall = 0
        else:
            stall += 1
        arcs = present()
        if not arcs:
            break
        if stall >= restart_after:
            pc = PairCounts.from_digraph(Digraph(n, best_rows))
            for u, v in rng.sample(present(), min(3, best_arcs)):
                pc.remove(u, v)
            stall = 0
        else:
            u, v = rng.choice(arcs)
            pc.remove(u, v)
            # swap in one different arc if possible
            free_pairs = [
                (x, y) for x, y in pairs
                if (x, y) != (u, v) and not pc.rows[x] >> y & 1 and not pc.blocked(x, y, t)
            ]
            if free_pairs:
                pc.add(*rng.choice(free_pairs))
    best = _emit(Digraph(n, best_rows), t)
    return SearchResult(best_arcs, best, False, moves, n * (n - 1), time.perf_counter() - start)
