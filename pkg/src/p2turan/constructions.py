"""Canonical members of the three extremal families D1, D2, D3.

Classes U1, U2, ... occupy contiguous ascending vertex ranges.  Each builder
checks freeness before returning; a failure there is a bug, not an input error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from p2turan.digraph import Digraph
from p2turan.freeness import find_witness
from p2turan.formulas import phi

D1, D2, D3 = "D1", "D2", "D3"
FAMILIES = (D1, D2, D3)


class ConstructionError(AssertionError):
    """A built digraph failed its own freeness check."""


@dataclass(frozen=True)
class PartitionSpec:
    family: str
    n: int
    t: int
    sizes: tuple[int, ...]
    class_of: tuple[int, ...] = field(repr=False)

    def members(self, k: int) -> range:
        """Vertices of class ``U_{k+1}`` (0-based ``k``)."""
        start = sum(self.sizes[:k])
        return range(start, start + self.sizes[k])

    def to_dict(self) -> dict:
        return {"family": self.family, "n": self.n, "t": self.t, "sizes": list(self.sizes)}


def _domain(n: int, t: int) -> None:
    if t < 2:
        raise ValueError(f"constructions need t >= 2, got {t}")
    if n < t + 6:
        raise ValueError(f"constructions need n >= t+6, got n={n}, t={t}")


def family_for(n: int, t: int) -> str:
    _domain(n, t)
    a, b = (n - t) // 2, (n - t - 1) // 2
    if a % 2 == 0:
        return D1
    return D2 if b % 2 == 0 else D3


def partition_sizes(family: str, n: int, t: int) -> tuple[int, ...]:
    _domain(n, t)
    a, b = (n - t) // 2, (n - t - 1) // 2
    if family == D1:
        sizes = (a, b, t, 1)
    elif family == D2:
        if a % 2 != 1 or b % 2 != 0:
            raise ValueError(f"D2 needs floor((n-t)/2) odd and floor((n-t-1)/2) even (n={n}, t={t})")
        sizes = (a - 1, b, t - 2, 1, 1, 2)
    elif family == D3:
        if a % 2 != 1 or b % 2 != 1:
            raise ValueError(f"D3 needs floor((n-t)/2) and floor((n-t-1)/2) odd (n={n}, t={t})")
        sizes = (a - 1, a, t - 1, 1, 1, 1)
    else:
        raise ValueError(f"unknown family {family!r}")
    assert sum(sizes) == n
    return sizes


def _spec(family: str, n: int, t: int) -> tuple[PartitionSpec, list[range]]:
    sizes = partition_sizes(family, n, t)
    class_of = tuple(k for k, s in enumerate(sizes) for _ in range(s))
    spec = PartitionSpec(family, n, t, sizes, class_of)
    return spec, [spec.members(k) for k in range(len(sizes))]


class _Builder:
    def __init__(self, n: int) -> None:
        self.rows = [0] * n

    def join(self, sources, targets) -> None:
        """S => T, skipping loops."""
        mask = 0
        for v in targets:
            mask |= 1 << v
        for u in sources:
            self.rows[u] |= mask & ~(1 << u)

    def complete(self, vertices) -> None:
        self.join(vertices, vertices)

    def two_cycles(self, vertices) -> None:
        vs = list(vertices)
        if len(vs) % 2:
            raise ValueError("2-cycle decomposition needs an even class")
        for x, y in zip(vs[::2], vs[1::2]):
            self.rows[x] |= 1 << y
            self.rows[y] |= 1 << x

    def arc(self, u: int, v: int) -> None:
        self.rows[u] |= 1 << v


def back_assign(receivers, suppliers: list[int], capacity: dict[int, int], t: int) -> list[tuple[int, int]]:
    """Give each receiver ``t`` distinct suppliers within the supplier capacities.

    Receivers are served in order; each takes the ``t`` suppliers with the most
    remaining capacity, ties broken by position in ``suppliers``.  Serving the
    fullest suppliers first succeeds whenever any assignment exists.
    Returns arcs ``(supplier, receiver)``.
    """
    left = dict(capacity)
    rank = {s: i for i, s in enumerate(suppliers)}
    arcs = []
    for r in receivers:
        chosen = sorted((s for s in suppliers if left[s] > 0), key=lambda s: (-left[s], rank[s]))[:t]
        if len(chosen) < t:
            raise ValueError(f"back-assignment infeasible at receiver {r}")
        for s in sorted(chosen, key=rank.__getitem__):
            left[s] -= 1
            arcs.append((s, r))
    return arcs


def _finish(b: _Builder, spec: PartitionSpec) -> tuple[Digraph, PartitionSpec]:
    d = Digraph(spec.n, tuple(b.rows))
    w = find_witness(d, spec.t)
    if w is not None:
        raise ConstructionError(f"{spec.family}(n={spec.n}, t={spec.t}) is not free: {w.to_dict()}")
    return d, spec


def build_d1(n: int, t: int) -> tuple[Digraph, PartitionSpec]:
    spec, (u1, u2, u3, u4) = _spec(D1, n, t)
    b = _Builder(n)
    b.join(u1, [*u2, *u3, *u4])
    b.join(u3, u2)
    b.complete([*u3, *u4])
    cap = {v: t for v in u2} | {v: 1 for v in u3}
    for s, r in back_assign(u1, [*u2, *u3], cap, t):
        b.arc(s, r)
    return _finish(b, spec)


def build_d2(n: int, t: int) -> tuple[Digraph, PartitionSpec]:
    spec, (u1, u2, u3, u4, u5, u6) = _spec(D2, n, t)
    b = _Builder(n)
    b.join(u1, [*u2, *u3, *u6])
    b.join(u4, [*u2, *u3, *u5, *u6])
    b.join([*u3, *u5], [*u2, *u4])
    b.join(u6, u4)
    b.complete([*u3, *u5, *u6])
    b.two_cycles(u1)
    b.two_cycles(u2)
    for s, r in back_assign(u1, list(u2), {v: t for v in u2}, t):
        b.arc(s, r)
    return _finish(b, spec)


def build_d3(n: int, t: int) -> tuple[Digraph, PartitionSpec]:
    spec, (u1, u2, u3, u4, u5, u6) = _spec(D3, n, t)
    b = _Builder(n)
    b.join(u1, [*u2, *u3, *u5])
    b.join(u4, [*u2, *u3, *u5, *u6])
    b.join([*u3, *u6], [*u2, *u4])
    b.complete([*u3, *u5, *u6])
    b.two_cycles(u1)
    # the first U2 vertex feeds U4 and so has one less slot towards U1
    first = u2[0]
    b.arc(first, u4[0])
    cap = {v: t for v in u2}
    cap[first] = t - 1
    for s, r in back_assign(u1, list(u2), cap, t):
        b.arc(s, r)
    return _finish(b, spec)


_BUILDERS = {D1: build_d1, D2: build_d2, D3: build_d3}


def build_family(family: str, n: int, t: int) -> tuple[Digraph, PartitionSpec]:
    try:
        builder = _BUILDERS[family.upper()]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return builder(n, t)


def build_extremal(n: int, t: int) -> tuple[Digraph, PartitionSpec]:
    """The family member with exactly ``phi(n, t)`` arcs for this parity class."""
    d, spec = _BUILDERS[family_for(n, t)](n, t)
    if d.size() != phi(n, t):
        raise ConstructionError(f"{spec.family}(n={n}, t={t}) has {d.size()} arcs, expected {phi(n, t)}")
    return d, spec
