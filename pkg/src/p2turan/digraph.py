"""Strict digraphs stored as integer bitset rows.

Bit ``v`` of ``rows[u]`` is set iff the arc ``u -> v`` is present.  Values are
immutable; every mutating operation returns a new :class:`Digraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 512


def _mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., universe - 1}``."""

    bits: int
    universe: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError(f"bits outside universe of size {self.universe}")

    @classmethod
    def of(cls, universe: int, vertices: Iterable[int] = ()) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise ValueError(f"vertex {v} out of range for universe {universe}")
            bits |= 1 << v
        return cls(bits, universe)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(_mask(universe), universe)

    def complement(self) -> "VertexSet":
        return VertexSet(_mask(self.universe) & ~self.bits, self.universe)

    def _check(self, other: "VertexSet") -> None:
        if other.universe != self.universe:
            raise ValueError("vertex sets over different universes")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.universe)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.universe)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.universe)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, universe={self.universe})"


@dataclass(frozen=True)
class Digraph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        full = _mask(n)
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside the vertex range")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")

    # -- constructors ---------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = _mask(n)
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    # -- arc edits ------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        return bool(self.rows[u] >> v & 1)

    def add_arc(self, u: int, v: int) -> "Digraph":
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        return Digraph(self.order, tuple(rows))

    def remove_arc(self, u: int, v: int) -> "Digraph":
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        return Digraph(self.order, tuple(rows))

    # -- notation layer -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.order)

    def size(self) -> int:
        """Total number of arcs."""
        return sum(row.bit_count() for row in self.rows)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                yield u, v

    def arc_count(self, S: VertexSet, T: VertexSet) -> int:
        """Number of arcs with tail in ``S`` and head in ``T``."""
        if S.universe != self.order or T.universe != self.order:
            raise ValueError("vertex set universe does not match digraph order")
        return sum((self.rows[u] & T.bits).bit_count() for u in iter_bits(S.bits))

    def out_neighbors(self, u: int) -> VertexSet:
        _check_vertex(self.order, u)
        return VertexSet(self.rows[u], self.order)

    def in_bits(self, u: int) -> int:
        _check_vertex(self.order, u)
        bit = 1 << u
        col = 0
        for w, row in enumerate(self.rows):
            if row & bit:
                col |= 1 << w
        return col

    def in_neighbors(self, u: int) -> VertexSet:
        return VertexSet(self.in_bits(u), self.order)

    def columns(self) -> tuple[int, ...]:
        """All predecessor sets as bitsets, i.e. the rows of the transpose."""
        cols = [0] * self.order
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    def out_degree(self, u: int) -> int:
        _check_vertex(self.order, u)
        return self.rows[u].bit_count()

    def in_degree(self, u: int) -> int:
        return self.in_bits(u).bit_count()

    def tau(self, u: int) -> int:
        """Number of vertices that are both successors and predecessors of ``u``."""
        return (self.rows[u] & self.in_bits(u)).bit_count()

    def alpha(self, u: int) -> int:
        """Largest number of arcs any single vertex sends outside ``N+(u)``."""
        _check_vertex(self.order, u)
        outside = _mask(self.order) & ~self.rows[u]
        return max((row & outside).bit_count() for row in self.rows)

    def max_degree(self) -> tuple[int, str]:
        """Return ``(delta, side)``; ties go to ``"out"``."""
        out_max = max(row.bit_count() for row in self.rows)
        in_max = max(col.bit_count() for col in self.columns())
        if in_max > out_max:
            return in_max, "in"
        return out_max, "out"

    def induced_subgraph(self, S: VertexSet) -> tuple["Digraph", list[int]]:
        """Subgraph induced by ``S`` plus the list mapping new index -> old index."""
        if S.universe != self.order:
            raise ValueError("vertex set universe does not match digraph order")
        keep = S.to_list()
        if not keep:
            raise ValueError("induced subgraph of an empty vertex set")
        rows = []
        for u in keep:
            row = self.rows[u]
            rows.append(sum(1 << i for i, v in enumerate(keep) if row >> v & 1))
        return Digraph(len(keep), tuple(rows)), keep

    def bit_key(self) -> tuple[int, ...]:
        """Row-major adjacency bits (diagonal skipped), for lexicographic comparison."""
        n = self.order
        return tuple(self.rows[u] >> v & 1 for u in range(n) for v in range(n) if u != v)

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={self.size()})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for order {n}")
