"""Closed-form bounds on ex(n, P_{t+1,2}).

Everything here is exact integer arithmetic; ``phi_lower_estimate`` is the
only function returning a :class:`~fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

THEOREM_EXACT = "theorem-exact"
THEOREM_INTERVAL = "theorem-interval"
CONSTRUCTION_ONLY = "construction-only"
VACUOUS = "vacuous"
# n <= t+2: every digraph is free, so ex = n(n-1).
COMPLETE = "complete"


def _check(n: int, t: int) -> None:
    if n < 1 or t < 1:
        raise ValueError(f"n and t must be positive, got n={n}, t={t}")


def g(n: int, t: int) -> int:
    """ceil((n+t)/2) * floor((n-t)/2) + t*n + 1."""
    _check(n, t)
    return -(-(n + t) // 2) * ((n - t) // 2) + t * n + 1


def phi(n: int, t: int) -> int:
    _check(n, t)
    return g(n, t) - 1 if ((n - t) // 2) % 2 == 0 else g(n, t)


def phi_lower_estimate(n: int, t: int) -> Fraction:
    """(n^2 - t^2)/4 + t*n - t, a lower estimate for ``phi``."""
    _check(n, t)
    if n <= t:
        raise ValueError(f"need n > t, got n={n}, t={t}")
    return Fraction(n * n - t * t, 4) + t * n - t


def theorem_threshold(t: int) -> int:
    """Smallest integer n satisfying both size hypotheses of the exact result."""
    if t < 2:
        raise ValueError(f"threshold defined for t >= 2, got {t}")
    return max(t**3 + 4 * t**2 + 3 * t + 4, -(-17 * t * t // 2) + 30 * t + 27)


@dataclass(frozen=True)
class ExBounds:
    lower: int
    upper: int
    exact: bool
    regime: str

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact != (self.lower == self.upper):
            raise ValueError("exact flag inconsistent with bounds")

    def to_dict(self) -> dict:
        return asdict(self)


def ex_bounds(n: int, t: int) -> ExBounds:
    _check(n, t)
    if t < 2:
        raise ValueError(f"ex_bounds needs t >= 2, got {t}")
    full = n * (n - 1)
    if n >= theorem_threshold(t):
        top = g(n, t)
        if ((n - t) // 2) % 2 == 1:
            return ExBounds(top, top, True, THEOREM_EXACT)
        return ExBounds(top - 1, top, False, THEOREM_INTERVAL)
    if n >= t + 6:
        return ExBounds(phi(n, t), full, False, CONSTRUCTION_ONLY)
    if n <= t + 2:
        return ExBounds(full, full, True, COMPLETE)
    return ExBounds(0, full, full == 0, VACUOUS)


def formula_record(n: int, t: int) -> dict:
    """Flat record used by the ``formula`` CLI command."""
    b = ex_bounds(n, t)
    return {
        "n": n,
        "t": t,
        "g": g(n, t),
        "phi": phi(n, t),
        "threshold": theorem_threshold(t),
        "regime": b.regime,
        "lower": b.lower,
        "upper": b.upper,
    }
